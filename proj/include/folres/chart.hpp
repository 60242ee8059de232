#ifndef FOLRES_CHART_HPP
#define FOLRES_CHART_HPP

#include <optional>
#include <string>
#include <vector>

#include "folres/classify.hpp"

namespace folres {

/// mu_d-action data on a smooth cover: each chart variable carries a weight
/// mod d. Order 1 means a schematic (trivial-action) chart.
struct CyclicAction {
  unsigned order = 1;
  std::vector<unsigned> weights;

  bool trivial() const { return order <= 1; }
};

/// How a chart node came to be; drives logging and DOT export.
struct ChartLabel {
  enum class Kind { Root, Ordinary, Weighted, CoordinateChange, Simplify };
  Kind kind = Kind::Root;
  std::vector<std::size_t> center;   // parent variable indices blown up
  std::vector<unsigned> weights;     // per center entry (weighted blow-ups)
  std::size_t chart_var = 0;         // distinguished center variable (blow-ups)
  std::string note;
};

/// An affine chart: a (possibly quotient) ring, the structure map to the
/// parent chart (each parent variable expressed in chart variables), the
/// chart equation of the exceptional divisor (1 for the root), and an
/// optional cyclic action for weighted charts.
class Chart {
 public:
  Chart(QuotientRing ring, std::vector<Poly> to_parent, Poly exceptional,
        std::optional<std::size_t> exceptional_var = std::nullopt,
        std::optional<CyclicAction> action = std::nullopt,
        std::vector<std::size_t> center = {}, std::vector<unsigned> center_weights = {})
      : ring_(std::move(ring)),
        to_parent_(std::move(to_parent)),
        exceptional_(std::move(exceptional)),
        exceptional_var_(exceptional_var),
        action_(std::move(action)),
        center_(std::move(center)),
        center_weights_(std::move(center_weights)) {}

  static Chart root(QuotientRing ring) {
    Poly one = Poly::constant(ring.ambient(), 1);
    std::vector<Poly> identity;
    for (std::size_t i = 0; i < ring.ambient()->nvars(); ++i)
      identity.push_back(Poly::variable(ring.ambient(), i));
    return Chart(std::move(ring), std::move(identity), std::move(one));
  }

  const QuotientRing& ring() const { return ring_; }
  const RingPtr& ambient() const { return ring_.ambient(); }
  const std::vector<Poly>& to_parent() const { return to_parent_; }
  const Poly& exceptional() const { return exceptional_; }
  std::optional<std::size_t> exceptional_var() const { return exceptional_var_; }
  const std::optional<CyclicAction>& action() const { return action_; }
  /// Parent variable indices of the blown-up center (empty off blow-ups).
  const std::vector<std::size_t>& center() const { return center_; }
  const std::vector<unsigned>& center_weights() const { return center_weights_; }

  /// Apply the structure map to a polynomial on the parent chart.
  Poly pull_function(const Poly& on_parent) const {
    return ring_.normal_form(on_parent.substitute(to_parent_));
  }

  /// Divisibility by the exceptional inside the chart ring (modulo the
  /// relations on quotient charts); returns the quotient when it exists.
  std::optional<Poly> divide_by_exceptional(const Poly& f) const {
    if (exceptional_.is_constant()) return std::nullopt;
    if (ring_.is_polynomial()) {
      // plain division attempt
      try {
        return divide_exact(f, exceptional_);
      } catch (const std::domain_error&) {
        return std::nullopt;
      }
    }
    // f = q * exc + relations combination, via tracked membership
    std::vector<VecPoly> gens;
    gens.push_back({exceptional_});
    for (const auto& rel : ring_.relations().generators()) gens.push_back({rel});
    auto c = module_membership({ring_.normal_form(f)}, gens);
    if (!c) return std::nullopt;
    return ring_.normal_form((*c)[0]);
  }

 private:
  QuotientRing ring_;
  std::vector<Poly> to_parent_;
  Poly exceptional_;
  std::optional<std::size_t> exceptional_var_;
  std::optional<CyclicAction> action_;
  std::vector<std::size_t> center_;
  std::vector<unsigned> center_weights_;
};

/// Resolution history: a tree of charts, each node pointing at its parent.
class BlowUpTree {
 public:
  struct Node {
    Chart chart;
    std::size_t parent;  // npos for the root
    ChartLabel label;
  };
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit BlowUpTree(Chart root) { nodes_.push_back({std::move(root), npos, ChartLabel{}}); }

  std::size_t add_child(std::size_t parent, Chart chart, ChartLabel label) {
    if (parent >= nodes_.size()) throw std::out_of_range("BlowUpTree::add_child");
    nodes_.push_back({std::move(chart), parent, std::move(label)});
    return nodes_.size() - 1;
  }

  const Node& node(std::size_t id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }

  std::vector<std::size_t> children(std::size_t id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].parent == id) out.push_back(i);
    return out;
  }

  bool is_leaf(std::size_t id) const { return children(id).empty(); }

  std::size_t depth(std::size_t id) const {
    std::size_t d = 0;
    while (nodes_.at(id).parent != npos) {
      id = nodes_[id].parent;
      ++d;
    }
    return d;
  }

 private:
  std::vector<Node> nodes_;
};

/// Chart for an affine coordinate change x = s + P*y (certificate
/// coordinates at a point). The ring keeps the same variable names; the
/// exceptional is inherited as the pullback of the parent's.
inline Chart coordinate_change_chart(const Chart& parent, const ClosedPoint& s,
                                     const FpMatrix& p_matrix) {
  const RingPtr& r = parent.ambient();
  std::size_t n = r->nvars();
  std::vector<Poly> to_parent;
  for (std::size_t i = 0; i < n; ++i) {
    Poly img = Poly::constant(r, s[i].lift());
    for (std::size_t j = 0; j < n; ++j) img += Poly::variable(r, j) * p_matrix.at(i, j);
    to_parent.push_back(img);
  }
  QuotientRing q(r);
  if (!parent.ring().is_polynomial()) {
    std::vector<Poly> rels;
    for (const auto& rel : parent.ring().relations().generators())
      rels.push_back(rel.substitute(to_parent));
    q = QuotientRing(r, Ideal(r, std::move(rels)));
  }
  Poly exc = q.normal_form(parent.exceptional().substitute(to_parent));
  return Chart(std::move(q), std::move(to_parent), std::move(exc), parent.exceptional_var(),
               parent.action());
}

/// Derivation transported through a coordinate-change chart.
inline Derivation pullback_coordinate_change(const Derivation& d, const ClosedPoint& s,
                                             const FpMatrix& p_matrix) {
  return transform_linear(translate_to_origin(d, s), p_matrix);
}

}  // namespace folres

#endif
