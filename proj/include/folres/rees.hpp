#ifndef FOLRES_REES_HPP
#define FOLRES_REES_HPP

#include <functional>
#include <vector>

#include "folres/ideal.hpp"

namespace folres {

/// A finite sum of weighted filtrations (g_1,d_1)+...+(g_n,d_n): the Rees
/// algebra whose degree-m part is generated by the products
/// prod g_i^(ceil(m_i/d_i)) over compositions m_1+...+m_n = m.
class ReesAlgebra {
 public:
  struct Term {
    Poly generator;
    unsigned weight;
  };

  ReesAlgebra(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
      require_same_ring(*ring_, *t.generator.ring(), "ReesAlgebra");
      if (t.weight < 1) throw std::invalid_argument("ReesAlgebra: weights must be >= 1");
      if (t.generator.is_zero()) throw std::invalid_argument("ReesAlgebra: zero generator");
    }
  }

  /// Coordinate form (x_{i1},d_1)+...: the common case.
  static ReesAlgebra coordinate(const RingPtr& ring,
                                const std::vector<std::pair<std::size_t, unsigned>>& centers) {
    std::vector<Term> ts;
    for (auto [i, d] : centers) ts.push_back({Poly::variable(ring, i), d});
    return ReesAlgebra(ring, std::move(ts));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

namespace detail {

inline void compositions(unsigned m, std::size_t parts, std::vector<unsigned>& cur,
                         const std::function<void(const std::vector<unsigned>&)>& emit) {
  if (cur.size() + 1 == parts) {
    cur.push_back(m);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (unsigned take = 0; take <= m; ++take) {
    cur.push_back(take);
    compositions(m - take, parts, cur, emit);
    cur.pop_back();
  }
}

inline unsigned ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

}  // namespace detail

/// The degree-m ideal of the Rees algebra, by direct enumeration of the
/// integer compositions of m.
inline Ideal rees_degree_part(const ReesAlgebra& rees, unsigned m) {
  const RingPtr& ring = rees.ring();
  if (m == 0) return Ideal(ring, {Poly::constant(ring, 1)});
  std::vector<Poly> gens;
  std::vector<unsigned> cur;
  detail::compositions(m, rees.terms().size(), cur, [&](const std::vector<unsigned>& split) {
    Poly g = Poly::constant(ring, 1);
    for (std::size_t i = 0; i < split.size(); ++i) {
      if (split[i] == 0) continue;
      g *= rees.terms()[i].generator.pow(detail::ceil_div(split[i], rees.terms()[i].weight));
    }
    for (const auto& seen : gens)
      if (seen == g) return;
    gens.push_back(std::move(g));
  });
  return Ideal(ring, std::move(gens));
}

/// Degreewise containment: part_m(a) inside part_m(b) for all m <= bound.
inline bool rees_contained_up_to(const ReesAlgebra& a, const ReesAlgebra& b, unsigned bound) {
  require_same_ring(*a.ring(), *b.ring(), "rees_contained_up_to");
  for (unsigned m = 0; m <= bound; ++m) {
    Ideal pa = rees_degree_part(a, m);
    Ideal pb = rees_degree_part(b, m);
    for (const auto& g : pa.generators())
      if (!pb.contains(g)) return false;
  }
  return true;
}

}  // namespace folres

#endif
