#ifndef FOLRES_IDEAL_HPP
#define FOLRES_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "folres/groebner.hpp"
#include "folres/poly.hpp"

namespace folres {

/// Finitely generated ideal with a lazily computed, shared Groebner basis
/// cache (grevlex). Ideals are immutable values; copies share the cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Poly> gens = {})
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(*ring_, *g.ring(), "Ideal");
      gens_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero_ideal() const { return basis().empty(); }

  /// The reduced Groebner basis under grevlex (computed once, shared).
  const std::vector<Poly>& basis() const {
    std::call_once(cache_->flag, [this] { cache_->basis = groebner_basis(gens_, order()); });
    return cache_->basis;
  }

  static MonomialOrder order() { return MonomialOrder::grevlex(); }

  Poly reduce(const Poly& f) const { return normal_form(f, basis(), order()); }

  bool contains(const Poly& f) const {
    require_same_ring(*ring_, *f.ring(), "Ideal::contains");
    return reduce(f).is_zero();
  }

  bool contains(const Ideal& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  bool is_unit() const {
    const auto& b = basis();
    return b.size() == 1 && b.front().is_constant() && !b.front().is_zero();
  }

  bool same_ideal_as(const Ideal& o) const {
    require_same_ring(*ring_, *o.ring_, "Ideal::same_ideal_as");
    return basis() == o.basis();
  }

  Ideal plus(const Ideal& o) const {
    require_same_ring(*ring_, *o.ring_, "Ideal::plus");
    std::vector<Poly> gens = gens_;
    gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
    return Ideal(ring_, std::move(gens));
  }

 private:
  struct Cache {
    std::once_flag flag;
    std::vector<Poly> basis;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Exact division g / f in the polynomial ring; throws if f does not divide g.
inline Poly divide_exact(const Poly& g, const Poly& f) {
  if (f.is_zero()) throw std::domain_error("divide_exact: division by zero");
  MonomialOrder order = MonomialOrder::grevlex();
  auto [ef, cf] = f.leading_term(order);
  Poly h = g;
  Poly q = Poly::zero(g.ring());
  while (!h.is_zero()) {
    auto [eh, ch] = h.leading_term(order);
    if (!divides(ef, eh)) throw std::domain_error("divide_exact: not divisible");
    Exp em = exp_div(eh, ef);
    Fp cm = ch / cf;
    q.add_term(em, cm);
    h -= f.times_term(em, cm);
  }
  return q;
}

/// Intersection of two ideals via the auxiliary-variable trick:
/// I cap J = (t*I + (1-t)*J) cap k[x].
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "ideal_intersection");
  RingPtr ring = a.ring();
  RingPtr ext = ring->prepend_var(ring->fresh_var("t@"));
  Poly t = Poly::variable(ext, 0);
  Poly one_minus_t = Poly::constant(ext, 1) - t;
  std::vector<Poly> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.reindex(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.reindex(ext));
  auto basis = groebner_basis(std::move(gens), MonomialOrder::elimination(1));
  std::vector<Poly> result;
  for (const auto& g : basis)
    if (g.degree_in(0) == 0) result.push_back(g.reindex(ring));
  return Ideal(ring, std::move(result));
}

/// Ideal quotient (I : f) = { g : g*f in I }.
inline Ideal ideal_quotient(const Ideal& ideal, const Poly& f) {
  if (f.is_zero()) throw std::domain_error("ideal_quotient: zero divisor poly");
  require_same_ring(*ideal.ring(), *f.ring(), "ideal_quotient");
  if (f.is_constant()) return ideal;
  Ideal principal(ideal.ring(), {f});
  Ideal inter = ideal_intersection(ideal, principal);
  std::vector<Poly> gens;
  for (const auto& g : inter.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(ideal.ring(), std::move(gens));
}

/// Saturation (I : f^inf), computed by iterating the quotient to a fixed
/// point. Each step contains the previous one, so termination follows from
/// the ascending chain condition.
inline Ideal saturation(const Ideal& ideal, const Poly& f) {
  if (f.is_zero()) throw std::domain_error("saturation: zero divisor poly");
  Ideal cur = ideal;
  for (;;) {
    Ideal next = ideal_quotient(cur, f);
    if (next.same_ideal_as(cur)) return cur;
    cur = next;
  }
}

}  // namespace folres

#endif
