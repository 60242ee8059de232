#ifndef FOLRES_MODULE_HPP
#define FOLRES_MODULE_HPP

#include <optional>
#include <vector>

#include "folres/ideal.hpp"

namespace folres {

/// Element of a free module R^m over a polynomial ring.
using VecPoly = std::vector<Poly>;

namespace detail {

struct ModTerm {
  std::size_t comp;
  Exp exp;
  Fp coeff;
};

/// Position-over-term: components are ordered e_0 > e_1 > ..., ties broken
/// by the monomial order.
inline bool mod_term_less(std::size_t ca, const Exp& ea, std::size_t cb, const Exp& eb,
                          const MonomialOrder& order) {
  if (ca != cb) return ca > cb;
  return order.less(ea, eb);
}

inline bool vec_is_zero(const VecPoly& v) {
  for (const auto& f : v)
    if (!f.is_zero()) return false;
  return true;
}

inline std::optional<ModTerm> vec_leading_term(const VecPoly& v, const MonomialOrder& order) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      auto [e, c] = v[i].leading_term(order);
      return ModTerm{i, e, c};
    }
  }
  return std::nullopt;
}

inline VecPoly vec_sub_scaled(const VecPoly& v, const VecPoly& g, const Exp& e, const Fp& c) {
  VecPoly r = v;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] -= g[i].times_term(e, c);
  return r;
}

}  // namespace detail

/// Groebner basis of the submodule generated by `gens`, with each basis
/// element carrying its expression in terms of the original generators.
class ModuleBasis {
 public:
  explicit ModuleBasis(std::vector<VecPoly> gens, MonomialOrder order = MonomialOrder::grevlex())
      : order_(order) {
    using namespace detail;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (vec_is_zero(gens[k])) continue;
      std::vector<Poly> rep(gens.size(), Poly::zero(ring_of(gens)));
      rep[k] = Poly::constant(ring_of(gens), 1);
      add_element(std::move(gens[k]), std::move(rep));
    }
    // Buchberger loop on pairs with matching leading component
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        auto lti = vec_leading_term(elements_[i], order_);
        auto ltj = vec_leading_term(elements_[j], order_);
        if (lti->comp != ltj->comp) continue;
        Exp l = exp_lcm(lti->exp, ltj->exp);
        VecPoly s(elements_[i].size(), Poly::zero(elements_[i].front().ring()));
        std::vector<Poly> srep(reps_[i].size(), Poly::zero(reps_[i].front().ring()));
        Exp mi = exp_div(l, lti->exp), mj = exp_div(l, ltj->exp);
        Fp ci = lti->coeff.inverse(), cj = ltj->coeff.inverse();
        for (std::size_t c = 0; c < s.size(); ++c)
          s[c] = elements_[i][c].times_term(mi, ci) - elements_[j][c].times_term(mj, cj);
        for (std::size_t c = 0; c < srep.size(); ++c)
          srep[c] = reps_[i][c].times_term(mi, ci) - reps_[j][c].times_term(mj, cj);
        reduce_tracked(s, srep);
        if (!vec_is_zero(s)) add_element(std::move(s), std::move(srep));
      }
    }
  }

  /// Reduce v modulo the basis; returns (remainder, combination) where
  /// v = combination-of-original-generators + remainder.
  std::pair<VecPoly, std::vector<Poly>> reduce(VecPoly v) const {
    std::vector<Poly> rep(ngens_, Poly::zero(v.front().ring()));
    reduce_tracked(v, rep, /*negate=*/true);
    return {std::move(v), std::move(rep)};
  }

  const std::vector<VecPoly>& elements() const { return elements_; }

 private:
  static RingPtr ring_of(const std::vector<VecPoly>& gens) {
    for (const auto& g : gens)
      for (const auto& f : g) return f.ring();
    throw std::invalid_argument("ModuleBasis: no generators");
  }

  void add_element(VecPoly v, std::vector<Poly> rep) {
    ngens_ = rep.size();
    elements_.push_back(std::move(v));
    reps_.push_back(std::move(rep));
  }

  /// Top reduction loop; remainder terms are skipped over. When tracking a
  /// reduction of an outside element (negate=true), rep accumulates the
  /// applied combination with a positive sign.
  void reduce_tracked(VecPoly& v, std::vector<Poly>& rep, bool negate = false) const {
    using namespace detail;
    VecPoly remainder(v.size(), Poly::zero(v.front().ring()));
    while (!vec_is_zero(v)) {
      auto lt = vec_leading_term(v, order_);
      bool divided = false;
      for (std::size_t b = 0; b < elements_.size(); ++b) {
        auto ltb = vec_leading_term(elements_[b], order_);
        if (ltb->comp != lt->comp || !divides(ltb->exp, lt->exp)) continue;
        Exp m = exp_div(lt->exp, ltb->exp);
        Fp c = lt->coeff / ltb->coeff;
        v = vec_sub_scaled(v, elements_[b], m, c);
        for (std::size_t k = 0; k < rep.size(); ++k) {
          Poly delta = reps_[b][k].times_term(m, c);
          if (negate) rep[k] += delta;
          else rep[k] -= delta;
        }
        divided = true;
        break;
      }
      if (!divided) {
        remainder[lt->comp].add_term(lt->exp, lt->coeff);
        Poly t = Poly::monomial(v[lt->comp].ring(), lt->exp, lt->coeff);
        v[lt->comp] -= t;
      }
    }
    v = std::move(remainder);
  }

  MonomialOrder order_;
  std::vector<VecPoly> elements_;
  std::vector<std::vector<Poly>> reps_;
  std::size_t ngens_ = 0;
};

/// Membership of v in the submodule generated by gens; on success returns
/// coefficients c with v = sum c_i * gens_i.
inline std::optional<std::vector<Poly>> module_membership(const VecPoly& v,
                                                          const std::vector<VecPoly>& gens) {
  if (gens.empty()) {
    if (detail::vec_is_zero(v)) return std::vector<Poly>{};
    return std::nullopt;
  }
  for (const auto& g : gens)
    if (g.size() != v.size())
      throw std::invalid_argument("module_membership: mixed vector lengths");
  if (detail::vec_is_zero(v)) {
    std::vector<Poly> rep(gens.size(), Poly::zero(v.front().ring()));
    return rep;
  }
  ModuleBasis basis(gens);
  auto [remainder, rep] = basis.reduce(v);
  if (!detail::vec_is_zero(remainder)) return std::nullopt;
  return rep;
}

}  // namespace folres

#endif
