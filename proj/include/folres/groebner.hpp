#ifndef FOLRES_GROEBNER_HPP
#define FOLRES_GROEBNER_HPP

#include <algorithm>
#include <vector>

#include "folres/poly.hpp"

namespace folres {

/// Full reduction of f modulo G: no term of the result is divisible by any
/// leading monomial of G.
inline Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
  if (f.is_zero() || basis.empty()) return f;
  Poly h = f;
  Poly r = Poly::zero(f.ring());
  std::vector<std::pair<Exp, Fp>> lts;
  lts.reserve(basis.size());
  for (const auto& g : basis) lts.push_back(g.leading_term(order));
  while (!h.is_zero()) {
    auto [em, cm] = h.leading_term(order);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (divides(lts[i].first, em)) {
        Fp c = cm / lts[i].second;
        h -= basis[i].times_term(exp_div(em, lts[i].first), c);
        divided = true;
        break;
      }
    }
    if (!divided) {
      r.add_term(em, cm);
      Poly t = Poly::monomial(h.ring(), em, cm);
      h -= t;
    }
  }
  return r;
}

inline Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  auto [ef, cf] = f.leading_term(order);
  auto [eg, cg] = g.leading_term(order);
  Exp l = exp_lcm(ef, eg);
  return f.times_term(exp_div(l, ef), cf.inverse()) - g.times_term(exp_div(l, eg), cg.inverse());
}

namespace detail {

inline void interreduce(std::vector<Poly>& basis, const MonomialOrder& order) {
  // drop elements whose leading monomial is divisible by another's
  for (std::size_t i = 0; i < basis.size();) {
    Exp lm = basis[i].leading_term(order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j == i) continue;
      if (divides(basis[j].leading_term(order).first, lm)) {
        redundant = true;
        break;
      }
    }
    if (redundant) basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
    else ++i;
  }
  // fully reduce each element against the others, and normalize
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(basis.size() - 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    basis[i] = normal_form(basis[i], others, order).monic(order);
  }
  std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
    return order.less(a.leading_term(order).first, b.leading_term(order).first);
  });
}

}  // namespace detail

/// Buchberger's algorithm; returns the reduced Groebner basis (sorted by
/// leading monomial, monic), which is unique for the given order. The zero
/// ideal yields an empty basis.
inline std::vector<Poly> groebner_basis(std::vector<Poly> gens, const MonomialOrder& order) {
  std::vector<Poly> basis;
  for (auto& f : gens)
    if (!f.is_zero()) basis.push_back(f.monic(order));
  if (basis.empty()) return basis;

  struct Pair {
    std::size_t i, j;
    unsigned lcm_deg;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Exp li = basis[i].leading_term(order).first;
      Exp lk = basis[k].leading_term(order).first;
      // product criterion: coprime leading monomials reduce to zero
      if (exp_coprime(li, lk)) continue;
      pairs.push_back({i, k, total_degree(exp_lcm(li, lk))});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  while (!pairs.empty()) {
    // process low-degree pairs first
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [](const Pair& a, const Pair& b) { return a.lcm_deg < b.lcm_deg; });
    Pair pr = *it;
    pairs.erase(it);

    // chain (lcm) criterion
    Exp li = basis[pr.i].leading_term(order).first;
    Exp lj = basis[pr.j].leading_term(order).first;
    Exp lij = exp_lcm(li, lj);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      Exp lk = basis[k].leading_term(order).first;
      if (!divides(lk, lij)) continue;
      auto seen = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        if (exp_coprime(basis[a].leading_term(order).first, basis[b].leading_term(order).first))
          return true;  // that pair was discarded as trivial
        for (const auto& q : pairs)
          if (q.i == a && q.j == b) return false;
        return true;
      };
      if (exp_lcm(lk, li) != lij && exp_lcm(lk, lj) != lij && seen(pr.i, k) && seen(pr.j, k))
        skip = true;
    }
    if (skip) continue;

    Poly h = normal_form(s_polynomial(basis[pr.i], basis[pr.j], order), basis, order);
    if (!h.is_zero()) {
      basis.push_back(h.monic(order));
      push_pairs(basis.size() - 1);
    }
  }

  detail::interreduce(basis, order);
  return basis;
}

}  // namespace folres

#endif
