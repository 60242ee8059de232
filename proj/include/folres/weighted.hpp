#ifndef FOLRES_WEIGHTED_HPP
#define FOLRES_WEIGHTED_HPP

#include <vector>

#include "folres/blowup.hpp"
#include "folres/rees.hpp"

namespace folres {

class EquivarianceError : public std::runtime_error {
 public:
  explicit EquivarianceError(const std::string& what) : std::runtime_error(what) {}
};

/// Charts of the weighted blow-up of the coordinate Rees algebra
/// sum (x_i, d_i). The chart distinguished by x_i is the smooth cover
///   x_i = u^{d_i},  x_j = u^{d_j} v_j (j in centers),  x_j = v_j (else)
/// carrying the mu_{d_i}-action u -> xi u, v_j -> xi^{-d_j} v_j. Weights
/// divisible by p are rejected (the blow-up would not be Deligne-Mumford).
inline std::vector<Chart> weighted_blowup_charts(
    const Chart& parent, const std::vector<std::pair<std::size_t, unsigned>>& centers) {
  if (centers.empty()) throw std::invalid_argument("weighted_blowup_charts: empty center");
  if (!parent.ring().is_polynomial())
    throw UnsupportedInputError("weighted_blowup_charts: smooth polynomial charts only");
  const RingPtr& pr = parent.ambient();
  std::uint32_t p = pr->p();
  for (auto [i, d] : centers) {
    if (i >= pr->nvars()) throw std::invalid_argument("weighted_blowup_charts: bad index");
    if (d == 0 || d % p == 0)
      throw UnsupportedInputError(
          "weighted_blowup_charts: weight divisible by p gives a non-Deligne-Mumford stack");
  }

  auto weight_of = [&](std::size_t j) -> unsigned {
    for (auto [i, d] : centers)
      if (i == j) return d;
    return 0;  // not a center variable
  };

  std::vector<Chart> charts;
  static const char* kCoverNames[] = {"v", "w", "s", "r"};
  for (auto [i, di] : centers) {
    std::vector<std::string> names(pr->nvars());
    names[i] = "u";
    std::size_t next = 0;
    for (std::size_t j = 0; j < pr->nvars(); ++j) {
      if (j == i) continue;
      names[j] = next < 4 ? kCoverNames[next] : ("v" + std::to_string(next));
      ++next;
    }
    RingPtr cr = Ring::make(p, names);
    Poly u = Poly::variable(cr, i);

    std::vector<Poly> to_parent(pr->nvars(), Poly::zero(cr));
    CyclicAction action;
    action.order = di;
    action.weights.assign(pr->nvars(), 0);
    std::vector<std::size_t> center_idx;
    std::vector<unsigned> center_wts;
    for (auto [j, dj] : centers) {
      center_idx.push_back(j);
      center_wts.push_back(dj);
    }
    for (std::size_t j = 0; j < pr->nvars(); ++j) {
      unsigned dj = weight_of(j);
      if (j == i) {
        to_parent[j] = u.pow(di);
        action.weights[j] = 1 % di;
      } else if (dj > 0) {
        to_parent[j] = u.pow(dj) * Poly::variable(cr, j);
        action.weights[j] = (di - dj % di) % di;
      } else {
        to_parent[j] = Poly::variable(cr, j);
        action.weights[j] = 0;
      }
    }
    charts.emplace_back(QuotientRing(cr), std::move(to_parent), u, i, action, center_idx,
                        center_wts);
  }
  return charts;
}

/// Character of a monomial under the chart action: sum of exponents times
/// variable weights, mod the group order.
inline unsigned action_weight(const Exp& e, const CyclicAction& action) {
  if (action.trivial()) return 0;
  unsigned long acc = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    acc += static_cast<unsigned long>(e[i]) * action.weights[i];
  return static_cast<unsigned>(acc % action.order);
}

/// Elementwise mu_d-invariance: every monomial of the z-coefficient has the
/// same character as z itself.
inline bool mu_d_invariant(const Derivation& d, const CyclicAction& action) {
  if (action.trivial()) return true;
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    for (const auto& [e, c] : d.coeffs()[i].terms())
      if (action_weight(e, action) != action.weights[i]) return false;
  }
  return true;
}

/// Isotypic: all terms of all coefficients share one character shift. An
/// isotypic generator spans a mu_d-stable line, so the generated module
/// descends; invariance is the shift-zero case. Rank-one saturation of an
/// invariant derivation divides by a monomial and lands here.
inline bool mu_d_isotypic(const Derivation& d, const CyclicAction& action) {
  if (action.trivial()) return true;
  bool found = false;
  unsigned shift = 0;
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    for (const auto& [e, c] : d.coeffs()[i].terms()) {
      unsigned s = (action_weight(e, action) + action.order - action.weights[i]) % action.order;
      if (!found) {
        shift = s;
        found = true;
      } else if (s != shift) {
        return false;
      }
    }
  }
  return true;
}

/// Pullback of a derivation along a weighted chart, from the cover rules
///   dx_i = (1/(d_i u^{d_i})) [u du - sum_j d_j v_j dv_j]
///   dx_j = (1/u^{d_j}) dv_j   (centers j != i),   dx_j = dv_j (else),
/// with denominators cleared against powers of u. The result must be
/// mu_d-invariant; a non-invariant result signals a center that is not
/// adapted to the derivation and raises an equivariance error.
inline PullbackResult pullback_derivation_weighted(const Derivation& on_parent,
                                                   const Chart& chart) {
  if (!chart.action()) throw UnsupportedInputError("pullback_derivation_weighted: not weighted");
  if (!chart.exceptional_var())
    throw UnsupportedInputError("pullback_derivation_weighted: chart has no cover variable");
  const std::size_t i = *chart.exceptional_var();
  const RingPtr& cr = chart.ambient();
  const std::uint32_t p = cr->p();
  std::size_t n = cr->nvars();
  const Poly u = chart.exceptional();

  auto weight_of = [&](std::size_t j) -> unsigned {
    for (std::size_t k = 0; k < chart.center().size(); ++k)
      if (chart.center()[k] == j) return chart.center_weights()[k];
    return 0;
  };
  const unsigned di = weight_of(i);
  const Fp di_inv = Fp(di, p).inverse();

  std::vector<detail::LaurentCoeff> acc(n, {Poly::zero(cr), 0});
  for (std::size_t j = 0; j < n; ++j) {
    Poly cj = chart.pull_function(on_parent.coeffs()[j]);
    if (cj.is_zero()) continue;
    unsigned dj = weight_of(j);
    if (j == i) {
      Poly g = cj * di_inv;
      detail::laurent_add(acc[i], g * Poly::variable(cr, i), di, u);
      for (std::size_t k = 0; k < n; ++k) {
        unsigned dk = weight_of(k);
        if (k == i || dk == 0) continue;
        detail::laurent_add(acc[k], -(g * Poly::variable(cr, k) * Fp(dk, p)), di, u);
      }
    } else if (dj > 0) {
      detail::laurent_add(acc[j], cj, dj, u);
    } else {
      detail::laurent_add(acc[j], cj, 0, u);
    }
  }

  for (auto& lc : acc) {
    while (lc.k > 0) {
      auto q = chart.divide_by_exceptional(lc.num);
      if (!q) break;
      lc.num = *q;
      lc.k -= 1;
    }
  }
  unsigned clear = 0;
  for (const auto& lc : acc) clear = std::max(clear, lc.k);
  std::vector<Poly> coeffs;
  coeffs.reserve(n);
  for (const auto& lc : acc) coeffs.push_back(lc.num * u.pow(clear - lc.k));
  Derivation result(chart.ring(), std::move(coeffs));
  if (!mu_d_invariant(result, *chart.action()))
    throw EquivarianceError("pullback_derivation_weighted: pullback is not mu_d-invariant");
  return {std::move(result), clear};
}

/// Regularity of a presentation on the smooth cover, gated on equivariance:
/// generators must be isotypic (invariant before saturation, isotypic
/// after), so the module they span descends to the quotient stack.
inline bool chart_regularity(const FoliationPresentation& fol, const CyclicAction& action) {
  for (const auto& d : fol.generators())
    if (!mu_d_isotypic(d, action))
      throw EquivarianceError("chart_regularity: generator is not mu_d-isotypic");
  return is_regular_presentation(fol);
}

}  // namespace folres

#endif
