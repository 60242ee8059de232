#ifndef FOLRES_BLOWUP_HPP
#define FOLRES_BLOWUP_HPP

#include <vector>

#include "folres/chart.hpp"

namespace folres {

/// Strict transform: push the ideal through the chart substitution, then
/// saturate by the exceptional equation.
inline Ideal strict_transform(const Ideal& ideal, const Chart& chart) {
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute(chart.to_parent()));
  Ideal substituted(chart.ambient(), std::move(gens));
  if (chart.exceptional().is_constant()) return substituted;
  return saturation(substituted, chart.exceptional());
}

/// Charts of the blow-up along the coordinate center (x_{c_1},...,x_{c_r}).
/// The chart distinguished by c_j renames every parent variable with a
/// prime and maps x_{c_j} -> y_{c_j}, x_c -> y_{c_j} y_c for the other
/// center variables, x_m -> y_m elsewhere; relations are strict-transformed.
inline std::vector<Chart> blowup_coordinate_center(const Chart& parent,
                                                   const std::vector<std::size_t>& center) {
  if (center.empty()) throw std::invalid_argument("blowup_coordinate_center: empty center");
  const RingPtr& pr = parent.ambient();
  for (std::size_t c : center)
    if (c >= pr->nvars()) throw std::invalid_argument("blowup_coordinate_center: bad center index");
  for (std::size_t i = 0; i < center.size(); ++i)
    for (std::size_t j = i + 1; j < center.size(); ++j)
      if (center[i] == center[j])
        throw std::invalid_argument("blowup_coordinate_center: repeated center variable");

  std::vector<std::string> names;
  for (const auto& v : pr->vars()) names.push_back(v + "'");
  RingPtr cr = Ring::make(pr->p(), names);

  std::vector<Chart> charts;
  for (std::size_t e : center) {
    Poly ye = Poly::variable(cr, e);
    std::vector<Poly> to_parent;
    for (std::size_t i = 0; i < pr->nvars(); ++i) {
      bool in_center = std::find(center.begin(), center.end(), i) != center.end();
      if (i == e) to_parent.push_back(ye);
      else if (in_center) to_parent.push_back(ye * Poly::variable(cr, i));
      else to_parent.push_back(Poly::variable(cr, i));
    }
    // strict transform of the parent relations
    QuotientRing q(cr);
    if (!parent.ring().is_polynomial()) {
      std::vector<Poly> rels;
      for (const auto& rel : parent.ring().relations().generators())
        rels.push_back(rel.substitute(to_parent));
      Ideal transformed = saturation(Ideal(cr, std::move(rels)), ye);
      q = QuotientRing(cr, Ideal(cr, transformed.basis()));
    }
    charts.emplace_back(std::move(q), std::move(to_parent), ye, e, std::nullopt, center);
  }
  return charts;
}

struct PullbackResult {
  Derivation derivation;
  unsigned cleared_power = 0;  // the recorded power of the exceptional
};

namespace detail {

/// Coefficient with denominator a power of the exceptional: num / exc^k.
struct LaurentCoeff {
  Poly num;
  unsigned k = 0;
};

inline void laurent_add(LaurentCoeff& acc, const Poly& num, unsigned k, const Poly& exc) {
  if (num.is_zero()) return;
  unsigned common = std::max(acc.k, k);
  Poly a = acc.num * exc.pow(common - acc.k);
  Poly b = num * exc.pow(common - k);
  acc.num = a + b;
  acc.k = common;
}

}  // namespace detail

/// Pullback of a derivation along an ordinary blow-up chart, from the
/// transformation rules for the coordinate vector fields. The distinguished
/// chart variable y_e of center (x_{c}) obeys
///   dx_e  pulls to  (1/1)[d_{y_e} - sum_{c != e} (y_c / y_e) d_{y_c}]
///   dx_c  pulls to  (1/y_e) d_{y_c}        (center, c != e)
///   dx_m  pulls to  d_{y_m}                (off center),
/// then denominators are cleared by the smallest power of the exceptional.
inline PullbackResult pullback_derivation(const Derivation& on_parent, const Chart& chart) {
  if (chart.action() && !chart.action()->trivial())
    throw UnsupportedInputError("pullback_derivation: weighted charts use the weighted module");
  if (!chart.exceptional_var())
    throw UnsupportedInputError("pullback_derivation: chart has no exceptional variable");
  const std::vector<std::size_t>& center = chart.center();
  std::size_t e = *chart.exceptional_var();
  const RingPtr& cr = chart.ambient();
  std::size_t n = cr->nvars();
  Poly exc = chart.exceptional();

  // accumulate Laurent coefficients per chart vector field
  std::vector<detail::LaurentCoeff> acc(n, {Poly::zero(cr), 0});
  for (std::size_t j = 0; j < n; ++j) {
    Poly cj = chart.pull_function(on_parent.coeffs()[j]);
    if (cj.is_zero()) continue;
    bool in_center = std::find(center.begin(), center.end(), j) != center.end();
    if (j == e) {
      detail::laurent_add(acc[e], cj, 0, exc);
      for (std::size_t c : center) {
        if (c == e) continue;
        detail::laurent_add(acc[c], -(cj * Poly::variable(cr, c)), 1, exc);
      }
    } else if (in_center) {
      detail::laurent_add(acc[j], cj, 1, exc);
    } else {
      detail::laurent_add(acc[j], cj, 0, exc);
    }
  }

  // normalize each coefficient: strip exceptional factors where possible
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
  for (const auto& lc : acc) coeffs.push_back(lc.num * exc.pow(clear - lc.k));
  Derivation result(chart.ring(), std::move(coeffs));
  return {std::move(result), clear};
}

}  // namespace folres

#endif
