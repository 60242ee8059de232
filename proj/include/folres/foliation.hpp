#ifndef FOLRES_FOLIATION_HPP
#define FOLRES_FOLIATION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "folres/derivation.hpp"

namespace folres {

/// Finite presentation of a 1-foliation on a chart: a nonempty generator
/// list of derivations on a common ring.
class FoliationPresentation {
 public:
  explicit FoliationPresentation(std::vector<Derivation> generators)
      : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("FoliationPresentation: no generators");
    for (std::size_t i = 1; i < gens_.size(); ++i)
      if (!gens_[i].ring().same_as(gens_.front().ring()))
        throw RingMismatchError("FoliationPresentation: generators on different rings");
  }

  const std::vector<Derivation>& generators() const { return gens_; }
  const QuotientRing& ring() const { return gens_.front().ring(); }

 private:
  std::vector<Derivation> gens_;
};

namespace detail {

/// Generators of the coefficient submodule, augmented on a quotient ring by
/// relations times unit vectors (membership is then membership modulo the
/// relations submodule).
inline std::vector<VecPoly> coefficient_module(const FoliationPresentation& fol) {
  std::vector<VecPoly> gens;
  for (const auto& d : fol.generators()) gens.push_back(d.coeffs());
  const QuotientRing& qr = fol.ring();
  if (!qr.is_polynomial()) {
    std::size_t n = qr.ambient()->nvars();
    for (const auto& rel : qr.relations().generators()) {
      for (std::size_t i = 0; i < n; ++i) {
        VecPoly v(n, Poly::zero(qr.ambient()));
        v[i] = rel;
        gens.push_back(std::move(v));
      }
    }
  }
  return gens;
}

}  // namespace detail

/// Coefficients expressing v in the submodule generated by gens, if any.
inline std::optional<std::vector<Poly>> submodule_membership(const VecPoly& v,
                                                             const std::vector<VecPoly>& gens) {
  return module_membership(v, gens);
}

inline bool contains_derivation(const FoliationPresentation& fol, const Derivation& d) {
  if (!fol.ring().same_as(d.ring())) throw RingMismatchError("contains_derivation");
  return module_membership(d.coeffs(), detail::coefficient_module(fol)).has_value();
}

/// Every pairwise Lie bracket of generators lies in the generated submodule.
inline bool is_involutive(const FoliationPresentation& fol) {
  auto gens = detail::coefficient_module(fol);
  const auto& ds = fol.generators();
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (!module_membership(lie_bracket(ds[i], ds[j]).coeffs(), gens)) return false;
  return true;
}

/// Every p-th power of a generator lies in the generated submodule.
inline bool is_p_closed(const FoliationPresentation& fol) {
  auto gens = detail::coefficient_module(fol);
  for (const auto& d : fol.generators())
    if (!module_membership(p_power(d).coeffs(), gens)) return false;
  return true;
}

namespace detail {

inline Poly minor_determinant(const std::vector<std::vector<Poly>>& m,
                              const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols, const RingPtr& ring) {
  std::size_t n = rows.size();
  if (n == 0) return Poly::constant(ring, 1);
  if (n == 1) return m[rows[0]][cols[0]];
  Poly det = Poly::zero(ring);
  Fp sign(1, ring->p());
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    if (!m[rows[0]][cols[k]].is_zero())
      det += sign * (m[rows[0]][cols[k]] * minor_determinant(m, sub_rows, sub_cols, ring));
    sign = -sign;
  }
  return det;
}

inline void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline std::vector<Poly> all_minors(const FoliationPresentation& fol, std::size_t r) {
  const auto& ds = fol.generators();
  const RingPtr& ring = fol.ring().ambient();
  std::vector<std::vector<Poly>> m;
  for (const auto& d : ds) m.push_back(d.coeffs());
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  subsets_of_size(m.size(), r, row_sets);
  subsets_of_size(ring->nvars(), r, col_sets);
  std::vector<Poly> minors;
  for (const auto& rows : row_sets)
    for (const auto& cols : col_sets) {
      Poly det = fol.ring().normal_form(minor_determinant(m, rows, cols, ring));
      if (!det.is_zero()) minors.push_back(det);
    }
  return minors;
}

}  // namespace detail

/// Rank of the generator coefficient matrix over the fraction field: the
/// largest r with a nonzero r x r minor.
inline std::size_t generic_rank(const FoliationPresentation& fol) {
  std::size_t max_r = std::min(fol.generators().size(), fol.ring().ambient()->nvars());
  for (std::size_t r = max_r; r >= 1; --r)
    if (!detail::all_minors(fol, r).empty()) return r;
  return 0;
}

/// Ideal of all r x r minors, r = generic_rank. The presentation fails to be
/// a sub-bundle exactly on its vanishing locus; on a quotient chart the
/// relations are included so the ideal cuts the locus inside the chart.
inline Ideal singular_ideal(const FoliationPresentation& fol) {
  if (!fol.ring().is_polynomial() && !fol.ring().relations().generators().empty()) {
    // callers certify ambient regularity before asking; see chart module
  }
  std::size_t r = generic_rank(fol);
  if (r == 0) throw UnsupportedInputError("singular_ideal: zero presentation");
  std::vector<Poly> gens = detail::all_minors(fol, r);
  if (!fol.ring().is_polynomial())
    for (const auto& rel : fol.ring().relations().generators()) gens.push_back(rel);
  return Ideal(fol.ring().ambient(), std::move(gens));
}

inline bool is_regular_presentation(const FoliationPresentation& fol) {
  return singular_ideal(fol).is_unit();
}

}  // namespace folres

#endif
