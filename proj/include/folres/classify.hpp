#ifndef FOLRES_CLASSIFY_HPP
#define FOLRES_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "folres/foliation.hpp"
#include "folres/linalg.hpp"

namespace folres {

class ClassificationError : public std::runtime_error {
 public:
  explicit ClassificationError(const std::string& what) : std::runtime_error(what) {}
};

/// An F_p-rational point of a chart.
using ClosedPoint = std::vector<Fp>;

/// Translate so that the given point becomes the origin: substitute
/// x_i -> x_i + s_i in every generator coefficient. The coordinate vector
/// fields are translation-invariant, so only coefficients move.
inline Derivation translate_to_origin(const Derivation& d, const ClosedPoint& s) {
  const RingPtr& r = d.ring().ambient();
  if (s.size() != r->nvars()) throw std::invalid_argument("translate_to_origin: arity");
  std::vector<Poly> images;
  for (std::size_t i = 0; i < r->nvars(); ++i)
    images.push_back(Poly::variable(r, i) + Poly::constant(r, s[i].lift()));
  std::vector<Poly> cs;
  for (const auto& c : d.coeffs()) cs.push_back(c.substitute(images));
  QuotientRing q = d.ring();
  if (!q.is_polynomial()) {
    std::vector<Poly> rels;
    for (const auto& rel : q.relations().generators()) rels.push_back(rel.substitute(images));
    q = QuotientRing(r, Ideal(r, std::move(rels)));
  }
  return Derivation(q, std::move(cs));
}

inline FoliationPresentation translate_to_origin(const FoliationPresentation& fol,
                                                 const ClosedPoint& s) {
  std::vector<Derivation> gens;
  for (const auto& d : fol.generators()) gens.push_back(translate_to_origin(d, s));
  return FoliationPresentation(std::move(gens));
}

/// The induced endomorphism of m/m^2 at the origin: row i holds the linear
/// coefficients of the i-th derivation coefficient, so the matrix sends the
/// coordinate x_i to (linear part of) D(x_i).
inline FpMatrix linear_part(const Derivation& d) {
  const RingPtr& r = d.ring().ambient();
  std::size_t n = r->nvars();
  FpMatrix m(n, n, r->p());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Exp e(n, 0);
      e[j] = 1;
      m.at(i, j) = d.coeffs()[i].coeff(e);
    }
  }
  return m;
}

/// Linear parts of every generator at a basepoint (after translation).
struct LinearPartData {
  std::vector<FpMatrix> matrices;
  ClosedPoint basepoint;
};

inline LinearPartData linear_part(const FoliationPresentation& fol, const ClosedPoint& s) {
  FoliationPresentation at0 = translate_to_origin(fol, s);
  LinearPartData data{{}, s};
  for (const auto& d : at0.generators()) data.matrices.push_back(linear_part(d));
  return data;
}

/// Push a derivation through the linear coordinate change x = P * xnew.
/// The result satisfies Dnew(f(P xnew)) = (D f)(P xnew).
inline Derivation transform_linear(const Derivation& d, const FpMatrix& p_matrix) {
  const RingPtr& r = d.ring().ambient();
  std::size_t n = r->nvars();
  if (p_matrix.rows() != n || p_matrix.cols() != n)
    throw std::invalid_argument("transform_linear: matrix size");
  auto inv = p_matrix.inverse();
  if (!inv) throw std::invalid_argument("transform_linear: matrix not invertible");
  std::vector<Poly> images;  // x_i = sum_j P[i][j] xnew_j
  for (std::size_t i = 0; i < n; ++i) {
    Poly img = Poly::zero(r);
    for (std::size_t j = 0; j < n; ++j) img += Poly::variable(r, j) * p_matrix.at(i, j);
    images.push_back(img);
  }
  std::vector<Poly> cs;
  for (std::size_t j = 0; j < n; ++j) {
    Poly c = Poly::zero(r);
    for (std::size_t i = 0; i < n; ++i) {
      if (inv->at(j, i).is_zero()) continue;
      c += d.coeffs()[i] * inv->at(j, i);
    }
    cs.push_back(c.substitute(images));
  }
  QuotientRing q = d.ring();
  if (!q.is_polynomial()) {
    std::vector<Poly> rels;
    for (const auto& rel : q.relations().generators()) rels.push_back(rel.substitute(images));
    q = QuotientRing(r, Ideal(r, std::move(rels)));
  }
  return Derivation(q, std::move(cs));
}

enum class Verdict { Regular, Multiplicative, Unknown };

/// Machine-checkable witness of a multiplicative singularity: scaling the
/// generator by `scaling` and changing coordinates by x = basis_change*xnew
/// yields exactly sum eigenvalues_i x_i dx_i.
struct Certificate {
  Fp scaling;
  FpMatrix basis_change;
  std::vector<Fp> eigenvalues;
};

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::optional<Certificate> certificate;
  bool lambda_minus_one = false;  // p > 2 and the surface invariant equals -1
  std::string note;
};

namespace detail {

inline std::vector<Fp> fp_roots_of_char_poly(const FpMatrix& m) {
  std::uint32_t p = m.p();
  std::vector<Fp> roots;
  for (std::uint32_t v = 0; v < p; ++v) {
    Fp lambda(v, p);
    FpMatrix shifted = m - FpMatrix::identity(m.rows(), p) * lambda;
    if (shifted.determinant().is_zero()) roots.push_back(lambda);
  }
  return roots;
}

/// Diagonalize over F_p if possible. Returns (P, eigenvalues in coordinate
/// order) with rows of P^-1 the left eigenvectors, i.e. the coordinate
/// change x = P xnew makes the cotangent action diagonal. Eigenvalues with
/// value 1 are listed first, then by increasing lift.
inline std::optional<std::pair<FpMatrix, std::vector<Fp>>> diagonalize(const FpMatrix& m) {
  std::uint32_t p = m.p();
  std::size_t n = m.rows();
  // left eigenvectors of m = eigenvectors of m^T
  FpMatrix mt(n, n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mt.at(i, j) = m.at(j, i);
  std::vector<std::pair<Fp, std::vector<Fp>>> pairs;
  for (const Fp& lambda : fp_roots_of_char_poly(m)) {
    FpMatrix shifted = mt - FpMatrix::identity(n, p) * lambda;
    for (auto& v : shifted.kernel()) pairs.emplace_back(lambda, std::move(v));
  }
  if (pairs.size() != n) return std::nullopt;
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    bool a1 = a.first.is_one(), b1 = b.first.is_one();
    if (a1 != b1) return a1;
    return a.first.lift() < b.first.lift();
  });
  FpMatrix pinv(n, n, p);
  std::vector<Fp> eigen;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) pinv.at(r, c) = pairs[r].second[c];
    eigen.push_back(pairs[r].first);
  }
  auto pmat = pinv.inverse();
  if (!pmat) return std::nullopt;  // eigenvectors dependent: not diagonalizable
  return std::make_pair(*pmat, eigen);
}

inline bool is_exactly_diagonal(const Derivation& d, const std::vector<Fp>& eigen) {
  const RingPtr& r = d.ring().ambient();
  for (std::size_t i = 0; i < r->nvars(); ++i)
    if (d.coeffs()[i] != Poly::variable(r, i) * eigen[i]) return false;
  return true;
}

inline bool vanishes_at_origin(const Derivation& d) {
  for (const auto& c : d.coeffs())
    if (!c.constant_term().is_zero()) return false;
  return true;
}

/// Search for the mu_p witness of a single derivation that vanishes at the
/// origin: a scaling c with (cD)^[p] = cD whose linear part diagonalizes
/// over F_p with all eigenvalues nonzero and 1 present, such that the
/// eigenbasis change makes cD exactly diagonal.
inline std::optional<Certificate> certify_multiplicative(const Derivation& d) {
  std::uint32_t p = d.ring().ambient()->p();
  if (!vanishes_at_origin(d)) return std::nullopt;
  for (std::uint32_t c = 1; c < p; ++c) {
    Derivation scaled = d * Fp(c, p);
    if (p_power(scaled) != scaled) continue;
    FpMatrix m = linear_part(scaled);
    auto diag = diagonalize(m);
    if (!diag) continue;
    auto& [pmat, eigen] = *diag;
    bool ok = !eigen.empty() && eigen.front().is_one();
    for (const Fp& ev : eigen) ok = ok && !ev.is_zero();
    if (!ok) continue;
    Derivation changed = transform_linear(scaled, pmat);
    if (!is_exactly_diagonal(changed, eigen)) continue;
    return Certificate{Fp(c, p), pmat, eigen};
  }
  return std::nullopt;
}

}  // namespace detail

inline bool regular_at(const FoliationPresentation& fol, const ClosedPoint& s) {
  Ideal sing = singular_ideal(fol);
  for (const auto& g : sing.basis())
    if (!g.evaluate(s).is_zero()) return true;
  return false;
}

/// Point-local classification. Regular iff the singular ideal is a unit
/// locally at s; Multiplicative with a replayable certificate when the exact
/// mu_p condition holds after scaling and a linear change diagonalizes the
/// generator exactly; Unknown otherwise (never a wrong verdict).
inline Classification multiplicative_certificate(const FoliationPresentation& fol,
                                                 const ClosedPoint& s) {
  Classification out;
  if (!fol.ring().is_polynomial())
    throw UnsupportedInputError("multiplicative_certificate: polynomial charts only");
  if (regular_at(fol, s)) {
    out.verdict = Verdict::Regular;
    return out;
  }
  FoliationPresentation at0 = translate_to_origin(fol, s);
  std::uint32_t p = fol.ring().ambient()->p();

  std::vector<const Derivation*> nonzero;
  for (const auto& d : at0.generators())
    if (!d.is_zero()) nonzero.push_back(&d);
  if (nonzero.empty()) {
    out.verdict = Verdict::Unknown;
    out.note = "zero presentation";
    return out;
  }

  // rank one: certify the presentation through its first nonzero generator;
  // higher rank: every generator must certify independently
  std::vector<const Derivation*> to_certify;
  if (generic_rank(at0) == 1) to_certify.push_back(nonzero.front());
  else to_certify = nonzero;

  std::optional<Certificate> first;
  for (const Derivation* d : to_certify) {
    auto cert = detail::certify_multiplicative(*d);
    if (!cert) {
      out.verdict = Verdict::Unknown;
      out.note = "no mu_p scaling with an exact diagonal form";
      return out;
    }
    if (!first) first = cert;
  }
  out.verdict = Verdict::Multiplicative;
  out.certificate = first;

  // surface invariant: eigenvalues {1, lambda}; flag lambda = -1 for p > 2
  if (p > 2 && first->eigenvalues.size() == 2) {
    Fp lambda = first->eigenvalues[1];
    if (lambda == Fp(-1, p)) out.lambda_minus_one = true;
  }
  return out;
}

/// min{lambda, lambda^-1} under the lift-to-{0..p-1} total order, for the
/// certified surface eigenvalue pair {1, lambda}.
inline Fp lambda_min(const FoliationPresentation& fol, const ClosedPoint& s) {
  Classification cls = multiplicative_certificate(fol, s);
  if (cls.verdict != Verdict::Multiplicative)
    throw ClassificationError("lambda_min: point is not a certified multiplicative singularity");
  const auto& eigen = cls.certificate->eigenvalues;
  if (eigen.size() != 2)
    throw ClassificationError("lambda_min: requires a 2-dimensional cotangent action");
  Fp lambda = eigen[0].is_one() ? eigen[1] : eigen[0];
  Fp inv = lambda.inverse();
  return lambda.lift() <= inv.lift() ? lambda : inv;
}

}  // namespace folres

#endif
