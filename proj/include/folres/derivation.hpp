#ifndef FOLRES_DERIVATION_HPP
#define FOLRES_DERIVATION_HPP

#include <vector>

#include "folres/module.hpp"
#include "folres/quotient_ring.hpp"

namespace folres {

/// Multivariate gcd, normalized monic under grevlex. Computed through the
/// principal ideal identity (f) cap (g) = (lcm(f,g)) and exact division,
/// which stays inside the Groebner kernel.
inline Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.is_zero() ? g : g.monic(MonomialOrder::grevlex());
  if (g.is_zero()) return f.monic(MonomialOrder::grevlex());
  Ideal inter = ideal_intersection(Ideal(f.ring(), {f}), Ideal(g.ring(), {g}));
  const auto& basis = inter.basis();
  if (basis.size() != 1)
    throw std::logic_error("poly_gcd: intersection of principal ideals not principal");
  const Poly& lcm = basis.front();
  return divide_exact(f * g, lcm).monic(MonomialOrder::grevlex());
}

inline Poly poly_gcd(const std::vector<Poly>& fs) {
  if (fs.empty()) throw std::invalid_argument("poly_gcd: empty list");
  Poly g = Poly::zero(fs.front().ring());
  for (const auto& f : fs) {
    g = poly_gcd(g, f);
    if (g.is_constant() && !g.is_zero()) return g;
  }
  return g;
}

/// A k-linear derivation D = sum coeffs_i d/dx_i on a chart ring. On a
/// quotient ring, construction checks that D maps the relations ideal into
/// itself, so D descends.
class Derivation {
 public:
  Derivation(QuotientRing ring, std::vector<Poly> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_.ambient()->nvars())
      throw std::invalid_argument("Derivation: coefficient count != variable count");
    for (auto& c : coeffs_) {
      require_same_ring(*ring_.ambient(), *c.ring(), "Derivation");
      c = ring_.normal_form(c);
    }
    if (!ring_.is_polynomial()) {
      for (const auto& rel : ring_.relations().generators()) {
        if (!ring_.relations().contains(apply_raw(rel)))
          throw UnsupportedInputError(
              "Derivation: does not preserve the relations ideal (not well-defined on the quotient)");
      }
    }
  }

  const QuotientRing& ring() const { return ring_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  std::size_t nvars() const { return coeffs_.size(); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// D(f), reduced in the quotient.
  Poly apply(const Poly& f) const {
    require_same_ring(*ring_.ambient(), *f.ring(), "Derivation::apply");
    return ring_.normal_form(apply_raw(f));
  }

  Derivation operator+(const Derivation& o) const {
    check(o);
    std::vector<Poly> cs;
    cs.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs.push_back(coeffs_[i] + o.coeffs_[i]);
    return Derivation(ring_, std::move(cs));
  }

  Derivation operator-(const Derivation& o) const {
    check(o);
    std::vector<Poly> cs;
    cs.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs.push_back(coeffs_[i] - o.coeffs_[i]);
    return Derivation(ring_, std::move(cs));
  }

  Derivation operator*(const Fp& c) const {
    std::vector<Poly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& f : coeffs_) cs.push_back(f * c);
    return Derivation(ring_, std::move(cs));
  }

  Derivation operator*(const Poly& f) const {
    std::vector<Poly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& g : coeffs_) cs.push_back(g * f);
    return Derivation(ring_, std::move(cs));
  }

  bool operator==(const Derivation& o) const {
    if (!ring_.same_as(o.ring_)) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!ring_.equal(coeffs_[i], o.coeffs_[i])) return false;
    return true;
  }
  bool operator!=(const Derivation& o) const { return !(*this == o); }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[i].str() + ")d/d" + ring_.ambient()->var_name(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  Poly apply_raw(const Poly& f) const {
    Poly r = Poly::zero(ring_.ambient());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      r += coeffs_[i] * f.derivative(i);
    }
    return r;
  }

  void check(const Derivation& o) const {
    if (!ring_.same_as(o.ring_)) throw RingMismatchError("Derivation: mixed rings");
  }

  QuotientRing ring_;
  std::vector<Poly> coeffs_;
};

inline Derivation lie_bracket(const Derivation& a, const Derivation& b) {
  if (!a.ring().same_as(b.ring())) throw RingMismatchError("lie_bracket: mixed rings");
  std::vector<Poly> cs;
  cs.reserve(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i)
    cs.push_back(a.apply(b.coeffs()[i]) - b.apply(a.coeffs()[i]));
  return Derivation(a.ring(), std::move(cs));
}

/// D^[p]: the p-fold composition of D, itself a derivation in
/// characteristic p. Coefficients are D^(p-1) applied to each coefficient.
inline Derivation p_power(const Derivation& d) {
  std::uint32_t p = d.ring().ambient()->p();
  std::vector<Poly> cs = d.coeffs();
  for (std::uint32_t step = 1; step < p; ++step)
    for (auto& c : cs) c = d.apply(c);
  return Derivation(d.ring(), std::move(cs));
}

/// Divide a nonzero rank-one derivation by the gcd of its coefficients, so
/// that it generates a saturated rank-one submodule. Polynomial rings only.
inline Derivation saturate_rank_one(const Derivation& d) {
  if (d.is_zero()) throw std::invalid_argument("saturate_rank_one: zero derivation");
  if (!d.ring().is_polynomial())
    throw UnsupportedInputError("saturate_rank_one: only on polynomial charts");
  std::vector<Poly> nonzero;
  for (const auto& c : d.coeffs())
    if (!c.is_zero()) nonzero.push_back(c);
  Poly g = poly_gcd(nonzero);
  if (g.is_constant()) return d;
  std::vector<Poly> cs;
  cs.reserve(d.nvars());
  for (const auto& c : d.coeffs())
    cs.push_back(c.is_zero() ? c : divide_exact(c, g));
  return Derivation(d.ring(), std::move(cs));
}

}  // namespace folres

#endif
