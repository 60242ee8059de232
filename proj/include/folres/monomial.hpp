#ifndef FOLRES_MONOMIAL_HPP
#define FOLRES_MONOMIAL_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace folres {

/// Exponent vector of a monomial; width equals the ring's variable count.
using Exp = std::vector<unsigned>;

inline unsigned total_degree(const Exp& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

inline bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exp exp_mul(const Exp& a, const Exp& b) {
  Exp r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

/// b / a, assuming divides(a, b).
inline Exp exp_div(const Exp& b, const Exp& a) {
  Exp r(b);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= a[i];
  return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
  Exp r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exp exp_gcd(const Exp& a, const Exp& b) {
  Exp r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline bool exp_coprime(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

/// Total multiplicative monomial orders. Default throughout is
/// degree-reverse-lexicographic; an elimination order (block order with the
/// first `k` variables dominating) backs saturation and intersection tricks.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder elimination(std::size_t first_block) { return MonomialOrder(Kind::Elim, first_block); }

  /// Strict comparison: true iff a < b in this order.
  bool less(const Exp& a, const Exp& b) const {
    switch (kind_) {
      case Kind::Lex: return lex_less(a, b, 0, a.size());
      case Kind::GrevLex: return grevlex_less(a, b, 0, a.size());
      case Kind::Elim: {
        if (grevlex_less(a, b, 0, block_)) return true;
        if (grevlex_less(b, a, 0, block_)) return false;
        return grevlex_less(a, b, block_, a.size());
      }
    }
    return false;
  }

  bool equal_kind(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }

 private:
  enum class Kind { GrevLex, Lex, Elim };
  MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}

  static bool lex_less(const Exp& a, const Exp& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }

  static bool grevlex_less(const Exp& a, const Exp& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db;
    // equal degree: a < b iff the rightmost difference has a_i > b_i
    for (std::size_t i = hi; i > lo; --i) {
      if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1];
    }
    return false;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace folres

#endif
