#ifndef FOLRES_FP_HPP
#define FOLRES_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace folres {

/// Thrown when two values from incompatible rings (or fields) are combined.
class RingMismatchError : public std::runtime_error {
 public:
  explicit RingMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation receives input outside its supported shapes.
class UnsupportedInputError : public std::runtime_error {
 public:
  explicit UnsupportedInputError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// An element of the prime field F_p. The modulus travels with the value;
/// mixing moduli is a structural error, not UB.
class Fp {
 public:
  Fp() : v_(0), p_(2) {}

  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Lift to the canonical representative in {0,...,p-1}.
  std::uint32_t lift() const { return v_; }

  Fp operator-() const { return Fp(-static_cast<std::int64_t>(v_), p_); }

  Fp operator+(const Fp& o) const { check(o); return Fp(static_cast<std::int64_t>(v_) + o.v_, p_); }
  Fp operator-(const Fp& o) const { check(o); return Fp(static_cast<std::int64_t>(v_) - o.v_, p_); }
  Fp operator*(const Fp& o) const { check(o); return Fp(static_cast<std::int64_t>(v_) * o.v_, p_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0, p_);
  }

  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  Fp pow(std::uint64_t e) const {
    Fp r(1, p_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw RingMismatchError("Fp: mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

}  // namespace folres

#endif
