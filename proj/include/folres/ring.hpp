#ifndef FOLRES_RING_HPP
#define FOLRES_RING_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "folres/fp.hpp"

namespace folres {

/// A polynomial ring F_p[x_1,...,x_n], identified by its modulus and
/// ordered variable list. Rings are immutable and shared by pointer;
/// equality is structural.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(std::uint32_t p, std::vector<std::string> vars) {
    return std::shared_ptr<const Ring>(new Ring(p, std::move(vars)));
  }

  std::uint32_t p() const { return p_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }

  /// Index of a named variable, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? npos : static_cast<std::size_t>(it - vars_.begin());
  }

  bool same_as(const Ring& o) const { return p_ == o.p_ && vars_ == o.vars_; }

  /// New ring with an extra variable prepended (used for elimination tricks;
  /// the fresh variable sits in the eliminated block).
  std::shared_ptr<const Ring> prepend_var(const std::string& name) const {
    std::vector<std::string> vs;
    vs.reserve(vars_.size() + 1);
    vs.push_back(name);
    vs.insert(vs.end(), vars_.begin(), vars_.end());
    return make(p_, std::move(vs));
  }

  /// A variable name not already present, derived from `base`.
  std::string fresh_var(const std::string& base) const {
    std::string name = base;
    while (var_index(name) != npos) name += "_";
    return name;
  }

 private:
  Ring(std::uint32_t p, std::vector<std::string> vars) : p_(p), vars_(std::move(vars)) {
    if (!is_prime(p_)) throw std::invalid_argument("Ring: modulus must be prime");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw std::invalid_argument("Ring: duplicate variable " + vars_[i]);
  }

  std::uint32_t p_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (!a.same_as(b)) throw RingMismatchError(std::string(where) + ": operands live in different rings");
}

}  // namespace folres

#endif
