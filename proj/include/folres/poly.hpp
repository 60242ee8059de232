#ifndef FOLRES_POLY_HPP
#define FOLRES_POLY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "folres/fp.hpp"
#include "folres/monomial.hpp"
#include "folres/ring.hpp"

namespace folres {

/// Sparse exact multivariate polynomial over F_p. Terms are a map from
/// exponent vectors to nonzero coefficients; the map's key order is a fixed
/// canonical storage order (leading-term queries take an explicit
/// MonomialOrder and scan).
class Poly {
 public:
  using TermMap = std::map<Exp, Fp>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr ring, std::int64_t c) {
    Poly f(ring);
    Fp v(c, ring->p());
    if (!v.is_zero()) f.terms_.emplace(Exp(ring->nvars(), 0), v);
    return f;
  }

  static Poly variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("Poly::variable: index");
    Poly f(ring);
    Exp e(ring->nvars(), 0);
    e[i] = 1;
    f.terms_.emplace(std::move(e), Fp(1, ring->p()));
    return f;
  }

  static Poly monomial(RingPtr ring, Exp e, Fp c) {
    Poly f(ring);
    if (e.size() != ring->nvars()) throw std::invalid_argument("Poly::monomial: exponent width");
    if (!c.is_zero()) f.terms_.emplace(std::move(e), c);
    return f;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  /// Coefficient of the constant term (value at the origin).
  Fp constant_term() const {
    Exp e(ring_->nvars(), 0);
    auto it = terms_.find(e);
    return it == terms_.end() ? Fp(0, ring_->p()) : it->second;
  }

  Fp coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Fp(0, ring_->p()) : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  bool operator==(const Poly& o) const { return ring_->same_as(*o.ring_) && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Poly operator+(const Poly& o) const {
    require_same_ring(*ring_, *o.ring_, "Poly::+");
    Poly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Poly operator-(const Poly& o) const {
    require_same_ring(*ring_, *o.ring_, "Poly::-");
    Poly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  Poly operator*(const Poly& o) const {
    require_same_ring(*ring_, *o.ring_, "Poly::*");
    Poly r(ring_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) r.add_term(exp_mul(ea, eb), ca * cb);
    return r;
  }

  Poly operator*(const Fp& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned n) const {
    Poly r = constant(ring_, 1), b = *this;
    while (n) {
      if (n & 1) r *= b;
      if (n >>= 1) b *= b;
    }
    return r;
  }

  /// Multiply by coefficient*monomial without building a temporary Poly.
  Poly times_term(const Exp& e, const Fp& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [ea, ca] : terms_) r.terms_.emplace(exp_mul(ea, e), ca * c);
    return r;
  }

  /// Leading term under the given order.
  std::pair<Exp, Fp> leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("Poly::leading_term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
  }

  Poly monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    Fp lc = leading_term(order).second;
    return *this * lc.inverse();
  }

  /// Formal partial derivative with respect to variable i.
  Poly derivative(std::size_t var) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Fp k = c * Fp(e[var], ring_->p());
      if (k.is_zero()) continue;
      Exp d(e);
      d[var] -= 1;
      r.add_term(d, k);
    }
    return r;
  }

  /// Ring homomorphism: substitute images[i] for variable i. Images live in
  /// a common target ring.
  Poly substitute(const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars()) throw std::invalid_argument("Poly::substitute: arity");
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    for (const auto& im : images) require_same_ring(*target, *im.ring(), "Poly::substitute");
    // cache powers per variable
    std::vector<std::vector<Poly>> powers(images.size());
    Poly r = Poly::zero(target);
    for (const auto& [e, c] : terms_) {
      Poly t = Poly::constant(target, 1);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Poly::constant(target, 1));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
        t *= pw[e[i]];
      }
      r += t * c;
    }
    return r;
  }

  /// Evaluate at a rational point.
  Fp evaluate(const std::vector<Fp>& point) const {
    if (point.size() != ring_->nvars()) throw std::invalid_argument("Poly::evaluate: arity");
    Fp acc(0, ring_->p());
    for (const auto& [e, c] : terms_) {
      Fp t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t *= point[i].pow(e[i]);
      acc += t;
    }
    return acc;
  }

  /// Re-express in a ring matched by variable name. Source variables absent
  /// from the target are allowed only if the polynomial does not involve
  /// them (this is how elimination helpers are projected away).
  Poly reindex(const RingPtr& target) const {
    if (target->p() != ring_->p()) throw RingMismatchError("Poly::reindex: modulus");
    std::vector<std::size_t> where(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      where[i] = target->var_index(ring_->var_name(i));
      if (where[i] == Ring::npos && degree_in(i) > 0)
        throw RingMismatchError("Poly::reindex: target lacks variable " + ring_->var_name(i));
    }
    Poly r(target);
    for (const auto& [e, c] : terms_) {
      Exp t(target->nvars(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t[where[i]] = e[i];
      r.terms_.emplace(std::move(t), c);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    // print highest degree first for readability
    std::vector<const TermMap::value_type*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(ts.begin(), ts.end(),
              [&](const auto* a, const auto* b) { return ord.less(b->first, a->first); });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : ts) {
      const auto& [e, c] = *t;
      if (!first) out << " + ";
      first = false;
      bool has_var = total_degree(e) > 0;
      if (!has_var || !c.is_one()) out << c.value();
      bool printed = !has_var || !c.is_one();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) out << "*";
        out << ring_->var_name(i);
        if (e[i] > 1) out << "^" << e[i];
        printed = true;
      }
    }
    return out.str();
  }

  void add_term(const Exp& e, const Fp& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

inline Poly operator*(const Fp& c, const Poly& f) { return f * c; }

}  // namespace folres

#endif
