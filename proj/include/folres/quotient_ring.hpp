#ifndef FOLRES_QUOTIENT_RING_HPP
#define FOLRES_QUOTIENT_RING_HPP

#include <utility>

#include "folres/ideal.hpp"

namespace folres {

/// A quotient F_p[x]/I, with I possibly zero (then this is just the
/// polynomial ring). Normal forms are taken modulo the cached Groebner
/// basis of the relations; equality of elements means equal normal forms.
class QuotientRing {
 public:
  explicit QuotientRing(RingPtr ambient)
      : ambient_(ambient), relations_(std::move(ambient)) {}

  QuotientRing(RingPtr ambient, Ideal relations)
      : ambient_(std::move(ambient)), relations_(std::move(relations)) {
    require_same_ring(*ambient_, *relations_.ring(), "QuotientRing");
  }

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& relations() const { return relations_; }
  bool is_polynomial() const { return relations_.generators().empty(); }
  bool is_zero_ring() const { return relations_.is_unit(); }

  Poly normal_form(const Poly& f) const { return relations_.reduce(f); }

  bool equal(const Poly& f, const Poly& g) const { return normal_form(f - g).is_zero(); }

  bool same_as(const QuotientRing& o) const {
    return ambient_->same_as(*o.ambient_) && relations_.same_ideal_as(o.relations_);
  }

 private:
  RingPtr ambient_;
  Ideal relations_;
};

}  // namespace folres

#endif
