#pragma once

#include "lindef/errors.hpp"

namespace lindef {

// An exact coefficient field: the rationals (characteristic 0) or a prime
// field F_p with p in a machine word.  Construction rejects composites.
class FieldSpec {
 public:
  explicit FieldSpec(unsigned long characteristic);

  unsigned long characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  bool operator==(const FieldSpec& o) const {
    return characteristic_ == o.characteristic_;
  }

 private:
  unsigned long characteristic_;
};

bool is_prime(unsigned long p);

}  // namespace lindef
