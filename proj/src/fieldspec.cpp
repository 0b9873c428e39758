#include "lindef/fieldspec.hpp"

namespace lindef {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (unsigned long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(unsigned long characteristic)
    : characteristic_(characteristic) {
  if (characteristic_ == 0) return;
  if (characteristic_ >= (1UL << 31))
    throw BadParams("FieldSpec: prime characteristic must fit in 31 bits, got " +
                    std::to_string(characteristic_));
  if (!is_prime(characteristic_))
    throw BadParams("FieldSpec: characteristic must be 0 or prime, got " +
                    std::to_string(characteristic_));
}

}  // namespace lindef
