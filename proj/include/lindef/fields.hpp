#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lindef/errors.hpp"
#include "lindef/fieldspec.hpp"

namespace lindef {

// The two coefficient fields the engine runs over.  Both expose the same
// value-semantic interface, so all linear algebra and module code is written
// once, templated on the field, and instantiated twice.  Rationals are GMP
// arbitrary precision; no floating point anywhere.

struct QField {
  using Elem = mpq_class;

  unsigned long characteristic() const { return 0; }
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const {
    if (sgn(b) == 0) throw Error("QField: division by zero");
    return a / b;
  }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

class FpField {
 public:
  using Elem = std::uint64_t;

  explicit FpField(unsigned long p) : p_(p) {
    if (!is_prime(p) || p >= (1UL << 31))
      throw BadParams("FpField: bad characteristic " + std::to_string(p));
  }

  unsigned long characteristic() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("FpField: division by zero");
    // extended Euclid on signed words; p_ < 2^31 keeps everything in range
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt; nt = tmp;
      tmp = r - q * nr;
      r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  unsigned long p_;
};

// Runs fn with the concrete field implementation selected by spec.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return fn(QField{});
  return fn(FpField{spec.characteristic()});
}

}  // namespace lindef
