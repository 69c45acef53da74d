// Overflow-checked 64-bit coefficients for the fast arithmetic kernels.
//
// The engines run their hot loops over Checked64 and restart the whole
// computation over BigInt if anything overflows, so exactness never depends
// on coefficients staying small.
#pragma once

#include <cstdint>

#include "ttk/bigint.hpp"

namespace ttk::detail {

// Thrown (as a plain struct, it is internal control flow) when a Checked64
// operation would overflow.
struct OverflowSignal {};

struct Checked64 {
  std::int64_t v = 0;

  Checked64() = default;
  Checked64(std::int64_t x) : v(x) {}

  Checked64& operator+=(Checked64 o) {
    if (__builtin_add_overflow(v, o.v, &v)) throw OverflowSignal{};
    return *this;
  }
  Checked64& operator-=(Checked64 o) {
    if (__builtin_sub_overflow(v, o.v, &v)) throw OverflowSignal{};
    return *this;
  }
  Checked64 operator*(Checked64 o) const {
    std::int64_t r;
    if (__builtin_mul_overflow(v, o.v, &r)) throw OverflowSignal{};
    return Checked64(r);
  }
  Checked64 operator-() const {
    if (v == INT64_MIN) throw OverflowSignal{};
    return Checked64(-v);
  }
  bool operator==(Checked64 o) const { return v == o.v; }
  bool is_zero() const { return v == 0; }

  BigInt to_big() const { return BigInt(v); }
};

// BigInt with the same tiny interface, for the fallback instantiation.
struct BigCoef {
  BigInt v;

  BigCoef() = default;
  BigCoef(std::int64_t x) : v(x) {}
  BigCoef(BigInt x) : v(std::move(x)) {}

  BigCoef& operator+=(const BigCoef& o) {
    v += o.v;
    return *this;
  }
  BigCoef& operator-=(const BigCoef& o) {
    v -= o.v;
    return *this;
  }
  BigCoef operator*(const BigCoef& o) const { return BigCoef(BigInt(v * o.v)); }
  BigCoef operator-() const { return BigCoef(BigInt(-v)); }
  bool operator==(const BigCoef& o) const { return v == o.v; }
  bool is_zero() const { return v == 0; }

  BigInt to_big() const { return v; }
};

}  // namespace ttk::detail
