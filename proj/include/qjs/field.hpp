#pragma once

#include <cstdint>
#include <vector>

#include "qjs/rational.hpp"

namespace qjs {

// Arithmetic tables for F_q. Elements are encoded as 0..q-1; for prime powers
// the encoding is the base-p digit expansion of the polynomial representation.
struct FieldTable {
  int q = 0;
  int p = 0;    // characteristic
  int deg = 0;  // extension degree
  std::vector<uint8_t> add;  // q*q
  std::vector<uint8_t> mul;  // q*q
  std::vector<uint8_t> neg;  // q
  std::vector<uint8_t> inv;  // q (inv[0] unused)

  uint8_t plus(uint8_t a, uint8_t b) const { return add[a * q + b]; }
  uint8_t times(uint8_t a, uint8_t b) const { return mul[a * q + b]; }
  uint8_t minus(uint8_t a, uint8_t b) const { return add[a * q + neg[b]]; }
  uint8_t recip(uint8_t a) const { return inv[a]; }
};

bool field_supported(int q);

// Memoized, thread-safe; throws range_error for unsupported q.
// Supported: primes 2,3,5,7,11,13 and prime powers 4,8,9.
const FieldTable& field(int q);

}  // namespace qjs
