#pragma once

#include <utility>
#include <vector>

#include "qjs/rational.hpp"

namespace qjs {

// Integer-coefficient polynomial in the indeterminate q, dense coefficient
// vector indexed by power. Invariant: leading coefficient nonzero unless zero
// polynomial (empty coefficient vector).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(Int v) { return QPoly(std::vector<Int>{std::move(v)}); }
  static QPoly monomial(const Int& coeff, int power);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int power) const {
    return (power >= 0 && power < static_cast<int>(c_.size())) ? c_[power] : Int(0);
  }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  // Exact division; throws range_error if the remainder is nonzero.
  QPoly divexact(const QPoly& divisor) const;

  Int eval(const Int& q) const;
  Rat eval(const Rat& q) const;

  // Deterministic rendering, descending powers, e.g. "q^4 + q^3 + 2*q^2 + q + 1".
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// q-analog [n]_q; q = 1 gives n, q >= 2 gives (q^n - 1)/(q - 1).
// Negative n follows the negation formula [-n]_q = -(1/q^n)[n]_q.
Rat qnumber(long n, long q);

// Gaussian binomial [n choose k]_q; k < 0 gives 0, n may be negative
// (then the value can be a non-integral rational, per the negation formula).
Rat qbinom(long n, long k, long q);

// [n choose k]_q for arguments where the value is an integer (throws otherwise).
Int qbinom_int(long n, long k, long q);

// [n choose k]_q as a polynomial in q; requires n >= 0, k > n gives zero.
QPoly qbinom_poly(long n, long k);

// i-th cyclotomic polynomial, i >= 1. Memoized, thread-safe.
QPoly cyclotomic(long i);

// Indices i with (n mod i) < (k mod i); the product of cyclotomic(i) over the
// result equals qbinom_poly(n, k). Requires 0 <= k <= n.
std::vector<long> qkummer_factors(long n, long k);

struct DesignParams {
  long t = 0;
  long n = 0;
  long k = 0;
  long q = 1;
  Rat lambda = 0;
};

// lambda_s for s = 0..t; lambda_t = lambda.
std::vector<Rat> lambda_values(const DesignParams& p);

// gcd([n-s choose k-s]_q : s = 0..t).
Int gcd_chain(long t, long n, long k, long q);

// (lambda_min, lambda_max) for given (t, n, k, q); both integers,
// lambda_min divides lambda_max.
std::pair<Int, Int> lambda_min_max(long t, long n, long k, long q);

// Indices i with t <= (n mod i) < (k mod i); the cyclotomic product over the
// result is the polynomial gcd of the chain [n-s choose k-s]_q, s = 0..t.
std::vector<long> lambda_min_poly_factors(long t, long n, long k);

}  // namespace qjs
