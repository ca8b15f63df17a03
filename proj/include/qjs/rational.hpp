#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qjs {

// All arithmetic in this library is exact. Int/Rat are the only number types;
// mpq_class keeps rationals canonical (denominator > 0, lowest terms).
using Int = mpz_class;
using Rat = mpq_class;

struct qjs_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct range_error : qjs_error {
  using qjs_error::qjs_error;
};
struct mismatch_error : qjs_error {
  using qjs_error::qjs_error;
};
struct degree_error : qjs_error {
  using qjs_error::qjs_error;
};
struct scale_error : qjs_error {
  using qjs_error::qjs_error;
};
struct parse_error : qjs_error {
  using qjs_error::qjs_error;
};

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_integer(const Rat& r) {
  if (!is_integer(r)) throw range_error("expected an integral rational, got " + r.get_str());
  return r.get_num();
}

inline std::string to_string(const Int& z) { return z.get_str(); }

// "p/q", or just "p" when integral.
inline std::string to_string(const Rat& r) { return r.get_str(); }

// Accepts "p", "p/q", optional leading '-'.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw parse_error("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw parse_error("zero denominator in rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Integer exponent, negative allowed (base must be nonzero then).
inline Rat pow_rat(const Rat& base, long e) {
  if (e >= 0) {
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), static_cast<unsigned long>(e));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw range_error("0 raised to a negative power");
  return pow_rat(Rat(1) / base, -e);
}

inline Int gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int divexact(const Int& a, const Int& d) {
  if (!divides(d, a)) throw range_error("inexact integer division");
  Int out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return out;
}

}  // namespace qjs
