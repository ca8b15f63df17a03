#include "qjs/qarith.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qjs {

QPoly QPoly::monomial(const Int& coeff, int power) {
  if (coeff == 0) return QPoly();
  std::vector<Int> c(power + 1, Int(0));
  c[power] = coeff;
  return QPoly(std::move(c));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return QPoly(std::move(r));
}

QPoly QPoly::divexact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw range_error("polynomial division by zero");
  std::vector<Int> rem = c_;
  const std::vector<Int>& d = divisor.c_;
  int dd = divisor.degree();
  int rd = static_cast<int>(rem.size()) - 1;
  if (rd < dd) {
    for (const Int& v : rem)
      if (v != 0) throw range_error("inexact polynomial division");
    return QPoly();
  }
  std::vector<Int> quot(rd - dd + 1, Int(0));
  for (int i = rd; i >= dd; --i) {
    if (rem[i] == 0) continue;
    if (!divides(d[dd], rem[i])) throw range_error("inexact polynomial division");
    Int q = qjs::divexact(rem[i], d[dd]);
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j];
  }
  for (const Int& v : rem)
    if (v != 0) throw range_error("inexact polynomial division");
  return QPoly(std::move(quot));
}

Int QPoly::eval(const Int& q) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Rat QPoly::eval(const Rat& q) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const Int& a = c_[p];
    if (a == 0) continue;
    Int mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (p == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "q";
      if (p > 1) os << "^" << p;
    }
  }
  return os.str();
}

Rat qnumber(long n, long q) {
  if (q < 1) throw range_error("qnumber: q must be >= 1");
  if (q == 1) return Rat(n);
  return (pow_rat(Rat(q), n) - 1) / Rat(q - 1);
}

Rat qbinom(long n, long k, long q) {
  if (q < 1) throw range_error("qbinom: q must be >= 1");
  if (k < 0) return Rat(0);
  Rat num = 1;
  Rat den = 1;
  for (long i = 0; i < k; ++i) {
    Rat f = qnumber(n - i, q);
    if (f == 0) return Rat(0);
    num *= f;
    den *= qnumber(k - i, q);
  }
  return num / den;
}

Int qbinom_int(long n, long k, long q) { return to_integer(qbinom(n, k, q)); }

QPoly qbinom_poly(long n, long k) {
  if (n < 0 || k < 0) throw range_error("qbinom_poly: requires n, k >= 0");
  if (k > n) return QPoly();
  // q-Pascal DP: [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j].
  std::vector<QPoly> row{QPoly::constant(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<QPoly> next(std::min(i, k) + 1);
    next[0] = QPoly::constant(1);
    for (long j = 1; j < static_cast<long>(next.size()); ++j) {
      QPoly shifted;
      if (j < static_cast<long>(row.size()))
        shifted = QPoly::monomial(1, static_cast<int>(j)) * row[j];
      next[j] = row[j - 1] + shifted;
    }
    row = std::move(next);
  }
  return row[k];
}

QPoly cyclotomic(long i) {
  if (i < 1) throw range_error("cyclotomic: index must be >= 1");
  static std::map<long, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(i);
  if (it != cache.end()) return it->second;
  // Phi_i = (q^i - 1) / prod_{d | i, d < i} Phi_d, computed bottom-up so the
  // recursion never re-enters the lock.
  for (long m = 1; m <= i; ++m) {
    if (cache.count(m)) continue;
    std::vector<Int> xm(m + 1, Int(0));
    xm[0] = -1;
    xm[m] = 1;
    QPoly p(std::move(xm));
    for (long d = 1; d < m; ++d)
      if (m % d == 0) p = p.divexact(cache.at(d));
    cache.emplace(m, std::move(p));
  }
  return cache.at(i);
}

std::vector<long> qkummer_factors(long n, long k) {
  if (k < 0 || k > n) throw range_error("qkummer_factors: requires 0 <= k <= n");
  // Only i <= n can satisfy the condition: for i > n the remainders are n and
  // k themselves, and k <= n.
  std::vector<long> out;
  for (long i = 2; i <= n; ++i)
    if ((n % i) < (k % i)) out.push_back(i);
  return out;
}

std::vector<Rat> lambda_values(const DesignParams& p) {
  if (!(0 <= p.t && p.t <= p.k && p.k <= p.n)) throw range_error("lambda_values: requires 0 <= t <= k <= n");
  std::vector<Rat> out;
  out.reserve(p.t + 1);
  for (long s = 0; s <= p.t; ++s)
    out.push_back(qbinom(p.n - s, p.t - s, p.q) / qbinom(p.k - s, p.t - s, p.q) * p.lambda);
  return out;
}

Int gcd_chain(long t, long n, long k, long q) {
  if (!(0 <= t && t <= k && k <= n)) throw range_error("gcd_chain: requires 0 <= t <= k <= n");
  Int g = 0;
  for (long s = 0; s <= t; ++s) g = gcd(g, qbinom_int(n - s, k - s, q));
  return g;
}

std::pair<Int, Int> lambda_min_max(long t, long n, long k, long q) {
  if (!(0 <= t && t <= k && k <= n)) throw range_error("lambda_min_max: requires 0 <= t <= k <= n");
  Int lmax = qbinom_int(n - t, k - t, q);
  Int g = gcd_chain(t, n, k, q);
  return {divexact(lmax, g), lmax};
}

std::vector<long> lambda_min_poly_factors(long t, long n, long k) {
  if (!(0 <= t && t <= k && k <= n)) throw range_error("lambda_min_poly_factors: requires 0 <= t <= k <= n");
  std::vector<long> out;
  for (long i = 2; i <= n; ++i)
    if (t <= (n % i) && (n % i) < (k % i)) out.push_back(i);
  return out;
}

}  // namespace qjs
