#include "qjs/field.hpp"

#include <array>
#include <map>
#include <mutex>

namespace qjs {

namespace {

struct FieldSpec {
  int p;
  int deg;
  // irreducible polynomial coefficients, degree `deg`, monic, constant first
  std::array<int, 4> irred;
};

// x^2+x+1 over F2; x^3+x+1 over F2; x^2+1 over F3.
const std::map<int, FieldSpec> kSpecs = {
    {2, {2, 1, {0, 1, 0, 0}}},  {3, {3, 1, {0, 1, 0, 0}}},  {5, {5, 1, {0, 1, 0, 0}}},
    {7, {7, 1, {0, 1, 0, 0}}},  {11, {11, 1, {0, 1, 0, 0}}}, {13, {13, 1, {0, 1, 0, 0}}},
    {4, {2, 2, {1, 1, 1, 0}}},  {8, {2, 3, {1, 1, 0, 1}}},  {9, {3, 2, {1, 0, 1, 0}}},
};

std::vector<int> digits(int e, int p, int deg) {
  std::vector<int> d(deg);
  for (int i = 0; i < deg; ++i) {
    d[i] = e % p;
    e /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int e = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) e = e * p + d[i];
  return e;
}

FieldTable build(int q) {
  const FieldSpec& spec = kSpecs.at(q);
  FieldTable t;
  t.q = q;
  t.p = spec.p;
  t.deg = spec.deg;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  t.neg.resize(q);
  t.inv.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, spec.p, spec.deg);
    {
      std::vector<int> dn(spec.deg);
      for (int i = 0; i < spec.deg; ++i) dn[i] = (spec.p - da[i]) % spec.p;
      t.neg[a] = static_cast<uint8_t>(undigits(dn, spec.p));
    }
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, spec.p, spec.deg);
      std::vector<int> ds(spec.deg);
      for (int i = 0; i < spec.deg; ++i) ds[i] = (da[i] + db[i]) % spec.p;
      t.add[a * q + b] = static_cast<uint8_t>(undigits(ds, spec.p));

      // polynomial product reduced modulo the irreducible
      std::vector<int> prod(2 * spec.deg - 1, 0);
      for (int i = 0; i < spec.deg; ++i)
        for (int j = 0; j < spec.deg; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % spec.p;
      for (int d = 2 * spec.deg - 2; d >= spec.deg; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^deg = -irred_low, so x^d = -irred_low * x^(d-deg)
        for (int i = 0; i < spec.deg; ++i)
          prod[d - spec.deg + i] = ((prod[d - spec.deg + i] - c * spec.irred[i]) % spec.p + spec.p) % spec.p;
      }
      prod.resize(spec.deg);
      t.mul[a * q + b] = static_cast<uint8_t>(undigits(prod, spec.p));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (t.mul[a * q + b] == 1) t.inv[a] = static_cast<uint8_t>(b);
  return t;
}

}  // namespace

bool field_supported(int q) { return kSpecs.count(q) > 0; }

const FieldTable& field(int q) {
  if (!field_supported(q)) throw range_error("unsupported field order q=" + std::to_string(q));
  static std::map<int, FieldTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build(q)).first;
  return it->second;
}

}  // namespace qjs
