#include "qjs/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "qjs/qarith.hpp"

namespace qjs {

namespace {

constexpr long kEnumCap = 2'000'000;

std::vector<Subspace> enumerate_subsets(const Ambient& amb, int k) {
  std::vector<Subspace> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(Subspace::from_elements(amb, idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == amb.n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enumerate_rref(const Ambient& amb, int k) {
  // All k x n RREF patterns: choose pivot columns, then run through every
  // assignment of the free positions.
  std::vector<Subspace> out;
  int n = amb.n, q = amb.q;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free_pos.emplace_back(r, c);

    std::vector<uint8_t> fill(free_pos.size(), 0);
    while (true) {
      std::vector<std::vector<uint8_t>> rows(k, std::vector<uint8_t>(n, 0));
      for (int r = 0; r < k; ++r) rows[r][piv[r]] = 1;
      for (size_t i = 0; i < free_pos.size(); ++i) rows[free_pos[i].first][free_pos[i].second] = fill[i];
      out.push_back(Subspace::from_rows(amb, rows));
      size_t i = 0;
      while (i < fill.size() && fill[i] == q - 1) fill[i++] = 0;
      if (i == fill.size()) break;
      ++fill[i];
    }

    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Inverse of an n x n row-major matrix over F_q.
std::vector<uint8_t> invert_matrix(const std::vector<uint8_t>& m, int n, const FieldTable& gf) {
  std::vector<std::vector<uint8_t>> aug(n, std::vector<uint8_t>(2 * n, 0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug[r][c] = m[r * n + c];
    aug[r][n + r] = 1;
  }
  int rank = 0;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (aug[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[rank], aug[piv]);
    uint8_t s = gf.recip(aug[rank][c]);
    if (s != 1)
      for (int j = 0; j < 2 * n; ++j) aug[rank][j] = gf.times(aug[rank][j], s);
    for (int i = 0; i < n; ++i) {
      if (i == rank || aug[i][c] == 0) continue;
      uint8_t f = aug[i][c];
      for (int j = 0; j < 2 * n; ++j) aug[i][j] = gf.minus(aug[i][j], gf.times(f, aug[rank][j]));
    }
    ++rank;
  }
  if (rank != n) throw range_error("matrix is singular");
  std::vector<uint8_t> inv(n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv[r * n + c] = aug[r][n + c];
  return inv;
}

std::vector<uint8_t> mat_vec(const std::vector<uint8_t>& v, const std::vector<uint8_t>& m, int n,
                             const FieldTable& gf) {
  std::vector<uint8_t> out(n, 0);
  for (int c = 0; c < static_cast<int>(v.size()); ++c) {
    if (v[c] == 0) continue;
    for (int j = 0; j < n; ++j) out[j] = gf.plus(out[j], gf.times(v[c], m[c * n + j]));
  }
  return out;
}

}  // namespace

const std::vector<Subspace>& enumerate(const Ambient& amb, int k) {
  if (k < 0 || k > amb.n)
    throw range_error("enumerate: level k=" + std::to_string(k) + " out of range 0.." + std::to_string(amb.n));
  if (amb.count(k) > kEnumCap) throw scale_error("enumerate: level too large for desk scale");
  static std::map<std::tuple<int, int, int>, std::vector<Subspace>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(amb.q, amb.n, k);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto list = amb.q == 1 ? enumerate_subsets(amb, k) : enumerate_rref(amb, k);
    it = cache.emplace(key, std::move(list)).first;
  }
  return it->second;
}

long index_of(const Subspace& s) {
  const auto& list = enumerate(s.ambient(), s.rank());
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) throw range_error("subspace not found in enumeration");
  return static_cast<long>(it - list.begin());
}

Int count_intersection(const Ambient& amb, const Subspace& B, int a, int u) {
  int b = B.rank();
  if (a < 0 || a > std::min(b, u) || u < 0 || u > amb.n)
    throw range_error("count_intersection: requires 0 <= a <= min(rk B, u) and 0 <= u <= n");
  Int qp = pow_int(Int(amb.q), static_cast<unsigned long>((b - a) * (u - a)));
  return qp * qbinom_int(b, a, amb.q) * qbinom_int(amb.n - b, u - a, amb.q);
}

PointQuotient::PointQuotient(const Ambient& amb, const Subspace& P)
    : amb_(amb), sub_(amb.q, amb.n - 1), point_(P) {
  if (P.ambient() != amb) throw mismatch_error("ambient mismatch in quotient");
  if (P.rank() != 1) throw range_error("quotient requires a point (rank 1)");
  if (amb.q == 1) {
    elem_ = P.elements()[0];
    return;
  }
  int n = amb.n;
  int pivot = 0;
  while (P.entry(0, pivot) == 0) ++pivot;
  basis_.assign(n * n, 0);
  int r = 0;
  for (int c = 0; c < n; ++c) {
    if (c == pivot) continue;
    basis_[r * n + c] = 1;
    ++r;
  }
  for (int c = 0; c < n; ++c) basis_[(n - 1) * n + c] = P.entry(0, c);
  basis_inv_ = invert_matrix(basis_, n, *amb.gf);
}

Subspace PointQuotient::to_quotient(const Subspace& K) const {
  if (!K.contains(point_)) throw range_error("to_quotient requires P <= K");
  if (amb_.q == 1) {
    std::vector<int> out;
    for (int e : K.elements())
      if (e != elem_) out.push_back(e > elem_ ? e - 1 : e);
    return Subspace::from_elements(sub_, out);
  }
  int n = amb_.n;
  // New coordinates c = v * basis_inv_; the space contains e_n, so its RREF
  // has the literal row e_n and zeros in the last column elsewhere.
  std::vector<std::vector<uint8_t>> rows;
  for (int r = 0; r < K.rank(); ++r) {
    std::vector<uint8_t> v(K.data().begin() + r * n, K.data().begin() + (r + 1) * n);
    rows.push_back(mat_vec(v, basis_inv_, n, *amb_.gf));
  }
  Subspace in_new = Subspace::span_rows(amb_, rows);
  std::vector<std::vector<uint8_t>> dropped;
  for (int r = 0; r < in_new.rank(); ++r) {
    std::vector<uint8_t> v(in_new.data().begin() + r * n, in_new.data().begin() + (r + 1) * n - 1);
    bool zero = std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
    if (!zero) dropped.push_back(std::move(v));
  }
  return Subspace::span_rows(sub_, dropped);
}

Subspace PointQuotient::lift(const Subspace& S) const {
  if (S.ambient() != sub_) throw mismatch_error("ambient mismatch in lift");
  if (amb_.q == 1) {
    std::vector<int> out{elem_};
    for (int e : S.elements()) out.push_back(e >= elem_ ? e + 1 : e);
    return Subspace::from_elements(amb_, out);
  }
  int n = amb_.n;
  std::vector<std::vector<uint8_t>> rows;
  for (int r = 0; r < S.rank(); ++r) {
    std::vector<uint8_t> v(S.data().begin() + r * (n - 1), S.data().begin() + (r + 1) * (n - 1));
    v.push_back(0);
    rows.push_back(mat_vec(v, basis_, n, *amb_.gf));
  }
  std::vector<uint8_t> p(point_.data().begin(), point_.data().begin() + n);
  rows.push_back(std::move(p));
  return Subspace::from_rows(amb_, rows);
}

HyperplaneRestriction::HyperplaneRestriction(const Ambient& amb, const Subspace& H)
    : amb_(amb), sub_(amb.q, amb.n - 1), hyper_(H) {
  if (H.ambient() != amb) throw mismatch_error("ambient mismatch in restriction");
  if (H.corank() != 1) throw range_error("restriction requires a hyperplane (corank 1)");
}

Subspace HyperplaneRestriction::to_sub(const Subspace& K) const {
  if (!hyper_.contains(K)) throw range_error("to_sub requires K <= H");
  if (amb_.q == 1) {
    auto helems = hyper_.elements();
    std::vector<int> out;
    for (int e : K.elements()) {
      auto it = std::lower_bound(helems.begin(), helems.end(), e);
      out.push_back(static_cast<int>(it - helems.begin()) + 1);
    }
    return Subspace::from_elements(sub_, out);
  }
  // H's RREF rows have identity on their pivot columns, so the coordinates of
  // a row s in that basis are just s at the pivots.
  int n = amb_.n, h = hyper_.rank();
  std::vector<int> pivots(h);
  for (int r = 0; r < h; ++r) {
    int c = 0;
    while (hyper_.entry(r, c) == 0) ++c;
    pivots[r] = c;
  }
  std::vector<std::vector<uint8_t>> rows;
  for (int r = 0; r < K.rank(); ++r) {
    std::vector<uint8_t> v(h);
    for (int i = 0; i < h; ++i) v[i] = K.entry(r, pivots[i]);
    rows.push_back(std::move(v));
  }
  return Subspace::from_rows(sub_, rows);
}

Subspace HyperplaneRestriction::lift(const Subspace& S) const {
  if (S.ambient() != sub_) throw mismatch_error("ambient mismatch in lift");
  if (amb_.q == 1) {
    auto helems = hyper_.elements();
    std::vector<int> out;
    for (int e : S.elements()) out.push_back(helems[e - 1]);
    return Subspace::from_elements(amb_, out);
  }
  int n = amb_.n, h = hyper_.rank();
  const FieldTable& gf = *amb_.gf;
  std::vector<std::vector<uint8_t>> rows;
  for (int r = 0; r < S.rank(); ++r) {
    std::vector<uint8_t> v(n, 0);
    for (int c = 0; c < h; ++c) {
      uint8_t f = S.entry(r, c);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) v[j] = gf.plus(v[j], gf.times(f, hyper_.entry(c, j)));
    }
    rows.push_back(std::move(v));
  }
  return Subspace::from_rows(amb_, rows);
}

}  // namespace qjs
