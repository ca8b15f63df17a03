#include "qjs/subspace.hpp"

#include <algorithm>
#include <sstream>

#include "qjs/lattice.hpp"
#include "qjs/qarith.hpp"

namespace qjs {

namespace {

const char kDigits[] = "0123456789abc";

int digit_value(char c) {
  const char* p = std::char_traits<char>::find(kDigits, sizeof(kDigits) - 1, c);
  return p ? static_cast<int>(p - kDigits) : -1;
}

// In-place RREF over F_q; returns rank. Width may exceed n (Zassenhaus).
int rref_rows(std::vector<std::vector<uint8_t>>& rows, int width, const FieldTable& gf) {
  int r = 0;
  for (int c = 0; c < width && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    uint8_t s = gf.recip(rows[r][c]);
    if (s != 1)
      for (int j = 0; j < width; ++j) rows[r][j] = gf.times(rows[r][j], s);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      uint8_t f = rows[i][c];
      for (int j = 0; j < width; ++j) rows[i][j] = gf.minus(rows[i][j], gf.times(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

std::vector<uint8_t> flatten(const std::vector<std::vector<uint8_t>>& rows, int rank, int n) {
  std::vector<uint8_t> out;
  out.reserve(rank * n);
  for (int i = 0; i < rank; ++i) out.insert(out.end(), rows[i].begin(), rows[i].begin() + n);
  return out;
}

}  // namespace

int max_ambient_rank(int q) {
  switch (q) {
    case 1: return 16;
    case 2: return 8;
    case 3: return 6;
    case 4: return 5;
    case 5: return 5;
    case 7:
    case 8:
    case 9: return 4;
    case 11:
    case 13: return 3;
    default: return 0;
  }
}

Ambient::Ambient(int q_, int n_) : q(q_), n(n_) {
  if (q != 1 && !field_supported(q)) throw range_error("unsupported q=" + std::to_string(q));
  if (n < 0 || n > max_ambient_rank(q))
    throw range_error("ambient rank n=" + std::to_string(n) + " out of supported range for q=" + std::to_string(q));
  if (q >= 2) gf = &field(q);
}

Int Ambient::count(int k) const {
  if (k < 0 || k > n) return 0;
  return qbinom_int(n, k, q);
}

Subspace Subspace::zero(const Ambient& amb) {
  Subspace s;
  s.amb_ = amb;
  s.rank_ = 0;
  return s;
}

Subspace Subspace::full(const Ambient& amb) {
  Subspace s;
  s.amb_ = amb;
  s.rank_ = amb.n;
  if (amb.q == 1) {
    for (int e = 1; e <= amb.n; ++e) s.data_.push_back(static_cast<uint8_t>(e));
  } else {
    s.data_.assign(amb.n * amb.n, 0);
    for (int i = 0; i < amb.n; ++i) s.data_[i * amb.n + i] = 1;
  }
  return s;
}

Subspace Subspace::from_elements(const Ambient& amb, std::vector<int> elems) {
  if (amb.q != 1) throw mismatch_error("from_elements requires q = 1");
  std::sort(elems.begin(), elems.end());
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > amb.n) throw range_error("element out of range 1..n");
    if (i > 0 && elems[i] == elems[i - 1]) throw range_error("duplicate element in subset");
  }
  Subspace s;
  s.amb_ = amb;
  s.rank_ = static_cast<int>(elems.size());
  s.data_.assign(elems.begin(), elems.end());
  return s;
}

Subspace Subspace::span_rows(const Ambient& amb, const std::vector<std::vector<uint8_t>>& rows) {
  if (amb.q < 2) throw mismatch_error("span_rows requires q >= 2");
  std::vector<std::vector<uint8_t>> work = rows;
  for (auto& r : work) {
    if (static_cast<int>(r.size()) != amb.n) throw range_error("basis row has wrong length");
    for (uint8_t v : r)
      if (v >= amb.q) throw range_error("entry out of field range");
  }
  int rank = rref_rows(work, amb.n, *amb.gf);
  Subspace s;
  s.amb_ = amb;
  s.rank_ = rank;
  s.data_ = flatten(work, rank, amb.n);
  return s;
}

Subspace Subspace::from_rows(const Ambient& amb, const std::vector<std::vector<uint8_t>>& rows) {
  Subspace s = span_rows(amb, rows);
  if (s.rank() != static_cast<int>(rows.size())) throw range_error("rows are linearly dependent");
  return s;
}

std::vector<int> Subspace::elements() const {
  if (amb_.q != 1) throw mismatch_error("elements() requires q = 1");
  return std::vector<int>(data_.begin(), data_.end());
}

bool Subspace::contains(const Subspace& other) const {
  if (amb_ != other.amb_) throw mismatch_error("ambient mismatch");
  if (other.rank_ > rank_) return false;
  if (amb_.q == 1)
    return std::includes(data_.begin(), data_.end(), other.data_.begin(), other.data_.end());
  const FieldTable& gf = *amb_.gf;
  int n = amb_.n;
  // Reduce each row of `other` against our RREF rows.
  std::vector<int> pivots(rank_);
  for (int r = 0; r < rank_; ++r) {
    int c = 0;
    while (entry(r, c) == 0) ++c;
    pivots[r] = c;
  }
  for (int i = 0; i < other.rank_; ++i) {
    std::vector<uint8_t> row(other.data_.begin() + i * n, other.data_.begin() + (i + 1) * n);
    for (int r = 0; r < rank_; ++r) {
      uint8_t f = row[pivots[r]];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) row[j] = gf.minus(row[j], gf.times(f, entry(r, j)));
    }
    for (uint8_t v : row)
      if (v != 0) return false;
  }
  return true;
}

bool Subspace::operator<(const Subspace& o) const {
  if (rank_ != o.rank_) return rank_ < o.rank_;
  return data_ < o.data_;
}

std::string Subspace::encode() const {
  std::ostringstream os;
  if (amb_.q == 1) {
    os << "{";
    for (int i = 0; i < rank_; ++i) {
      if (i) os << ",";
      os << static_cast<int>(data_[i]);
    }
    os << "}";
    return os.str();
  }
  if (rank_ == 0) return "0";
  for (int r = 0; r < rank_; ++r) {
    if (r) os << ";";
    for (int c = 0; c < amb_.n; ++c) os << kDigits[entry(r, c)];
  }
  return os.str();
}

Subspace Subspace::parse(const Ambient& amb, const std::string& text) {
  if (amb.q == 1) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
      throw parse_error("bad subset encoding '" + text + "'");
    std::vector<int> elems;
    std::string body = text.substr(1, text.size() - 2);
    if (!body.empty()) {
      std::istringstream is(body);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        try {
          size_t pos = 0;
          int v = std::stoi(tok, &pos);
          if (pos != tok.size()) throw std::invalid_argument("");
          elems.push_back(v);
        } catch (const std::exception&) {
          throw parse_error("bad element '" + tok + "' in subset encoding");
        }
      }
    }
    try {
      return from_elements(amb, std::move(elems));
    } catch (const range_error& e) {
      throw parse_error(std::string(e.what()) + " in '" + text + "'");
    }
  }
  if (text == "0") return zero(amb);
  std::vector<std::vector<uint8_t>> rows;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ';')) {
    if (static_cast<int>(tok.size()) != amb.n)
      throw parse_error("basis row '" + tok + "' does not have n=" + std::to_string(amb.n) + " digits");
    std::vector<uint8_t> row;
    for (char ch : tok) {
      int v = digit_value(ch);
      if (v < 0 || v >= amb.q) throw parse_error("bad digit '" + std::string(1, ch) + "' for q=" + std::to_string(amb.q));
      row.push_back(static_cast<uint8_t>(v));
    }
    rows.push_back(std::move(row));
  }
  try {
    return from_rows(amb, rows);
  } catch (const range_error& e) {
    throw parse_error(std::string(e.what()) + " in '" + text + "'");
  }
}

Subspace meet(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw mismatch_error("ambient mismatch in meet");
  const Ambient& amb = a.ambient();
  if (amb.q == 1) {
    std::vector<int> ea = a.elements(), eb = b.elements(), out;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
    return Subspace::from_elements(amb, out);
  }
  // Zassenhaus: RREF of [A|A; B|0]; rows with zero left half span A cap B on the right.
  int n = amb.n;
  std::vector<std::vector<uint8_t>> block;
  for (int r = 0; r < a.rank(); ++r) {
    std::vector<uint8_t> row(2 * n, 0);
    for (int c = 0; c < n; ++c) row[c] = row[n + c] = a.entry(r, c);
    block.push_back(std::move(row));
  }
  for (int r = 0; r < b.rank(); ++r) {
    std::vector<uint8_t> row(2 * n, 0);
    for (int c = 0; c < n; ++c) row[c] = b.entry(r, c);
    block.push_back(std::move(row));
  }
  rref_rows(block, 2 * n, *amb.gf);
  std::vector<std::vector<uint8_t>> inter;
  for (const auto& row : block) {
    bool left_zero = true;
    for (int c = 0; c < n; ++c)
      if (row[c] != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    std::vector<uint8_t> right(row.begin() + n, row.end());
    bool right_zero = std::all_of(right.begin(), right.end(), [](uint8_t v) { return v == 0; });
    if (!right_zero) inter.push_back(std::move(right));
  }
  return Subspace::span_rows(amb, inter);
}

Subspace join(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw mismatch_error("ambient mismatch in join");
  const Ambient& amb = a.ambient();
  if (amb.q == 1) {
    std::vector<int> ea = a.elements(), eb = b.elements(), out;
    std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
    return Subspace::from_elements(amb, out);
  }
  std::vector<std::vector<uint8_t>> rows;
  for (int r = 0; r < a.rank(); ++r)
    rows.emplace_back(a.data().begin() + r * amb.n, a.data().begin() + (r + 1) * amb.n);
  for (int r = 0; r < b.rank(); ++r)
    rows.emplace_back(b.data().begin() + r * amb.n, b.data().begin() + (r + 1) * amb.n);
  return Subspace::span_rows(amb, rows);
}

Subspace perp(const Subspace& s) {
  const Ambient& amb = s.ambient();
  if (amb.q == 1) {
    std::vector<int> out;
    auto elems = s.elements();
    for (int e = 1; e <= amb.n; ++e)
      if (!std::binary_search(elems.begin(), elems.end(), e)) out.push_back(e);
    return Subspace::from_elements(amb, out);
  }
  // Kernel of the (already RREF) basis matrix: one vector per free column.
  const FieldTable& gf = *amb.gf;
  int n = amb.n, k = s.rank();
  std::vector<int> pivots(k);
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < k; ++r) {
    int c = 0;
    while (s.entry(r, c) == 0) ++c;
    pivots[r] = c;
    is_pivot[c] = true;
  }
  std::vector<std::vector<uint8_t>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint8_t> v(n, 0);
    v[f] = 1;
    for (int r = 0; r < k; ++r) v[pivots[r]] = gf.neg[s.entry(r, f)];
    basis.push_back(std::move(v));
  }
  return Subspace::span_rows(amb, basis);
}

std::vector<Subspace> subspaces_of(const Subspace& s, int x) {
  const Ambient& amb = s.ambient();
  if (x < 0 || x > s.rank()) return {};
  std::vector<Subspace> out;
  if (amb.q == 1) {
    auto elems = s.elements();
    int k = s.rank();
    std::vector<int> idx(x);
    for (int i = 0; i < x; ++i) idx[i] = i;
    while (true) {
      std::vector<int> pick(x);
      for (int i = 0; i < x; ++i) pick[i] = elems[idx[i]];
      out.push_back(Subspace::from_elements(amb, pick));
      int i = x - 1;
      while (i >= 0 && idx[i] == k - x + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < x; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  }
  // Local coordinates: x-subspaces of F_q^rank lifted through the basis rows.
  const FieldTable& gf = *amb.gf;
  int k = s.rank(), n = amb.n;
  Ambient local(amb.q, k);
  for (const Subspace& loc : enumerate(local, x)) {
    std::vector<std::vector<uint8_t>> rows;
    for (int r = 0; r < loc.rank(); ++r) {
      std::vector<uint8_t> v(n, 0);
      for (int c = 0; c < k; ++c) {
        uint8_t f = loc.entry(r, c);
        if (f == 0) continue;
        for (int j = 0; j < n; ++j) v[j] = gf.plus(v[j], gf.times(f, s.entry(c, j)));
      }
      rows.push_back(std::move(v));
    }
    out.push_back(Subspace::from_rows(amb, rows));
  }
  return out;
}

Subspace apply_permutation(const Subspace& s, const std::vector<int>& perm) {
  const Ambient& amb = s.ambient();
  if (amb.q != 1) throw mismatch_error("apply_permutation requires q = 1");
  if (static_cast<int>(perm.size()) != amb.n) throw range_error("permutation has wrong length");
  std::vector<int> out;
  for (int e : s.elements()) out.push_back(perm[e - 1]);
  return Subspace::from_elements(amb, out);
}

Subspace apply_linear(const Subspace& s, const std::vector<uint8_t>& m) {
  const Ambient& amb = s.ambient();
  if (amb.q < 2) throw mismatch_error("apply_linear requires q >= 2");
  int n = amb.n;
  if (static_cast<int>(m.size()) != n * n) throw range_error("matrix has wrong shape");
  const FieldTable& gf = *amb.gf;
  std::vector<std::vector<uint8_t>> rows;
  for (int r = 0; r < s.rank(); ++r) {
    std::vector<uint8_t> v(n, 0);
    for (int c = 0; c < n; ++c) {
      uint8_t f = s.entry(r, c);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) v[j] = gf.plus(v[j], gf.times(f, m[c * n + j]));
    }
    rows.push_back(std::move(v));
  }
  return Subspace::from_rows(amb, rows);
}

}  // namespace qjs
