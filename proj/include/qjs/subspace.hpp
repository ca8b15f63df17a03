#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qjs/field.hpp"
#include "qjs/rational.hpp"

namespace qjs {

// Ambient lattice L(V): subsets of {1..n} for q = 1, subspaces of F_q^n for
// q >= 2. Small value type; field tables are shared and immutable.
struct Ambient {
  int q = 1;
  int n = 0;
  const FieldTable* gf = nullptr;

  Ambient() = default;
  Ambient(int q, int n);

  bool operator==(const Ambient& o) const { return q == o.q && n == o.n; }
  bool operator!=(const Ambient& o) const { return !(*this == o); }

  // Number of k-subspaces; 0 outside 0..n.
  Int count(int k) const;
};

// Largest supported rank for a given q (enumeration stays at desk scale).
int max_ambient_rank(int q);

// Canonical representative of an element of L(V).
//  q = 1:  sorted 1-based element list.
//  q >= 2: reduced row echelon basis matrix, rows are coordinate vectors,
//          stored row-major. Canonical form gives O(1) equality and a total
//          order; the enumeration order (and hence KFunction indexing) is
//          lexicographic on this representative.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const Ambient& amb);
  static Subspace full(const Ambient& amb);
  // q = 1; elements are 1-based, duplicates rejected.
  static Subspace from_elements(const Ambient& amb, std::vector<int> elems);
  // q >= 2; spanning rows, canonicalized; rejects rank-deficient input.
  static Subspace from_rows(const Ambient& amb, const std::vector<std::vector<uint8_t>>& rows);
  // q >= 2; spanning rows, canonicalized, rank-deficiency allowed.
  static Subspace span_rows(const Ambient& amb, const std::vector<std::vector<uint8_t>>& rows);

  const Ambient& ambient() const { return amb_; }
  int rank() const { return rank_; }
  int corank() const { return amb_.n - rank_; }
  const std::vector<uint8_t>& data() const { return data_; }

  // q = 1: sorted elements; q >= 2: row-major RREF entries (rank x n).
  uint8_t entry(int r, int c) const { return data_[r * amb_.n + c]; }
  std::vector<int> elements() const;  // q = 1

  bool contains(const Subspace& other) const;  // other <= *this

  // Textual encoding: "{1,3,5}" for q = 1; semicolon-separated basis rows of
  // digits for q >= 2 ("101;011"), "0" for the zero subspace.
  std::string encode() const;
  static Subspace parse(const Ambient& amb, const std::string& text);

  bool operator==(const Subspace& o) const { return amb_ == o.amb_ && rank_ == o.rank_ && data_ == o.data_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  // Total order within one (ambient, rank) class: lex on the representative.
  bool operator<(const Subspace& o) const;

 private:
  Ambient amb_;
  int rank_ = 0;
  std::vector<uint8_t> data_;
};

Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);
// Set complement for q = 1; orthogonal complement under the standard dot
// product for q >= 2. An anti-automorphism of L(V).
Subspace perp(const Subspace& s);

// All x-subspaces of S, in the enumeration order induced by local coordinates.
std::vector<Subspace> subspaces_of(const Subspace& s, int x);

// Image under a permutation of {1..n} (q = 1 automorphism).
Subspace apply_permutation(const Subspace& s, const std::vector<int>& perm);
// Image under an invertible linear map, row-vector convention v -> v*M
// (q >= 2 automorphism); M is n*n row-major.
Subspace apply_linear(const Subspace& s, const std::vector<uint8_t>& m);

}  // namespace qjs
