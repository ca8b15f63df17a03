#pragma once

#include <vector>

#include "qjs/subspace.hpp"

namespace qjs {

// All k-subspaces of the ambient in lexicographic order on the canonical
// representative. This order is part of the public contract: KFunction
// vectors are indexed by it. Memoized per (q, n, k); thread-safe.
const std::vector<Subspace>& enumerate(const Ambient& amb, int k);

// Position of s in enumerate(ambient, rank); throws if not found.
long index_of(const Subspace& s);

// Second counting formula of the subset/subspace counting lemma:
// #{U of rank u : rk(U cap B) = a} = q^{(b-a)(u-a)} [b a]_q [n-b u-a]_q.
Int count_intersection(const Ambient& amb, const Subspace& B, int a, int u);

// Lattice isomorphism [P, V] -> L(V/P) for a point P, realized by a coordinate
// change sending P to the last basis vector and dropping that coordinate
// (q >= 2), or by deleting the element (q = 1).
class PointQuotient {
 public:
  PointQuotient(const Ambient& amb, const Subspace& P);

  const Ambient& sub_ambient() const { return sub_; }
  const Subspace& point() const { return point_; }
  // Requires P <= K; rank drops by one.
  Subspace to_quotient(const Subspace& K) const;
  // Inverse: lifts S <= V/P to the unique K with P <= K and K/P = S.
  Subspace lift(const Subspace& S) const;

 private:
  Ambient amb_;
  Ambient sub_;
  Subspace point_;
  int elem_ = 0;                  // q = 1: the removed element
  std::vector<uint8_t> basis_;    // q >= 2: n*n change of basis (rows), last row spans P
  std::vector<uint8_t> basis_inv_;
};

// Lattice isomorphism L(H) -> L(F_q^{n-1}) for a hyperplane H, realized by
// coordinates with respect to H's canonical basis rows (q >= 2) or by
// relabeling the elements of H (q = 1).
class HyperplaneRestriction {
 public:
  HyperplaneRestriction(const Ambient& amb, const Subspace& H);

  const Ambient& sub_ambient() const { return sub_; }
  const Subspace& hyperplane() const { return hyper_; }
  // Requires K <= H; rank preserved.
  Subspace to_sub(const Subspace& K) const;
  Subspace lift(const Subspace& S) const;

 private:
  Ambient amb_;
  Ambient sub_;
  Subspace hyper_;
};

}  // namespace qjs
