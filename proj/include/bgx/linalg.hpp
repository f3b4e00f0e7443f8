#pragma once

#include "bgx/matrix.hpp"
#include "bgx/rational.hpp"

#include <vector>

namespace bgx {

using RMatrix = Matrix<Rational>;
using RVector = std::vector<Rational>;

struct RrefResult {
    RMatrix mat;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Unique reduced row echelon form (Gauss-Jordan with exact arithmetic).
RrefResult rref(RMatrix m);

// Subspace of Q^ambient stored as the unique RREF basis (one row per
// dimension), giving exact, representation-independent equality.
class Subspace {
  public:
    static Subspace zero(int ambient);
    static Subspace from_vectors(int ambient, const std::vector<RVector>& vecs);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    // RREF rows; empty (0 x ambient) for the zero subspace.
    const RMatrix& basis() const { return basis_; }
    std::vector<RVector> basis_rows() const;

    bool contains(const RVector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) {
        return !(a == b);
    }

    // Orders subspaces by dimension, then lexicographically on the
    // flattened RREF basis; used for deterministic witness selection.
    static bool less(const Subspace& a, const Subspace& b);

  private:
    Subspace(int ambient, RMatrix basis)
        : ambient_(ambient), basis_(std::move(basis)) {}
    int ambient_ = 0;
    RMatrix basis_;
};

// Right null space { x : m x = 0 } as a subspace of Q^cols.
Subspace kernel(const RMatrix& m);

// Smallest subspace containing the seeds and invariant under every
// generator: repeatedly applies generators to a spanning set and grows the
// span until stable.
Subspace spin(const std::vector<RVector>& seeds, const std::vector<RMatrix>& gens);

struct ClosureResult {
    int dim = 0;
    // True when the breadth-first search stabilized within the
    // multiplication cap; false means dim is only a lower bound.
    bool saturated = false;
};

// Dimension of the unital matrix algebra generated by gens, computed by a
// breadth-first search over words starting from the identity. cap bounds the
// number of matrix multiplications; cap < 0 selects the default 4*d^4.
ClosureResult algebra_closure_dim(const std::vector<RMatrix>& gens, long cap = -1);

RMatrix identity_matrix(int d);
RVector unit_vector(int d, int i);

}  // namespace bgx
