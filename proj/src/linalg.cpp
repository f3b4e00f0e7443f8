#include "bgx/linalg.hpp"

#include <deque>

namespace bgx {

RMatrix identity_matrix(int d) {
    RMatrix m(d, d, Rational(0));
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

RVector unit_vector(int d, int i) {
    RVector v(d, Rational(0));
    v[i] = 1;
    return v;
}

RrefResult rref(RMatrix m) {
    RrefResult out{std::move(m), 0, {}};
    RMatrix& a = out.mat;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
        const Rational inv = Rational(1) / a.at(r, c);
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const Rational f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

Subspace Subspace::zero(int ambient) {
    return Subspace(ambient, RMatrix(0, ambient));
}

Subspace Subspace::from_vectors(int ambient, const std::vector<RVector>& vecs) {
    if (vecs.empty()) return zero(ambient);
    RMatrix stacked(static_cast<int>(vecs.size()), ambient);
    for (size_t i = 0; i < vecs.size(); ++i) {
        if (static_cast<int>(vecs[i].size()) != ambient)
            throw ShapeError("from_vectors: vector length != ambient dimension");
        for (int j = 0; j < ambient; ++j)
            stacked.at(static_cast<int>(i), j) = vecs[i][j];
    }
    RrefResult r = rref(std::move(stacked));
    RMatrix basis(r.rank, ambient);
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < ambient; ++j) basis.at(i, j) = r.mat.at(i, j);
    return Subspace(ambient, std::move(basis));
}

std::vector<RVector> Subspace::basis_rows() const {
    std::vector<RVector> rows;
    rows.reserve(basis_.rows());
    for (int i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
    return rows;
}

bool Subspace::contains(const RVector& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw ShapeError("contains: vector length != ambient dimension");
    RVector w = v;
    // Reduce against the RREF basis: each row has a leading 1 in its pivot
    // column and zeros above/below, so one pass eliminates completely.
    for (int i = 0; i < basis_.rows(); ++i) {
        int pivot = -1;
        for (int j = 0; j < ambient_; ++j)
            if (basis_.at(i, j) != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0 || w[pivot] == 0) continue;
        const Rational f = w[pivot];
        for (int j = pivot; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (int i = 0; i < a.basis_.rows(); ++i)
        for (int j = 0; j < a.basis_.cols(); ++j) {
            const Rational &x = a.basis_.at(i, j), &y = b.basis_.at(i, j);
            if (x != y) return x < y;
        }
    return false;
}

Subspace kernel(const RMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<RVector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RVector x(m.cols(), Rational(0));
        x[f] = 1;
        for (size_t i = 0; i < r.pivot_cols.size(); ++i)
            x[r.pivot_cols[i]] = -r.mat.at(static_cast<int>(i), f);
        basis.push_back(std::move(x));
    }
    return Subspace::from_vectors(m.cols(), basis);
}

Subspace spin(const std::vector<RVector>& seeds, const std::vector<RMatrix>& gens) {
    if (seeds.empty()) throw ShapeError("spin: no seed vectors");
    const int ambient = static_cast<int>(seeds.front().size());
    for (const auto& g : gens)
        if (g.rows() != ambient || g.cols() != ambient)
            throw ShapeError("spin: generator shape does not match vectors");
    Subspace space = Subspace::from_vectors(ambient, seeds);
    std::deque<RVector> work(seeds.begin(), seeds.end());
    std::vector<RVector> spanning(seeds.begin(), seeds.end());
    while (!work.empty()) {
        const RVector v = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            RVector image = mat_vec(g, v);
            if (space.contains(image)) continue;
            spanning.push_back(image);
            space = Subspace::from_vectors(ambient, spanning);
            work.push_back(std::move(image));
        }
    }
    return space;
}

ClosureResult algebra_closure_dim(const std::vector<RMatrix>& gens, long cap) {
    if (gens.empty()) throw ShapeError("algebra_closure_dim: no generators");
    const int d = gens.front().rows();
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d)
            throw ShapeError("algebra_closure_dim: non-square or mismatched generator");
    if (cap < 0) cap = 4L * d * d * d * d;
    const auto flatten = [d](const RMatrix& m) {
        RVector v;
        v.reserve(static_cast<size_t>(d) * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) v.push_back(m.at(i, j));
        return v;
    };
    Subspace span = Subspace::from_vectors(d * d, {flatten(identity_matrix(d))});
    std::vector<RVector> spanning = {flatten(identity_matrix(d))};
    std::deque<RMatrix> work = {identity_matrix(d)};
    long mults = 0;
    while (!work.empty()) {
        const RMatrix w = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            if (mults >= cap) return {span.dim(), false};
            RMatrix p = g * w;
            ++mults;
            RVector flat = flatten(p);
            if (span.contains(flat)) continue;
            spanning.push_back(std::move(flat));
            span = Subspace::from_vectors(d * d, spanning);
            work.push_back(std::move(p));
        }
    }
    return {span.dim(), true};
}

}  // namespace bgx
