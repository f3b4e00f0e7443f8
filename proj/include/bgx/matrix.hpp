#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bgx {

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense matrix over an exact ring R (Rational or LaurentPoly). Matrices act
// on column vectors: column i holds the image of the i-th basis vector.
template <typename R>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const R& fill = R{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    }

    static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
        if (rows.empty()) throw ShapeError("from_rows: no rows");
        Matrix m(static_cast<int>(rows.size()),
                 static_cast<int>(rows.front().size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols_)
                throw ShapeError("from_rows: ragged rows");
            for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const R& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    std::vector<R> row(int r) const {
        std::vector<R> out;
        out.reserve(cols_);
        for (int j = 0; j < cols_; ++j) out.push_back(at(r, j));
        return out;
    }
    std::vector<R> col(int c) const {
        std::vector<R> out;
        out.reserve(rows_);
        for (int i = 0; i < rows_; ++i) out.push_back(at(i, c));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeError("matrix product shape mismatch: " +
                             std::to_string(a.cols_) + " vs " +
                             std::to_string(b.rows_));
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                R acc = a.at(i, 0) * b.at(0, j);
                for (int k = 1; k < a.cols_; ++k)
                    acc = acc + a.at(i, k) * b.at(k, j);
                out.at(i, j) = acc;
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b, "sum");
        Matrix out(a.rows_, a.cols_);
        for (size_t k = 0; k < a.data_.size(); ++k)
            out.data_[k] = a.data_[k] + b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b, "difference");
        Matrix out(a.rows_, a.cols_);
        for (size_t k = 0; k < a.data_.size(); ++k)
            out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    int rows_, cols_;
    std::vector<R> data_;

    static void check_same_shape(const Matrix& a, const Matrix& b,
                                 const char* what) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeError(std::string("matrix ") + what + " shape mismatch");
    }
};

// Matrix-vector product (column-vector action).
template <typename R>
std::vector<R> mat_vec(const Matrix<R>& m, const std::vector<R>& v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw ShapeError("mat_vec shape mismatch");
    std::vector<R> out;
    out.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        R acc = m.at(i, 0) * v[0];
        for (int j = 1; j < m.cols(); ++j) acc = acc + m.at(i, j) * v[j];
        out.push_back(acc);
    }
    return out;
}

// Kronecker product with the FIRST factor varying fastest: with A of size
// p x p, entry (s*p + r, d*p + c) equals A(r,c) * B(s,d), i.e. basis vector
// e_{s*p+r} represents a_r (x) b_s.
template <typename R>
Matrix<R> kron_first_fast(const Matrix<R>& a, const Matrix<R>& b) {
    const int p = a.rows(), pc = a.cols(), q = b.rows(), qc = b.cols();
    Matrix<R> out(p * q, pc * qc);
    for (int s = 0; s < q; ++s)
        for (int d = 0; d < qc; ++d)
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < pc; ++c)
                    out.at(s * p + r, d * pc + c) = a.at(r, c) * b.at(s, d);
    return out;
}

// Determinant by Laplace expansion along the first row; fine at the small
// sizes used here and division-free, so it works over any exact ring.
template <typename R>
R det(const Matrix<R>& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw ShapeError("det: non-square or empty matrix");
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    R acc = m.at(0, 0) - m.at(0, 0);  // zero compatible with entry contexts
    for (int j = 0; j < n; ++j) {
        Matrix<R> minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        R term = m.at(0, j) * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace bgx
