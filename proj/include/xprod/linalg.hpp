#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xprod/scalar.hpp"

namespace xprod {

/// Dense matrix over exact Gaussian rationals. Small dimensions only; all
/// verifier decisions reduce to exact equalities or rank computations here.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const Scalar& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same_shape(a, b);
        Mat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same_shape(a, b);
        Mat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    friend Mat operator*(const Scalar& c, Mat a) {
        for (Scalar& s : a.data_) s *= c;
        return a;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend bool operator==(const Mat&, const Mat&) = default;

    /// Kronecker product with row-major pair indexing:
    /// (a (x) b)[(i1,i2),(j1,j2)] = a[i1,j1] * b[i2,j2].
    static Mat kron(const Mat& a, const Mat& b) {
        Mat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i1 = 0; i1 < a.rows_; ++i1)
            for (std::size_t j1 = 0; j1 < a.cols_; ++j1) {
                const Scalar& av = a.at(i1, j1);
                if (av.is_zero()) continue;
                for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
                    for (std::size_t j2 = 0; j2 < b.cols_; ++j2) {
                        const Scalar& bv = b.at(i2, j2);
                        if (!bv.is_zero())
                            r.at(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = av * bv;
                    }
            }
        return r;
    }

private:
    static void check_same_shape(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Row space of a set of vectors, kept in reduced row echelon form.
/// Supports exact rank queries and membership tests.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Inserts a vector; returns true if it enlarged the span.
    bool insert(std::vector<Scalar> v) {
        if (v.size() != dim_) throw std::invalid_argument("Span: wrong vector length");
        reduce(v);
        std::size_t p = pivot_of(v);
        if (p == dim_) return false;
        Scalar inv = v[p].inverse();
        for (Scalar& s : v) s *= inv;
        for (auto& [pp, row] : rows_) {
            if (row[p].is_zero()) continue;
            Scalar f = row[p];
            for (std::size_t i = 0; i < dim_; ++i) row[i] -= f * v[i];
        }
        rows_.emplace_back(p, std::move(v));
        return true;
    }

    bool contains(std::vector<Scalar> v) const {
        if (v.size() != dim_) throw std::invalid_argument("Span: wrong vector length");
        reduce(v);
        return pivot_of(v) == dim_;
    }

private:
    void reduce(std::vector<Scalar>& v) const {
        for (const auto& [p, row] : rows_) {
            if (v[p].is_zero()) continue;
            Scalar f = v[p];
            for (std::size_t i = 0; i < dim_; ++i) v[i] -= f * row[i];
        }
    }

    std::size_t pivot_of(const std::vector<Scalar>& v) const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (!v[i].is_zero()) return i;
        return dim_;
    }

    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

inline std::size_t rank(const Mat& m) {
    Span s(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Scalar> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
        s.insert(std::move(row));
    }
    return s.rank();
}

/// Outcome of the exact positive-semidefiniteness test. When psd is false,
/// witness holds a vector w (in the original basis) with w* G w < 0.
struct PsdCertificate {
    bool psd = false;
    std::size_t kernel_dim = 0;
    std::optional<std::vector<Scalar>> witness;
};

inline bool is_hermitian(const Mat& g) {
    if (g.rows() != g.cols()) return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.cols(); ++j)
            if (g.at(i, j) != g.at(j, i).conj()) return false;
    return true;
}

/// Exact symmetric (congruence) elimination of a Hermitian matrix.
/// PSD iff every pivot is a positive rational and whatever remains after
/// exhausting positive pivots is the zero block; the kernel dimension is
/// size minus pivot count. Throws on non-Hermitian input.
inline PsdCertificate psd_certificate(const Mat& g) {
    if (!is_hermitian(g)) throw std::invalid_argument("psd_certificate: matrix is not Hermitian");
    const std::size_t n = g.rows();
    Mat m = g;
    // basis[i] expresses the current i-th vector in original coordinates
    std::vector<std::vector<Scalar>> basis(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = Scalar::one();
    std::vector<bool> done(n, false);
    std::size_t pivots = 0;

    for (;;) {
        // diagonal entries stay real under congruence; a negative one is an
        // immediate witness
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && m.at(i, i).re < 0) return {false, 0, basis[i]};

        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!done[i] && !m.at(i, i).is_zero()) p = i;
        if (p == n) break;

        Scalar d = m.at(p, p);  // real and positive here
        ++pivots;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || m.at(p, i).is_zero()) continue;
            // v_i <- v_i - c v_p orthogonalizes against the pivot; for the
            // Hermitian active block this one-sided row update is the full
            // congruence update
            Scalar c = m.at(p, i) / d;
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j]) m.at(i, j) -= c.conj() * m.at(p, j);
            for (std::size_t j = 0; j < n; ++j) basis[i][j] -= c.conj() * basis[p][j];
        }
        for (std::size_t j = 0; j < n; ++j)
            if (j != p) m.at(p, j) = m.at(j, p) = Scalar::zero();
    }

    // all remaining diagonal entries are zero; any off-diagonal residue
    // yields an explicitly negative direction
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (done[j] || m.at(i, j).is_zero()) continue;
            // w = -m[i][j] v_i + v_j has <w|w> = -2 |m[i][j]|^2 < 0
            std::vector<Scalar> w(n);
            Scalar a = -m.at(i, j);
            for (std::size_t k = 0; k < n; ++k) w[k] = a * basis[i][k] + basis[j][k];
            return {false, 0, std::move(w)};
        }
    }
    return {true, n - pivots, std::nullopt};
}

}  // namespace xprod
