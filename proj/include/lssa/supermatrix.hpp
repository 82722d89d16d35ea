#pragma once

#include <optional>

#include "lssa/matrix.hpp"
#include "lssa/superspace.hpp"

namespace lssa {

/* Element of gl(m|n): an (m+n) x (m+n) matrix with the block structure
 * [ X1 X2 ; X3 X4 ], X1 of size m x m and X4 of size n x n. Rows/columns
 * 0..m-1 are even, m..m+n-1 odd. */
class SuperMatrix {
public:
    SuperMatrix() : m_(0), n_(0) {}
    SuperMatrix(int m, int n) : m_(m), n_(n), mat_(m + n, m + n) {}
    SuperMatrix(int m, int n, Matrix mat) : m_(m), n_(n), mat_(std::move(mat)) {
        if (mat_.rows() != m + n || mat_.cols() != m + n)
            throw error("supermatrix block sizes do not match");
    }

    static SuperMatrix unit(int m, int n, int i, int j); // elementary matrix E_{ij}, 1-based

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return m_ + n_; }

    const Matrix& matrix() const { return mat_; }
    Scalar& at(int i, int j) { return mat_.at(i, j); }
    const Scalar& at(int i, int j) const { return mat_.at(i, j); }

    Parity row_parity(int i) const { return i < m_ ? Parity::even : Parity::odd; }

    /* Parity of the matrix as a homogeneous element; nullopt when mixed. */
    std::optional<Parity> parity() const;
    bool is_zero() const { return mat_.is_zero(); }

    SuperMatrix operator+(const SuperMatrix& o) const { return {m_, n_, mat_ + o.mat_}; }
    SuperMatrix operator-(const SuperMatrix& o) const { return {m_, n_, mat_ - o.mat_}; }
    SuperMatrix operator-() const { return {m_, n_, -mat_}; }
    SuperMatrix operator*(const SuperMatrix& o) const { return {m_, n_, mat_ * o.mat_}; }
    SuperMatrix scaled(const Scalar& c) const { return {m_, n_, mat_.scaled(c)}; }

    bool operator==(const SuperMatrix& o) const {
        return m_ == o.m_ && n_ == o.n_ && mat_ == o.mat_;
    }
    bool operator!=(const SuperMatrix& o) const { return !(*this == o); }

    Scalar supertrace() const; // tr(X1) - tr(X4)

    /* X^{st} = [ X1^t X3^t ; -X2^t X4^t ]. */
    SuperMatrix supertranspose() const;
    SuperMatrix neg_supertranspose() const { return -supertranspose(); }

    /* [X, Y] = XY - (-1)^{|X||Y|} YX; requires homogeneous operands. */
    SuperMatrix supercommutator(const SuperMatrix& o) const;

private:
    int m_, n_;
    Matrix mat_;
};

} // namespace lssa
