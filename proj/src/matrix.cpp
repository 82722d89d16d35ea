#include "lssa/matrix.hpp"

#include <algorithm>
#include <cassert>

#include "lssa/errors.hpp"

namespace lssa {

Vec operator+(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scaled(const Vec& v, const Scalar& c) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = v[i] * c;
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero()) r.e_[i] = e_[i] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    Vec r(static_cast<size_t>(rows_));
    for (int j = 0; j < cols_; ++j) {
        if (v[static_cast<size_t>(j)].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) r[static_cast<size_t>(i)] += a * v[static_cast<size_t>(j)];
        }
    }
    return r;
}

Vec Matrix::column(int c) const {
    Vec r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) r[static_cast<size_t>(i)] = at(i, c);
    return r;
}

void Matrix::set_column(int c, const Vec& v) {
    assert(static_cast<int>(v.size()) == rows_);
    for (int i = 0; i < rows_; ++i) at(i, c) = v[static_cast<size_t>(i)];
}

Vec Matrix::row(int r) const {
    Vec out(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(j)] = at(r, j);
    return out;
}

Matrix Matrix::substitute(const std::map<std::string, Rational>& bindings) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].substitute(bindings);
    return r;
}

Matrix Matrix::lifted(const ParamContextPtr& target) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = lift_to(e_[i], target);
    return r;
}

Scalar Matrix::trace() const {
    assert(rows_ == cols_);
    Scalar t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

namespace {

/* Row-reduces m in place to (unnormalized) echelon form.
 * Returns the pivot columns. First nonzero entry in column order. */
std::vector<int> echelonize(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(const Matrix& m) {
    Matrix w = m;
    return static_cast<int>(echelonize(w).size());
}

std::vector<Vec> kernel(const Matrix& m) {
    Matrix w = m;
    std::vector<int> pivots = echelonize(w);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Vec v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(free)] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -w.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    assert(static_cast<int>(b.size()) == m.rows());
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt; // 0 = 1 row
    Vec x(static_cast<size_t>(m.cols()));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw not_invertible("not square");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    std::vector<int> pivots = echelonize(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] != n - 1)
        throw not_invertible("rank deficient");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

int max_rank_over_affine_family(const std::vector<Matrix>& family) {
    assert(!family.empty());
    const Matrix& b0 = family[0];
    int d = static_cast<int>(family.size()) - 1;
    if (d == 0) return rank(b0);

    // Union of all parameter names already present, then d fresh names.
    std::vector<std::string> names;
    for (const Matrix& m : family) {
        if (m.rows() == 0 || m.cols() == 0) continue;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m.at(i, j).context())
                    for (const auto& nm : m.at(i, j).context()->names())
                        if (std::find(names.begin(), names.end(), nm) == names.end())
                            names.push_back(nm);
    }
    std::vector<std::string> fresh;
    for (int i = 1; i <= d; ++i) {
        std::string base = "t" + std::to_string(i);
        while (std::find(names.begin(), names.end(), base) != names.end()) base = "_" + base;
        names.push_back(base);
        fresh.push_back(base);
    }
    ParamContextPtr ctx = ParamContext::make(names);

    Matrix acc = b0.lifted(ctx);
    for (int i = 1; i <= d; ++i) {
        Scalar t = Scalar::param(ctx, fresh[static_cast<size_t>(i - 1)]);
        acc = acc + family[static_cast<size_t>(i)].lifted(ctx).scaled(t);
    }
    return rank(acc);
}

Vec SpanBuilder::reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[static_cast<size_t>(pivots_[r])];
        if (!c.is_zero()) v = v - lssa::scaled(rows_[r], c);
    }
    return v;
}

bool SpanBuilder::insert(const Vec& v) {
    assert(static_cast<int>(v.size()) == dim_);
    Vec w = reduce(v);
    int p = -1;
    for (int i = 0; i < dim_; ++i) {
        if (!w[static_cast<size_t>(i)].is_zero()) {
            p = i;
            break;
        }
    }
    if (p < 0) return false;
    w = lssa::scaled(w, w[static_cast<size_t>(p)].inverse());
    // keep earlier rows reduced against the new pivot
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][static_cast<size_t>(p)];
        if (!c.is_zero()) rows_[r] = rows_[r] - lssa::scaled(w, c);
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

bool SpanBuilder::contains(const Vec& v) const { return lssa::is_zero(reduce(v)); }

} // namespace lssa
