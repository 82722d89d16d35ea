#include "lssa/algebra.hpp"

#include <cassert>

namespace lssa {

namespace {

std::string unit_label(int i, int j) {
    return "E_" + std::to_string(i) + "_" + std::to_string(j);
}

Vec vectorize(const SuperMatrix& x) {
    int s = x.size();
    Vec v(static_cast<size_t>(s) * static_cast<size_t>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) v[static_cast<size_t>(i * s + j)] = x.at(i, j);
    return v;
}

} // namespace

LieSuperalgebra::LieSuperalgebra(AlgebraKind kind, int m, int n) : kind_(kind), m_(m), n_(n) {}

std::string LieSuperalgebra::name() const {
    return std::string(kind_ == AlgebraKind::gl ? "gl" : "sl") + "(" + std::to_string(m_) + "|" +
           std::to_string(n_) + ")";
}

std::shared_ptr<const LieSuperalgebra> LieSuperalgebra::make(AlgebraKind kind, int m, int n) {
    if (m < 1 || n < 0 || (kind == AlgebraKind::sl && n < 1))
        throw error("unsupported algebra parameters");
    auto g = std::shared_ptr<LieSuperalgebra>(new LieSuperalgebra(kind, m, n));
    g->build_basis();
    g->build_brackets();
    return g;
}

void LieSuperalgebra::build_basis() {
    const int m = m_, n = n_, s = m + n;
    auto root_ee = [&](int i, int j) { return WeightMN::eps(m, n, i) - WeightMN::eps(m, n, j); };
    auto root_dd = [&](int i, int j) {
        return WeightMN::delta(m, n, i) - WeightMN::delta(m, n, j);
    };
    auto root_ed = [&](int i, int j) { return WeightMN::eps(m, n, i) - WeightMN::delta(m, n, j); };

    auto unit = [&](int i, int j) { return SuperMatrix::unit(m, n, i, j); };

    if (kind_ == AlgebraKind::sl && m == 2 && n == 1) {
        // distinguished basis x1..x4, y1..y4
        SuperMatrix x3 = unit(1, 1) - unit(2, 2);
        SuperMatrix x4 = unit(1, 1) + unit(2, 2) + unit(3, 3).scaled(Scalar(2));
        basis_.push_back({"x1", Parity::even, unit(1, 2), root_ee(1, 2)});
        basis_.push_back({"x2", Parity::even, unit(2, 1), root_ee(2, 1)});
        basis_.push_back({"x3", Parity::even, x3, std::nullopt});
        basis_.push_back({"x4", Parity::even, x4, std::nullopt});
        basis_.push_back({"y1", Parity::odd, unit(3, 1), -root_ed(1, 1)});
        basis_.push_back({"y2", Parity::odd, unit(3, 2), -root_ed(2, 1)});
        basis_.push_back({"y3", Parity::odd, unit(1, 3), root_ed(1, 1)});
        basis_.push_back({"y4", Parity::odd, unit(2, 3), root_ed(2, 1)});
        cartan_ = {2, 3};
        pos_even_ = {0};
        pos_odd_ = {6, 7};
    } else if (kind_ == AlgebraKind::gl) {
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                std::optional<WeightMN> rt;
                if (i != j) rt = root_ee(i, j);
                basis_.push_back({unit_label(i, j), Parity::even, unit(i, j), rt});
                if (i == j) cartan_.push_back(static_cast<int>(basis_.size()) - 1);
                if (i < j) pos_even_.push_back(static_cast<int>(basis_.size()) - 1);
            }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                std::optional<WeightMN> rt;
                if (i != j) rt = root_dd(i, j);
                basis_.push_back({unit_label(m + i, m + j), Parity::even, unit(m + i, m + j), rt});
                if (i == j) cartan_.push_back(static_cast<int>(basis_.size()) - 1);
                if (i < j) pos_even_.push_back(static_cast<int>(basis_.size()) - 1);
            }
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) {
                basis_.push_back({unit_label(i, m + j), Parity::odd, unit(i, m + j), root_ed(i, j)});
                pos_odd_.push_back(static_cast<int>(basis_.size()) - 1);
            }
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= m; ++i)
                basis_.push_back({unit_label(m + j, i), Parity::odd, unit(m + j, i), -root_ed(i, j)});
    } else {
        // sl(m|n): off-diagonal units, block difference elements, one
        // cross-block traceless central element of the even part
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                if (i != j) {
                    basis_.push_back({unit_label(i, j), Parity::even, unit(i, j), root_ee(i, j)});
                    if (i < j) pos_even_.push_back(static_cast<int>(basis_.size()) - 1);
                }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) {
                    basis_.push_back(
                        {unit_label(m + i, m + j), Parity::even, unit(m + i, m + j), root_dd(i, j)});
                    if (i < j) pos_even_.push_back(static_cast<int>(basis_.size()) - 1);
                }
        for (int i = 1; i < m; ++i) {
            basis_.push_back(
                {"h" + std::to_string(i), Parity::even, unit(i, i) - unit(i + 1, i + 1), std::nullopt});
            cartan_.push_back(static_cast<int>(basis_.size()) - 1);
        }
        for (int j = 1; j < n; ++j) {
            basis_.push_back({"hd" + std::to_string(j), Parity::even,
                              unit(m + j, m + j) - unit(m + j + 1, m + j + 1), std::nullopt});
            cartan_.push_back(static_cast<int>(basis_.size()) - 1);
        }
        SuperMatrix z(m, n);
        for (int i = 1; i <= m; ++i) z = z + unit(i, i).scaled(Scalar(n));
        for (int j = 1; j <= n; ++j) z = z + unit(m + j, m + j).scaled(Scalar(m));
        basis_.push_back({"z", Parity::even, z, std::nullopt});
        cartan_.push_back(static_cast<int>(basis_.size()) - 1);

        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) {
                basis_.push_back({unit_label(i, m + j), Parity::odd, unit(i, m + j), root_ed(i, j)});
                pos_odd_.push_back(static_cast<int>(basis_.size()) - 1);
            }
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= m; ++i)
                basis_.push_back({unit_label(m + j, i), Parity::odd, unit(m + j, i), -root_ed(i, j)});
    }

    // stable partition: even elements come first by construction
    std::vector<std::string> even_labels, odd_labels;
    for (const auto& b : basis_)
        (b.parity == Parity::even ? even_labels : odd_labels).push_back(b.label);
    space_ = SuperSpace(std::move(even_labels), std::move(odd_labels));
    for (int i = 0; i < dim(); ++i)
        assert((parity(i) == Parity::even) == (i < space_.even_dim()));

    // coordinate solver: pick s^2-coordinate rows containing an invertible
    // dim x dim submatrix of the vectorized basis matrix
    const int s2 = s * s;
    Matrix bt(dim(), s2); // transposed vectorized basis
    for (int c = 0; c < dim(); ++c) {
        Vec v = vectorize(basis_[static_cast<size_t>(c)].mat);
        for (int r = 0; r < s2; ++r) bt.at(c, r) = v[static_cast<size_t>(r)];
    }
    // pivot columns of bt = coordinate positions that determine coords
    Matrix work = bt;
    pivot_rows_.clear();
    {
        int row = 0;
        for (int col = 0; col < s2 && row < dim(); ++col) {
            int p = -1;
            for (int i = row; i < dim(); ++i)
                if (!work.at(i, col).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < s2; ++j) std::swap(work.at(p, j), work.at(row, j));
            Scalar inv = work.at(row, col).inverse();
            for (int j = col; j < s2; ++j)
                if (!work.at(row, j).is_zero()) work.at(row, j) = work.at(row, j) * inv;
            for (int i = 0; i < dim(); ++i) {
                if (i == row || work.at(i, col).is_zero()) continue;
                Scalar f = work.at(i, col);
                for (int j = col; j < s2; ++j)
                    if (!work.at(row, j).is_zero()) work.at(i, j) -= f * work.at(row, j);
            }
            pivot_rows_.push_back(col);
            ++row;
        }
    }
    if (static_cast<int>(pivot_rows_.size()) != dim()) throw error("basis is not independent");
    Matrix square(dim(), dim());
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < dim(); ++c)
            square.at(r, c) = bt.at(c, pivot_rows_[static_cast<size_t>(r)]);
    coord_inverse_ = inverse(square);
}

Vec LieSuperalgebra::coordinates(const SuperMatrix& x) const {
    if (x.size() != m_ + n_) throw error("supermatrix has wrong size for " + name());
    const int s = m_ + n_;
    Vec rhs(static_cast<size_t>(dim()));
    for (size_t r = 0; r < pivot_rows_.size(); ++r) {
        int pos = pivot_rows_[r];
        rhs[r] = x.at(pos / s, pos % s);
    }
    Vec coords = coord_inverse_.apply(rhs);
    // confirm x is actually in the span
    if (from_coordinates(coords) != x) throw error("matrix is not in the span of " + name());
    return coords;
}

SuperMatrix LieSuperalgebra::from_coordinates(const Vec& coords) const {
    assert(static_cast<int>(coords.size()) == dim());
    SuperMatrix acc(m_, n_);
    for (int i = 0; i < dim(); ++i)
        if (!coords[static_cast<size_t>(i)].is_zero())
            acc = acc + basis_[static_cast<size_t>(i)].mat.scaled(coords[static_cast<size_t>(i)]);
    return acc;
}

void LieSuperalgebra::build_brackets() {
    brackets_.resize(static_cast<size_t>(dim()) * static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            SuperMatrix br =
                basis_[static_cast<size_t>(i)].mat.supercommutator(basis_[static_cast<size_t>(j)].mat);
            SparseVec col;
            if (!br.is_zero()) {
                Vec coords = coordinates(br);
                for (int l = 0; l < dim(); ++l)
                    if (!coords[static_cast<size_t>(l)].is_zero())
                        col.emplace_back(l, coords[static_cast<size_t>(l)]);
            }
            brackets_[static_cast<size_t>(i) * static_cast<size_t>(dim()) + static_cast<size_t>(j)] =
                std::move(col);
        }
}

int LieSuperalgebra::index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[static_cast<size_t>(i)].label == label) return i;
    throw error("no basis element labeled " + label + " in " + name());
}

Matrix LieSuperalgebra::ad(int i) const {
    Matrix a(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [l, c] : bracket(i, j)) a.at(l, j) = c;
    return a;
}

Matrix LieSuperalgebra::neg_supertranspose_map() const {
    Matrix t(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        Vec coords = coordinates(basis_[static_cast<size_t>(j)].mat.neg_supertranspose());
        t.set_column(j, coords);
    }
    return t;
}

WeightMN LieSuperalgebra::rho0() const {
    WeightMN r(m_, n_);
    for (int i = 1; i <= m_; ++i)
        for (int j = i + 1; j <= m_; ++j)
            r = r + (WeightMN::eps(m_, n_, i) - WeightMN::eps(m_, n_, j));
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            r = r + (WeightMN::delta(m_, n_, i) - WeightMN::delta(m_, n_, j));
    return r.scaled(Rational(1, 2));
}

Vec bracket_apply(const LieSuperalgebra& g, const Vec& u, const Vec& v) {
    Vec r(static_cast<size_t>(g.dim()));
    for (int i = 0; i < g.dim(); ++i) {
        if (u[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < g.dim(); ++j) {
            if (v[static_cast<size_t>(j)].is_zero()) continue;
            Scalar uv = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
            for (const auto& [l, c] : g.bracket(i, j)) r[static_cast<size_t>(l)] += uv * c;
        }
    }
    return r;
}

WeightMN LieSuperalgebra::rho1() const {
    WeightMN r(m_, n_);
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= n_; ++j)
            r = r + (WeightMN::eps(m_, n_, i) - WeightMN::delta(m_, n_, j));
    return r.scaled(Rational(1, 2));
}

} // namespace lssa
