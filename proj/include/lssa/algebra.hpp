#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lssa/supermatrix.hpp"
#include "lssa/weights.hpp"

namespace lssa {

enum class AlgebraKind { gl, sl };

/* One structure-constant column: [b_i, b_j] = sum_l c_l b_l, sparse. */
using SparseVec = std::vector<std::pair<int, Scalar>>;

/* gl(m|n) or sl(m|n) with a fixed homogeneous basis (even elements first),
 * cached structure constants and root data. Immutable after construction. */
class LieSuperalgebra {
public:
    struct BasisElement {
        std::string label;
        Parity parity;
        SuperMatrix mat;
        std::optional<WeightMN> root; // for off-diagonal (root space) elements
    };

    static std::shared_ptr<const LieSuperalgebra> make(AlgebraKind kind, int m, int n);

    AlgebraKind kind() const { return kind_; }
    int m() const { return m_; }
    int n() const { return n_; }
    std::string name() const;

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& element(int i) const { return basis_[static_cast<size_t>(i)]; }
    int index_of(const std::string& label) const;

    const SuperSpace& space() const { return space_; } // underlying graded space
    Parity parity(int i) const { return basis_[static_cast<size_t>(i)].parity; }

    /* Structure constants: column for [b_i, b_j]. */
    const SparseVec& bracket(int i, int j) const {
        return brackets_[static_cast<size_t>(i) * basis_.size() + static_cast<size_t>(j)];
    }

    /* Coordinates of a supermatrix in the basis; throws when X is outside
     * the span (e.g. a non-traceless matrix for sl). */
    Vec coordinates(const SuperMatrix& x) const;
    SuperMatrix from_coordinates(const Vec& coords) const;

    /* Adjoint action matrix of basis element i. */
    Matrix ad(int i) const;

    /* Coordinate matrix of the automorphism X -> -X^{st}
     * (columns = images of basis elements). */
    Matrix neg_supertranspose_map() const;

    /* Cartan data: indices of the diagonal basis elements. */
    const std::vector<int>& cartan_indices() const { return cartan_; }
    /* Indices of positive even root vectors E_{ij}, i<j within a block. */
    const std::vector<int>& positive_even_roots() const { return pos_even_; }
    /* Indices of positive odd root vectors E_{i,m+j}. */
    const std::vector<int>& positive_odd_roots() const { return pos_odd_; }

    WeightMN rho0() const;
    WeightMN rho1() const;
    WeightMN rho() const { return rho0() - rho1(); }

private:
    LieSuperalgebra(AlgebraKind kind, int m, int n);
    void build_basis();
    void build_brackets();

    AlgebraKind kind_;
    int m_, n_;
    std::vector<BasisElement> basis_;
    SuperSpace space_;
    std::vector<SparseVec> brackets_;
    std::vector<int> cartan_, pos_even_, pos_odd_;

    // coordinate solve: pivot rows of the vectorized basis matrix + inverse
    std::vector<int> pivot_rows_;
    Matrix coord_inverse_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

/* [u, v] for arbitrary coordinate vectors, through the cached structure
 * constants. */
Vec bracket_apply(const LieSuperalgebra& g, const Vec& u, const Vec& v);

} // namespace lssa
