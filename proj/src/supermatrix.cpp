#include "lssa/supermatrix.hpp"

namespace lssa {

SuperMatrix SuperMatrix::unit(int m, int n, int i, int j) {
    SuperMatrix u(m, n);
    u.at(i - 1, j - 1) = Scalar(1);
    return u;
}

std::optional<Parity> SuperMatrix::parity() const {
    bool has_even = false, has_odd = false;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (at(i, j).is_zero()) continue;
            (row_parity(i) == row_parity(j) ? has_even : has_odd) = true;
        }
    if (has_even && has_odd) return std::nullopt;
    return has_odd ? Parity::odd : Parity::even;
}

Scalar SuperMatrix::supertrace() const {
    Scalar t;
    for (int i = 0; i < m_; ++i) t += at(i, i);
    for (int i = m_; i < size(); ++i) t -= at(i, i);
    return t;
}

SuperMatrix SuperMatrix::supertranspose() const {
    SuperMatrix r(m_, n_);
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            // entry (i,j) of X^st comes from X(j,i), negated on the X2 block
            Scalar v = at(j, i);
            if (row_parity(j) == Parity::even && row_parity(i) == Parity::odd) v = -v;
            r.at(i, j) = v;
        }
    return r;
}

SuperMatrix SuperMatrix::supercommutator(const SuperMatrix& o) const {
    auto pa = parity(), pb = o.parity();
    if (!pa) throw mixed_parity_input("left operand of supercommutator");
    if (!pb) throw mixed_parity_input("right operand of supercommutator");
    SuperMatrix xy = *this * o;
    SuperMatrix yx = o * *this;
    return sign_factor(*pa, *pb) < 0 ? xy + yx : xy - yx;
}

} // namespace lssa
