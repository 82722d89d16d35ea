#pragma once

#include <string>
#include <vector>

#include "lssa/errors.hpp"

namespace lssa {

enum class Parity { even, odd };

inline Parity operator+(Parity a, Parity b) {
    return a == b ? Parity::even : Parity::odd;
}
inline int sign_factor(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

/* Parity-graded vector space with an ordered basis, even labels first. */
class SuperSpace {
public:
    SuperSpace() = default;
    SuperSpace(std::vector<std::string> even, std::vector<std::string> odd)
        : even_(std::move(even)), odd_(std::move(odd)) {}

    int even_dim() const { return static_cast<int>(even_.size()); }
    int odd_dim() const { return static_cast<int>(odd_.size()); }
    int dim() const { return even_dim() + odd_dim(); }

    Parity parity(int i) const { return i < even_dim() ? Parity::even : Parity::odd; }

    const std::string& label(int i) const {
        return i < even_dim() ? even_[static_cast<size_t>(i)]
                              : odd_[static_cast<size_t>(i - even_dim())];
    }
    const std::vector<std::string>& even_labels() const { return even_; }
    const std::vector<std::string>& odd_labels() const { return odd_; }

    int index_of(const std::string& label) const {
        for (int i = 0; i < dim(); ++i)
            if (this->label(i) == label) return i;
        throw error("no basis vector labeled " + label);
    }

    std::string superdim() const {
        return std::to_string(even_dim()) + "|" + std::to_string(odd_dim());
    }

    bool operator==(const SuperSpace& o) const { return even_ == o.even_ && odd_ == o.odd_; }

private:
    std::vector<std::string> even_, odd_;
};

} // namespace lssa
