#pragma once

#include <stdexcept>
#include <vector>

#include "ncg/numeric.hpp"

namespace ncg {

/// Dense square matrix with exact integer entries.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Int(0)) {
        if (n < 0) throw std::invalid_argument("negative dimension");
    }

    int dim() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    const Int& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
    }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    Int trace() const {
        Int t = 0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    /// Largest absolute row sum (Gershgorin bound on |eigenvalue|).
    Int row_sum_bound() const {
        Int best = 1;
        for (int i = 0; i < n_; ++i) {
            Int s = 0;
            for (int j = 0; j < n_; ++j) s += abs(at(i, j));
            if (s > best) best = s;
        }
        return best;
    }

    bool fits_long() const {
        for (const auto& v : a_)
            if (!v.fits_slong_p()) return false;
        return true;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

private:
    int n_ = 0;
    std::vector<Int> a_;
};

/// Kronecker product (used to cross-check the eigenvalue product law).
inline IntMatrix kronecker(const IntMatrix& x, const IntMatrix& y) {
    const int m = x.dim(), n = y.dim();
    IntMatrix out(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (x.at(i, j) == 0) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) out.at(i * n + k, j * n + l) = x.at(i, j) * y.at(k, l);
        }
    return out;
}

}  // namespace ncg
