#pragma once

#include <cstddef>
#include <vector>

#include "kcob/int_matrix.hpp"
#include "kcob/polynomial.hpp"

namespace kcob {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// t * a - b, the Alexander-module presentation when a = V, b = V^T.
    static PolyMatrix linear_pencil(const IntMatrix& a, const IntMatrix& b);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    RatPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const RatPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RatPoly> entries_;
};

/// Invariant factors f1 | f2 | ... of a Q[t]-module, monic, units dropped.
/// A zero polynomial entry denotes a free Q[t] summand and sorts last.
struct ModuleDecomposition {
    std::vector<RatPoly> invariant_factors;
    std::size_t rank() const noexcept { return invariant_factors.size(); }
    /// Product of the invariant factors (the order ideal generator).
    RatPoly order() const;
};

/// Smith normal form over the Euclidean domain Q[t]; pivots of least degree.
/// The returned module is the cokernel of the matrix.
ModuleDecomposition poly_smith_normal_form(const PolyMatrix& m);

/// Bareiss elimination over Q[t].
RatPoly determinant(const PolyMatrix& m);

}  // namespace kcob
