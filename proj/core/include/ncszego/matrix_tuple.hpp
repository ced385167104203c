#pragma once

#include <vector>

#include "ncszego/types.hpp"

namespace ncszego {

// A point Z = (Z_1,...,Z_N) of the noncommutative ball: N square complex
// matrices of a common size.  Membership in the open ball is a property
// (see ball_norm), not a constructor invariant.
struct MatrixTuple {
    std::vector<Matrix> matrices;

    MatrixTuple() = default;
    explicit MatrixTuple(std::vector<Matrix> ms);

    int n_letters() const { return static_cast<int>(matrices.size()); }
    Index dim() const { return matrices.empty() ? 0 : matrices.front().rows(); }

    static MatrixTuple scalars(const std::vector<Complex>& zs);
    static MatrixTuple zeros(int n_letters, Index dim);
};

}  // namespace ncszego
