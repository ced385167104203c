#pragma once

#include <vector>

#include "ncszego/kernel.hpp"
#include "ncszego/matrix_tuple.hpp"
#include "ncszego/ncpoly.hpp"
#include "ncszego/types.hpp"

namespace ncszego {

// ||sum Z_k Z_k^*||^{1/2}; Z lies in the open ball iff this is < 1.
double ball_norm(const MatrixTuple& z);

// Row of word products [Z_sigma] over all |sigma| <= level, graded-lex
// order, Z_empty = I: a d x (d * count) block row.
Matrix E_trunc(const MatrixTuple& z, int level);

/* sum_sigma Z_sigma S W_sigma^* with a constant diagonal weight S,
 * truncated adaptively: the level-k term is Psi^k(S) for Psi(M) = sum_a
 * Z_a M W_a^*, and the tail after level k is bounded by
 * (ab)^{k+1}/(1-ab) ||S|| with a = ball_norm(Z), b = ball_norm(W).
 * Throws NotInBall when ab >= 1 and ToleranceUnreachable past level 60.
 */
Matrix weighted_kernel(const MatrixTuple& z, const MatrixTuple& w, const Matrix& s, double tol);

struct CdReport {
    Matrix lhs;
    Matrix rhs;
    double residual;
};

/* Finite reproducing-kernel identity: the weighted kernel with weight
 * phi#_{max}(Z) phi#_{max}(W)^* - sum_{|t|=n} phi_t(Z) phi_t(W)^* must
 * equal sum_{|t|<n} phi_t(Z) phi_t(W)^*.
 */
CdReport cd_check(const ParamSpec& p, const MatrixTuple& z, const MatrixTuple& w, int n,
                  double tol);

/* For a nonempty word sigma, 2|sigma| ball points over a space of dimension
 * 2|sigma|*base_dim whose word products vanish at every other word of the
 * same length while the products at sigma stack to a full-rank block row.
 * Entries are 0 or 1/sqrt(2) placed on block matrix units.
 */
std::vector<MatrixTuple> separating_family(int n_letters, const Word& sigma, Index base_dim);

// Lower-triangular truncation of the tensor-algebra operator of f over
// levels 0..level_count, block (i,j) the N-fold diagonal refinement of
// block (i-1, j-1) and column 0 carrying the coefficients of f.
struct TriangularTruncation {
    int n_letters;
    int level_count;
    Matrix matrix;
};
TriangularTruncation toeplitz_Tf(const NcPoly& f, int level_count);

/* Residual of A - sum_k F_k A F_k^* = G J G^* on levels 0..L-1 for
 * A = I - T T^*, T the truncation of f at level L, F_k the left-creation
 * isometries, G = [vacuum | column 0 of T] and J = diag(1,-1).
 */
double displacement_residual(const NcPoly& f, int level_count);

// Spectral norm of the truncation; nondecreasing in the level, > 1
// certifies that f is not in the Schur class.
double schur_truncation_norm(const NcPoly& f, int level_count);

// Minimum eigenvalue of the block Gram matrix of the kernel
// E(Z) diag(I - f(Z) f(W)^*) E(W)^* over the given ball points.
double cf_gram(const NcPoly& f, const std::vector<MatrixTuple>& points, double tol);

// f(Z) through the truncated row E(Z) and the coefficient column of f;
// agrees with eval_matrix.
Matrix eval_series(const NcPoly& f, const MatrixTuple& z);

}  // namespace ncszego
