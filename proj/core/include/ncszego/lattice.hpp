#pragma once

#include <vector>

#include "ncszego/types.hpp"

namespace ncszego {

// Hermitian positive-definite matrix with unit diagonal: the Gram matrix of
// an ordered chain of unit vectors.  Hermitian symmetry and the diagonal are
// validated at construction; positive definiteness is checked lazily by the
// factorizations.
struct ChainMatrix {
    Matrix t;

    explicit ChainMatrix(Matrix m);
    Index size() const { return t.rows(); }
};

// The partial-correlation parameters r_{i,j} (i < j) of a chain, all of
// modulus < 1 for a positive definite chain.  rho(i,j) is the defect
// (1-|r|^2)^{1/2}.
class ChainParams {
public:
    explicit ChainParams(Matrix r);

    Index size() const { return r_.rows(); }
    Complex r(Index i, Index j) const;
    double rho(Index i, Index j) const;

private:
    Matrix r_;  // strictly upper triangular storage
};

struct LatticeResiduals {
    double res_p_split;     // last inverse-factor column against its split form
    double res_dual_split;  // first inverse-factor column against its split form
    double res_rotation;    // U J G = F
};

// Pivoted Cholesky positive-definiteness test; throws NotPositiveDefinite
// when a pivot falls below pivot_tol relative to the largest diagonal.
// Indefinite and singular inputs produce pivots <= 0; contractive parameter
// chains near the disk boundary can reach ~1e-13, so the floor sits below
// that.
void require_positive_definite(const Matrix& a, double pivot_tol = 1e-14);

// The anti-diagonal symmetry of size n.
Matrix antidiagonal(Index n);

// A = F^* F with F upper triangular, positive diagonal.
Matrix upper_cholesky(const ChainMatrix& a);
// A = G^* G with G lower triangular, positive diagonal; obtained by
// conjugating the upper factor of JAJ with the anti-diagonal symmetry.
Matrix lower_cholesky(const ChainMatrix& a);

/* Partial correlation of rows i and j of the Hermitian Gram matrix g given
 * the strictly-between indices: with M the middle block, B1 = g(i, i+1..j-1),
 * B2 = g(i+1..j-1, j),
 *
 *   r = (g(i,j) - B1 M^{-1} B2) / sqrt((g(i,i) - B1 M^{-1} B1^*)
 *                                      (g(j,j) - B2^* M^{-1} B2)).
 */
Complex partial_correlation(const Matrix& g, Index i, Index j);

// All parameters of the chain; det A = prod (1 - |r_{i,j}|^2).
ChainParams chain_params(const ChainMatrix& a);

// Generator arrays over an explicit parameter list (r_1,...,r_m):
//   row_L[t]    = r_t * prod_{s<t} rho_s
//   col_K[t]    = conj(r_t) * prod_{s>t} rho_s
//   defect_D    = upper triangular, built by bordering with -K r and rho
RowVector build_L(const std::vector<Complex>& rs);
Vector build_K(const std::vector<Complex>& rs);
Matrix build_D(const std::vector<Complex>& rs);

// The same arrays over the chain segment {r_{i,k}}_{k=i+1..j}; build_C uses
// the column family {r_{k,j}}_{k=i..j-1} weighted by the rho's into j.
RowVector build_L(const ChainParams& p, Index i, Index j);
Vector build_K(const ChainParams& p, Index i, Index j);
Vector build_C(const ChainParams& p, Index i, Index j);
Matrix build_D(const ChainParams& p, Index i, Index j);

// Last column of F^{-1} and first column of G^{-1} over the chain segment
// i..j (inclusive).
Vector P_col(const ChainMatrix& a, Index i, Index j);
Vector Psharp_col(const ChainMatrix& a, Index i, Index j);

/* Unitary built from the chain parameters by the cascade of elementary
 * rotations [[r, rho],[rho, -conj r]]: U_{j,j} = [1],
 * U_{i,j} = R(r_{i,i+1}) ... R(r_{i,j}) (U_{i+1,j} (+) 1) with the k-th
 * elementary block acting on coordinates (k-i-1, k-i).
 */
Matrix rotation_U(const ChainParams& p, Index i, Index j);

/* Residual norms of the two column recursions that split the inverse
 * Cholesky columns along the first/last chain index, and of U J G = F.
 * All three vanish for any positive definite unit-diagonal chain.
 */
LatticeResiduals verify_identities(const ChainMatrix& a);

}  // namespace ncszego
