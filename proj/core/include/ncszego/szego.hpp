#pragma once

#include <map>

#include "ncszego/kernel.hpp"
#include "ncszego/ncpoly.hpp"

namespace ncszego {

/* The orthonormal polynomials phi_sigma of a stationary kernel, together
 * with the dual family phi#_sigma that drives the recursions.  phi_empty =
 * phi#_empty = 1; deg phi_sigma = |sigma| with highest word sigma and a
 * real positive leading coefficient.
 */
struct SzegoFamily {
    int n_letters;
    int max_len;
    std::map<Word, NcPoly> phi;
    std::map<Word, NcPoly> phi_sharp;
};

/* Elementwise recursion over all words in graded-lex order.  For a word
 * w = k sigma (k the first letter, sigma the remaining suffix), with
 * w-1 the graded-lex predecessor of w:
 *
 *   phi_w  = (X_k phi_sigma - gamma_w phi#_{w-1}) / d_w
 *   phi#_w = (-conj(gamma_w) X_k phi_sigma + phi#_{w-1}) / d_w
 */
SzegoFamily szego_recursion(const ParamSpec& p, int max_len);

/* Determinant route: phi_sigma = det of the Gram rows over words < sigma
 * bordered by the monomial row [1 X_1 ... X_sigma], expanded by cofactors
 * of the monomial row and scaled by 1/sqrt(D_{sigma-1} D_sigma).
 */
NcPoly det_formula_poly(const MomentSpec& m, const Word& sigma);

// Leading coefficient of phi_sigma: the product of 1/d over the suffixes
// of sigma (including sigma itself).
double leading_coeff(const ParamSpec& p, const Word& sigma);

// Level-n generator data: row g_n and upper-triangular H_n built from the
// level-n parameters in lexicographic order.
struct GradedData {
    RowVector g;
    Matrix h;
};
GradedData graded_data(const ParamSpec& p, int level);

/* Graded matrix recursion: one level at a time,
 *
 *   [phi_{|s|=k}] = ([X_1..X_N][phi_{|s|=k-1}]^{(+)N} - phi#_prev g_k) H_k^{-1}
 *
 * where phi#_prev is the dual polynomial at the largest word of length
 * k-1.  The dual at the largest word of length k comes from the matching
 * graded formula; duals at intermediate words are filled elementwise.
 */
SzegoFamily graded_recursion(const ParamSpec& p, int max_len);

// max |<phi_sigma, phi_tau> - delta| over all word pairs up to max_len,
// against the synthesized moments of p.
double orthonormality_residual(const ParamSpec& p, int max_len);

// Same residual for an already-built family against explicit moments.
double family_gram_residual(const SzegoFamily& fam, const MomentSpec& m);

}  // namespace ncszego
