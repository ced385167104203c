#pragma once

#include <map>
#include <vector>

#include "ncszego/ncpoly.hpp"
#include "ncszego/types.hpp"
#include "ncszego/word.hpp"

namespace ncszego {

/* A stationary positive-definite kernel K on words, presented by its
 * moments s_sigma = K(empty, sigma).  Evaluation strips common first
 * letters:
 *
 *   K(i sigma', i tau') = K(sigma', tau')
 *   K(i sigma', j tau') = 0                for i != j
 *   K(empty, rho) = s_rho,  K(rho, empty) = conj(s_rho),  s_empty = 1.
 *
 * Moments not present in the map are zero; the empty word always has
 * moment 1 and is not stored.
 */
class MomentSpec {
public:
    MomentSpec(int n_letters, std::map<Word, Complex> s);

    int n_letters() const { return n_letters_; }
    const std::map<Word, Complex>& moments() const { return s_; }
    Complex moment(const Word& w) const;

private:
    int n_letters_;
    std::map<Word, Complex> s_;
};

// The Schur parameters gamma_sigma of a stationary kernel: one contractive
// complex number per nonempty word, gamma_empty = 0.  d_sigma denotes the
// defect (1-|gamma|^2)^{1/2}.
class ParamSpec {
public:
    ParamSpec(int n_letters, std::map<Word, Complex> gamma);

    int n_letters() const { return n_letters_; }
    const std::map<Word, Complex>& gammas() const { return gamma_; }
    Complex gamma(const Word& w) const;
    double d(const Word& w) const;

private:
    int n_letters_;
    std::map<Word, Complex> gamma_;
};

Complex kernel_eval(const MomentSpec& m, const Word& sigma, const Word& tau);

// Hermitian Gram matrix [K(ws[a], ws[b])] over an ascending word list.
Matrix gram(const MomentSpec& m, const std::vector<Word>& ws);

// <P,Q>_K = sum K(sigma,tau) q_tau conj(p_sigma)
Complex inner_product(const MomentSpec& m, const NcPoly& p, const NcPoly& q);

// Parameters of the kernel: partial correlations of (empty, sigma) in the
// graded-lex chain of all words up to max_len.  Throws NotPositiveDefinite
// for an invalid moment set.
ParamSpec extract_params(const MomentSpec& m, int max_len);

// The unique stationary kernel with the given parameters, solved level by
// level; inverse of extract_params.
MomentSpec synthesize_moments(const ParamSpec& p, int max_len);

// Chain parameter of an ordered pair of words, by the same stripping rules
// as the kernel: gamma_{i s', i t'} = gamma_{s', t'}, zero when the first
// letters differ, gamma_{empty, t} = gamma_t, gamma_{s, s} = 0.
Complex pair_gamma(const ParamSpec& p, const Word& sigma, const Word& tau);

// det of the Gram matrix over all words <= sigma, as the product of
// (1 - |gamma_{s',t'}|^2) over ordered pairs s' < t' <= sigma.
double det_D(const ParamSpec& p, const Word& sigma);

}  // namespace ncszego
