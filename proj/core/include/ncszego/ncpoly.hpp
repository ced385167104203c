#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncszego/matrix_tuple.hpp"
#include "ncszego/types.hpp"
#include "ncszego/word.hpp"

namespace ncszego {

/* A polynomial in n noncommuting indeterminates X_1..X_n with complex
 * coefficients: a finitely supported map word -> coefficient.  Exact zero
 * coefficients are pruned on the fly, so the support iterates in graded
 * lexicographic order over genuinely present monomials.
 */
class NcPoly {
public:
    explicit NcPoly(int n_letters);

    static NcPoly zero(int n_letters) { return NcPoly(n_letters); }
    static NcPoly one(int n_letters);
    // c * X_w
    static NcPoly monomial(int n_letters, Word w, Complex c = Complex(1, 0));

    int n_letters() const { return n_letters_; }
    const std::map<Word, Complex>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // length of the largest supported word (0 for constants and zero)
    int degree() const;

    Complex coeff(const Word& w) const;
    void set_coeff(const Word& w, Complex c);

    // drop coefficients with |c| <= tol
    void prune(double tol);

    NcPoly& operator+=(const NcPoly& rhs);
    NcPoly& operator-=(const NcPoly& rhs);
    NcPoly& operator*=(Complex a);

    friend NcPoly operator+(NcPoly lhs, const NcPoly& rhs) { return lhs += rhs; }
    friend NcPoly operator-(NcPoly lhs, const NcPoly& rhs) { return lhs -= rhs; }
    friend NcPoly operator*(Complex a, NcPoly p) { return p *= a; }
    friend NcPoly operator*(NcPoly p, Complex a) { return p *= a; }
    friend bool operator==(const NcPoly& a, const NcPoly& b) = default;

private:
    int n_letters_;
    std::map<Word, Complex> coeffs_;
};

// sum a_i * p_i; all operands must share the alphabet size
NcPoly linear_combine(const std::vector<std::pair<Complex, NcPoly>>& terms);

// noncommutative product: (pq)(rho) = sum over splittings rho = sigma tau
NcPoly mul(const NcPoly& p, const NcPoly& q);

// X_k * p: prepends the letter k to every monomial
NcPoly mul_left_letter(int k, const NcPoly& p);

// p(Z) = sum c_sigma Z_sigma, with Z_empty = identity
Matrix eval_matrix(const NcPoly& p, const MatrixTuple& Z);

}  // namespace ncszego
