#include "ncszego/ncpoly.hpp"

#include <stdexcept>

namespace ncszego {

MatrixTuple::MatrixTuple(std::vector<Matrix> ms) : matrices(std::move(ms)) {
    if (matrices.empty()) throw std::invalid_argument("matrix tuple needs at least one matrix");
    const Index d = matrices.front().rows();
    for (const Matrix& m : matrices)
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("matrix tuple entries must be square of a common size");
}

MatrixTuple MatrixTuple::scalars(const std::vector<Complex>& zs) {
    std::vector<Matrix> ms;
    ms.reserve(zs.size());
    for (Complex z : zs) {
        Matrix m(1, 1);
        m(0, 0) = z;
        ms.push_back(m);
    }
    return MatrixTuple(std::move(ms));
}

MatrixTuple MatrixTuple::zeros(int n_letters, Index dim) {
    return MatrixTuple(std::vector<Matrix>(static_cast<std::size_t>(n_letters), Matrix::Zero(dim, dim)));
}

namespace {

void check_same_alphabet(const NcPoly& p, const NcPoly& q) {
    if (p.n_letters() != q.n_letters())
        throw std::invalid_argument("polynomials over different alphabets");
}

}  // namespace

NcPoly::NcPoly(int n_letters) : n_letters_(n_letters) {
    if (n_letters < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

NcPoly NcPoly::one(int n_letters) { return monomial(n_letters, Word{}); }

NcPoly NcPoly::monomial(int n_letters, Word w, Complex c) {
    NcPoly p(n_letters);
    p.set_coeff(std::move(w), c);
    return p;
}

int NcPoly::degree() const {
    return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.rbegin()->first.length());
}

Complex NcPoly::coeff(const Word& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Complex(0, 0) : it->second;
}

void NcPoly::set_coeff(const Word& w, Complex c) {
    for (int l : w.letters)
        if (l < 1 || l > n_letters_) throw std::invalid_argument("monomial letter out of range");
    if (c == Complex(0, 0))
        coeffs_.erase(w);
    else
        coeffs_[w] = c;
}

void NcPoly::prune(double tol) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (std::abs(it->second) <= tol)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
    check_same_alphabet(*this, rhs);
    for (const auto& [w, c] : rhs.coeffs_) {
        Complex v = coeff(w) + c;
        if (v == Complex(0, 0))
            coeffs_.erase(w);
        else
            coeffs_[w] = v;
    }
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
    check_same_alphabet(*this, rhs);
    for (const auto& [w, c] : rhs.coeffs_) {
        Complex v = coeff(w) - c;
        if (v == Complex(0, 0))
            coeffs_.erase(w);
        else
            coeffs_[w] = v;
    }
    return *this;
}

NcPoly& NcPoly::operator*=(Complex a) {
    if (a == Complex(0, 0)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [w, c] : coeffs_) c *= a;
    return *this;
}

NcPoly linear_combine(const std::vector<std::pair<Complex, NcPoly>>& terms) {
    if (terms.empty()) throw std::invalid_argument("linear_combine of no terms");
    NcPoly out(terms.front().second.n_letters());
    for (const auto& [a, p] : terms) {
        check_same_alphabet(out, p);
        for (const auto& [w, c] : p.coeffs()) {
            Complex v = out.coeff(w) + a * c;
            out.set_coeff(w, v);
        }
    }
    return out;
}

NcPoly mul(const NcPoly& p, const NcPoly& q) {
    check_same_alphabet(p, q);
    NcPoly out(p.n_letters());
    for (const auto& [u, a] : p.coeffs())
        for (const auto& [v, b] : q.coeffs()) {
            Word w = concat(u, v);
            out.set_coeff(w, out.coeff(w) + a * b);
        }
    return out;
}

NcPoly mul_left_letter(int k, const NcPoly& p) {
    if (k < 1 || k > p.n_letters()) throw std::invalid_argument("letter out of range");
    NcPoly out(p.n_letters());
    for (const auto& [w, c] : p.coeffs()) {
        Word kw;
        kw.letters.reserve(w.length() + 1);
        kw.letters.push_back(k);
        kw.letters.insert(kw.letters.end(), w.letters.begin(), w.letters.end());
        out.set_coeff(std::move(kw), c);
    }
    return out;
}

Matrix eval_matrix(const NcPoly& p, const MatrixTuple& Z) {
    if (Z.n_letters() != p.n_letters())
        throw std::invalid_argument("matrix tuple arity does not match the alphabet");
    const Index d = Z.dim();
    Matrix out = Matrix::Zero(d, d);
    for (const auto& [w, c] : p.coeffs()) {
        Matrix m = Matrix::Identity(d, d);
        for (int l : w.letters) m = m * Z.matrices[static_cast<std::size_t>(l - 1)];
        out += c * m;
    }
    return out;
}

}  // namespace ncszego
