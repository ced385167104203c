#include "ncszego/szego.hpp"

#include <cmath>
#include <stdexcept>

#include "ncszego/lattice.hpp"

namespace ncszego {

SzegoFamily szego_recursion(const ParamSpec& p, int max_len) {
    if (max_len < 0) throw std::invalid_argument("negative max_len");
    const int n = p.n_letters();
    SzegoFamily fam{n, max_len, {}, {}};
    fam.phi.insert_or_assign(Word{}, NcPoly::one(n));
    fam.phi_sharp.insert_or_assign(Word{}, NcPoly::one(n));
    const auto ws = enumerate_words(n, max_len);
    for (std::size_t idx = 1; idx < ws.size(); ++idx) {
        const Word& w = ws[idx];
        const int k = w.letters.front();
        const Word suffix(std::vector<int>(w.letters.begin() + 1, w.letters.end()));
        const Word& pred = ws[idx - 1];
        const Complex g = p.gamma(w);
        const double d = p.d(w);
        const NcPoly shifted = mul_left_letter(k, fam.phi.at(suffix));
        const NcPoly& sharp_pred = fam.phi_sharp.at(pred);
        fam.phi.insert_or_assign(w, (1.0 / d) * (shifted - g * sharp_pred));
        fam.phi_sharp.insert_or_assign(w, (1.0 / d) * (-std::conj(g) * shifted + sharp_pred));
    }
    return fam;
}

namespace {

double hermitian_det(const Matrix& a) {
    if (a.rows() == 0) return 1.0;
    return Eigen::PartialPivLU<Matrix>(a).determinant().real();
}

}  // namespace

NcPoly det_formula_poly(const MomentSpec& m, const Word& sigma) {
    const int n = m.n_letters();
    if (sigma.empty()) return NcPoly::one(n);
    auto chain = enumerate_words(n, static_cast<int>(sigma.length()));
    chain.resize(word_index(sigma, n) + 1);
    const Index rows = static_cast<Index>(chain.size()) - 1;  // words strictly before sigma
    const Matrix g = gram(m, chain);
    require_positive_definite(g);

    const double d_sigma = hermitian_det(g);
    const double d_pred = hermitian_det(g.topLeftCorner(rows, rows));
    const double scale = 1.0 / std::sqrt(d_pred * d_sigma);

    NcPoly out(n);
    const Matrix top = g.topRows(rows);
    for (Index j = 0; j <= rows; ++j) {
        // minor of the bordered matrix obtained by deleting the monomial row
        // and column j
        Matrix minor(rows, rows);
        for (Index c = 0, dst = 0; c <= rows; ++c) {
            if (c == j) continue;
            minor.col(dst++) = top.col(c);
        }
        const Complex det = rows == 0 ? Complex(1, 0)
                                      : Eigen::PartialPivLU<Matrix>(minor).determinant();
        const double sign = ((rows + j) % 2 == 0) ? 1.0 : -1.0;
        out.set_coeff(chain[static_cast<std::size_t>(j)], sign * scale * det);
    }
    return out;
}

double leading_coeff(const ParamSpec& p, const Word& sigma) {
    if (sigma.empty()) throw std::domain_error("leading_coeff needs a nonempty word");
    double prod = 1.0;
    for (std::size_t j = 0; j < sigma.length(); ++j) {
        const Word suffix(std::vector<int>(sigma.letters.begin() + static_cast<long>(j),
                                           sigma.letters.end()));
        prod *= p.d(suffix);
    }
    return 1.0 / prod;
}

GradedData graded_data(const ParamSpec& p, int level) {
    if (level < 1) throw std::invalid_argument("graded data needs level >= 1");
    std::vector<Complex> rs;
    for (const Word& w : words_of_length(p.n_letters(), level)) rs.push_back(p.gamma(w));
    return GradedData{build_L(rs), build_D(rs)};
}

SzegoFamily graded_recursion(const ParamSpec& p, int max_len) {
    if (max_len < 0) throw std::invalid_argument("negative max_len");
    const int n = p.n_letters();
    SzegoFamily fam{n, max_len, {}, {}};
    fam.phi.insert_or_assign(Word{}, NcPoly::one(n));
    fam.phi_sharp.insert_or_assign(Word{}, NcPoly::one(n));

    Word prev_last{};  // largest word of the previous level
    for (int k = 1; k <= max_len; ++k) {
        const auto level = words_of_length(n, k);
        const Index m = static_cast<Index>(level.size());
        const GradedData gd = graded_data(p, k);
        const Matrix hinv = gd.h.triangularView<Eigen::Upper>().solve(Matrix::Identity(m, m));
        const NcPoly& sharp_prev = fam.phi_sharp.at(prev_last);

        // row entries X_a phi_suffix - phi#_prev * g_k
        std::vector<NcPoly> shifted, row;
        shifted.reserve(level.size());
        row.reserve(level.size());
        for (Index t = 0; t < m; ++t) {
            const Word& w = level[static_cast<std::size_t>(t)];
            const Word suffix(std::vector<int>(w.letters.begin() + 1, w.letters.end()));
            shifted.push_back(mul_left_letter(w.letters.front(), fam.phi.at(suffix)));
            row.push_back(shifted.back() - gd.g(t) * sharp_prev);
        }
        for (Index j = 0; j < m; ++j) {
            NcPoly phi(n);
            for (Index t = 0; t < m; ++t) phi += hinv(t, j) * row[static_cast<std::size_t>(t)];
            fam.phi.insert_or_assign(level[static_cast<std::size_t>(j)], std::move(phi));
        }

        // duals: elementwise at intermediate words, graded formula at the top
        for (Index j = 0; j + 1 < m; ++j) {
            const Word& w = level[static_cast<std::size_t>(j)];
            const Word& pred = (j == 0) ? prev_last : level[static_cast<std::size_t>(j - 1)];
            const Complex g = p.gamma(w);
            fam.phi_sharp.insert_or_assign(
                w, (1.0 / p.d(w)) * (-std::conj(g) * shifted[static_cast<std::size_t>(j)] +
                                     fam.phi_sharp.at(pred)));
        }
        double dprod = 1.0;
        for (const Word& w : level) dprod *= p.d(w);
        NcPoly acc(n);
        for (Index t = 0; t < m; ++t)
            acc += std::conj(gd.g(t)) * shifted[static_cast<std::size_t>(t)];
        fam.phi_sharp.insert_or_assign(level.back(), (1.0 / dprod) * (sharp_prev - acc));

        prev_last = level.back();
    }
    return fam;
}

double family_gram_residual(const SzegoFamily& fam, const MomentSpec& m) {
    const auto ws = enumerate_words(fam.n_letters, fam.max_len);
    const Index count = static_cast<Index>(ws.size());
    const Matrix g = gram(m, ws);
    Matrix coef = Matrix::Zero(count, count);
    for (Index i = 0; i < count; ++i) {
        const NcPoly& phi = fam.phi.at(ws[static_cast<std::size_t>(i)]);
        for (const auto& [w, c] : phi.coeffs())
            coef(i, static_cast<Index>(word_index(w, fam.n_letters))) = c;
    }
    const Matrix overlap = coef.conjugate() * g * coef.transpose();
    return (overlap - Matrix::Identity(count, count)).cwiseAbs().maxCoeff();
}

double orthonormality_residual(const ParamSpec& p, int max_len) {
    return family_gram_residual(szego_recursion(p, max_len), synthesize_moments(p, max_len));
}

}  // namespace ncszego
