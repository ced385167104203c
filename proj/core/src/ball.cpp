#include "ncszego/ball.hpp"

#include <cmath>
#include <stdexcept>

#include "ncszego/szego.hpp"

namespace ncszego {

namespace {

constexpr int kMaxLevels = 60;

Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

double spectral_norm(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

}  // namespace

double ball_norm(const MatrixTuple& z) {
    const Index d = z.dim();
    Matrix s = Matrix::Zero(d, d);
    for (const Matrix& m : z.matrices) s += m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(s));
    return std::sqrt(std::max(eig.eigenvalues().maxCoeff(), 0.0));
}

Matrix E_trunc(const MatrixTuple& z, int level) {
    if (level < 0) throw std::invalid_argument("negative truncation level");
    const Index d = z.dim();
    const int n = z.n_letters();
    const Index total = static_cast<Index>(count_words(n, level)) * d;
    Matrix row(d, total);
    std::vector<Matrix> cur{Matrix::Identity(d, d)};
    Index off = 0;
    row.middleCols(off, d) = cur.front();
    off += d;
    for (int k = 1; k <= level; ++k) {
        std::vector<Matrix> nxt;
        nxt.reserve(cur.size() * static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            for (const Matrix& b : cur) nxt.push_back(z.matrices[static_cast<std::size_t>(a)] * b);
        for (const Matrix& b : nxt) {
            row.middleCols(off, d) = b;
            off += d;
        }
        cur = std::move(nxt);
    }
    return row;
}

Matrix weighted_kernel(const MatrixTuple& z, const MatrixTuple& w, const Matrix& s, double tol) {
    if (z.n_letters() != w.n_letters())
        throw std::invalid_argument("tuples over different alphabets");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const double a = ball_norm(z);
    const double b = ball_norm(w);
    const double ab = a * b;
    if (ab >= 1.0) throw NotInBall("product of ball norms is >= 1");
    const double smax = s.norm();

    Matrix total = s;
    Matrix term = s;
    for (int k = 1; k <= kMaxLevels; ++k) {
        Matrix nxt = Matrix::Zero(s.rows(), s.cols());
        for (std::size_t idx = 0; idx < z.matrices.size(); ++idx)
            nxt += z.matrices[idx] * term * w.matrices[idx].adjoint();
        term = std::move(nxt);
        total += term;
        const double tail = std::pow(ab, k + 1) / (1.0 - ab) * smax;
        if (tail < tol) return total;
    }
    throw ToleranceUnreachable("weighted kernel tail bound above tolerance at level cap");
}

CdReport cd_check(const ParamSpec& p, const MatrixTuple& z, const MatrixTuple& w, int n,
                  double tol) {
    if (n < 1) throw std::domain_error("cd_check needs n >= 1");
    if (z.n_letters() != p.n_letters() || w.n_letters() != p.n_letters())
        throw std::invalid_argument("tuple arity does not match the parameter alphabet");
    const SzegoFamily fam = szego_recursion(p, n);
    const Index d = z.dim();
    const Word top = sigma_max(p.n_letters(), n);

    const Matrix sharp_z = eval_matrix(fam.phi_sharp.at(top), z);
    const Matrix sharp_w = eval_matrix(fam.phi_sharp.at(top), w);
    Matrix s = sharp_z * sharp_w.adjoint();
    for (const Word& t : words_of_length(p.n_letters(), n))
        s -= eval_matrix(fam.phi.at(t), z) * eval_matrix(fam.phi.at(t), w).adjoint();

    const Matrix lhs = weighted_kernel(z, w, s, tol);

    Matrix rhs = Matrix::Zero(d, d);
    for (int k = 0; k < n; ++k)
        for (const Word& t : words_of_length(p.n_letters(), k))
            rhs += eval_matrix(fam.phi.at(t), z) * eval_matrix(fam.phi.at(t), w).adjoint();

    return CdReport{lhs, rhs, (lhs - rhs).norm()};
}

std::vector<MatrixTuple> separating_family(int n_letters, const Word& sigma, Index base_dim) {
    if (sigma.empty()) throw std::domain_error("separating family needs a nonempty word");
    if (base_dim < 1) throw std::invalid_argument("base dimension must be >= 1");
    for (int l : sigma.letters)
        if (l < 1 || l > n_letters) throw std::invalid_argument("word letter out of range");

    const int k = static_cast<int>(sigma.length());
    const Index dim = 2 * k * base_dim;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    // block matrix unit e_{ij} (x) I, with 1-based block indices
    auto unit = [&](int i, int j) {
        Matrix m = Matrix::Zero(dim, dim);
        m.block((i - 1) * base_dim, (j - 1) * base_dim, base_dim, base_dim) =
            Matrix::Identity(base_dim, base_dim);
        return m;
    };

    std::vector<MatrixTuple> out;
    out.reserve(static_cast<std::size_t>(2 * k));
    // first half: step-up adjoints selected by the reversed letters
    for (int p = 1; p <= k; ++p) {
        std::vector<Matrix> ws;
        for (int s = 1; s <= n_letters; ++s) {
            Matrix wstar = Matrix::Zero(dim, dim);
            for (int l = 1; l <= k; ++l)
                if (sigma.letters[static_cast<std::size_t>(k - l)] == s)
                    wstar += unit(l + p - 1, l + p);
            ws.push_back(inv_sqrt2 * wstar.adjoint());
        }
        out.emplace_back(std::move(ws));
    }
    // second half: step-down adjoints selected by the letters in order
    for (int q = 1; q <= k; ++q) {
        std::vector<Matrix> ws;
        for (int s = 1; s <= n_letters; ++s) {
            Matrix wstar = Matrix::Zero(dim, dim);
            for (int l = 1; l <= k; ++l)
                if (sigma.letters[static_cast<std::size_t>(l - 1)] == s)
                    wstar += unit(l + q, l + q - 1);
            ws.push_back(inv_sqrt2 * wstar.adjoint());
        }
        out.emplace_back(std::move(ws));
    }
    return out;
}

TriangularTruncation toeplitz_Tf(const NcPoly& f, int level_count) {
    if (level_count < 0) throw std::invalid_argument("negative level count");
    const int n = f.n_letters();
    const Index total = static_cast<Index>(count_words(n, level_count));
    Matrix t = Matrix::Zero(total, total);
    // T[sigma, tau] = c_{sigma''} whenever sigma = tau sigma''
    for (const auto& [w, c] : f.coeffs()) {
        if (static_cast<int>(w.length()) > level_count) continue;  // truncated away
        for (int j = 0; static_cast<int>(w.length()) + j <= level_count; ++j) {
            for (const Word& tau : words_of_length(n, j)) {
                const Word sigma = concat(tau, w);
                t(static_cast<Index>(word_index(sigma, n)), static_cast<Index>(word_index(tau, n))) = c;
            }
        }
    }
    return TriangularTruncation{n, level_count, std::move(t)};
}

namespace {

// left-creation isometry F_k over levels 0..L
Matrix creation_isometry(int k, int n, int level_count) {
    const Index total = static_cast<Index>(count_words(n, level_count));
    Matrix f = Matrix::Zero(total, total);
    for (int lvl = 0; lvl < level_count; ++lvl)
        for (const Word& w : words_of_length(n, lvl)) {
            Word kw;
            kw.letters.reserve(w.length() + 1);
            kw.letters.push_back(k);
            kw.letters.insert(kw.letters.end(), w.letters.begin(), w.letters.end());
            f(static_cast<Index>(word_index(kw, n)), static_cast<Index>(word_index(w, n))) = 1.0;
        }
    return f;
}

}  // namespace

double displacement_residual(const NcPoly& f, int level_count) {
    if (level_count < 1) throw std::invalid_argument("displacement needs at least one level");
    const int n = f.n_letters();
    const TriangularTruncation tt = toeplitz_Tf(f, level_count);
    const Index total = tt.matrix.rows();

    const Matrix a = Matrix::Identity(total, total) - tt.matrix * tt.matrix.adjoint();
    Matrix lhs = a;
    for (int k = 1; k <= n; ++k) {
        const Matrix fk = creation_isometry(k, n, level_count);
        lhs -= fk * a * fk.adjoint();
    }
    Matrix g = Matrix::Zero(total, 2);
    g(0, 0) = 1.0;
    g.col(1) = tt.matrix.col(0);
    Matrix j = Matrix::Zero(2, 2);
    j(0, 0) = 1.0;
    j(1, 1) = -1.0;
    lhs -= g * j * g.adjoint();

    const Index exact = static_cast<Index>(count_words(n, level_count - 1));
    return lhs.topLeftCorner(exact, exact).norm();
}

double schur_truncation_norm(const NcPoly& f, int level_count) {
    return spectral_norm(toeplitz_Tf(f, level_count).matrix);
}

double cf_gram(const NcPoly& f, const std::vector<MatrixTuple>& points, double tol) {
    if (points.empty()) throw std::invalid_argument("cf_gram needs at least one point");
    const Index d = points.front().dim();
    const Index n = static_cast<Index>(points.size());
    std::vector<Matrix> values;
    values.reserve(points.size());
    for (const MatrixTuple& z : points) {
        if (z.dim() != d) throw std::invalid_argument("points of mixed dimension");
        values.push_back(eval_series(f, z));
    }
    Matrix big(n * d, n * d);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            const Matrix s = Matrix::Identity(d, d) -
                             values[static_cast<std::size_t>(a)] *
                                 values[static_cast<std::size_t>(b)].adjoint();
            big.block(a * d, b * d, d, d) = weighted_kernel(
                points[static_cast<std::size_t>(a)], points[static_cast<std::size_t>(b)], s, tol);
        }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(big));
    return eig.eigenvalues().minCoeff();
}

Matrix eval_series(const NcPoly& f, const MatrixTuple& z) {
    if (z.n_letters() != f.n_letters())
        throw std::invalid_argument("matrix tuple arity does not match the alphabet");
    if (ball_norm(z) >= 1.0) throw NotInBall("evaluation point outside the open ball");
    const Index d = z.dim();
    const int level = f.degree();
    const Matrix row = E_trunc(z, level);
    Matrix col = Matrix::Zero(row.cols(), d);
    for (const auto& [w, c] : f.coeffs())
        col.block(static_cast<Index>(word_index(w, f.n_letters())) * d, 0, d, d) =
            c * Matrix::Identity(d, d);
    return row * col;
}

}  // namespace ncszego
