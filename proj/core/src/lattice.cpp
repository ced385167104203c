#include "ncszego/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace ncszego {

namespace {

double defect(Complex r) {
    double m = std::abs(r);
    if (m >= 1.0) throw NotPositiveDefinite("chain parameter has modulus >= 1");
    return std::sqrt(1.0 - m * m);
}

// Lower Cholesky A = L L^* with explicit pivot control.
Matrix cholesky_lower(const Matrix& a, double pivot_tol = 1e-14) {
    const Index n = a.rows();
    Matrix L = Matrix::Zero(n, n);
    const double scale = a.diagonal().real().maxCoeff();
    for (Index j = 0; j < n; ++j) {
        Complex d = a(j, j);
        for (Index k = 0; k < j; ++k) d -= L(j, k) * std::conj(L(j, k));
        const double dj = d.real();
        if (dj <= pivot_tol * scale)
            throw NotPositiveDefinite("Cholesky pivot <= tolerance at index " + std::to_string(j));
        const double lj = std::sqrt(dj);
        L(j, j) = lj;
        for (Index i = j + 1; i < n; ++i) {
            Complex s = a(i, j);
            for (Index k = 0; k < j; ++k) s -= L(i, k) * std::conj(L(j, k));
            L(i, j) = s / lj;
        }
    }
    return L;
}

Matrix upper_factor(const Matrix& a) { return cholesky_lower(a).adjoint(); }

Matrix lower_factor(const Matrix& a) {
    const Matrix j = antidiagonal(a.rows());
    return j * upper_factor(j * a * j) * j;
}

}  // namespace

ChainMatrix::ChainMatrix(Matrix m) : t(std::move(m)) {
    if (t.rows() != t.cols() || t.rows() < 1)
        throw std::invalid_argument("chain matrix must be square and nonempty");
    if ((t - t.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("chain matrix must be Hermitian");
    if ((t.diagonal() - Vector::Ones(t.rows())).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("chain matrix must have unit diagonal");
}

ChainParams::ChainParams(Matrix r) : r_(std::move(r)) {
    if (r_.rows() != r_.cols()) throw std::invalid_argument("parameter table must be square");
}

Complex ChainParams::r(Index i, Index j) const {
    if (i < 0 || j >= size() || i >= j) throw std::domain_error("chain parameter needs i < j");
    return r_(i, j);
}

double ChainParams::rho(Index i, Index j) const { return defect(r(i, j)); }

void require_positive_definite(const Matrix& a, double pivot_tol) {
    // diagonal-pivoted outer-product Cholesky; only the pivots matter
    const Index n = a.rows();
    Matrix w = a;
    const double scale = std::max(w.diagonal().real().maxCoeff(), 1.0);
    std::vector<Index> perm(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (Index step = 0; step < n; ++step) {
        Index piv = step;
        for (Index i = step + 1; i < n; ++i)
            if (w(i, i).real() > w(piv, piv).real()) piv = i;
        if (piv != step) {
            w.row(step).swap(w.row(piv));
            w.col(step).swap(w.col(piv));
        }
        const double d = w(step, step).real();
        if (d <= pivot_tol * scale)
            throw NotPositiveDefinite("pivoted Cholesky pivot <= tolerance at step " +
                                      std::to_string(step));
        const Index m = n - step - 1;
        if (m > 0) {
            Vector c = w.col(step).segment(step + 1, m);
            w.block(step + 1, step + 1, m, m) -= c * c.adjoint() / d;
        }
    }
}

Matrix antidiagonal(Index n) {
    Matrix j = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
    return j;
}

Matrix upper_cholesky(const ChainMatrix& a) { return upper_factor(a.t); }

Matrix lower_cholesky(const ChainMatrix& a) { return lower_factor(a.t); }

Complex partial_correlation(const Matrix& g, Index i, Index j) {
    if (i >= j) throw std::domain_error("partial correlation needs i < j");
    if (j == i + 1) return g(i, j) / std::sqrt(g(i, i).real() * g(j, j).real());
    const Index m = j - i - 1;
    const Matrix mid = g.block(i + 1, i + 1, m, m);
    const RowVector b1 = g.row(i).segment(i + 1, m);
    const Vector b2 = g.col(j).segment(i + 1, m);
    Eigen::LDLT<Matrix> ldlt(mid);
    if (ldlt.info() != Eigen::Success)
        throw NotPositiveDefinite("middle block is not positive definite");
    const Vector x2 = ldlt.solve(b2);
    const Vector x1 = ldlt.solve(b1.adjoint());
    const Complex c = g(i, j) - (b1 * x2).value();
    const double vi = (g(i, i) - (b1 * x1).value()).real();
    const double vj = (g(j, j) - b2.dot(x2)).real();
    if (vi <= 0.0 || vj <= 0.0)
        throw NotPositiveDefinite("nonpositive conditional variance in partial correlation");
    return c / std::sqrt(vi * vj);
}

ChainParams chain_params(const ChainMatrix& a) {
    require_positive_definite(a.t);
    const Index n = a.size();
    Matrix r = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) r(i, j) = partial_correlation(a.t, i, j);
    return ChainParams(std::move(r));
}

RowVector build_L(const std::vector<Complex>& rs) {
    RowVector out(static_cast<Index>(rs.size()));
    double pref = 1.0;
    for (std::size_t t = 0; t < rs.size(); ++t) {
        out(static_cast<Index>(t)) = pref * rs[t];
        pref *= defect(rs[t]);
    }
    return out;
}

Vector build_K(const std::vector<Complex>& rs) {
    const Index m = static_cast<Index>(rs.size());
    Vector out(m);
    double suff = 1.0;
    for (Index t = m - 1; t >= 0; --t) {
        out(t) = std::conj(rs[static_cast<std::size_t>(t)]) * suff;
        suff *= defect(rs[static_cast<std::size_t>(t)]);
    }
    return out;
}

Matrix build_D(const std::vector<Complex>& rs) {
    if (rs.empty()) throw std::invalid_argument("defect matrix of an empty parameter list");
    Matrix d(1, 1);
    d(0, 0) = defect(rs[0]);
    for (std::size_t t = 1; t < rs.size(); ++t) {
        const Index m = d.rows();
        const Vector k = build_K(std::vector<Complex>(rs.begin(), rs.begin() + static_cast<long>(t)));
        Matrix nd = Matrix::Zero(m + 1, m + 1);
        nd.topLeftCorner(m, m) = d;
        nd.col(m).head(m) = -k * rs[t];
        nd(m, m) = defect(rs[t]);
        d = std::move(nd);
    }
    return d;
}

namespace {

std::vector<Complex> segment_params(const ChainParams& p, Index i, Index j) {
    if (i >= j) throw std::domain_error("chain segment needs i < j");
    std::vector<Complex> rs;
    rs.reserve(static_cast<std::size_t>(j - i));
    for (Index k = i + 1; k <= j; ++k) rs.push_back(p.r(i, k));
    return rs;
}

}  // namespace

RowVector build_L(const ChainParams& p, Index i, Index j) { return build_L(segment_params(p, i, j)); }

Vector build_K(const ChainParams& p, Index i, Index j) { return build_K(segment_params(p, i, j)); }

Vector build_C(const ChainParams& p, Index i, Index j) {
    if (i >= j) throw std::domain_error("chain segment needs i < j");
    const Index m = j - i;
    Vector out(m);
    // top entry r_{j-1,j}; descending first index, accumulating rho's into j
    double suff = 1.0;
    for (Index t = 0; t < m; ++t) {
        const Index k = j - 1 - t;
        out(t) = p.r(k, j) * suff;
        suff *= p.rho(k, j);
    }
    return out;
}

Matrix build_D(const ChainParams& p, Index i, Index j) { return build_D(segment_params(p, i, j)); }

Vector P_col(const ChainMatrix& a, Index i, Index j) {
    const Index n = j - i + 1;
    if (i < 0 || j >= a.size() || n < 1) throw std::domain_error("invalid chain segment");
    const Matrix f = upper_factor(a.t.block(i, i, n, n));
    Vector e = Vector::Zero(n);
    e(n - 1) = 1.0;
    return f.triangularView<Eigen::Upper>().solve(e);
}

Vector Psharp_col(const ChainMatrix& a, Index i, Index j) {
    const Index n = j - i + 1;
    if (i < 0 || j >= a.size() || n < 1) throw std::domain_error("invalid chain segment");
    const Matrix g = lower_factor(a.t.block(i, i, n, n));
    Vector e = Vector::Zero(n);
    e(0) = 1.0;  // J E
    return g.triangularView<Eigen::Lower>().solve(e);
}

Matrix rotation_U(const ChainParams& p, Index i, Index j) {
    if (i > j) throw std::domain_error("rotation_U needs i <= j");
    if (i == j) return Matrix::Identity(1, 1);
    const Index n = j - i + 1;
    Matrix r = Matrix::Identity(n, n);
    for (Index k = i + 1; k <= j; ++k) {
        Matrix blk = Matrix::Identity(n, n);
        const Complex t = p.r(i, k);
        const double rh = p.rho(i, k);
        const Index pos = k - i - 1;
        blk(pos, pos) = t;
        blk(pos, pos + 1) = rh;
        blk(pos + 1, pos) = rh;
        blk(pos + 1, pos + 1) = -std::conj(t);
        r = r * blk;
    }
    Matrix usub = Matrix::Identity(n, n);
    usub.topLeftCorner(n - 1, n - 1) = rotation_U(p, i + 1, j);
    return r * usub;
}

LatticeResiduals verify_identities(const ChainMatrix& a) {
    const Index n = a.size();
    if (n < 2) throw std::domain_error("identities need a chain of size >= 2");
    const ChainParams p = chain_params(a);

    const Complex r1n = p.r(0, n - 1);
    const double rh = p.rho(0, n - 1);

    const Vector pf = P_col(a, 0, n - 1);
    const Vector p2 = P_col(a, 1, n - 1);
    const Vector ps = Psharp_col(a, 0, n - 2);

    Vector lo = Vector::Zero(n), hi = Vector::Zero(n);
    lo.tail(n - 1) = p2;
    hi.head(n - 1) = ps;

    const Vector p_split = pf - (lo / rh - (r1n / rh) * hi);

    const Vector psf = Psharp_col(a, 0, n - 1);
    const Vector dual_split = psf - (-(std::conj(r1n) / rh) * lo + hi / rh);

    const Matrix u = rotation_U(p, 0, n - 1);
    const Matrix f = upper_cholesky(a);
    const Matrix g = lower_cholesky(a);
    const Matrix rotation = u * antidiagonal(n) * g - f;

    return LatticeResiduals{p_split.norm(), dual_split.norm(), rotation.norm()};
}

}  // namespace ncszego
