#pragma once

// Deterministic draws for the randomized verification suites.  The uniform
// is hand-rolled on top of mt19937_64 so equal seeds give byte-identical
// runs across standard-library versions.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>

#include "ncszego/ball.hpp"
#include "ncszego/kernel.hpp"
#include "ncszego/matrix_tuple.hpp"

namespace ncszego {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }  // [0,1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    Complex disk(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double th = 2.0 * M_PI * uniform();
        return Complex(r * std::cos(th), r * std::sin(th));
    }

    Complex gaussian() {
        const double u = std::max(uniform(), 1e-300);
        const double v = uniform();
        const double m = std::sqrt(-2.0 * std::log(u));
        return Complex(m * std::cos(2.0 * M_PI * v), m * std::sin(2.0 * M_PI * v));
    }

private:
    std::mt19937_64 eng_;
};

inline ParamSpec random_params(Rng& rng, int n_letters, int max_len, double radius) {
    std::map<Word, Complex> gamma;
    for (const Word& w : enumerate_words(n_letters, max_len))
        if (!w.empty()) gamma[w] = rng.disk(radius);
    return ParamSpec(n_letters, std::move(gamma));
}

inline Matrix random_unit_diag_pd(Rng& rng, Index n) {
    Matrix b(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) b(i, j) = rng.gaussian();
    Matrix a = b * b.adjoint() + static_cast<double>(n) * Matrix::Identity(n, n);
    const Eigen::VectorXd d = a.diagonal().real().cwiseSqrt();
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) a(i, j) /= d(i) * d(j);
    for (Index i = 0; i < n; ++i) a(i, i) = 1.0;
    return a;
}

inline MatrixTuple random_ball_tuple(Rng& rng, int n_letters, Index dim, double norm) {
    std::vector<Matrix> ms;
    for (int k = 0; k < n_letters; ++k) {
        Matrix m(dim, dim);
        for (Index i = 0; i < dim; ++i)
            for (Index j = 0; j < dim; ++j) m(i, j) = rng.gaussian();
        ms.push_back(std::move(m));
    }
    MatrixTuple z(std::move(ms));
    const double bn = ball_norm(z);
    for (Matrix& m : z.matrices) m *= norm / bn;
    return z;
}

inline NcPoly random_poly(Rng& rng, int n_letters, int max_len, double radius = 1.0) {
    NcPoly p(n_letters);
    for (const Word& w : enumerate_words(n_letters, max_len)) p.set_coeff(w, rng.disk(radius));
    return p;
}

}  // namespace ncszego
