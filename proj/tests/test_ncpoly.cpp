#include <doctest.h>

#include "ncszego/ncpoly.hpp"
#include "oracles.hpp"

using namespace ncszego;

namespace {

NcPoly random_int_poly(testing::Rng& rng, int n, int max_len) {
    // small integer coefficients keep ring identities exact in doubles
    NcPoly p(n);
    for (const Word& w : enumerate_words(n, max_len)) {
        const int re = static_cast<int>(rng.uniform(-4.0, 5.0));
        const int im = static_cast<int>(rng.uniform(-4.0, 5.0));
        p.set_coeff(w, Complex(re, im));
    }
    return p;
}

}  // namespace

TEST_SUITE("ncpoly") {

TEST_CASE("linear_combine") {
    const NcPoly x1 = NcPoly::monomial(2, Word{1});
    // assemble phi_1 = -gamma_1/d_1 + X_1/d_1 at gamma_1 = 0.6
    const NcPoly phi1 =
        linear_combine({{Complex(1.25, 0), x1}, {Complex(-0.75, 0), NcPoly::one(2)}});
    CHECK(phi1.coeff(Word{}) == Complex(-0.75, 0));
    CHECK(phi1.coeff(Word{1}) == Complex(1.25, 0));

    CHECK(linear_combine({{Complex(0, 0), phi1}}).is_zero());
    const NcPoly five = linear_combine({{Complex(2, 0), x1}, {Complex(3, 0), x1}});
    CHECK(five.coeff(Word{1}) == Complex(5, 0));
    CHECK(five.coeffs().size() == 1);
}

TEST_CASE("mul is juxtaposition") {
    const NcPoly x1 = NcPoly::monomial(2, Word{1});
    const NcPoly x2 = NcPoly::monomial(2, Word{2});
    CHECK(mul(x1, x2) == NcPoly::monomial(2, Word{1, 2}));
    CHECK(mul(x2, x1) == NcPoly::monomial(2, Word{2, 1}));

    testing::Rng rng(3);
    const NcPoly p = random_int_poly(rng, 2, 2);
    CHECK(mul(NcPoly::one(2), p) == p);
    CHECK(mul(p, NcPoly::one(2)) == p);

    const NcPoly a = NcPoly::one(2) + x1;
    const NcPoly b = NcPoly::one(2) - x1;
    const NcPoly ab = mul(a, b);
    CHECK(ab.coeff(Word{}) == Complex(1, 0));
    CHECK(ab.coeff(Word{1}) == Complex(0, 0));
    CHECK(ab.coeff(Word{1, 1}) == Complex(-1, 0));
}

TEST_CASE("ring identities on random integer polynomials") {
    testing::Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const NcPoly p = random_int_poly(rng, 2, 2);
        const NcPoly q = random_int_poly(rng, 2, 2);
        const NcPoly r = random_int_poly(rng, 2, 2);
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
        CHECK(mul(p, q + r) == mul(p, q) + mul(p, r));
        CHECK(mul(p + q, r) == mul(p, r) + mul(q, r));
    }
}

TEST_CASE("mul_left_letter") {
    NcPoly phi1(2);
    phi1.set_coeff(Word{}, Complex(-0.75, 0));
    phi1.set_coeff(Word{1}, Complex(1.25, 0));
    const NcPoly shifted = mul_left_letter(1, phi1);
    CHECK(shifted.coeff(Word{1}) == Complex(-0.75, 0));
    CHECK(shifted.coeff(Word{1, 1}) == Complex(1.25, 0));

    CHECK(mul_left_letter(2, NcPoly::one(2)) == NcPoly::monomial(2, Word{2}));
    CHECK(mul_left_letter(1, NcPoly::monomial(2, Word{2})) == NcPoly::monomial(2, Word{1, 2}));

    testing::Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const NcPoly p = random_int_poly(rng, 3, 2);
        for (int k = 1; k <= 3; ++k)
            CHECK(mul_left_letter(k, p) == mul(NcPoly::monomial(3, Word{k}), p));
    }
}

TEST_CASE("eval_matrix") {
    const MatrixTuple z = MatrixTuple::scalars({Complex(0.5, 0), Complex(0.2, 0)});
    const Matrix v = eval_matrix(NcPoly::monomial(2, Word{1, 2}), z);
    CHECK(v(0, 0) == Complex(0.10, 0));

    CHECK(eval_matrix(NcPoly::one(2), z) == Matrix::Identity(1, 1));

    NcPoly phi1(1);
    phi1.set_coeff(Word{}, Complex(-0.75, 0));
    phi1.set_coeff(Word{1}, Complex(1.25, 0));
    const Matrix at_moment = eval_matrix(phi1, MatrixTuple::scalars({Complex(0.6, 0)}));
    CHECK(std::abs(at_moment(0, 0)) == 0.0);
}

TEST_CASE("eval_matrix is multiplicative") {
    testing::Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const NcPoly p = random_int_poly(rng, 2, 2);
        const NcPoly q = random_int_poly(rng, 2, 2);
        const MatrixTuple z = testing::random_ball_tuple(rng, 2, 2, 0.8);
        const Matrix lhs = eval_matrix(mul(p, q), z);
        const Matrix rhs = eval_matrix(p, z) * eval_matrix(q, z);
        const double scale = std::max(1.0, rhs.norm());
        CHECK((lhs - rhs).norm() / scale < 1e-12);
    }
}

TEST_CASE("alphabet mismatch is rejected") {
    CHECK_THROWS_AS(mul(NcPoly::one(2), NcPoly::one(3)), std::invalid_argument);
    CHECK_THROWS_AS(NcPoly::one(2) + NcPoly::one(3), std::invalid_argument);
}

}  // TEST_SUITE
