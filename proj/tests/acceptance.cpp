// Acceptance suite: golden symbolic cases from the two-letter worked
// example plus randomized property sweeps.  Prints one PASS/FAIL line per
// criterion and exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ncszego/ball.hpp"
#include "ncszego/favard.hpp"
#include "ncszego/io.hpp"
#include "ncszego/lattice.hpp"
#include "ncszego/random.hpp"
#include "ncszego/szego.hpp"
#include "oracles.hpp"

using namespace ncszego;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %s (%s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

std::string metric(const char* name, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s = %.3e", name, v);
    return buf;
}

double poly_diff(const NcPoly& a, const NcPoly& b) {
    double worst = 0.0;
    const NcPoly d = a - b;
    for (const auto& [w, c] : d.coeffs()) worst = std::max(worst, std::abs(c));
    return worst;
}

// ---------------------------------------------------------------- 1
void criterion_worked_example() {
    const double g1 = 0.6, g2 = 0.5, g11 = 0.3;
    const double d1 = std::sqrt(1 - g1 * g1);
    const double d2 = std::sqrt(1 - g2 * g2);
    const double d11 = std::sqrt(1 - g11 * g11);
    const ParamSpec p(2, {{Word{1}, Complex(g1, 0)},
                          {Word{2}, Complex(g2, 0)},
                          {Word{1, 1}, Complex(g11, 0)}});
    const SzegoFamily fam = szego_recursion(p, 2);

    NcPoly phi1(2), phi2(2), phi11(2);
    phi1.set_coeff(Word{}, -g1 / d1);
    phi1.set_coeff(Word{1}, 1.0 / d1);
    phi2.set_coeff(Word{}, -g2 / (d1 * d2));
    phi2.set_coeff(Word{1}, g1 * g2 / (d1 * d2));
    phi2.set_coeff(Word{2}, 1.0 / d2);
    phi11.set_coeff(Word{}, -g11 / (d1 * d2 * d11));
    phi11.set_coeff(Word{1}, -g1 / (d1 * d11) + g11 * g1 / (d1 * d2 * d11));
    phi11.set_coeff(Word{2}, g11 * g2 / (d2 * d11));
    phi11.set_coeff(Word{1, 1}, 1.0 / (d11 * d1));

    double worst = std::max({poly_diff(fam.phi.at(Word{1}), phi1),
                             poly_diff(fam.phi.at(Word{2}), phi2),
                             poly_diff(fam.phi.at(Word{1, 1}), phi11)});

    const MomentSpec m = synthesize_moments(p, 2);
    auto det_upto = [&](const Word& w) {
        auto ws = enumerate_words(2, static_cast<int>(w.length()));
        ws.resize(word_index(w, 2) + 1);
        return Eigen::PartialPivLU<Matrix>(gram(m, ws)).determinant().real();
    };
    double det_err = std::max({std::abs(det_upto(Word{1}) - 0.64),
                               std::abs(det_upto(Word{2}) - 0.48),
                               std::abs(det_upto(Word{1, 1}) - 0.279552)});
    det_err = std::max({det_err, std::abs(det_D(p, Word{1}) - 0.64),
                        std::abs(det_D(p, Word{2}) - 0.48),
                        std::abs(det_D(p, Word{1, 1}) - 0.279552)});

    report(1, "worked-example goldens", worst < 1e-12 && det_err < 1e-12,
           metric("coeff", worst) + ", " + metric("det", det_err));
}

// ------------------------------------------------------------ 2..5
/* Shared sweep for the family criteria: 100 seeded draws with |gamma| <= 0.9
 * (uniform in the disk), N = 2 at depth 3 and N = 3 at depth 2.  The
 * moment-coordinate routes (determinant formula, the Gram-Schmidt oracle,
 * the Gram orthonormality check) presume numerically invertible truncated
 * Gram matrices, so draws are rejected, deterministically, until the Gram's
 * smallest eigenvalue clears 1e-4; near the disk boundary the product of
 * dozens of defects (1-|gamma|^2) can otherwise make the truncation
 * singular to machine precision, where absolute coefficient comparisons are
 * meaningless in doubles.  The parameter bijection needs no such guard and
 * is additionally checked on unguarded depth-3 draws for both N.
 */
void criteria_family_sweep() {
    double route_diff = 0.0;   // 2
    double oracle_diff = 0.0;  // 3
    double ortho_dev = 0.0;    // 4
    double bijection = 0.0;    // 5

    for (int n : {2, 3}) {
        const int len = (n == 2) ? 3 : 2;
        Rng rng(1000 + n);
        for (int t = 0; t < 50; ++t) {
            ParamSpec p = random_params(rng, n, len, 0.9);
            MomentSpec m = synthesize_moments(p, len);
            const auto ws = enumerate_words(n, len);
            for (;;) {
                Eigen::SelfAdjointEigenSolver<Matrix> eig(gram(m, ws));
                if (eig.eigenvalues().minCoeff() >= 1e-4) break;
                p = random_params(rng, n, len, 0.9);
                m = synthesize_moments(p, len);
            }
            const SzegoFamily rec = szego_recursion(p, len);
            const SzegoFamily gra = graded_recursion(p, len);

            for (const Word& w : ws) {
                route_diff = std::max(route_diff, poly_diff(rec.phi.at(w), gra.phi.at(w)));
                route_diff =
                    std::max(route_diff, poly_diff(rec.phi.at(w), det_formula_poly(m, w)));
            }

            const auto oracle = testing::gram_schmidt_family(m, ws);
            for (std::size_t i = 0; i < ws.size(); ++i) {
                const Vector mine = testing::poly_coeff_vector(rec.phi.at(ws[i]), ws);
                oracle_diff =
                    std::max(oracle_diff, (mine - oracle[i]).cwiseAbs().maxCoeff());
            }

            ortho_dev = std::max(ortho_dev, family_gram_residual(rec, m));

            const ParamSpec back = extract_params(m, len);
            for (const Word& w : ws)
                bijection = std::max(bijection, std::abs(back.gamma(w) - p.gamma(w)));
            const MomentSpec again = synthesize_moments(back, len);
            for (const Word& w : ws)
                bijection = std::max(bijection, std::abs(again.moment(w) - m.moment(w)));
        }
    }

    // bijection also holds on unguarded near-singular draws at full depth
    for (int n : {2, 3}) {
        Rng rng(5000 + n);
        for (int t = 0; t < 50; ++t) {
            const ParamSpec p = random_params(rng, n, 3, 0.9);
            const MomentSpec m = synthesize_moments(p, 3);
            const ParamSpec back = extract_params(m, 3);
            for (const Word& w : enumerate_words(n, 3))
                bijection = std::max(bijection, std::abs(back.gamma(w) - p.gamma(w)));
            const MomentSpec again = synthesize_moments(back, 3);
            for (const Word& w : enumerate_words(n, 3))
                bijection = std::max(bijection, std::abs(again.moment(w) - m.moment(w)));
        }
    }

    report(2, "triple-route agreement, N in {2,3}, len <= 3, 100 draws", route_diff < 1e-9,
           metric("max coeff diff", route_diff));
    report(3, "gram-schmidt oracle reproduces every phi", oracle_diff < 1e-9,
           metric("max diff", oracle_diff));
    report(4, "orthonormality of the family", ortho_dev < 1e-9, metric("max dev", ortho_dev));
    report(5, "parameter bijection both ways", bijection < 1e-10, metric("max err", bijection));
}

// ---------------------------------------------------------------- 6
void criterion_lattice() {
    Rng rng(2024);
    double worst = 0.0, det_rel = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Index n = 2 + static_cast<Index>(rng.uniform(0.0, 7.0));
        const ChainMatrix a(random_unit_diag_pd(rng, n));
        const LatticeResiduals res = verify_identities(a);
        worst = std::max({worst, res.res_p_split, res.res_dual_split, res.res_rotation});

        const ChainParams cp = chain_params(a);
        double prod = 1.0;
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) prod *= 1.0 - std::norm(cp.r(i, j));
        const double det = Eigen::PartialPivLU<Matrix>(a.t).determinant().real();
        det_rel = std::max(det_rel, std::abs(prod - det) / std::abs(det));
    }
    report(6, "lattice identities and det product, 100 draws sizes 2..8",
           worst < 1e-10 && det_rel < 1e-10,
           metric("max residual", worst) + ", " + metric("det rel err", det_rel));
}

// ---------------------------------------------------------------- 7
void criterion_cd() {
    Rng rng(7001);
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const ParamSpec p = random_params(rng, 2, n, 0.9);
        for (Index dim : {Index(1), Index(2)}) {
            const MatrixTuple z = random_ball_tuple(rng, 2, dim, 0.6);
            const MatrixTuple w = random_ball_tuple(rng, 2, dim, 0.55);
            worst = std::max(worst, cd_check(p, z, w, n, 1e-10).residual);
        }
    }
    report(7, "christoffel-darboux identity, n in {1,2,3}", worst < 1e-8,
           metric("max residual", worst));
}

// ---------------------------------------------------------------- 8
void criterion_reproducing() {
    Rng rng(8001);
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        const Index dim = (t % 2) ? 2 : 1;
        const MatrixTuple z = random_ball_tuple(rng, 2, dim, 0.6);
        const MatrixTuple w = random_ball_tuple(rng, 2, dim, 0.55);
        Matrix target(dim, dim);
        for (Index i = 0; i < dim; ++i)
            for (Index j = 0; j < dim; ++j) target(i, j) = rng.gaussian();
        Matrix s = target;
        for (std::size_t k = 0; k < 2; ++k)
            s -= z.matrices[k] * target * w.matrices[k].adjoint();
        worst = std::max(worst, (weighted_kernel(z, w, s, 1e-10) - target).norm());
    }
    report(8, "reproducing identity with random weights", worst < 1e-8,
           metric("max residual", worst));
}

// ---------------------------------------------------------------- 9
void criterion_separating() {
    bool exact = true;
    bool full_rank = true;
    for (int len = 1; len <= 3; ++len) {
        for (const Word& sigma : words_of_length(2, len)) {
            const int k = len;
            const auto fam = separating_family(2, sigma, 1);
            double scale = 1.0;
            for (int i = 0; i < k; ++i) scale *= 1.0 / std::sqrt(2.0);

            std::vector<Matrix> blocks;
            for (std::size_t pi = 0; pi < fam.size(); ++pi) {
                const MatrixTuple& tup = fam[pi];
                for (const Word& tau : words_of_length(2, k)) {
                    Matrix prod = Matrix::Identity(2 * k, 2 * k);
                    for (auto it = tau.letters.rbegin(); it != tau.letters.rend(); ++it)
                        prod = prod * tup.matrices[static_cast<std::size_t>(*it - 1)].adjoint();
                    if (tau == sigma) {
                        const int p = static_cast<int>(pi) + 1;
                        const Index row = p - 1;
                        const Index col = (p <= k) ? k + p - 1 : p - k - 1;
                        for (Index a = 0; a < prod.rows(); ++a)
                            for (Index b = 0; b < prod.cols(); ++b) {
                                const Complex want =
                                    (a == row && b == col) ? Complex(scale, 0) : Complex(0, 0);
                                if (prod(a, b) != want) exact = false;
                            }
                        blocks.push_back(prod);
                    } else if (prod.norm() != 0.0) {
                        exact = false;
                    }
                }
            }
            Matrix stacked(2 * k, static_cast<Index>(blocks.size()) * 2 * k);
            for (std::size_t i = 0; i < blocks.size(); ++i)
                stacked.middleCols(static_cast<Index>(i) * 2 * k, 2 * k) = blocks[i];
            Eigen::ColPivHouseholderQR<Matrix> qr(stacked);
            if (qr.rank() != 2 * k) full_rank = false;
        }
    }
    report(9, "separating family exact and full rank, |sigma| <= 3", exact && full_rank,
           std::string("exact = ") + (exact ? "yes" : "no") + ", full rank = " +
               (full_rank ? "yes" : "no"));
}

// --------------------------------------------------------------- 10
void criterion_displacement() {
    const double z0 = displacement_residual(NcPoly::zero(2), 4);
    const double o0 = displacement_residual(NcPoly::one(2), 4);
    Rng rng(10001);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t)
        worst = std::max(worst, displacement_residual(random_poly(rng, 2, 3), 4));
    report(10, "displacement equation, 50 random f and the two trivial cases",
           z0 == 0.0 && o0 == 0.0 && worst < 1e-12,
           metric("max residual", worst) + ", trivial = " +
               ((z0 == 0.0 && o0 == 0.0) ? "exact" : "nonzero"));
}

// --------------------------------------------------------------- 11
void criterion_schur_sanity() {
    Rng rng(11001);
    double worst_min = 0.0;
    for (int t = 0; t < 3; ++t) {
        NcPoly f = random_poly(rng, 2, 2);
        const double norm = schur_truncation_norm(f, 4);
        f *= Complex(0.9 / norm, 0.0);  // now certified: truncation norm 0.9
        std::vector<MatrixTuple> pts;
        for (int i = 0; i < 5; ++i) pts.push_back(random_ball_tuple(rng, 2, 1, 0.6));
        worst_min = std::min(worst_min, cf_gram(f, pts, 1e-10));
    }

    const std::vector<MatrixTuple> two = {
        MatrixTuple::scalars({Complex(0.3, 0), Complex(0.4, 0)}),
        MatrixTuple::scalars({Complex(0.1, 0), Complex(0.2, 0)})};
    const double neg = cf_gram(NcPoly::monomial(2, Word{}, Complex(2, 0)), two, 1e-10);

    report(11, "schur-class kernel sanity", worst_min >= -1e-8 && neg <= -0.1,
           metric("min eig (contractive)", worst_min) + ", " + metric("min eig (f=2)", neg));
}

// --------------------------------------------------------------- 12
void criterion_szego_kernel_closed_form() {
    const MatrixTuple z = MatrixTuple::scalars({Complex(0.3, 0), Complex(0.4, 0)});
    const MatrixTuple w = MatrixTuple::scalars({Complex(0.1, 0), Complex(0.2, 0)});
    const Matrix ks = weighted_kernel(z, w, Matrix::Identity(1, 1), 1e-10);
    const double err = std::abs(ks(0, 0) - Complex(1.0 / 0.89, 0));
    report(12, "scalar szego kernel closed form", err < 1e-9, metric("error", err));
}

}  // namespace

int main() {
    criterion_worked_example();
    criteria_family_sweep();
    criterion_lattice();
    criterion_cd();
    criterion_reproducing();
    criterion_separating();
    criterion_displacement();
    criterion_schur_sanity();
    criterion_szego_kernel_closed_form();

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
