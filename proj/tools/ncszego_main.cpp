// Command-line front end: file ingestion, polynomial generation, and the
// randomized verification suites.  Exit codes: 0 success, 1 a residual or
// threshold breach, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncszego/ball.hpp"
#include "ncszego/favard.hpp"
#include "ncszego/io.hpp"
#include "ncszego/lattice.hpp"
#include "ncszego/random.hpp"
#include "ncszego/szego.hpp"

namespace {

using namespace ncszego;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBreach = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
    std::string params_path;
    std::string moments_path;
    std::string poly_path;
    std::string tuple_path;
    std::string out_path;
    std::string route = "recursive";
    std::string format = "json";
    std::optional<int> max_len;
    int level = 0;
    double tol = 1e-9;
    double radius = 0.9;
    std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + cfg.out_path + "'");
    out << text << '\n';
}

ordered_json complex_json(Complex c) { return ordered_json::array({c.real(), c.imag()}); }

ParamFile load_params(const RunConfig& cfg) {
    if (cfg.params_path.empty()) throw std::invalid_argument("--params is required");
    const std::string text = slurp(cfg.params_path);
    try {
        return param_file_from_json(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte);
        throw std::invalid_argument(cfg.params_path + ":" + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + e.what());
    }
}

MomentFile load_moments(const RunConfig& cfg) {
    if (cfg.moments_path.empty()) throw std::invalid_argument("--moments is required");
    const std::string text = slurp(cfg.moments_path);
    try {
        return moment_file_from_json(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte);
        throw std::invalid_argument(cfg.moments_path + ":" + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + e.what());
    }
}

NcPoly load_poly(const RunConfig& cfg) {
    if (cfg.poly_path.empty()) throw std::invalid_argument("--poly is required");
    const std::string text = slurp(cfg.poly_path);
    try {
        return poly_from_json(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte);
        throw std::invalid_argument(cfg.poly_path + ":" + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + e.what());
    }
}

int run_params2kernel(const RunConfig& cfg) {
    const ParamFile pf = load_params(cfg);
    const int len = cfg.max_len.value_or(pf.max_len);
    const MomentSpec m = synthesize_moments(pf.spec, len);
    if (cfg.format == "csv")
        emit(cfg, gram_to_csv(m, enumerate_words(m.n_letters(), len)));
    else
        emit(cfg, to_json(m, len));
    return kExitOk;
}

int run_kernel2params(const RunConfig& cfg) {
    const MomentFile mf = load_moments(cfg);
    const int len = cfg.max_len.value_or(mf.max_len);
    const ParamSpec p = extract_params(mf.spec, len);
    emit(cfg, to_json(p, len));
    return kExitOk;
}

int run_orthopoly(const RunConfig& cfg) {
    const ParamFile pf = load_params(cfg);
    const int len = cfg.max_len.value_or(pf.max_len);
    std::map<Word, NcPoly> phi;
    if (cfg.route == "recursive") {
        phi = szego_recursion(pf.spec, len).phi;
    } else if (cfg.route == "graded") {
        phi = graded_recursion(pf.spec, len).phi;
    } else if (cfg.route == "determinant") {
        const MomentSpec m = synthesize_moments(pf.spec, len);
        for (const Word& w : enumerate_words(pf.spec.n_letters(), len))
            phi.insert_or_assign(w, det_formula_poly(m, w));
    } else {
        throw std::invalid_argument("unknown route '" + cfg.route + "'");
    }
    emit(cfg, family_to_json(phi, pf.spec.n_letters()));
    return kExitOk;
}

int run_verify_favard(const RunConfig& cfg) {
    const ParamFile pf = load_params(cfg);
    const int len = cfg.max_len.value_or(pf.max_len);
    const FavardReport rep = favard(pf.spec, len);
    ordered_json j;
    j["max_len"] = len;
    j["ortho_residual"] = rep.ortho_residual;
    j["param_roundtrip_residual"] = rep.param_roundtrip_residual;
    j["tol"] = cfg.tol;
    const bool ok = rep.ortho_residual <= cfg.tol && rep.param_roundtrip_residual <= cfg.tol;
    j["pass"] = ok;
    emit(cfg, j.dump(2));
    return ok ? kExitOk : kExitBreach;
}

int run_verify_cd(const RunConfig& cfg) {
    const ParamFile pf = load_params(cfg);
    if (pf.spec.n_letters() < 1) throw std::invalid_argument("bad alphabet");
    const int nmax = cfg.level > 0 ? cfg.level : 2;
    Rng rng(cfg.seed);
    ordered_json cases = ordered_json::array();
    double worst = 0.0;
    for (int n = 1; n <= nmax; ++n) {
        for (Index dim : {Index(1), Index(2)}) {
            const MatrixTuple z = random_ball_tuple(rng, pf.spec.n_letters(), dim, 0.6);
            const MatrixTuple w = random_ball_tuple(rng, pf.spec.n_letters(), dim, 0.55);
            const CdReport rep = cd_check(pf.spec, z, w, n, cfg.tol * 1e-2);
            worst = std::max(worst, rep.residual);
            ordered_json c;
            c["n"] = n;
            c["dim"] = dim;
            c["residual"] = rep.residual;
            cases.push_back(std::move(c));
        }
    }
    ordered_json j;
    j["seed"] = cfg.seed;
    j["tol"] = cfg.tol;
    j["cases"] = std::move(cases);
    j["max_residual"] = worst;
    j["pass"] = worst <= cfg.tol;
    emit(cfg, j.dump(2));
    return worst <= cfg.tol ? kExitOk : kExitBreach;
}

int run_verify_lattice(const RunConfig& cfg) {
    const Index max_size = cfg.level > 0 ? cfg.level : 8;
    Rng rng(cfg.seed);
    double worst_p_split = 0.0, worst_dual_split = 0.0, worst_rotation = 0.0, worst_det = 0.0;
    const int draws = 100;
    for (int t = 0; t < draws; ++t) {
        const Index n = 2 + static_cast<Index>(rng.uniform(0.0, static_cast<double>(max_size - 1)));
        const ChainMatrix a(random_unit_diag_pd(rng, n));
        const LatticeResiduals res = verify_identities(a);
        worst_p_split = std::max(worst_p_split, res.res_p_split);
        worst_dual_split = std::max(worst_dual_split, res.res_dual_split);
        worst_rotation = std::max(worst_rotation, res.res_rotation);

        const ChainParams cp = chain_params(a);
        double prod = 1.0;
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) prod *= 1.0 - std::norm(cp.r(i, j));
        const double det = Eigen::PartialPivLU<Matrix>(a.t).determinant().real();
        worst_det = std::max(worst_det, std::abs(prod - det) / std::abs(det));
    }
    ordered_json j;
    j["seed"] = cfg.seed;
    j["draws"] = draws;
    j["max_size"] = max_size;
    j["max_res_p_split"] = worst_p_split;
    j["max_res_dual_split"] = worst_dual_split;
    j["max_res_rotation"] = worst_rotation;
    j["max_det_relative_error"] = worst_det;
    j["tol"] = cfg.tol;
    const bool ok =
        worst_p_split <= cfg.tol && worst_dual_split <= cfg.tol && worst_rotation <= cfg.tol && worst_det <= cfg.tol;
    j["pass"] = ok;
    emit(cfg, j.dump(2));
    return ok ? kExitOk : kExitBreach;
}

void warn_truncated(const NcPoly& f, int level) {
    if (f.degree() > level)
        std::cerr << "warning: degree " << f.degree() << " exceeds level " << level
                  << "; higher coefficients are ignored\n";
}

int run_displacement_check(const RunConfig& cfg) {
    const NcPoly f = load_poly(cfg);
    const int level = cfg.level > 0 ? cfg.level : 4;
    warn_truncated(f, level);
    const double res = displacement_residual(f, level);
    ordered_json j;
    j["level"] = level;
    j["residual"] = res;
    j["tol"] = cfg.tol;
    j["pass"] = res <= cfg.tol;
    emit(cfg, j.dump(2));
    return res <= cfg.tol ? kExitOk : kExitBreach;
}

int run_schur_test(const RunConfig& cfg) {
    const NcPoly f = load_poly(cfg);
    const int level = cfg.level > 0 ? cfg.level : 4;
    warn_truncated(f, level);
    const double norm = schur_truncation_norm(f, level);
    ordered_json j;
    j["level"] = level;
    j["norm"] = norm;
    j["in_schur_class"] = norm <= 1.0 ? "possible" : "refuted";
    emit(cfg, j.dump(2));
    if (norm > 1.0) {
        std::cerr << "not in Schur class: truncation norm " << norm << " > 1\n";
        return kExitBreach;
    }
    return kExitOk;
}

int run_eval(const RunConfig& cfg) {
    const NcPoly f = load_poly(cfg);
    if (cfg.tuple_path.empty()) throw std::invalid_argument("a matrix-tuple file is required");
    const std::string text = slurp(cfg.tuple_path);
    MatrixTuple z;
    try {
        z = tuple_from_json(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte);
        throw std::invalid_argument(cfg.tuple_path + ":" + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + e.what());
    }
    const Matrix direct = eval_matrix(f, z);
    const Matrix series = eval_series(f, z);
    ordered_json rows = ordered_json::array();
    for (Index r = 0; r < direct.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Index c = 0; c < direct.cols(); ++c) row.push_back(complex_json(direct(r, c)));
        rows.push_back(std::move(row));
    }
    ordered_json j;
    j["value"] = std::move(rows);
    j["route_difference"] = (direct - series).norm();
    emit(cfg, j.dump(2));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Szego-type orthogonal polynomials in noncommuting variables"};
    app.require_subcommand(1);

    RunConfig cfg;
    int exit_code = kExitOk;
    int requested_len = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
        sub->add_option("--tol", cfg.tol, "residual tolerance");
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_option("--radius", cfg.radius, "disk radius for random parameter draws");
    };

    auto* p2k = app.add_subcommand("params2kernel", "synthesize moments from parameters");
    p2k->add_option("--params", cfg.params_path, "parameter JSON file")->required();
    p2k->add_option("--max-len", requested_len, "truncation length");
    p2k->add_option("--format", cfg.format, "json | csv (csv emits the Gram matrix)");
    add_common(p2k);

    auto* k2p = app.add_subcommand("kernel2params", "extract parameters from moments");
    k2p->add_option("--moments", cfg.moments_path, "moment JSON file")->required();
    k2p->add_option("--max-len", requested_len, "truncation length");
    add_common(k2p);

    auto* ortho = app.add_subcommand("orthopoly", "generate the orthonormal family");
    ortho->add_option("--params", cfg.params_path, "parameter JSON file")->required();
    ortho->add_option("--max-len", requested_len, "truncation length");
    ortho->add_option("--route", cfg.route, "recursive | graded | determinant");
    add_common(ortho);

    auto* vcd = app.add_subcommand("verify-cd", "Christoffel-Darboux identity on random points");
    vcd->add_option("--params", cfg.params_path, "parameter JSON file")->required();
    vcd->add_option("--level", cfg.level, "largest kernel order n");
    add_common(vcd);

    auto* vfav = app.add_subcommand("verify-favard", "certify the inverse construction");
    vfav->add_option("--params", cfg.params_path, "parameter JSON file")->required();
    vfav->add_option("--max-len", requested_len, "truncation length");
    add_common(vfav);

    auto* vlat = app.add_subcommand("verify-lattice", "chain identities on random matrices");
    vlat->add_option("--level", cfg.level, "largest matrix size (default 8)");
    add_common(vlat);

    auto* disp = app.add_subcommand("displacement-check", "displacement equation residual");
    disp->add_option("--poly", cfg.poly_path, "polynomial JSON file")->required();
    disp->add_option("--level", cfg.level, "truncation level (default 4)");
    add_common(disp);

    auto* schur = app.add_subcommand("schur-test", "truncation norm of the triangular operator");
    schur->add_option("--poly", cfg.poly_path, "polynomial JSON file")->required();
    schur->add_option("--level", cfg.level, "truncation level (default 4)");
    add_common(schur);

    auto* ev = app.add_subcommand("eval", "evaluate a polynomial at a matrix tuple");
    ev->add_option("--poly", cfg.poly_path, "polynomial JSON file")->required();
    ev->add_option("tuple", cfg.tuple_path, "matrix tuple JSON file")->required();
    add_common(ev);

    CLI11_PARSE(app, argc, argv);
    if (requested_len >= 0) cfg.max_len = requested_len;
    if (cfg.tol <= 0) {
        std::cerr << "error: --tol must be positive\n";
        return kExitInvalid;
    }

    try {
        if (p2k->parsed()) exit_code = run_params2kernel(cfg);
        else if (k2p->parsed()) exit_code = run_kernel2params(cfg);
        else if (ortho->parsed()) exit_code = run_orthopoly(cfg);
        else if (vcd->parsed()) exit_code = run_verify_cd(cfg);
        else if (vfav->parsed()) exit_code = run_verify_favard(cfg);
        else if (vlat->parsed()) exit_code = run_verify_lattice(cfg);
        else if (disp->parsed()) exit_code = run_displacement_check(cfg);
        else if (schur->parsed()) exit_code = run_schur_test(cfg);
        else if (ev->parsed()) exit_code = run_eval(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NotPositiveDefinite& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NotInBall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ToleranceUnreachable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return exit_code;
}
