#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "ncszego/io.hpp"

using namespace ncszego;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NCSZEGO_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), std::move(out)};
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "ncszego_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

const char* kParams = R"({"n_letters":2,"max_len":2,"gamma":{
  "1":[0.6,0.0],"2":[0.5,0.0],"11":[0.3,0.0],"12":[0.1,0.0],"21":[0.2,0.0],"22":[-0.4,0.0]}})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("orthopoly routes agree and round-trip") {
    const fs::path params = write_file("params.json", kParams);
    const RunResult rec = run_cli("orthopoly --params " + params.string() + " --route recursive");
    REQUIRE(rec.exit_code == 0);
    const RunResult gra = run_cli("orthopoly --params " + params.string() + " --route graded");
    REQUIRE(gra.exit_code == 0);
    const RunResult det =
        run_cli("orthopoly --params " + params.string() + " --route determinant");
    REQUIRE(det.exit_code == 0);

    const auto a = family_from_json(rec.out);
    const auto b = family_from_json(gra.out);
    const auto c = family_from_json(det.out);
    REQUIRE(a.size() == 7);
    for (const auto& [w, pa] : a) {
        const NcPoly d1 = pa - b.at(w);
        const NcPoly d2 = pa - c.at(w);
        for (const auto& [t, v] : d1.coeffs()) CHECK(std::abs(v) < 1e-9);
        for (const auto& [t, v] : d2.coeffs()) CHECK(std::abs(v) < 1e-9);
    }

    // emitted family parses back to the same document
    CHECK(family_to_json(a, 2) == rec.out.substr(0, rec.out.size() - 1));
}

TEST_CASE("params2kernel / kernel2params round trip") {
    const fs::path params = write_file("params_rt.json", kParams);
    const fs::path moments = scratch_dir() / "moments_rt.json";
    const RunResult fwd = run_cli("params2kernel --params " + params.string() + " --out " +
                                  moments.string());
    REQUIRE(fwd.exit_code == 0);
    const RunResult back = run_cli("kernel2params --moments " + moments.string());
    REQUIRE(back.exit_code == 0);
    const ParamFile pf = param_file_from_json(back.out);
    CHECK(std::abs(pf.spec.gamma(Word{1}) - Complex(0.6, 0)) < 1e-10);
    CHECK(std::abs(pf.spec.gamma(Word{2, 2}) - Complex(-0.4, 0)) < 1e-10);

    const RunResult csv =
        run_cli("params2kernel --params " + params.string() + " --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.substr(0, csv.out.find('\n')) == ",1,2,11,12,21,22");
}

TEST_CASE("verify subcommands succeed on good input") {
    const fs::path zero = write_file("zero.json",
                                     R"({"n_letters":2,"max_len":2,"gamma":{}})");
    CHECK(run_cli("verify-favard --params " + zero.string()).exit_code == 0);

    const fs::path params = write_file("params_v.json", kParams);
    CHECK(run_cli("verify-favard --params " + params.string() + " --tol 1e-9").exit_code == 0);
    CHECK(run_cli("verify-cd --params " + params.string() +
                  " --level 2 --tol 1e-8 --seed 7").exit_code == 0);
    CHECK(run_cli("verify-lattice --seed 3 --tol 1e-10 --level 6").exit_code == 0);
}

TEST_CASE("residual breaches exit 1") {
    const fs::path params = write_file("params_breach.json", kParams);
    // residuals ~1e-12 cannot clear an absurd tolerance
    const RunResult r = run_cli("verify-favard --params " + params.string() + " --tol 1e-18");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("schur-test exit codes") {
    const fs::path two = write_file("const2.json", R"({"n_letters":2,"coeffs":{"":[2.0,0.0]}})");
    const RunResult r = run_cli("schur-test --poly " + two.string() + " --level 3");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"refuted\"") != std::string::npos);

    const fs::path one = write_file("const1.json", R"({"n_letters":2,"coeffs":{"":[1.0,0.0]}})");
    CHECK(run_cli("schur-test --poly " + one.string() + " --level 3").exit_code == 0);
}

TEST_CASE("displacement-check") {
    const fs::path f = write_file("poly_disp.json",
                                  R"({"n_letters":2,"coeffs":{"1":[1.0,0.0],"21":[0.5,0.0]}})");
    CHECK(run_cli("displacement-check --poly " + f.string() + " --level 3 --tol 1e-12")
              .exit_code == 0);
}

TEST_CASE("eval agrees across routes") {
    const fs::path f = write_file("poly_eval.json",
                                  R"({"n_letters":2,"coeffs":{"12":[1.0,0.0]}})");
    const fs::path z = write_file("tuple.json",
        R"({"d":1,"Z":[[[[0.5,0.0]]],[[[0.2,0.0]]]]})");
    const RunResult r = run_cli("eval --poly " + f.string() + " " + z.string());
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["value"][0][0][0].get<double>() == doctest::Approx(0.10));
    CHECK(j["route_difference"].get<double>() < 1e-14);
}

TEST_CASE("invalid inputs exit 2") {
    const fs::path bad = write_file("bad.json", "{\n  \"n_letters\": 2,\n  !!!\n}");
    CHECK(run_cli("orthopoly --params " + bad.string()).exit_code == 2);

    const fs::path wild = write_file("wild.json",
                                     R"({"n_letters":2,"max_len":1,"gamma":{"1":[1.5,0.0]}})");
    CHECK(run_cli("verify-favard --params " + wild.string()).exit_code == 2);

    CHECK(run_cli("orthopoly --params /nonexistent.json").exit_code == 2);
}

TEST_CASE("seeded runs are byte-identical") {
    const fs::path params = write_file("params_det.json", kParams);
    const std::string cmd = "verify-cd --params " + params.string() + " --seed 42 --tol 1e-8";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);

    const RunResult c = run_cli("verify-lattice --seed 9 --tol 1e-10");
    const RunResult d = run_cli("verify-lattice --seed 9 --tol 1e-10");
    CHECK(c.out == d.out);
}

}  // TEST_SUITE
