#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "invder/cli.hpp"
#include "invder/cohomology.hpp"
#include "invder/json_io.hpp"
#include "invder/qlinalg.hpp"
#include "support.hpp"

using namespace invder;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("invder");
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string fx(const std::string& name) { return std::string(INVDER_FIXTURES_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/invder_cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

struct GoldenCase {
    const char* golden;
    int code;
    std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"validate_h3.json", 0, {"validate", fx("h3.json")}},
        {"validate_sl2.json", 1, {"validate", fx("sl2.json")}},
        {"validate_invalid_jacobi.json", 1, {"validate", fx("invalid_jacobi.json")}},
        {"derivations_h3.json", 0, {"derivations", fx("h3.json")}},
        {"delta_derivations_abelian3.json", 0, {"delta-derivations", fx("abelian3.json")}},
        {"twist_h3.json", 0, {"twist", fx("h3.json")}},
        {"check_rep_block.json", 0, {"check-rep", fx("h3.json"), fx("block_rep.json")}},
        {"check_rep_broken.json", 1, {"check-rep", fx("h3.json"), fx("broken_rep.json")}},
        {"semidirect_h3_block.json", 0, {"semidirect", fx("h3.json"), fx("block_rep.json")}},
        {"cohomology_h3_adjoint_h1.json", 0,
         {"cohomology", fx("h3.json"), "--rep", "adjoint", "--degree", "1"}},
        {"cohomology_h3_adjoint_h2.json", 0,
         {"cohomology", fx("h3.json"), "--rep", "adjoint", "--degree", "2"}},
        {"cohomology_ab1_trivial_h2.json", 0,
         {"cohomology", fx("abelian1.json"), "--rep", "trivial", "--vdim", "1", "--degree", "2"}},
        {"deform_check_h3.json", 0,
         {"deform-check", fx("h3.json"), "--deformation", fx("deform_h3.json")}},
        {"deform_check_abelian3.json", 1,
         {"deform-check", fx("abelian3.json"), "--deformation", fx("deform_abelian3.json")}},
        {"deform_equiv_h3.json", 0,
         {"deform-equiv", fx("h3.json"), "--deformation", fx("deform_h3.json"), "--psi",
          fx("psi_h3.json")}},
        {"ext_check_symplectic.json", 0,
         {"ext-check", fx("abelian2.json"), "--cocycle", fx("symplectic.json")}},
        {"ext_check_scaled.json", 1,
         {"ext-check", fx("abelian2.json"), "--cocycle", fx("symplectic_scaled.json")}},
        {"ext_build_symplectic.json", 0,
         {"ext-build", fx("abelian2.json"), "--cocycle", fx("symplectic.json")}},
        {"ext_extract_h3.json", 0, {"ext-extract", fx("h3.json"), "--base-dim", "2"}},
        {"ext_classify_shifted.json", 0,
         {"ext-classify", fx("abelian2.json"), fx("symplectic.json"),
          fx("symplectic_shifted.json")}},
        {"ext_classify_rigid.json", 1,
         {"ext-classify", fx("abelian1.json"), fx("zero_ab1.json"), fx("chi1_ab1.json")}},
    };
    return cases;
}

}  // namespace

TEST_CASE("every command matches its golden output byte for byte, twice") {
    for (const GoldenCase& c : golden_cases()) {
        INFO(c.golden);
        std::string expected = read_file(std::string(INVDER_GOLDEN_DIR) + "/" + c.golden);
        CliResult first = run(c.args);
        CHECK_MESSAGE(first.out == expected, c.golden);
        CHECK(first.code == c.code);
        CHECK(first.err.empty());
        CliResult second = run(c.args);
        CHECK(second.out == first.out);
        CHECK(second.code == first.code);
    }
}

TEST_CASE("the real binary agrees with the in-process runner") {
    for (const char* golden : {"validate_h3.json", "ext_build_symplectic.json"}) {
        const GoldenCase* c = nullptr;
        for (const GoldenCase& g : golden_cases()) {
            if (std::string(g.golden) == golden) c = &g;
        }
        REQUIRE(c != nullptr);
        std::string cmd = std::string(INVDER_CLI_PATH);
        for (const std::string& a : c->args) cmd += " " + a;
        cmd += " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[4096];
        size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        int status = pclose(pipe);
        REQUIRE(WIFEXITED(status));
        CHECK(WEXITSTATUS(status) == c->code);
        CHECK(out == read_file(std::string(INVDER_GOLDEN_DIR) + "/" + c->golden));
    }
}

TEST_CASE("emitted files feed back in unchanged") {
    InvDerStructure S = load_structure(fx("h3.json"));
    std::string reemitted = write_temp("h3_again.json", render(algebra_json(S.algebra(), S.delta())));
    CHECK(read_file(reemitted) == read_file(fx("h3.json")));
    InvDerStructure again = load_structure(reemitted);
    CHECK(again.algebra().same_constants(S.algebra()));
    CHECK(again.delta() == S.delta());
    CHECK(again.algebra().basis_names() == S.algebra().basis_names());

    // The built extension and the extracted cocycle re-create the bundled
    // fixtures exactly, closing the loop between the two commands.
    CHECK(read_file(std::string(INVDER_GOLDEN_DIR) + "/ext_build_symplectic.json") ==
          read_file(fx("h3.json")));
    CHECK(read_file(std::string(INVDER_GOLDEN_DIR) + "/ext_extract_h3.json") ==
          read_file(fx("symplectic.json")));

    // Emitted algebras from every producing command parse and validate.
    for (const char* golden : {"twist_h3.json", "semidirect_h3_block.json"}) {
        std::string path =
            write_temp(golden, read_file(std::string(INVDER_GOLDEN_DIR) + "/" + golden));
        CliResult r = run({"validate", path});
        CHECK(r.code == 0);
    }

    // A transported deformation is accepted again by deform-check.
    std::string transported = write_temp(
        "deform_transported.json", read_file(std::string(INVDER_GOLDEN_DIR) + "/deform_equiv_h3.json"));
    CliResult r = run({"deform-check", fx("h3.json"), "--deformation", transported});
    CHECK(r.code == 0);
}

TEST_CASE("golden degree-2 representatives are genuine cocycles") {
    OrderedJson doc = OrderedJson::parse(
        read_file(std::string(INVDER_GOLDEN_DIR) + "/cohomology_h3_adjoint_h2.json"));
    Representation r = adjoint_rep(testsupport::make_h3_structure());
    Matrix d2m = d2_matrix(r);
    REQUIRE(doc.at("h2_basis").size() == doc.at("h2_dim").get<std::size_t>());
    for (const OrderedJson& flat : doc.at("h2_basis")) {
        Vector v;
        for (const OrderedJson& entry : flat) v.push_back(parse_rational(entry.get<std::string>()));
        REQUIRE(v.size() == d2m.cols());
        CHECK(is_zero(d2m * v));
    }
}

TEST_CASE("unusable files and arguments exit with code 2") {
    for (const char* name : {"bad_ij.json", "bad_index.json", "bad_rational.json",
                             "bad_syntax.json", "bad_delta_shape.json", "bad_duplicate.json"}) {
        INFO(name);
        CliResult r = run({"validate", fx(name)});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.substr(0, 7) == "error: ");
    }
    CHECK(run({"validate", "/nonexistent/a.json"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"cohomology", fx("h3.json"), "--degree", "3"}).code == 2);
    CHECK(run({"deform-check", fx("h3.json"), "--deformation", fx("deform_h3.json"), "--order",
               "5"}).code == 2);
    CHECK(run({"ext-extract", fx("h3.json"), "--base-dim", "7"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("mathematical failures exit with code 1") {
    // Commands that need a validated structure reject sl2 with a named clause.
    CliResult derivations = run({"derivations", fx("sl2.json")});
    CHECK(derivations.code == 1);
    CHECK(derivations.out.empty());
    CHECK(derivations.err.find("derivation fails") != std::string::npos);

    CliResult build = run({"ext-build", fx("abelian2.json"), "--cocycle",
                           fx("symplectic_scaled.json")});
    CHECK(build.code == 1);
    CHECK(build.err.find("leibniz_compat") != std::string::npos);
}

TEST_CASE("loaders reject malformed domain files") {
    std::string bad_pair = write_temp("cocycle_pair.json", R"({
      "v_dim": 1,
      "delta_v": [["1"]],
      "gamma": [{"i": 2, "j": 1, "v": ["1"]}],
      "chi": [["0", "0"]]
    })");
    CHECK_THROWS_AS(load_cocycle(bad_pair, 2), InputError);

    std::string bad_lists = write_temp("deform_lists.json", R"({
      "order": 2,
      "mu": [],
      "delta": []
    })");
    InvDerStructure S = load_structure(fx("h3.json"));
    CHECK_THROWS_AS(load_deformation(bad_lists, S), InputError);

    // A present order-0 entry must restate the base data.
    std::string wrong_zero = write_temp("deform_zero.json", R"({
      "order": 0,
      "mu": [[[["0","0","0"],["0","0","0"],["0","0","0"]],
              [["0","0","0"],["0","0","0"],["0","0","0"]],
              [["0","0","0"],["0","0","0"],["0","0","0"]]]],
      "delta": []
    })");
    CHECK_THROWS_AS(load_deformation(wrong_zero, S), InputError);

    std::string not_grid = write_temp("matrix_scalar.json", R"("1")");
    CHECK_THROWS_AS(load_matrix_file(not_grid), InputError);

    std::string rep_short = write_temp("rep_short.json", R"({
      "target_dim": 1,
      "rho": [[["0"]]],
      "delta_v": [["1"]]
    })");
    CHECK_THROWS_AS(load_representation(rep_short, S), InputError);
}
