#include <random>
#include <sstream>

#include "doctest.h"
#include "weyr/cli.hpp"
#include "weyr/json_io.hpp"
#include "weyr/random_gen.hpp"

using namespace weyr;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kSegre42 = R"({"eigenvalues":[{"re":"0","im":"0","sizes":[4,2]}]})";

}  // namespace

TEST_CASE("JSON round trips") {
    std::mt19937_64 rng(51);
    SegreStructure s = random_segre(rng, 8);
    CHECK(segre_from_json(to_json(s)).eigenvalues.size() == s.eigenvalues.size());
    CHECK(to_json(segre_from_json(to_json(s))) == to_json(s));

    PencilStructure ps = random_pencil(rng);
    CHECK(to_json(pencil_from_json(to_json(ps))) == to_json(ps));

    ContraStructure cs = random_contra(rng);
    CHECK(to_json(contra_from_json(to_json(cs))) == to_json(cs));

    Template t = deform_weyr(s);
    Template t2 = template_from_json(to_json(t));
    CHECK(t2.base == t.base);
    CHECK(t2.pattern == t.pattern);
    CHECK(to_json(t2) == to_json(t));

    TemplatePair tp = deform_pencil(ps);
    CHECK(to_json(pair_from_json(to_json(tp))) == to_json(tp));

    Permutation p = jordan_to_weyr_permutation(s);
    CHECK(permutation_from_json(to_json(p)).image == p.image);

    VersalityReport rep = certify(t);
    VersalityReport rep2 = report_from_json(to_json(rep));
    CHECK(rep2.tangent_rank == rep.tangent_rank);
    CHECK(rep2.miniversal == rep.miniversal);

    ExactMatrix m = build_weyr(s).matrix;
    CHECK(matrix_from_json(to_json(m)) == m);
}

TEST_CASE("float matrix JSON accepts plain numbers and re/im pairs") {
    json j = {{"rows", 1},
              {"cols", 2},
              {"entries", json::array({0.5, {{"re", 1.0}, {"im", -2.0}}})}};
    FloatMatrix m = float_matrix_from_json(j);
    CHECK(m(0, 0) == std::complex<double>(0.5));
    CHECK(m(0, 1) == std::complex<double>(1.0, -2.0));
    FloatMatrix back = float_matrix_from_json(to_json(m));
    CHECK(back == m);
}

TEST_CASE("canon emits the trivial example") {
    CliRun r = run_cli({"canon", "--segre",
                        R"({"eigenvalues":[{"re":"1","im":"0","sizes":[1]}]})"});
    CHECK(r.code == 0);
    ExactMatrix m = matrix_from_json(json::parse(r.out).at("matrix"));
    CHECK(m.rows() == 1);
    CHECK(m.at(0, 0) == Scalar(1));
}

TEST_CASE("deform ascii and json describe the same stars") {
    CliRun ascii = run_cli({"deform", "--kind", "similarity", "--segre", kSegre42,
                            "--format", "ascii"});
    REQUIRE(ascii.code == 0);
    std::size_t ascii_stars = 0;
    for (char c : ascii.out)
        if (c == '*') ++ascii_stars;
    CHECK(ascii_stars == 10);

    CliRun js = run_cli({"deform", "--kind", "similarity", "--segre", kSegre42});
    REQUIRE(js.code == 0);
    Template t = template_from_json(json::parse(js.out));
    CHECK(t.param_count() == 10);
}

TEST_CASE("certify exit code signals miniversality") {
    CliRun r = run_cli({"certify", "--segre", kSegre42});
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["param_count"] == 10);
    CHECK(rep["miniversal"] == true);
}

TEST_CASE("perm emits the 1-based image") {
    CliRun r = run_cli({"perm", "--segre", kSegre42, "--format", "ascii"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 3 5 6 2 4 \n");
}

TEST_CASE("validation failures exit with code 2 and name the invariant") {
    CliRun r = run_cli({"canon", "--segre",
                        R"({"eigenvalues":[{"re":"0","im":"0","sizes":[2,3]}]})"});
    CHECK(r.code == 2);
    CHECK(r.err.find("nonincreasing") != std::string::npos);

    CliRun bad_pencil = run_cli({"deform", "--kind", "pencil", "--pencil",
                                 R"({"left_indices":[3,1]})"});
    CHECK(bad_pencil.code == 2);
    CHECK(bad_pencil.err.find("nondecreasing") != std::string::npos);

    CliRun garbage = run_cli({"canon", "--segre", "{not json"});
    CHECK(garbage.code == 2);

    CliRun unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);
}

TEST_CASE("stdin input via dash") {
    CliRun r = run_cli({"weyr", "--segre", "-", "--format", "ascii"}, kSegre42);
    CHECK(r.code == 0);
    CHECK(r.out.find("2 2 1 1") != std::string::npos);
}

TEST_CASE("fuzz mode is seeded and reports a summary") {
    CliRun r = run_cli({"certify", "--kind", "similarity", "--fuzz", "5",
                        "--seed", "1"});
    CHECK(r.code == 0);
    json summary = json::parse(r.out);
    CHECK(summary["cases"] == 5);
    CHECK(summary["failures"] == 0);
    CliRun again = run_cli({"certify", "--kind", "similarity", "--fuzz", "5",
                            "--seed", "1"});
    CHECK(again.out == r.out);
}

TEST_CASE("reduce verb converges on a small perturbation") {
    json e = {{"rows", 2},
              {"cols", 2},
              {"entries", json::array({0.0, 0.0, 1e-4, 0.0})}};
    CliRun r = run_cli({"reduce", "--segre",
                        R"({"eigenvalues":[{"re":"0","im":"0","sizes":[2]}]})",
                        "--perturbation", e.dump()});
    CHECK(r.code == 0);
    json res = json::parse(r.out);
    CHECK(res["status"] == "converged");
    CHECK(res["residual"].get<double>() <= 1e-10);
}
