#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "hilbreg/json_io.hpp"
#include "oracles.hpp"

using namespace hilbreg;
using nlohmann::json;
using oracles::T;

TEST_CASE("JSON round trips") {
    // Term
    Term t = T({0, 1, 0, 2});
    CHECK(term_from_json(term_to_json(t), 3) == t);
    CHECK(term_from_json(json("x3^2*x1"), 3) == t);

    // IntegerPolynomial
    IntegerPolynomial p = parse_intpoly("(t^2+3*t+2)/2");
    CHECK(intpoly_from_json(intpoly_to_json(p)) == p);
    CHECK(intpoly_to_json(p)[1] == "3/2");

    // BorelIdeal
    BorelIdeal J = minimal_generators(
        3, {T({0, 0, 0, 2}), T({0, 0, 1, 1}), T({0, 0, 2, 0}), T({0, 1, 0, 1})});
    json jj = borel_to_json(J);
    CHECK(jj.at("generators")[0] == "x3^2");
    CHECK(borel_from_json(jj) == J);

    // MultiIndex
    MultiIndex I = make_multiindex(3, 2, {6, 7, 8, 9, 10});
    CHECK(multiindex_from_json(multiindex_to_json(I)).indices == I.indices);

    // marked set with rational tails
    std::map<Term, std::map<Term, Rat, DrlGreater>, DrlGreater> tails{
        {T({0, 0, 0, 2}), {{T({0, 1, 1, 0}), Rat(1, 2)}, {T({2, 0, 0, 0}), Rat(-3)}}}};
    RationalMarkedSet F = make_marked_set(J, 2, tails);
    json fj = marked_set_to_json(F);
    CHECK(fj.at("polys")[0].at("tail").at("x2*x1") == "1/2");
    RationalMarkedSet F2 = marked_set_from_json(fj);
    CHECK(marked_set_to_json(F2) == fj);

    // parametric marked set carries c[...][...] names
    ParamTable table;
    ParametricMarkedSet Fp = make_parametric_marked_set(J, 2, table);
    json fpj = marked_set_to_json(Fp, table);
    CHECK(fpj.at("polys")[0].at("tail").at("x2*x1") == "c[x3^2][x2*x1]");

    // GrassmannPoint
    oracles::TestRng rng(1);
    GrassmannPoint L = make_grassmann_point(3, 2, oracles::random_matrix(rng, 4, 10));
    GrassmannPoint L2 = grassmann_from_json(grassmann_to_json(L));
    CHECK(L2.rows.a == L.rows.a);

    // Pluecker polynomial text
    PlueckerPoly pp = PlueckerPoly::variable({3, 5, 6, 8, 9, 10});
    CHECK(pp.text() == "D[3,5,6,8,9,10]");
}

#ifdef HILBREG_CLI_PATH
static int run_cli(const std::string& args, std::string* output = nullptr) {
    std::string tmp = std::string(HILBREG_CLI_PATH) + ".out.json";
    std::string cmd = std::string(HILBREG_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream f(tmp);
        std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        *output = body;
    }
    std::remove(tmp.c_str());
    return WEXITSTATUS(status);
}

TEST_CASE("CLI: exit codes and pinned outputs") {
    std::string out;
    CHECK(run_cli("gotzmann --p 2t+2 --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("gotzmann_number") == 3);

    CHECK(run_cli("gotzmann --p 5 --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("gotzmann_number") == 5);

    CHECK(run_cli("admissible --p 2t-3 --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("admissible") == false);

    CHECK(run_cli("gotzmann --p 2t-3 --json") == 2);         // domain error
    CHECK(run_cli("gotzmann --p 2t++2 --json") == 1);        // parse error
    CHECK(run_cli("gotzmann --json") == 1);                  // missing option
    CHECK(run_cli("equations --n 3 --p t+5 --rprime 3 --s 3 --json") == 3);  // size guard

    CHECK(run_cli("enum-borel --n 2 --p 3 --rprime 3 --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("count") == 2);
    CHECK(run_cli("enum-borel --n 2 --p 3 --rprime 2 --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("count") == 1);

    CHECK(run_cli("hilb-poly --n 3 --gens x3^2,x3*x2,x3*x1,x3*x0 --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("hilbert_polynomial") == "(t^2+3*t+2)/2");

    CHECK(run_cli("classify-index --n 3 --s 2 --indices 6,7,8,9,10 --p 2t+1 --rprime 2 --json",
                  &out) == 0);
    CHECK(json::parse(out).at("outputs").at("class") == "InS");

    // determinism: identical invocations give byte-identical JSON
    std::string out2;
    run_cli("enum-borel --n 3 --p 2t+2 --rprime 2 --json", &out);
    run_cli("enum-borel --n 3 --p 2t+2 --rprime 2 --json", &out2);
    CHECK(out == out2);
}

TEST_CASE("CLI: membership and marked-check from files") {
    BorelIdeal J = minimal_generators(
        3, {T({0, 0, 0, 2}), T({0, 0, 1, 1}), T({0, 0, 2, 0}), T({0, 1, 0, 1})});
    GrassmannPoint L = make_grassmann_point(3, 2, oracles::monomial_point(J, 2));
    std::string ptfile = std::string(HILBREG_CLI_PATH) + ".point.json";
    {
        std::ofstream f(ptfile);
        f << grassmann_to_json(L).dump() << "\n";
    }
    std::string out;
    CHECK(run_cli("membership --file " + ptfile + " --p 2t+2 --rprime 2 --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("verdict") == "Member");
    CHECK(json::parse(out).at("outputs").at("oracle_confirmed") == true);

    CHECK(run_cli("pluecker --file " + ptfile + " --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("nonzero_coordinates").size() == 1);
    std::remove(ptfile.c_str());

    RationalMarkedSet F = make_marked_set(J, 2, {});
    std::string msfile = std::string(HILBREG_CLI_PATH) + ".marked.json";
    {
        std::ofstream f(msfile);
        f << marked_set_to_json(F).dump() << "\n";
    }
    CHECK(run_cli("marked-check --file " + msfile + " --json", &out) == 0);
    CHECK(json::parse(out).at("outputs").at("is_marked_basis") == true);
    std::remove(msfile.c_str());
}

TEST_CASE("CLI: verify-paper passes, and the negative control fails") {
    std::string out;
    CHECK(run_cli("verify-paper --json", &out) == 0);
    json rep = json::parse(out);
    CHECK(rep.at("outputs").at("all_ok") == true);

    CHECK(run_cli("verify-paper --negative-control --json", &out) == 2);
    json neg = json::parse(out);
    CHECK(neg.at("outputs").at("all_ok") == false);
    CHECK(neg.at("outputs").at("first_failed") == "gotzmann(2t+2) = 3");
}
#endif
