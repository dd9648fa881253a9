// Command-line front end: exact computations on Hilbert schemes with bounded
// regularity. Every subcommand reads/writes UTF-8 JSON and is deterministic
// given its inputs and --seed.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hilbreg/json_io.hpp"

using namespace hilbreg;
using nlohmann::json;

namespace {

struct Cli {
    bool as_json = false;
    long seed = 0;
    std::string out;
};

json report(const std::string& command, json inputs, json outputs, bool ok = true) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"outputs", std::move(outputs)},
                {"ok", ok}};
}

int emit(const Cli& cli, const json& rep, double elapsed_ms) {
    std::string body = cli.as_json ? rep.dump(2) : rep.dump(2);
    if (!cli.out.empty()) {
        std::ofstream f(cli.out);
        f << body << "\n";
    } else {
        std::cout << body << "\n";
    }
    if (!cli.as_json)
        std::cerr << "[" << rep.at("command").get<std::string>() << "] " << elapsed_ms << " ms\n";
    return rep.at("ok").get<bool>() ? 0 : 2;
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw err_parse("cannot open '" + path + "'");
    json j;
    f >> j;
    return j;
}

TermList parse_gens(const std::string& csv, int n) {
    TermList out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string piece = csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                                         : comma - start);
        if (!piece.empty()) out.push_back(parse_term(piece, n));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// verify-paper: reproduces the worked examples as one pass/fail report
// ---------------------------------------------------------------------------

struct Verifier {
    json checks = json::array();
    bool all_ok = true;
    std::string first_failed;

    template <class A, class B>
    void check(const std::string& name, const A& got, const B& expect) {
        bool ok = (got == expect);
        json entry{{"check", name}, {"ok", ok}};
        if constexpr (std::is_convertible_v<A, json>) entry["got"] = got;
        if (!ok && first_failed.empty()) first_failed = name;
        all_ok = all_ok && ok;
        checks.push_back(std::move(entry));
    }
};

json run_verify_paper(long seed, bool corrupt_negative_control) {
    Verifier v;
    auto P = [](const char* s) { return parse_intpoly(s); };

    // Gotzmann numbers of the worked polynomials
    v.check("gotzmann(2t+2) = 3", gotzmann_number(P("2t+2")),
            corrupt_negative_control ? 4L : 3L);
    v.check("gotzmann(2t+1) = 2", gotzmann_number(P("2t+1")), 2L);
    for (long c = 1; c <= 10; ++c)
        v.check("gotzmann(" + std::to_string(c) + ") = " + std::to_string(c),
                gotzmann_number(IntegerPolynomial::constant(Rat(c))), c);

    // first worked example: p = 2t+2, r' = s = 2 in P^3
    HilbertContext ctx = make_context(3, P("2t+2"), 2, 2);
    v.check("p(2) = 6", ctx.ps.get_si(), 6L);
    v.check("N(2) = 10", ctx.Ns.get_si(), 10L);
    v.check("q(2) = 4", ctx.qs.get_si(), 4L);
    v.check("q(3) = 12", ctx.q(3).get_si(), 12L);
    BorelIdeal J1 = minimal_generators(3, {parse_term("x3^2", 3), parse_term("x3*x2", 3),
                                           parse_term("x2^2", 3), parse_term("x3*x1", 3)});
    auto B2 = enumerate_borel(3, P("2t+2"), 2);
    bool has_J1 = false;
    for (const auto& J : B2) has_J1 = has_J1 || (J == J1);
    v.check("B^[2]_{2t+2} contains (x3^2,x3*x2,x2^2,x3*x1)", has_J1, true);
    v.check("reg(J) = max generator degree = 2", regularity(J1), 2L);

    BorelIdeal x3 = minimal_generators(3, {parse_term("x3", 3)});
    RationalMarkedSet Y = make_marked_set(x3, 2, {});
    v.check("rk(I_3) = 10 for (x3)_{>=2}", rank_profile(Y, 3)[1].second.get_si(), 10L);
    v.check("Hilbert polynomial of (x3) is (t^2+3*t+2)/2",
            hilbert_polynomial(3, x3.gens).text(), std::string("(t^2+3*t+2)/2"));

    GroupSample sample = default_group_sample(3, seed);
    GrassmannPoint Ypt = make_grassmann_point(
        3, 2, marked_set_matrix(Y));
    MembershipReport ry = membership_test(Ypt, ctx, sample);
    v.check("membership((x3)_{>=2}) = InComplement", verdict_name(ry.verdict),
            std::string("InComplement"));

    GrassmannPoint J1pt = make_grassmann_point(3, 2, marked_set_matrix(make_marked_set(J1, 2, {})));
    MembershipReport rj = membership_test(J1pt, ctx, sample);
    v.check("membership(J1 point) = Member", verdict_name(rj.verdict), std::string("Member"));
    v.check("rk(I_3) = q(3) = 12 for the J1 marked basis",
            rank_profile(make_marked_set(J1, 2, {}), 3)[1].second.get_si(), 12L);

    // second worked example: p = 2t+1, s = r = 2
    HilbertContext ctx2 = make_context(3, P("2t+1"), 2, 2);
    v.check("p(2) = 5 for 2t+1", ctx2.ps.get_si(), 5L);
    MultiIndex I = make_multiindex(3, 2, {6, 7, 8, 9, 10});
    ComplementIdeal JI = ideal_from_multiindex(I);
    v.check("J({6..10}) = (x3^2,x3*x2,x2^2,x3*x1,x2*x1)", term_list_text(JI.gens),
            std::string("{x3^2, x3*x2, x2^2, x3*x1, x2*x1}"));
    v.check("J({6..10}) is Borel", JI.borel, true);
    v.check("Hilbert polynomial of J({6..10}) is t+3", hilbert_polynomial(3, JI.gens).text(),
            std::string("t+3"));
    v.check("classify({6..10}, 2t+1, r'=2) = InS",
            multiindex_class_name(classify_multiindex(I, P("2t+1"), 2)), std::string("InS"));

    // B^1_I contains q(s) elements through a fixed chart
    long through = 0;
    auto I1 = multiindex_of(J1, 2);
    for (const auto& K : subsets(10, 7))
        if (std::includes(K.begin(), K.end(), I1.indices.begin(), I1.indices.end())) ++through;
    v.check("|B^1_I| = q(s) = 4", through, 4L);

    // equation degrees: <= d+1 and <= d+2
    EquationSet eqs = equations(ctx2);
    v.check("family A degree = d+1 = 2", eqs.degreeA(), 2L);
    v.check("families B/C degree = d+2 = 3", eqs.degreeBC(), 3L);

    // E' << E
    v.check("E' = 210", ctx.Eprime.get_si(), 210L);
    v.check("E = 125970", ctx.E.value().get_si(), 125970L);
    v.check("E' < E", ctx.Eprime < ctx.E.value(), true);

    return json{{"all_ok", v.all_ok},
                {"first_failed", v.first_failed},
                {"checks", v.checks}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert-scheme computations with bounded regularity"};
    app.require_subcommand(1);
    Cli cli;
    app.add_flag("--json", cli.as_json, "machine-readable output only");
    app.add_option("--seed", cli.seed, "seed for all randomized checks (default 0)");
    app.add_option("--out", cli.out, "write the report to this file");

    std::string poly_str, gens_str, file, indices_str;
    int n = 0;
    long s = 0, rprime = 0;
    std::size_t expand_budget = 200000;
    bool negative_control = false;

    auto* c_gotz = app.add_subcommand("gotzmann", "Gotzmann number of an admissible polynomial");
    c_gotz->add_option("--p", poly_str, "polynomial, e.g. \"2t+2\"")->required();
    auto* c_adm = app.add_subcommand("admissible", "admissibility of a Hilbert polynomial");
    c_adm->add_option("--p", poly_str)->required();
    auto* c_hp = app.add_subcommand("hilb-poly", "Hilbert polynomial of a monomial ideal");
    c_hp->add_option("--n", n)->required();
    c_hp->add_option("--gens", gens_str, "comma-separated generators, e.g. \"x3^2,x3*x2\"")
        ->required();
    auto* c_enum = app.add_subcommand("enum-borel",
                                      "saturated Borel ideals with given polynomial and regularity");
    c_enum->add_option("--n", n)->required();
    c_enum->add_option("--p", poly_str)->required();
    c_enum->add_option("--rprime", rprime)->required();
    auto* c_cls = app.add_subcommand("classify-index", "membership level of a multi-index");
    c_cls->add_option("--n", n)->required();
    c_cls->add_option("--s", s)->required();
    c_cls->add_option("--indices", indices_str, "e.g. \"6,7,8,9,10\"")->required();
    c_cls->add_option("--p", poly_str)->required();
    c_cls->add_option("--rprime", rprime)->required();
    auto* c_mc = app.add_subcommand("marked-check", "marked-basis criterion and rank profile");
    c_mc->add_option("--file", file, "marked set JSON")->required();
    c_mc->add_option("--p", poly_str, "compare ranks against q(t) = N(t) - p(t)");
    auto* c_mse = app.add_subcommand("marked-scheme-eqs", "marked scheme equations in the tails");
    c_mse->add_option("--n", n)->required();
    c_mse->add_option("--gens", gens_str)->required();
    c_mse->add_option("--s", s)->required();
    auto* c_pl = app.add_subcommand("pluecker", "Pluecker coordinates of a point");
    c_pl->add_option("--file", file, "GrassmannPoint JSON")->required();
    auto* c_eq = app.add_subcommand("equations", "equation families A/B/C for a context");
    c_eq->add_option("--n", n)->required();
    c_eq->add_option("--p", poly_str)->required();
    c_eq->add_option("--rprime", rprime)->required();
    c_eq->add_option("--s", s)->required();
    c_eq->add_option("--expand-budget", expand_budget,
                     "max Pluecker terms to expand per equation (0 = structural only)");
    auto* c_mem = app.add_subcommand("membership", "membership test for a point");
    c_mem->add_option("--file", file, "GrassmannPoint JSON")->required();
    c_mem->add_option("--p", poly_str)->required();
    c_mem->add_option("--rprime", rprime)->required();
    auto* c_vp = app.add_subcommand("verify-paper", "re-run the worked examples as checks");
    c_vp->add_flag("--negative-control", negative_control,
                   "corrupt one expected value to confirm failures are detected");

    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage / parse errors exit 1
    }
    auto t0 = std::chrono::steady_clock::now();
    auto ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (c_gotz->parsed()) {
            IntegerPolynomial p = parse_intpoly(poly_str);
            long r = gotzmann_number(p);
            return emit(cli, report("gotzmann", {{"p", p.text()}}, {{"gotzmann_number", r}}), ms());
        }
        if (c_adm->parsed()) {
            IntegerPolynomial p = parse_intpoly(poly_str);
            json out{{"admissible", is_admissible(p)}};
            if (is_admissible(p)) out["gotzmann_number"] = gotzmann_number(p);
            return emit(cli, report("admissible", {{"p", p.text()}}, out), ms());
        }
        if (c_hp->parsed()) {
            TermList gens = parse_gens(gens_str, n);
            IntegerPolynomial hp = hilbert_polynomial(n, gens);
            return emit(cli,
                        report("hilb-poly", {{"n", n}, {"gens", gens_str}},
                               {{"hilbert_polynomial", hp.text()},
                                {"coefficients", intpoly_to_json(hp)}}),
                        ms());
        }
        if (c_enum->parsed()) {
            IntegerPolynomial p = parse_intpoly(poly_str);
            auto ideals = enumerate_borel(n, p, rprime);
            long r = gotzmann_number(p);
            json arr = json::array();
            for (const BorelIdeal& J : ideals) {
                json entry{{"ideal", borel_to_json(J)}, {"regularity", regularity(J)}};
                json mi = json::object();
                for (long ss = rprime; ss <= r; ++ss)
                    mi[std::to_string(ss)] = multiindex_to_json(multiindex_of(J, ss));
                entry["multiindices"] = mi;
                arr.push_back(std::move(entry));
            }
            return emit(cli,
                        report("enum-borel",
                               {{"n", n}, {"p", p.text()}, {"rprime", rprime}},
                               {{"count", ideals.size()}, {"ideals", arr}}),
                        ms());
        }
        if (c_cls->parsed()) {
            IntegerPolynomial p = parse_intpoly(poly_str);
            std::vector<long> idx;
            for (const auto& piece : json::parse("[" + indices_str + "]")) idx.push_back(piece);
            MultiIndex I = make_multiindex(n, s, idx);
            ComplementIdeal JI = ideal_from_multiindex(I);
            json out{{"class", multiindex_class_name(classify_multiindex(I, p, rprime))},
                     {"complement_ideal", term_list_text(JI.gens)},
                     {"borel", JI.borel}};
            if (JI.borel) out["hilbert_polynomial"] = hilbert_polynomial(n, JI.gens).text();
            return emit(cli,
                        report("classify-index",
                               {{"n", n}, {"s", s}, {"indices", idx}, {"p", p.text()},
                                {"rprime", rprime}},
                               out),
                        ms());
        }
        if (c_mc->parsed()) {
            RationalMarkedSet F = marked_set_from_json(load_json_file(file));
            bool basis = is_marked_basis(F);
            json profile = json::array();
            if (poly_str.empty()) {
                for (const auto& [t, rk] : rank_profile(F, F.s + 3))
                    profile.push_back(json{{"t", t}, {"rank", rk.get_str()}});
            } else {
                for (const auto& e : rank_profile(F, F.s + 3, parse_intpoly(poly_str)))
                    profile.push_back(json{{"t", e.t},
                                           {"rank", e.rank.get_str()},
                                           {"q", e.q.get_str()},
                                           {"matches", e.matches}});
            }
            return emit(cli,
                        report("marked-check", {{"file", file}},
                               {{"is_marked_basis", basis}, {"rank_profile", profile}}),
                        ms());
        }
        if (c_mse->parsed()) {
            TermList gens = parse_gens(gens_str, n);
            BorelIdeal J = minimal_generators(n, gens);
            ParamTable table;
            auto eqs = marked_scheme_equations(J, s, table);
            json arr = json::array();
            for (const ParamPoly& e : eqs) arr.push_back(e.text(table));
            json params = json::array();
            for (int i = 0; i < table.size(); ++i) params.push_back(table.name(i));
            return emit(cli,
                        report("marked-scheme-eqs", {{"n", n}, {"gens", gens_str}, {"s", s}},
                               {{"parameters", params}, {"equations", arr}}),
                        ms());
        }
        if (c_pl->parsed()) {
            GrassmannPoint L = grassmann_from_json(load_json_file(file));
            auto coords = pluecker_coordinates(L);
            json nz = json::array();
            for (const auto& [I, v] : coords)
                if (v != 0) nz.push_back(json{{"index", I}, {"value", rat_text(v)}});
            return emit(cli,
                        report("pluecker", {{"file", file}},
                               {{"nonzero_coordinates", nz},
                                {"total_coordinates", coords.size()}}),
                        ms());
        }
        if (c_eq->parsed()) {
            IntegerPolynomial p = parse_intpoly(poly_str);
            HilbertContext ctx = make_context(n, p, rprime, s);
            EquationSet eqs = equations(ctx);
            json fams = json::array();
            auto emit_family = [&](char fam, std::size_t count, long degree) {
                fams.push_back(json{{"family", std::string(1, fam)},
                                    {"count", count},
                                    {"degree", degree}});
            };
            emit_family('A', eqs.countA(), eqs.degreeA());
            emit_family('B', eqs.countB(), eqs.degreeBC());
            emit_family('C', eqs.countC(), eqs.degreeBC());
            json expanded = json::array();
            if (expand_budget > 0) {
                std::vector<EquationId> ids;
                for (std::size_t b = 0; b < eqs.basesA.size(); ++b)
                    ids.push_back(EquationId{'A', b, -1, {}, -1});
                for (std::size_t g = 0; g < eqs.g3.size() && !eqs.basesBC.empty(); ++g)
                    ids.push_back(EquationId{'C', 0, -1, {}, static_cast<int>(g)});
                for (const EquationId& id : ids) {
                    try {
                        SymExt e = expand_equation_element(eqs, id, expand_budget);
                        for (const auto& [slot, polyv] : e)
                            expanded.push_back(pluecker_poly_to_json(
                                polyv, id.family, id.family == 'A' ? eqs.degreeA()
                                                                   : eqs.degreeBC()));
                    } catch (const size_guard_error&) {
                        expanded.push_back(json{{"family", std::string(1, id.family)},
                                                {"unexpanded", id.label()}});
                    }
                }
            }
            return emit(cli,
                        report("equations",
                               {{"n", n}, {"p", p.text()}, {"rprime", rprime}, {"s", s}},
                               {{"families", fams},
                                {"g3_elements", eqs.g3.size()},
                                {"expanded", expanded}}),
                        ms());
        }
        if (c_mem->parsed()) {
            GrassmannPoint L = grassmann_from_json(load_json_file(file));
            IntegerPolynomial p = parse_intpoly(poly_str);
            HilbertContext ctx = make_context(L.n, p, rprime, L.s);
            GroupSample sample = default_group_sample(L.n, cli.seed);
            MembershipReport rep_ = membership_test(L, ctx, sample);
            return emit(cli,
                        report("membership",
                               {{"file", file}, {"p", p.text()}, {"rprime", rprime},
                                {"seed", cli.seed}},
                               membership_report_to_json(rep_)),
                        ms());
        }
        if (c_vp->parsed()) {
            json out = run_verify_paper(cli.seed, negative_control);
            json rep_ = report("verify-paper", {{"seed", cli.seed}}, out,
                               out.at("all_ok").get<bool>());
            return emit(cli, rep_, ms());
        }
    } catch (const size_guard_error& e) {
        std::cerr << "SizeGuardExceeded: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << e.what() << "\n";
        return e.kind == "ParseError" ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
