#include "hilbreg/json_io.hpp"

#include "hilbreg/errors.hpp"

using nlohmann::json;

namespace hilbreg {

json term_to_json(const Term& t) { return json(t.e); }

Term term_from_json(const json& j, int n) {
    if (j.is_string()) return parse_term(j.get<std::string>(), n);
    if (!j.is_array()) throw err_parse("term JSON must be an exponent array or a string");
    std::vector<int> e = j.get<std::vector<int>>();
    if (static_cast<int>(e.size()) != n + 1) throw err_parse("term exponent array of wrong length");
    return Term(std::move(e));
}

json intpoly_to_json(const IntegerPolynomial& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_text(c));
    return arr;
}

IntegerPolynomial intpoly_from_json(const json& j) {
    if (j.is_string()) return parse_intpoly(j.get<std::string>());
    std::vector<Rat> coeffs;
    for (const auto& e : j) coeffs.push_back(parse_rat(e.get<std::string>()));
    return IntegerPolynomial(std::move(coeffs));
}

json borel_to_json(const BorelIdeal& J) {
    json gens = json::array();
    for (const Term& g : J.gens) gens.push_back(term_text(g));
    return json{{"n", J.n}, {"generators", gens}};
}

BorelIdeal borel_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Term> gens;
    for (const auto& g : j.at("generators")) gens.push_back(term_from_json(g, n));
    return minimal_generators(n, gens);
}

json multiindex_to_json(const MultiIndex& I) {
    return json{{"n", I.n}, {"s", I.s}, {"indices", I.indices}};
}

MultiIndex multiindex_from_json(const json& j) {
    return make_multiindex(j.at("n").get<int>(), j.at("s").get<long>(),
                           j.at("indices").get<std::vector<long>>());
}

json marked_set_to_json(const RationalMarkedSet& F) {
    json polys = json::array();
    for (const auto& f : F.polys) {
        json tail = json::object();
        for (const auto& [gamma, c] : f.tail) tail[term_text(gamma)] = rat_text(c);
        polys.push_back(json{{"head", term_text(f.head)}, {"tail", tail}});
    }
    return json{{"J", borel_to_json(F.J)}, {"s", F.s}, {"polys", polys}};
}

json marked_set_to_json(const ParametricMarkedSet& F, const ParamTable& table) {
    json polys = json::array();
    for (const auto& f : F.polys) {
        json tail = json::object();
        for (const auto& [gamma, c] : f.tail) tail[term_text(gamma)] = c.text(table);
        polys.push_back(json{{"head", term_text(f.head)}, {"tail", tail}});
    }
    return json{{"J", borel_to_json(F.J)}, {"s", F.s}, {"polys", polys}};
}

RationalMarkedSet marked_set_from_json(const json& j) {
    BorelIdeal J = borel_from_json(j.at("J"));
    long s = j.at("s").get<long>();
    std::map<Term, std::map<Term, Rat, DrlGreater>, DrlGreater> tails;
    for (const auto& p : j.at("polys")) {
        Term head = term_from_json(p.at("head"), J.n);
        std::map<Term, Rat, DrlGreater> tail;
        for (const auto& [k, v] : p.at("tail").items())
            tail.emplace(parse_term(k, J.n), parse_rat(v.get<std::string>()));
        tails.emplace(std::move(head), std::move(tail));
    }
    return make_marked_set(J, s, tails);
}

json grassmann_to_json(const GrassmannPoint& L) {
    json rows = json::array();
    for (std::size_t i = 0; i < L.rows.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < L.rows.cols; ++j) row.push_back(rat_text(L.rows.at(i, j)));
        rows.push_back(row);
    }
    return json{{"n", L.n}, {"s", L.s}, {"rows", rows}};
}

GrassmannPoint grassmann_from_json(const json& j) {
    int n = j.at("n").get<int>();
    long s = j.at("s").get<long>();
    const auto& rows = j.at("rows");
    if (rows.empty()) throw err_parse("point matrix has no rows");
    QMatrix M(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != M.cols) throw err_parse("ragged point matrix");
        for (std::size_t c = 0; c < M.cols; ++c)
            M.at(i, c) = parse_rat(rows[i][c].get<std::string>());
    }
    return make_grassmann_point(n, s, std::move(M));
}

json pluecker_poly_to_json(const PlueckerPoly& p, char family, long degree) {
    json terms = json::array();
    for (const auto& [mono, c] : p.terms()) {
        json vars = json::array();
        for (const auto& I : mono) vars.push_back(I);
        terms.push_back(json{{"coeff", rat_text(c)}, {"vars", vars}});
    }
    return json{{"family", std::string(1, family)}, {"degree", degree}, {"terms", terms}};
}

json linear_form_to_json(const LinearForm& f) {
    json terms = json::array();
    for (const auto& [I, c] : f.terms)
        terms.push_back(json{{"coeff", rat_text(c)}, {"index", I}});
    return json{{"label", f.label}, {"terms", terms}};
}

json membership_report_to_json(const MembershipReport& rep) {
    json viols = json::array();
    for (const auto& v : rep.violations)
        viols.push_back(json{{"equation", v.id.label()},
                             {"slot", v.slot},
                             {"value", rat_text(v.value)}});
    return json{{"verdict", verdict_name(rep.verdict)},
                {"violations", viols},
                {"fallback_oracle_used", rep.fallback_oracle_used},
                {"oracle_confirmed", rep.oracle_confirmed},
                {"group_sample_size", rep.group_sample_size},
                {"witness_chart", rep.witness_chart},
                {"rank_I1", rep.rank_I1.get_str()}};
}

}  // namespace hilbreg
