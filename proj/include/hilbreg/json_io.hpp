#pragma once
#include <json.hpp>

#include "hilbreg/borel.hpp"
#include "hilbreg/intpoly.hpp"
#include "hilbreg/marked.hpp"
#include "hilbreg/pluecker.hpp"
#include "hilbreg/term.hpp"

// JSON forms:
//   Term                exponent array [a0,...,an]
//   IntegerPolynomial   ["num/den", ...] low to high
//   BorelIdeal          { "n": 3, "generators": ["x3^2", "x3*x2"] }
//   MultiIndex          { "n": 3, "s": 2, "indices": [6,7,8,9,10] }
//   MarkedSet           { "J": {...}, "s": 2, "polys": [ { "head": "x2^2",
//                         "tail": { "x1*x0": "1/2" } } ] }  (parametric tails
//                         are "c[head][tail]" strings)
//   GrassmannPoint      { "n": 3, "s": 2, "rows": [["1","0",...], ...] }
//   EquationSet entry   { "family": "A"|"B"|"C", "degree": k,
//                         "terms": [ { "coeff": "1", "vars": [[3,5,6],[...]] } ] }
//                       or { ..., "factors": {...} } when left unexpanded

namespace hilbreg {

nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j, int n);

nlohmann::json intpoly_to_json(const IntegerPolynomial& p);
IntegerPolynomial intpoly_from_json(const nlohmann::json& j);

nlohmann::json borel_to_json(const BorelIdeal& J);
BorelIdeal borel_from_json(const nlohmann::json& j);

nlohmann::json multiindex_to_json(const MultiIndex& I);
MultiIndex multiindex_from_json(const nlohmann::json& j);

nlohmann::json marked_set_to_json(const RationalMarkedSet& F);
nlohmann::json marked_set_to_json(const ParametricMarkedSet& F, const ParamTable& table);
RationalMarkedSet marked_set_from_json(const nlohmann::json& j);

nlohmann::json grassmann_to_json(const GrassmannPoint& L);
GrassmannPoint grassmann_from_json(const nlohmann::json& j);

nlohmann::json pluecker_poly_to_json(const PlueckerPoly& p, char family, long degree);
nlohmann::json linear_form_to_json(const LinearForm& f);
nlohmann::json membership_report_to_json(const MembershipReport& rep);

}  // namespace hilbreg
