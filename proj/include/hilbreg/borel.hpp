#pragma once
#include <string>
#include <vector>

#include "hilbreg/hilbert.hpp"
#include "hilbreg/term.hpp"

namespace hilbreg {

// Strongly stable monomial ideal given by its minimal generators, sorted by
// ascending degree and descending DegRevLex within a degree.
struct BorelIdeal {
    int n = 0;
    TermList gens;

    bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
    bool is_zero_ideal() const { return gens.empty(); }
    bool contains(const Term& u) const;
    std::string text() const { return term_list_text(gens); }
    bool operator==(const BorelIdeal& o) const { return n == o.n && gens == o.gens; }
};

// Validates that M generates a strongly stable ideal (every elevation of every
// generator stays inside) and prunes to inclusion-minimal generators.
// Throws NotStronglyStable.
BorelIdeal minimal_generators(int n, const std::vector<Term>& M);

// J^sat: divide each generator by its full x_0 power, re-minimalize.
BorelIdeal saturate(const BorelIdeal& J);

// Maximal degree of a minimal generator; 0 for the zero and unit ideals.
long regularity(const BorelIdeal& J);

// Basis of J_{>= s} = all degree-s monomials of J; requires s >= regularity(J).
TermList truncation(const BorelIdeal& J, long s);

// p(s) ascending positions inside {1..N(s)} picking degree-s terms.
struct MultiIndex {
    int n = 0;
    long s = 0;
    std::vector<long> indices;
};
MultiIndex make_multiindex(int n, long s, std::vector<long> indices);  // validates

// J(I): ideal generated by the degree-s terms whose position is NOT in I.
struct ComplementIdeal {
    int n = 0;
    long s = 0;
    TermList gens;
    bool borel = false;
};
ComplementIdeal ideal_from_multiindex(const MultiIndex& I);

// Positions of N(J)_s in monomial_basis(n,s); inverse of ideal_from_multiindex
// up to saturation. Requires s >= regularity(J).
MultiIndex multiindex_of(const BorelIdeal& J, long s);

// All saturated strongly stable J with Hilbert polynomial p and regularity <= r'.
// Lattice walk over elevation-closed degree-r' subsets with pruning;
// deterministic output order.
std::vector<BorelIdeal> enumerate_borel(int n, const IntegerPolynomial& p, long rprime);

enum class MultiIndexClass { NotBorel, InS, InS_p, InS_rprime_p };

// Membership level of I among S^[s] (Borel), S^[s]_p (+ right Hilbert
// polynomial), S^[r',s]_p (+ regularity of the saturation <= r').
MultiIndexClass classify_multiindex(const MultiIndex& I, const IntegerPolynomial& p, long rprime);

std::string multiindex_class_name(MultiIndexClass c);

// Canonical generator order used everywhere: degree ascending, DegRevLex
// descending inside a degree.
void sort_generators(TermList& gens);

}  // namespace hilbreg
