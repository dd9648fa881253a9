#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "hilbreg/errors.hpp"
#include "hilbreg/rational.hpp"

namespace hilbreg {

// Monomial x^alpha in x_0..x_n given by its exponent vector (alpha_0..alpha_n).
struct Term {
    std::vector<int> e;

    Term() = default;
    explicit Term(std::vector<int> exps) : e(std::move(exps)) {
        for (int x : e)
            if (x < 0) throw err_invalid_argument("negative exponent in term");
    }

    int nvars() const { return static_cast<int>(e.size()); }  // n+1
    int n() const { return nvars() - 1; }
    long degree() const {
        long d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_one() const { return degree() == 0; }
    bool operator==(const Term& o) const { return e == o.e; }
    bool operator!=(const Term& o) const { return e != o.e; }
};

enum class Ordering { LT, EQ, GT };

// DegRevLex with x_0 < ... < x_n: higher total degree wins; at equal degree the
// term with the smaller exponent on the smallest differing variable is larger.
Ordering compare_degrevlex(const Term& u, const Term& v);

inline bool drl_greater(const Term& u, const Term& v) {
    return compare_degrevlex(u, v) == Ordering::GT;
}
inline bool drl_less(const Term& u, const Term& v) {
    return compare_degrevlex(u, v) == Ordering::LT;
}

// Comparator for descending (DegRevLex-largest first) containers.
struct DrlGreater {
    bool operator()(const Term& u, const Term& v) const { return drl_greater(u, v); }
};

// Sequence of same-degree terms, strictly descending in DegRevLex; 1-based positions.
using TermList = std::vector<Term>;

// All C(n+t,n) terms of degree t, descending; element at 1-based position j is x^{alpha(j)}.
TermList monomial_basis(int n, long t);

// 1-based position of u in a descending basis; 0 if absent.
long term_position(const TermList& basis, const Term& u);

int min_var(const Term& u);  // smallest i with alpha_i > 0; error on degree 0
int max_var(const Term& u);

bool divides(const Term& u, const Term& v);
Term mono_mul(const Term& u, const Term& v);
Term mul_var(const Term& u, int i);

// All elementary elevation moves (x_j/x_i)u with x_i | u and j > i,
// deduplicated, descending.
std::vector<Term> elevations(const Term& u);

// True iff the same-degree set M is closed under elevations. Mixed degrees error.
bool is_borel_set(const TermList& M);

// Smallest elevation-closed superset, descending.
TermList borel_closure(const std::vector<Term>& M);

// Text form: "x3^2*x1" (descending variable index, '^' only when exponent > 1), "1".
std::string term_text(const Term& u);
Term parse_term(const std::string& s, int n);

std::string term_list_text(const TermList& ts);

}  // namespace hilbreg
