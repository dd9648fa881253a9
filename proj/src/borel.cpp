#include "hilbreg/borel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hilbreg/errors.hpp"

namespace hilbreg {

void sort_generators(TermList& gens) {
    std::sort(gens.begin(), gens.end(), [](const Term& a, const Term& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return drl_greater(a, b);
    });
}

bool BorelIdeal::contains(const Term& u) const {
    for (const Term& g : gens)
        if (g.degree() <= u.degree() && divides(g, u)) return true;
    return false;
}

static TermList prune_minimal(std::vector<Term> M) {
    // drop duplicates, then anything divisible by another element
    std::sort(M.begin(), M.end(), [](const Term& a, const Term& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return drl_greater(a, b);
    });
    M.erase(std::unique(M.begin(), M.end()), M.end());
    TermList out;
    for (const Term& u : M) {
        bool redundant = false;
        for (const Term& g : out)
            if (divides(g, u)) { redundant = true; break; }
        if (!redundant) out.push_back(u);
    }
    return out;
}

BorelIdeal minimal_generators(int n, const std::vector<Term>& M) {
    for (const Term& u : M)
        if (u.nvars() != n + 1) throw err_dimension_mismatch("generator over wrong variable count");
    BorelIdeal J;
    J.n = n;
    J.gens = prune_minimal(M);
    for (const Term& g : J.gens) {
        if (g.is_one()) continue;
        for (const Term& el : elevations(g))
            if (!J.contains(el))
                throw err_not_strongly_stable("elevation " + term_text(el) + " of generator " +
                                              term_text(g) + " escapes the ideal");
    }
    return J;
}

BorelIdeal saturate(const BorelIdeal& J) {
    std::vector<Term> M;
    for (const Term& g : J.gens) {
        std::vector<int> e = g.e;
        e[0] = 0;
        M.push_back(Term(std::move(e)));
    }
    BorelIdeal out;
    out.n = J.n;
    out.gens = prune_minimal(std::move(M));
    return out;
}

long regularity(const BorelIdeal& J) {
    long reg = 0;
    for (const Term& g : J.gens) reg = std::max(reg, g.degree());
    return reg;
}

TermList truncation(const BorelIdeal& J, long s) {
    if (s < regularity(J))
        throw err_invalid_argument("truncation degree " + std::to_string(s) +
                                   " below regularity " + std::to_string(regularity(J)));
    return ideal_degree_part(J.n, J.gens, s);
}

MultiIndex make_multiindex(int n, long s, std::vector<long> indices) {
    Int N = binomial(n + s, n);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1 || Int(indices[i]) > N)
            throw err_invalid_argument("multi-index position out of [1, N(s)]");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw err_invalid_argument("multi-index positions must strictly increase");
    }
    return MultiIndex{n, s, std::move(indices)};
}

ComplementIdeal ideal_from_multiindex(const MultiIndex& I) {
    TermList basis = monomial_basis(I.n, I.s);
    ComplementIdeal out;
    out.n = I.n;
    out.s = I.s;
    std::set<long> in(I.indices.begin(), I.indices.end());
    for (long j = 1; j <= static_cast<long>(basis.size()); ++j)
        if (!in.count(j)) out.gens.push_back(basis[j - 1]);
    out.borel = is_borel_set(out.gens);
    return out;
}

MultiIndex multiindex_of(const BorelIdeal& J, long s) {
    if (s < regularity(J))
        throw err_invalid_argument("multiindex_of needs s >= regularity(J)");
    TermList basis = monomial_basis(J.n, s);
    std::vector<long> idx;
    for (long j = 1; j <= static_cast<long>(basis.size()); ++j)
        if (!J.contains(basis[j - 1])) idx.push_back(j);
    return MultiIndex{J.n, s, std::move(idx)};
}

std::vector<BorelIdeal> enumerate_borel(int n, const IntegerPolynomial& p, long rprime) {
    long r = gotzmann_number(p);  // throws NotAdmissible
    if (rprime < 1 || rprime > r)
        throw err_invalid_argument("enumerate_borel needs 0 < r' <= r = " + std::to_string(r));
    TermList basis = monomial_basis(n, rprime);
    long N = static_cast<long>(basis.size());
    Int qI = Int(N) - p.value_at(rprime);
    if (qI < 0 || qI > N) return {};
    long q = static_cast<long>(qI.get_si());
    if (N > 63) throw size_guard_error("enumerate_borel: N(r') = " + std::to_string(N) + " > 63");

    // elevation positions: elevations point to strictly earlier basis positions
    std::vector<std::vector<int>> elev(N);
    for (long j = 0; j < N; ++j)
        for (const Term& el : elevations(basis[j])) {
            long ppos = term_position(basis, el);
            elev[j].push_back(static_cast<int>(ppos - 1));
        }

    std::vector<BorelIdeal> out;
    std::set<std::string> seen;
    std::vector<int> chosen;
    std::vector<char> inset(N, 0);
    auto emit = [&]() {
        TermList gens;
        for (int j : chosen) gens.push_back(basis[j]);
        if (hilbert_polynomial(n, gens) != p) return;
        BorelIdeal sat = saturate(minimal_generators(n, gens));
        std::string key = sat.text();
        if (seen.insert(key).second) out.push_back(std::move(sat));
    };
    // walk positions in DegRevLex order; a term may be chosen only when all its
    // elevations (earlier positions) are already in
    auto dfs = [&](auto&& self, long j) -> void {
        if (static_cast<long>(chosen.size()) == q) {
            emit();
            return;
        }
        if (j == N || static_cast<long>(chosen.size()) + (N - j) < q) return;
        bool can_take = true;
        for (int e : elev[j])
            if (!inset[e]) { can_take = false; break; }
        if (can_take) {
            chosen.push_back(static_cast<int>(j));
            inset[j] = 1;
            self(self, j + 1);
            chosen.pop_back();
            inset[j] = 0;
        }
        self(self, j + 1);
    };
    if (q >= 0) dfs(dfs, 0);

    std::sort(out.begin(), out.end(), [](const BorelIdeal& A, const BorelIdeal& B) {
        if (A.gens.size() != B.gens.size()) return A.gens.size() < B.gens.size();
        for (std::size_t i = 0; i < A.gens.size(); ++i) {
            if (A.gens[i] == B.gens[i]) continue;
            if (A.gens[i].degree() != B.gens[i].degree())
                return A.gens[i].degree() < B.gens[i].degree();
            return drl_greater(A.gens[i], B.gens[i]);
        }
        return false;
    });
    return out;
}

MultiIndexClass classify_multiindex(const MultiIndex& I, const IntegerPolynomial& p, long rprime) {
    ComplementIdeal JI = ideal_from_multiindex(I);
    if (!JI.borel) return MultiIndexClass::NotBorel;
    if (hilbert_polynomial(I.n, JI.gens) != p) return MultiIndexClass::InS;
    BorelIdeal J = minimal_generators(I.n, JI.gens);
    if (regularity(saturate(J)) > rprime) return MultiIndexClass::InS_p;
    return MultiIndexClass::InS_rprime_p;
}

std::string multiindex_class_name(MultiIndexClass c) {
    switch (c) {
        case MultiIndexClass::NotBorel: return "NotBorel";
        case MultiIndexClass::InS: return "InS";
        case MultiIndexClass::InS_p: return "InS_p";
        case MultiIndexClass::InS_rprime_p: return "InS_rprime_p";
    }
    return "?";
}

}  // namespace hilbreg
