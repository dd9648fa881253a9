#pragma once
#include <map>
#include <string>
#include <vector>

#include "hilbreg/borel.hpp"
#include "hilbreg/matrix.hpp"

namespace hilbreg {

// ---------------------------------------------------------------------------
// Parameter ring Q[c_{alpha,gamma}] for symbolic marked-set tails.
// ---------------------------------------------------------------------------

class ParamTable {
public:
    // Registers (head, tail) and returns its id; idempotent.
    int id(const Term& head, const Term& tail);
    int find(const Term& head, const Term& tail) const;  // -1 if absent
    const std::pair<Term, Term>& var(int id) const { return vars_.at(id); }
    std::string name(int id) const;  // c[x2^2][x1*x0]
    int size() const { return static_cast<int>(vars_.size()); }

private:
    std::vector<std::pair<Term, Term>> vars_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index_;
};

// Multivariate polynomial in the c-parameters over Q; canonical sorted-term
// form, zero represented by an empty term map.
class ParamPoly {
public:
    using Monomial = std::vector<int>;  // sorted variable ids, with repetition

    ParamPoly() = default;
    static ParamPoly constant(const Rat& c);
    static ParamPoly variable(int id);

    bool is_zero() const { return terms_.empty(); }
    long degree() const;  // -1 for zero

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator<(const ParamPoly& o) const { return terms_ < o.terms_; }

    Rat eval(const std::vector<Rat>& assignment) const;
    std::string text(const ParamTable& table) const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }

private:
    std::map<Monomial, Rat> terms_;
    void strip_zeros();
};

inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const ParamPoly& c) { return c.is_zero(); }

// ---------------------------------------------------------------------------
// Marked polynomials and marked sets. f_alpha = x^alpha - sum c_{alpha,gamma} x^gamma:
// the stored tail coefficient is c_{alpha,gamma} (the subtracted one).
// ---------------------------------------------------------------------------

template <class C>
struct MarkedPoly {
    Term head;
    std::vector<std::pair<Term, C>> tail;  // descending by term, zero coefficients dropped
    long degree() const { return head.degree(); }
};

template <class C>
struct MarkedSet {
    BorelIdeal J;
    long s = 0;
    std::vector<MarkedPoly<C>> polys;  // heads = truncation(J, s), descending
};

using RationalMarkedSet = MarkedSet<Rat>;
using ParametricMarkedSet = MarkedSet<ParamPoly>;

// Homogeneous polynomial as descending term -> coefficient map.
template <class C>
using HPoly = std::map<Term, C, DrlGreater>;

// Validated J_{>=s}-marked set from explicit rational tails (TailInIdeal /
// DegreeMismatch / HeadMissing on bad input). Heads not mentioned in `tails`
// get zero tails.
RationalMarkedSet make_marked_set(
    const BorelIdeal& J, long s,
    const std::map<Term, std::map<Term, Rat, DrlGreater>, DrlGreater>& tails);

// Fresh parameter per admissible (head, tail) pair: heads = truncation(J,s),
// tails over N(J)_s.
ParametricMarkedSet make_parametric_marked_set(const BorelIdeal& J, long s, ParamTable& table);

// F^(t): multiplicative closure { x^eta f_alpha : max(x^eta) <= min(x^alpha) },
// one element per monomial of J_t, marked at x^{eta+alpha}.
template <class C>
std::vector<MarkedPoly<C>> multiplicative_span(const MarkedSet<C>& F, long t);

// Head-term rewriting against F^(t): returns the normal form supported on
// N(J)_t. Rewrites the DegRevLex-largest J-term first; terminates because each
// step replaces a term by strictly smaller ones. The iteration cap
// |J_t| * |supp| * 4 only trips on broken invariants.
template <class C>
HPoly<C> reduce(HPoly<C> f, const MarkedSet<C>& F);

// Marked-basis criterion: reduce(x_i f_alpha) = 0 for every generator and
// every x_i with i > min(head).
bool is_marked_basis(const RationalMarkedSet& F);

// Exact ranks rk I_t of span{ x^eta f_alpha : deg = t } for s <= t <= t_max.
// Also asserts rk(I_t) >= rk(J_t) throughout.
std::vector<std::pair<long, Int>> rank_profile(const RationalMarkedSet& F, long t_max);

// Same ranks, compared against q(t) = N(t) - p(t) for a target polynomial.
struct RankProfileEntry {
    long t = 0;
    Int rank;
    Int q;
    bool matches = false;
};
std::vector<RankProfileEntry> rank_profile(const RationalMarkedSet& F, long t_max,
                                           const IntegerPolynomial& p);

// All N(J)_{s+1}-coefficients of reduce(x_i f_alpha) over the parametric marked
// set; their common zero locus is the J_{>=s}-marked scheme. Sorted, deduplicated.
std::vector<ParamPoly> marked_scheme_equations(const BorelIdeal& J, long s, ParamTable& table);

// Gaussian elimination of a q(s) x N(s) subspace basis against the J_s
// columns; ChartMiss when that minor is singular. Inverse of marked_set_matrix.
RationalMarkedSet marked_set_from_subspace(const QMatrix& L, const BorelIdeal& J, long s);

// Rows of the marked set as vectors over monomial_basis(n, s).
QMatrix marked_set_matrix(const RationalMarkedSet& F);

RationalMarkedSet evaluate_marked_set(const ParametricMarkedSet& F, const std::vector<Rat>& c);

// ---------------------------------------------------------------------------
// templates
// ---------------------------------------------------------------------------

namespace detail {

// x^theta in J_t splits uniquely as eta + alpha with max(eta) <= min(alpha),
// |alpha| = s: alpha takes the s largest variables.
inline std::pair<Term, Term> star_decompose(const Term& w, long s) {
    std::vector<int> asc;
    for (int i = 0; i < w.nvars(); ++i)
        for (int k = 0; k < w.e[i]; ++k) asc.push_back(i);
    long t = static_cast<long>(asc.size());
    std::vector<int> eta(w.nvars(), 0), alpha(w.nvars(), 0);
    for (long k = 0; k < t - s; ++k) eta[asc[k]]++;
    for (long k = t - s; k < t; ++k) alpha[asc[k]]++;
    return {Term(std::move(eta)), Term(std::move(alpha))};
}

}  // namespace detail

template <class C>
std::vector<MarkedPoly<C>> multiplicative_span(const MarkedSet<C>& F, long t) {
    if (t < F.s) throw err_invalid_argument("multiplicative_span needs t >= s");
    std::map<std::vector<int>, const MarkedPoly<C>*> by_head;
    for (const auto& f : F.polys) by_head[f.head.e] = &f;
    std::vector<MarkedPoly<C>> out;
    for (const Term& w : ideal_degree_part(F.J.n, F.J.gens, t)) {
        auto [eta, alpha] = detail::star_decompose(w, F.s);
        auto it = by_head.find(alpha.e);
        if (it == by_head.end())
            throw internal_error("star decomposition left the marked heads: " + term_text(w));
        MarkedPoly<C> g;
        g.head = w;
        for (const auto& [gamma, c] : it->second->tail) g.tail.emplace_back(mono_mul(eta, gamma), c);
        out.push_back(std::move(g));
    }
    return out;
}

template <class C>
HPoly<C> reduce(HPoly<C> f, const MarkedSet<C>& F) {
    if (f.empty()) return f;
    long t = f.begin()->first.degree();
    std::vector<MarkedPoly<C>> span = multiplicative_span(F, t);
    std::map<Term, const MarkedPoly<C>*, DrlGreater> by_head;
    for (const auto& g : span) by_head[g.head] = &g;
    std::size_t cap = span.size() * std::max<std::size_t>(f.size(), 1) * 4 + 8;
    std::size_t steps = 0;
    while (true) {
        // largest J-term in the support (map is descending)
        auto it = f.begin();
        const MarkedPoly<C>* g = nullptr;
        for (; it != f.end(); ++it) {
            if (coeff_is_zero(it->second)) continue;
            auto h = by_head.find(it->first);
            if (h != by_head.end()) { g = h->second; break; }
        }
        if (!g) break;
        if (++steps > cap)
            throw internal_error("reduce exceeded its iteration cap; invariant violated");
        C c = it->second;
        f.erase(it);
        for (const auto& [gamma, cg] : g->tail) {
            auto [pos, fresh] = f.emplace(gamma, c * cg);
            if (!fresh) pos->second = pos->second + c * cg;
        }
        for (auto jt = f.begin(); jt != f.end();) {
            if (coeff_is_zero(jt->second)) jt = f.erase(jt);
            else ++jt;
        }
    }
    return f;
}

}  // namespace hilbreg
