#pragma once
#include <optional>
#include <vector>

#include "hilbreg/combinatorics.hpp"
#include "hilbreg/intpoly.hpp"
#include "hilbreg/term.hpp"

namespace hilbreg {

// Gotzmann decomposition p(t) = sum_{i=1..r} C(t + a_i - i + 1, a_i) with
// a_1 >= ... >= a_r >= 0, computed greedily (a_i = degree of the remainder).
// Throws NotAdmissible when the greedy sequence breaks down.
struct GotzmannDecomposition {
    std::vector<long> a;
    long r = 0;
};
GotzmannDecomposition gotzmann_decomposition(const IntegerPolynomial& p);

long gotzmann_number(const IntegerPolynomial& p);

bool is_admissible(const IntegerPolynomial& p);

// Macaulay's upper bound a^<t> for the growth of a Hilbert function value a
// from degree t to t+1; 0 for a = 0. Requires t >= 1.
long macaulay_growth(long a, long t);

// dim (P/J)_t = N(t) - |J_t| for the monomial ideal generated by `gens` in
// x_0..x_n; J_t enumerated by divisibility.
Int hilbert_function(int n, const TermList& gens, long t);

// Degree-t monomials lying in the ideal, descending.
TermList ideal_degree_part(int n, const TermList& gens, long t);

// Hilbert polynomial of P/J by exact interpolation at n+1 points past the
// maximal generator degree, verified at two further points.
IntegerPolynomial hilbert_polynomial(int n, const TermList& gens);

// Dimension bookkeeping for a fixed admissible p, regularity bound r' and
// working degree s with r' <= s <= r. d = deg p; N(t) = C(n+t,n);
// q(t) = N(t)-p(t); q'(t) = C(n-d-1+t, n-d-1); q''(t) = q(t)-q'(t);
// E' = C(N(s),p(s)); E = C(N(r),p(r)) when affordable.
struct HilbertContext {
    int n = 0;
    IntegerPolynomial p;
    long d = 0;
    long r = 0;
    long rprime = 0;
    long s = 0;

    Int N(long t) const { return binomial(n + t, n); }
    Int p_at(long t) const { return p.value_at(t); }
    Int q(long t) const { return N(t) - p_at(t); }
    Int qprime(long t) const { return binomial(n - d - 1 + t, n - d - 1); }
    Int qsecond(long t) const { return q(t) - qprime(t); }

    Int Ns, ps, qs;           // at t = s
    Int qps1, qpps1;          // q'(s+1), q''(s+1)
    Int Eprime;               // C(N(s), p(s))
    std::optional<Int> E;     // C(N(r), p(r)), only when N(r) is small enough
};

HilbertContext make_context(int n, const IntegerPolynomial& p, long rprime, long s);

}  // namespace hilbreg
