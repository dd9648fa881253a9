#include "hilbreg/hilbert.hpp"

#include <algorithm>

#include "hilbreg/errors.hpp"

namespace hilbreg {

GotzmannDecomposition gotzmann_decomposition(const IntegerPolynomial& p) {
    if (!p.is_integer_valued()) throw err_not_admissible("polynomial is not integer-valued");
    GotzmannDecomposition out;
    IntegerPolynomial rem = p;
    long i = 0;
    long prev_a = -1;
    while (!rem.is_zero()) {
        long a = rem.degree();
        if (a == 0) {
            // constant tail: c more summands with a_i = 0
            Rat c = rem(Rat(0));
            if (!is_integer(c) || c < 0) throw err_not_admissible("constant remainder " + rat_text(c));
            long ci = static_cast<long>(c.get_num().get_si());
            for (long k = 0; k < ci; ++k) out.a.push_back(0);
            out.r = i + ci;
            return out;
        }
        if (rem.leading() < 0)
            throw err_not_admissible("negative leading coefficient in greedy remainder");
        if (prev_a >= 0 && a > prev_a) throw err_not_admissible("greedy degrees not non-increasing");
        prev_a = a;
        ++i;
        // subtract C(t + a - i + 1, a)
        rem = rem - binomial_poly(a, a - i + 1);
        out.a.push_back(a);
        if (i > 1000000) throw err_not_admissible("greedy decomposition does not terminate");
    }
    out.r = i;
    return out;
}

long gotzmann_number(const IntegerPolynomial& p) { return gotzmann_decomposition(p).r; }

bool is_admissible(const IntegerPolynomial& p) {
    try {
        gotzmann_decomposition(p);
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

long macaulay_growth(long a, long t) {
    if (t < 1) throw err_invalid_argument("macaulay_growth needs t >= 1");
    if (a < 0) throw err_invalid_argument("macaulay_growth needs a >= 0");
    if (a == 0) return 0;
    // t-th Macaulay representation a = C(k_t,t) + C(k_{t-1},t-1) + ... + C(k_j,j)
    Int rem(a);
    long j = t;
    Int growth(0);
    while (rem > 0 && j >= 1) {
        long k = j;
        while (binomial(k + 1, j) <= rem) ++k;
        rem -= binomial(k, j);
        growth += binomial(k + 1, j + 1);
        --j;
    }
    if (rem != 0) throw internal_error("macaulay representation failed");
    return static_cast<long>(growth.get_si());
}

TermList ideal_degree_part(int n, const TermList& gens, long t) {
    TermList out;
    for (const Term& b : monomial_basis(n, t)) {
        for (const Term& g : gens) {
            if (g.degree() <= t && divides(g, b)) {
                out.push_back(b);
                break;
            }
        }
    }
    return out;
}

Int hilbert_function(int n, const TermList& gens, long t) {
    if (t < 0) throw err_invalid_argument("hilbert_function needs t >= 0");
    return binomial(n + t, n) - Int(static_cast<long>(ideal_degree_part(n, gens, t).size()));
}

IntegerPolynomial hilbert_polynomial(int n, const TermList& gens) {
    long reg = 0;
    for (const Term& g : gens) reg = std::max(reg, g.degree());
    std::vector<std::pair<Rat, Rat>> pts;
    for (long t = reg; t <= reg + n; ++t)
        pts.emplace_back(Rat(t), Rat(hilbert_function(n, gens, t)));
    IntegerPolynomial hp = IntegerPolynomial::interpolate(pts);
    for (long t = reg + n + 1; t <= reg + n + 2; ++t) {
        if (hp(Rat(t)) != Rat(hilbert_function(n, gens, t)))
            throw internal_error("Hilbert polynomial interpolation mismatch at t=" +
                                 std::to_string(t));
    }
    return hp;
}

HilbertContext make_context(int n, const IntegerPolynomial& p, long rprime, long s) {
    if (n <= 0) throw err_invalid_argument("context needs n > 0");
    GotzmannDecomposition dec = gotzmann_decomposition(p);  // throws NotAdmissible
    HilbertContext ctx;
    ctx.n = n;
    ctx.p = p;
    ctx.d = std::max<long>(p.degree(), 0);
    if (p.degree() >= n)
        throw err_not_admissible("deg p = " + std::to_string(p.degree()) +
                                 " is too large for subschemes of P^" + std::to_string(n));
    ctx.r = dec.r;
    ctx.rprime = rprime;
    ctx.s = s;
    if (!(rprime <= s && s <= ctx.r))
        throw err_invalid_argument("need r' <= s <= r, got r'=" + std::to_string(rprime) +
                                   ", s=" + std::to_string(s) + ", r=" + std::to_string(ctx.r));
    ctx.Ns = ctx.N(s);
    ctx.ps = ctx.p_at(s);
    ctx.qs = ctx.q(s);
    if (!(ctx.ps > 0 && ctx.ps < ctx.Ns))
        throw err_invalid_argument("context needs 0 < p(s) < N(s); p(s)=" + ctx.ps.get_str() +
                                   ", N(s)=" + ctx.Ns.get_str());
    ctx.qps1 = ctx.qprime(s + 1);
    ctx.qpps1 = ctx.qsecond(s + 1);
    if (ctx.qs + ctx.ps != ctx.Ns || ctx.qprime(s) + ctx.qsecond(s) != ctx.qs)
        throw internal_error("context bookkeeping broken");
    if (!ctx.Ns.fits_slong_p())
        throw size_guard_error("N(s) = " + ctx.Ns.get_str() + " exceeds the desk-scale guard");
    ctx.Eprime = binomial(ctx.Ns.get_si(), ctx.ps.get_si());
    Int Nr = ctx.N(ctx.r);
    if (Nr <= 2000) ctx.E = binomial(Nr.get_si(), ctx.p_at(ctx.r).get_si());
    return ctx;
}

}  // namespace hilbreg
