#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbreg/hilbert.hpp"
#include "hilbreg/marked.hpp"
#include "hilbreg/matrix.hpp"

namespace hilbreg {

// ---------------------------------------------------------------------------
// Points of the Grassmannian and their Pluecker coordinates.
// ---------------------------------------------------------------------------

// q(s) x N(s) full-rank rational matrix; rows span L = I_s in the degree-s
// monomial basis (columns ordered like monomial_basis(n, s)).
struct GrassmannPoint {
    int n = 0;
    long s = 0;
    QMatrix rows;
};

// Validates column count and full row rank (RankDeficient otherwise).
GrassmannPoint make_grassmann_point(int n, long s, QMatrix rows);

// Delta_I(L) = sign(I^c, I) * det(rows on columns I^c), memoized per subset.
// Coordinates are projective: row operations rescale all of them together.
class MinorOracle {
public:
    explicit MinorOracle(const GrassmannPoint& L);
    const Rat& delta(const std::vector<long>& I) const;  // |I| = N - q
    long N() const { return N_; }
    long p() const { return N_ - static_cast<long>(L_->rows.rows); }

private:
    const GrassmannPoint* L_;
    long N_;
    mutable std::map<std::vector<long>, Rat> memo_;
};

// Full coordinate table, keyed by the p(s)-subsets ascending;
// guarded to C(N,p) <= 100000.
std::map<std::vector<long>, Rat> pluecker_coordinates(const GrassmannPoint& L);

// ---------------------------------------------------------------------------
// Exterior elements. Numeric coefficients for evaluation, polynomials in the
// Pluecker variables D[I] for the symbolic side.
// ---------------------------------------------------------------------------

// slots are 1-based basis positions, tuples strictly ascending
using WedgeTuple = std::vector<int>;
using ExtVec = std::map<WedgeTuple, Rat>;

ExtVec wedge_ext(const ExtVec& a, const ExtVec& b);
bool ext_is_zero(const ExtVec& e);

// Monomial = sorted multiset of Delta indices; polynomial over Q.
class PlueckerPoly {
public:
    using Monomial = std::vector<std::vector<long>>;

    PlueckerPoly() = default;
    static PlueckerPoly variable(std::vector<long> I, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    long degree() const;  // Delta-degree; -1 for zero
    PlueckerPoly operator+(const PlueckerPoly& o) const;
    PlueckerPoly operator*(const PlueckerPoly& o) const;
    PlueckerPoly operator*(const Rat& c) const;
    PlueckerPoly& operator+=(const PlueckerPoly& o);
    Rat eval(const MinorOracle& oracle) const;
    std::string text() const;  // e.g. "D[1,2,4]*D[2,3,4]-2*D[1,3,4]^2" (power shown expanded)
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool operator==(const PlueckerPoly& o) const { return terms_ == o.terms_; }

private:
    std::map<Monomial, Rat> terms_;
};

using SymExt = std::map<WedgeTuple, PlueckerPoly>;

// delta^(m)_K = sum_{H subset K, |H| = m} eps_{K\H} Delta_{K\H} e_{h_1} ^ ... ^ e_{h_m},
// eps the shuffle parity of (K\H, H) inside K. Requires |K| = p + m, 1 <= m <= q.
SymExt delta_sym(const std::vector<long>& K, long m, long N, long p);
ExtVec delta_eval(const std::vector<long>& K, long m, const MinorOracle& oracle);

// Degree-s position j -> degree-(s+1) position of x_i * x^{alpha(j)}.
// Multiplication preserves DegRevLex order, so ascending tuples stay ascending.
std::vector<int> mul_slot_map(int n, long s, int i);

ExtVec map_slots(const ExtVec& e, const std::vector<int>& slot_map);
SymExt map_slots(const SymExt& e, const std::vector<int>& slot_map);

// ---------------------------------------------------------------------------
// Generator families of Prop-style index sets (formal reading; see README).
// W positions carry the degree-s monomials with all of x_0..x_d absent.
// ---------------------------------------------------------------------------

std::vector<long> pure_tail_positions(int n, long s, long d);  // W: k[x_{d+1}..x_n]_s

// x_i delta^(1)_{K' u {h}} - relsign * x_ibar delta^(1)_{K' u {hbar}} whose
// k[x_{d+1}..x_n]_{s+1} slot coefficients cancel identically:
// z = x_i x^{alpha(h)} = x_ibar x^{alpha(hbar)} in k[x_{d+1}..x_n]_{s+1},
// K' avoiding W positions.
struct G3Elem {
    std::vector<long> Kprime;
    int i = 0, ibar = 0;
    Term z;
    std::vector<long> K1, K2;  // K' u {h}, K' u {hbar}
    int relsign = 1;
    std::string label() const;
};

std::vector<G3Elem> formal_g3_elements(const HilbertContext& ctx);

// Evaluated degree-(s+1) vector of a G3 element.
std::vector<Rat> g3_eval(const G3Elem& g, const HilbertContext& ctx, const MinorOracle& oracle);

struct GeneratorFamilies {
    std::vector<std::pair<std::vector<long>, SymExt>> B1;            // K -> delta^(1)_K
    std::vector<std::pair<std::pair<int, std::vector<long>>, SymExt>> G1;  // (h, K), h <= d
    std::vector<std::pair<std::pair<int, std::vector<long>>, SymExt>> G2;  // (h, K), h > d, K avoids W
    std::vector<std::pair<G3Elem, SymExt>> G3;
};

// Symbolic B1 / G1 / G2 / G3 at degree s (B1) resp. s+1 (G1, G2, G3).
// Guarded by C(N, p+1) <= 10^4.
GeneratorFamilies generator_families(const HilbertContext& ctx);

// ---------------------------------------------------------------------------
// The three equation families of the bounded-regularity locus.
//   A: coefficients of  /\_{i=0..d} x_i delta^(m_i)_{K_i},  sum m_i = q''(s+1)+1
//   B: (sum m_i = q''(s+1)) wedges, further wedged with x_h delta^(1)_K, h <= d
//   C: same wedges, wedged with a formal G3 difference
// Delta-degrees are exactly d+1 (A) and d+2 (B, C).
// ---------------------------------------------------------------------------

struct WedgeSpec {
    std::vector<int> split;               // m_0..m_d
    std::vector<std::vector<long>> Ks;    // |K_i| = p + m_i
};

struct EquationId {
    char family = 'A';
    std::size_t base = 0;        // index into basesA / basesBC
    int extra_h = -1;            // family B
    std::vector<long> extra_K;   // family B
    int g3 = -1;                 // family C index
    std::string label() const;
};

struct EquationSet {
    HilbertContext ctx;
    std::vector<WedgeSpec> basesA;   // arity q''(s+1)+1
    std::vector<WedgeSpec> basesBC;  // arity q''(s+1)
    std::vector<G3Elem> g3;
    std::vector<std::vector<long>> extraK;  // K range for family B extras

    std::size_t countA() const { return basesA.size(); }
    std::size_t countB() const { return basesBC.size() * extraK.size() * (ctx.d + 1); }
    std::size_t countC() const { return basesBC.size() * g3.size(); }
    long degreeA() const { return ctx.d + 1; }
    long degreeBC() const { return ctx.d + 2; }
};

// Structured equation set; SizeGuardExceeded (with the counts) beyond
// C(N(s), p(s)+1) <= 10^4 or q''(s+1)+1 > 12.
EquationSet equations(const HilbertContext& ctx);

// Numeric expansion of one equation element (the full exterior wedge):
// the equation values are its coefficients.
ExtVec evaluate_equation_element(const EquationSet& eqs, const EquationId& id,
                                 const MinorOracle& oracle);

// Symbolic expansion under a term budget (SizeGuardExceeded beyond it).
SymExt expand_equation_element(const EquationSet& eqs, const EquationId& id,
                               std::size_t term_budget);

struct EquationViolation {
    EquationId id;
    WedgeTuple slot;
    Rat value;
};

// Exact all-zero test of every family-A/B/C equation at L, via the multilinear
// factored form: rk(I^(1)_{s+1}) vs q''(s+1) plus span membership of the G3
// evaluations. Returns up to max_witnesses honestly expanded nonzero values.
struct EquationCheck {
    bool all_zero = true;
    Int rank_I1;
    std::vector<EquationViolation> witnesses;
};
EquationCheck check_equations(const EquationSet& eqs, const GrassmannPoint& L,
                              const MinorOracle& oracle, std::size_t max_witnesses = 3);

// ---------------------------------------------------------------------------
// Complement forms and the membership test.
// ---------------------------------------------------------------------------

struct GroupSample {
    std::vector<QMatrix> mats;  // (n+1)x(n+1), invertible; identity is implicit
};

// Coordinate permutations plus `extra` seeded upper-triangular matrices.
GroupSample default_group_sample(int n, long seed, int extra = 5);

// Substitution action of g on degree-s coefficient vectors: column j holds the
// expansion of g(x^{alpha(j)}) with x_i -> sum_k g(k,i) x_k.
QMatrix action_matrix(const QMatrix& g, int n, long s);

GrassmannPoint transform_point(const GrassmannPoint& L, const QMatrix& g);

struct LinearForm {
    std::string label;  // e.g. "g0:D[5,6,7,8,9,10]"
    std::vector<std::pair<std::vector<long>, Rat>> terms;
    Rat eval(const MinorOracle& oracle) const;
};

// The linear complement forms of L~ for g = identity (plain chart variables
// Delta_I, I in S^{[r',s]}_p) and each sampled g (Cauchy-Binet row of the
// induced action on Pluecker coordinates).
std::vector<LinearForm> complement_linear_forms(const HilbertContext& ctx,
                                                const GroupSample& sample);

enum class MembershipVerdict { Member, InComplement, EquationsViolated };
std::string verdict_name(MembershipVerdict v);

struct MembershipReport {
    MembershipVerdict verdict = MembershipVerdict::Member;
    std::vector<EquationViolation> violations;
    bool fallback_oracle_used = false;  // size guards exceeded; marked-basis oracle decided
    bool oracle_confirmed = false;      // Member verified against the marked-basis oracle
    std::size_t group_sample_size = 0;  // InComplement is sound relative to this sample
    std::string witness_chart;          // chart certifying non-complement / membership
    Int rank_I1;
};

struct MembershipOptions {
    std::size_t max_witnesses = 3;
};

// rk(I_t) for the ideal generated by the rows of L in degree s.
Int ideal_rank_at(const GrassmannPoint& L, long t);

MembershipReport membership_test(const GrassmannPoint& L, const HilbertContext& ctx,
                                 const GroupSample& sample, const MembershipOptions& opts = {});

}  // namespace hilbreg
