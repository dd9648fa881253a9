#include "hilbreg/pluecker.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hilbreg/errors.hpp"

namespace hilbreg {

namespace {

int shuffle_sign_int(const std::vector<int>& A, const std::vector<int>& B) {
    long inv = 0;
    for (int x : A)
        for (int y : B)
            if (x > y) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

std::string subset_text(const std::vector<long>& I) {
    std::string s = "[";
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(I[i]);
    }
    return s + "]";
}

}  // namespace

// ---------------------------------------------------------------------------
// points and minors
// ---------------------------------------------------------------------------

GrassmannPoint make_grassmann_point(int n, long s, QMatrix rows) {
    Int N = binomial(n + s, n);
    if (Int(static_cast<long>(rows.cols)) != N)
        throw err_dimension_mismatch("basis matrix must have N(s) = " + N.get_str() + " columns");
    if (rank(rows) != rows.rows)
        throw err_rank_deficient("basis matrix does not have full row rank");
    return GrassmannPoint{n, s, std::move(rows)};
}

MinorOracle::MinorOracle(const GrassmannPoint& L)
    : L_(&L), N_(static_cast<long>(L.rows.cols)) {}

const Rat& MinorOracle::delta(const std::vector<long>& I) const {
    auto it = memo_.find(I);
    if (it != memo_.end()) return it->second;
    std::vector<long> Ic = complement_in(N_, I);
    const QMatrix& M = L_->rows;
    if (Ic.size() != M.rows) throw err_dimension_mismatch("Pluecker index of wrong size");
    QMatrix sub(M.rows, M.rows);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < Ic.size(); ++j) sub.at(i, j) = M.at(i, Ic[j] - 1);
    Rat v = Rat(shuffle_sign(Ic, I)) * det(std::move(sub));
    return memo_.emplace(I, std::move(v)).first->second;
}

std::map<std::vector<long>, Rat> pluecker_coordinates(const GrassmannPoint& L) {
    long N = static_cast<long>(L.rows.cols);
    long q = static_cast<long>(L.rows.rows);
    long p = N - q;
    if (binomial(N, p) > 100000)
        throw size_guard_error("C(N,p) = " + binomial(N, p).get_str() +
                               " coordinates exceed the table guard");
    MinorOracle oracle(L);
    std::map<std::vector<long>, Rat> out;
    for (const auto& I : subsets(N, p)) out.emplace(I, oracle.delta(I));
    return out;
}

// ---------------------------------------------------------------------------
// exterior elements
// ---------------------------------------------------------------------------

bool ext_is_zero(const ExtVec& e) {
    for (const auto& [k, v] : e)
        if (v != 0) return false;
    return true;
}

ExtVec wedge_ext(const ExtVec& a, const ExtVec& b) {
    ExtVec out;
    for (const auto& [ta, ca] : a) {
        if (ca == 0) continue;
        for (const auto& [tb, cb] : b) {
            if (cb == 0) continue;
            bool clash = false;
            for (int x : tb)
                if (std::binary_search(ta.begin(), ta.end(), x)) { clash = true; break; }
            if (clash) continue;
            WedgeTuple merged(ta);
            merged.insert(merged.end(), tb.begin(), tb.end());
            std::sort(merged.begin(), merged.end());
            Rat c = Rat(shuffle_sign_int(ta, tb)) * ca * cb;
            auto [it, fresh] = out.emplace(std::move(merged), c);
            if (!fresh) it->second += c;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

PlueckerPoly PlueckerPoly::variable(std::vector<long> I, const Rat& c) {
    PlueckerPoly p;
    if (c != 0) p.terms_[{std::move(I)}] = c;
    return p;
}

long PlueckerPoly::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(m.size()));
    return d;
}

PlueckerPoly& PlueckerPoly::operator+=(const PlueckerPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PlueckerPoly PlueckerPoly::operator+(const PlueckerPoly& o) const {
    PlueckerPoly p = *this;
    p += o;
    return p;
}

PlueckerPoly PlueckerPoly::operator*(const PlueckerPoly& o) const {
    PlueckerPoly p;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            auto [it, fresh] = p.terms_.emplace(std::move(m), c1 * c2);
            if (!fresh) {
                it->second += c1 * c2;
                if (it->second == 0) p.terms_.erase(it);
            }
        }
    }
    return p;
}

PlueckerPoly PlueckerPoly::operator*(const Rat& c) const {
    PlueckerPoly p;
    if (c == 0) return p;
    for (const auto& [m, v] : terms_) p.terms_[m] = v * c;
    return p;
}

Rat PlueckerPoly::eval(const MinorOracle& oracle) const {
    Rat out(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (const auto& I : m) v *= oracle.delta(I);
        out += v;
    }
    return out;
}

std::string PlueckerPoly::text() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (const auto& I : m) {
            if (!mono.empty()) mono += "*";
            mono += "D" + subset_text(I);
        }
        std::string cs = rat_text(abs(c));
        bool neg = c < 0;
        std::string piece = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
        if (s.empty()) s += (neg ? "-" : "") + piece;
        else s += (neg ? "-" : "+") + piece;
    }
    return s;
}

SymExt delta_sym(const std::vector<long>& K, long m, long N, long p) {
    if (m < 1 || static_cast<long>(K.size()) != p + m)
        throw err_invalid_argument("delta needs |K| = p + m with m >= 1");
    SymExt out;
    for (const auto& Hidx : subsets(static_cast<long>(K.size()), m)) {
        std::vector<long> H, KH;
        std::vector<char> inH(K.size() + 1, 0);
        for (long t : Hidx) inH[t] = 1;
        for (std::size_t t = 0; t < K.size(); ++t)
            (inH[t + 1] ? H : KH).push_back(K[t]);
        int eps = shuffle_sign(KH, H);
        WedgeTuple slots(H.begin(), H.end());
        out[slots] += PlueckerPoly::variable(KH, Rat(eps));
    }
    return out;
}

ExtVec delta_eval(const std::vector<long>& K, long m, const MinorOracle& oracle) {
    long p = oracle.p();
    if (m < 1 || static_cast<long>(K.size()) != p + m)
        throw err_invalid_argument("delta needs |K| = p + m with m >= 1");
    ExtVec out;
    for (const auto& Hidx : subsets(static_cast<long>(K.size()), m)) {
        std::vector<long> H, KH;
        std::vector<char> inH(K.size() + 1, 0);
        for (long t : Hidx) inH[t] = 1;
        for (std::size_t t = 0; t < K.size(); ++t)
            (inH[t + 1] ? H : KH).push_back(K[t]);
        Rat c = Rat(shuffle_sign(KH, H)) * oracle.delta(KH);
        if (c == 0) continue;
        WedgeTuple slots(H.begin(), H.end());
        auto [it, fresh] = out.emplace(std::move(slots), c);
        if (!fresh) it->second += c;
    }
    return out;
}

std::vector<int> mul_slot_map(int n, long s, int i) {
    TermList bs = monomial_basis(n, s);
    TermList bt = monomial_basis(n, s + 1);
    std::vector<int> map(bs.size() + 1, 0);
    for (std::size_t j = 0; j < bs.size(); ++j)
        map[j + 1] = static_cast<int>(term_position(bt, mul_var(bs[j], i)));
    return map;
}

ExtVec map_slots(const ExtVec& e, const std::vector<int>& slot_map) {
    ExtVec out;
    for (const auto& [t, c] : e) {
        WedgeTuple nt;
        nt.reserve(t.size());
        for (int x : t) nt.push_back(slot_map.at(x));
        out.emplace(std::move(nt), c);  // order preserved: multiplication is monotone
    }
    return out;
}

SymExt map_slots(const SymExt& e, const std::vector<int>& slot_map) {
    SymExt out;
    for (const auto& [t, c] : e) {
        WedgeTuple nt;
        nt.reserve(t.size());
        for (int x : t) nt.push_back(slot_map.at(x));
        out.emplace(std::move(nt), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// generator families
// ---------------------------------------------------------------------------

std::vector<long> pure_tail_positions(int n, long s, long d) {
    TermList bs = monomial_basis(n, s);
    std::vector<long> out;
    for (long j = 1; j <= static_cast<long>(bs.size()); ++j) {
        bool pure = true;
        for (long i = 0; i <= d; ++i)
            if (bs[j - 1].e[i] > 0) { pure = false; break; }
        if (pure) out.push_back(j);
    }
    return out;
}

std::string G3Elem::label() const {
    return "G3(K'=" + subset_text(Kprime) + ",x" + std::to_string(i) + ",x" + std::to_string(ibar) +
           ",z=" + term_text(z) + ")";
}

std::vector<G3Elem> formal_g3_elements(const HilbertContext& ctx) {
    int n = ctx.n;
    long s = ctx.s, d = ctx.d;
    long p = ctx.ps.get_si();
    TermList bs = monomial_basis(n, s);
    TermList bt = monomial_basis(n, s + 1);
    std::vector<long> W = pure_tail_positions(n, s, d);
    std::set<long> Wset(W.begin(), W.end());
    std::vector<long> nonW;
    for (long j = 1; j <= static_cast<long>(bs.size()); ++j)
        if (!Wset.count(j)) nonW.push_back(j);
    std::vector<G3Elem> out;
    if (static_cast<long>(nonW.size()) < p) return out;
    for (const auto& pick : subsets(static_cast<long>(nonW.size()), p)) {
        std::vector<long> Kp;
        for (long t : pick) Kp.push_back(nonW[t - 1]);
        for (int i = static_cast<int>(d) + 1; i <= n; ++i) {
            for (int ib = i + 1; ib <= n; ++ib) {
                for (const Term& z : bt) {
                    bool pure = true;
                    for (long v = 0; v <= d; ++v)
                        if (z.e[v] > 0) { pure = false; break; }
                    if (!pure || z.e[i] == 0 || z.e[ib] == 0) continue;
                    std::vector<int> eh = z.e, ehb = z.e;
                    --eh[i];
                    --ehb[ib];
                    long h = term_position(bs, Term(eh));
                    long hb = term_position(bs, Term(ehb));
                    G3Elem g;
                    g.Kprime = Kp;
                    g.i = i;
                    g.ibar = ib;
                    g.z = z;
                    g.K1 = Kp;
                    g.K1.push_back(h);
                    std::sort(g.K1.begin(), g.K1.end());
                    g.K2 = Kp;
                    g.K2.push_back(hb);
                    std::sort(g.K2.begin(), g.K2.end());
                    int e1 = shuffle_sign(Kp, {h});
                    int e2 = shuffle_sign(Kp, {hb});
                    g.relsign = e1 * e2;
                    out.push_back(std::move(g));
                }
            }
        }
    }
    return out;
}

std::vector<Rat> g3_eval(const G3Elem& g, const HilbertContext& ctx, const MinorOracle& oracle) {
    long N1 = ctx.N(ctx.s + 1).get_si();
    std::vector<int> mi = mul_slot_map(ctx.n, ctx.s, g.i);
    std::vector<int> mib = mul_slot_map(ctx.n, ctx.s, g.ibar);
    std::vector<Rat> v(N1, Rat(0));
    for (const auto& [t, c] : map_slots(delta_eval(g.K1, 1, oracle), mi)) v[t[0] - 1] += c;
    for (const auto& [t, c] : map_slots(delta_eval(g.K2, 1, oracle), mib))
        v[t[0] - 1] -= Rat(g.relsign) * c;
    return v;
}

GeneratorFamilies generator_families(const HilbertContext& ctx) {
    long N = ctx.Ns.get_si();
    long p = ctx.ps.get_si();
    if (binomial(N, p + 1) > 10000)
        throw size_guard_error("generator_families: C(N,p+1) = " + binomial(N, p + 1).get_str() +
                               " exceeds the guard");
    GeneratorFamilies out;
    for (const auto& K : subsets(N, p + 1)) out.B1.emplace_back(K, delta_sym(K, 1, N, p));
    for (long h = 0; h <= ctx.d; ++h) {
        std::vector<int> sm = mul_slot_map(ctx.n, ctx.s, static_cast<int>(h));
        for (const auto& [K, e] : out.B1)
            out.G1.emplace_back(std::make_pair(static_cast<int>(h), K), map_slots(e, sm));
    }
    // formal G2: delta^(1)_K supported away from the pure positions, times x_h, h > d
    std::vector<long> W = pure_tail_positions(ctx.n, ctx.s, ctx.d);
    std::set<long> Wset(W.begin(), W.end());
    std::vector<long> nonW;
    for (long j = 1; j <= N; ++j)
        if (!Wset.count(j)) nonW.push_back(j);
    if (static_cast<long>(nonW.size()) >= p + 1) {
        for (const auto& pick : subsets(static_cast<long>(nonW.size()), p + 1)) {
            std::vector<long> K;
            for (long t : pick) K.push_back(nonW[t - 1]);
            SymExt e = delta_sym(K, 1, N, p);
            for (int h = static_cast<int>(ctx.d) + 1; h <= ctx.n; ++h)
                out.G2.emplace_back(std::make_pair(h, K),
                                    map_slots(e, mul_slot_map(ctx.n, ctx.s, h)));
        }
    }
    for (const G3Elem& g : formal_g3_elements(ctx)) {
        SymExt e = map_slots(delta_sym(g.K1, 1, N, p), mul_slot_map(ctx.n, ctx.s, g.i));
        SymExt e2 = map_slots(delta_sym(g.K2, 1, N, p), mul_slot_map(ctx.n, ctx.s, g.ibar));
        for (const auto& [t, c] : e2) e[t] += c * Rat(-g.relsign);
        for (auto it = e.begin(); it != e.end();) {
            if (it->second.is_zero()) it = e.erase(it);
            else ++it;
        }
        out.G3.emplace_back(g, std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------
// equations
// ---------------------------------------------------------------------------

std::string EquationId::label() const {
    std::ostringstream os;
    os << family << "(base=" << base;
    if (family == 'B') os << ",h=" << extra_h << ",K=" << subset_text(extra_K);
    if (family == 'C') os << ",g3=" << g3;
    os << ")";
    return os.str();
}

namespace {

std::vector<std::vector<int>> arity_splits(long total, long parts, long cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, long rem, long left) -> void {
        if (left == 1) {
            if (rem >= 1 && rem <= cap) {
                cur.push_back(static_cast<int>(rem));
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        long hi = std::min(cap, rem - (left - 1));
        for (long m = 1; m <= hi; ++m) {
            cur.push_back(static_cast<int>(m));
            self(self, rem - m, left - 1);
            cur.pop_back();
        }
    };
    if (total >= 1 && parts >= 1) rec(rec, total, parts);
    return out;
}

std::vector<WedgeSpec> build_bases(long total, const HilbertContext& ctx) {
    long N = ctx.Ns.get_si();
    long p = ctx.ps.get_si();
    long q = ctx.qs.get_si();
    std::vector<WedgeSpec> out;
    for (const auto& split : arity_splits(total, ctx.d + 1, q)) {
        // cartesian product of K_i ranges
        std::vector<std::vector<std::vector<long>>> ranges;
        Int count(1);
        for (int m : split) {
            count *= binomial(N, p + m);
            if (count > 100000)
                throw size_guard_error("equations: K-tuple count exceeds 100000 for one split");
        }
        for (int m : split) ranges.push_back(subsets(N, p + m));
        std::vector<std::size_t> idx(split.size(), 0);
        while (true) {
            WedgeSpec spec;
            spec.split = split;
            for (std::size_t i = 0; i < split.size(); ++i) spec.Ks.push_back(ranges[i][idx[i]]);
            out.push_back(std::move(spec));
            std::size_t k = split.size();
            while (k > 0) {
                --k;
                if (++idx[k] < ranges[k].size()) break;
                idx[k] = 0;
                if (k == 0) { k = SIZE_MAX; break; }
            }
            if (k == SIZE_MAX) break;
        }
    }
    return out;
}

}  // namespace

EquationSet equations(const HilbertContext& ctx) {
    long N = ctx.Ns.get_si();
    long p = ctx.ps.get_si();
    Int nB1 = binomial(N, p + 1);
    long arity = ctx.qpps1.get_si() + 1;
    if (nB1 > 10000 || arity > 12)
        throw size_guard_error("equations: size guard exceeded (C(N,p+1) = " + nB1.get_str() +
                               ", wedge arity = " + std::to_string(arity) + ")");
    EquationSet eqs;
    eqs.ctx = ctx;
    eqs.basesA = build_bases(ctx.qpps1.get_si() + 1, ctx);
    eqs.basesBC = build_bases(ctx.qpps1.get_si(), ctx);
    eqs.g3 = formal_g3_elements(ctx);
    eqs.extraK = subsets(N, p + 1);
    return eqs;
}

namespace {

ExtVec eval_wedge_spec(const WedgeSpec& spec, const HilbertContext& ctx,
                       const MinorOracle& oracle) {
    ExtVec acc;
    bool first = true;
    for (std::size_t i = 0; i < spec.Ks.size(); ++i) {
        ExtVec f = map_slots(delta_eval(spec.Ks[i], spec.split[i], oracle),
                             mul_slot_map(ctx.n, ctx.s, static_cast<int>(i)));
        if (first) {
            acc = std::move(f);
            first = false;
        } else {
            acc = wedge_ext(acc, f);
        }
        if (acc.empty()) return acc;
    }
    return acc;
}

ExtVec vector_to_ext(const std::vector<Rat>& v) {
    ExtVec out;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) out[{static_cast<int>(j) + 1}] = v[j];
    return out;
}

}  // namespace

ExtVec evaluate_equation_element(const EquationSet& eqs, const EquationId& id,
                                 const MinorOracle& oracle) {
    const HilbertContext& ctx = eqs.ctx;
    if (id.family == 'A') return eval_wedge_spec(eqs.basesA.at(id.base), ctx, oracle);
    ExtVec base = eval_wedge_spec(eqs.basesBC.at(id.base), ctx, oracle);
    if (base.empty()) return base;
    if (id.family == 'B') {
        ExtVec extra = map_slots(delta_eval(id.extra_K, 1, oracle),
                                 mul_slot_map(ctx.n, ctx.s, id.extra_h));
        return wedge_ext(base, extra);
    }
    return wedge_ext(base, vector_to_ext(g3_eval(eqs.g3.at(id.g3), ctx, oracle)));
}

SymExt expand_equation_element(const EquationSet& eqs, const EquationId& id,
                               std::size_t term_budget) {
    const HilbertContext& ctx = eqs.ctx;
    long N = ctx.Ns.get_si();
    long p = ctx.ps.get_si();
    const WedgeSpec& spec = (id.family == 'A') ? eqs.basesA.at(id.base) : eqs.basesBC.at(id.base);
    auto wedge_sym = [&](const SymExt& a, const SymExt& b) {
        SymExt out;
        std::size_t terms = 0;
        for (const auto& [ta, ca] : a) {
            for (const auto& [tb, cb] : b) {
                bool clash = false;
                for (int x : tb)
                    if (std::binary_search(ta.begin(), ta.end(), x)) { clash = true; break; }
                if (clash) continue;
                WedgeTuple merged(ta);
                merged.insert(merged.end(), tb.begin(), tb.end());
                std::sort(merged.begin(), merged.end());
                PlueckerPoly prod = (ca * cb) * Rat(shuffle_sign_int(ta, tb));
                out[merged] += prod;
                terms += prod.terms().size();
                if (terms > term_budget)
                    throw size_guard_error("equation expansion exceeds the term budget");
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero()) it = out.erase(it);
            else ++it;
        }
        return out;
    };
    SymExt acc;
    bool first = true;
    for (std::size_t i = 0; i < spec.Ks.size(); ++i) {
        SymExt f = map_slots(delta_sym(spec.Ks[i], spec.split[i], N, p),
                             mul_slot_map(ctx.n, ctx.s, static_cast<int>(i)));
        acc = first ? std::move(f) : wedge_sym(acc, f);
        first = false;
    }
    if (id.family == 'A') return acc;
    if (id.family == 'B') {
        SymExt extra = map_slots(delta_sym(id.extra_K, 1, N, p),
                                 mul_slot_map(ctx.n, ctx.s, id.extra_h));
        return wedge_sym(acc, extra);
    }
    const G3Elem& g = eqs.g3.at(id.g3);
    SymExt e = map_slots(delta_sym(g.K1, 1, N, p), mul_slot_map(ctx.n, ctx.s, g.i));
    SymExt e2 = map_slots(delta_sym(g.K2, 1, N, p), mul_slot_map(ctx.n, ctx.s, g.ibar));
    for (const auto& [t, c] : e2) e[t] += c * Rat(-g.relsign);
    return wedge_sym(acc, e);
}

EquationCheck check_equations(const EquationSet& eqs, const GrassmannPoint& L,
                              const MinorOracle& oracle, std::size_t max_witnesses) {
    const HilbertContext& ctx = eqs.ctx;
    long N1 = ctx.N(ctx.s + 1).get_si();
    // I^(1)_{s+1} = sum_{h<=d} x_h . L
    RowSpan I1(static_cast<std::size_t>(N1));
    for (long h = 0; h <= ctx.d; ++h) {
        std::vector<int> sm = mul_slot_map(ctx.n, ctx.s, static_cast<int>(h));
        for (std::size_t i = 0; i < L.rows.rows; ++i) {
            std::vector<Rat> row(N1, Rat(0));
            for (std::size_t j = 0; j < L.rows.cols; ++j)
                if (L.rows.at(i, j) != 0) row[sm[j + 1] - 1] += L.rows.at(i, j);
            I1.add(std::move(row));
        }
    }
    EquationCheck out;
    out.rank_I1 = Int(static_cast<long>(I1.rank()));
    Int qpp = ctx.qpps1;
    bool rank_high = out.rank_I1 > qpp;

    auto push_witness = [&](const EquationId& id) {
        if (out.witnesses.size() >= max_witnesses) return;
        ExtVec v = evaluate_equation_element(eqs, id, oracle);
        if (v.empty()) return;
        out.witnesses.push_back({id, v.begin()->first, v.begin()->second});
    };

    if (rank_high && !eqs.basesA.empty()) {
        out.all_zero = false;
        for (std::size_t b = 0; b < eqs.basesA.size() && out.witnesses.size() < max_witnesses; ++b)
            push_witness(EquationId{'A', b, -1, {}, -1});
        if (out.witnesses.empty())
            throw internal_error("family A must have a nonzero instance when rk I1 > q''");
    }
    if (rank_high && !eqs.basesBC.empty() && !eqs.extraK.empty()) {
        out.all_zero = false;
        for (std::size_t b = 0; b < eqs.basesBC.size() && out.witnesses.size() < max_witnesses; ++b)
            for (int h = 0; h <= ctx.d && out.witnesses.size() < max_witnesses; ++h)
                for (const auto& K : eqs.extraK) {
                    push_witness(EquationId{'B', b, h, K, -1});
                    if (out.witnesses.size() >= max_witnesses) break;
                }
    }
    if (!eqs.basesBC.empty()) {
        for (std::size_t gi = 0; gi < eqs.g3.size(); ++gi) {
            std::vector<Rat> v = g3_eval(eqs.g3[gi], ctx, oracle);
            bool nonzero = false;
            for (const Rat& x : v)
                if (x != 0) { nonzero = true; break; }
            bool fires = rank_high ? nonzero : (out.rank_I1 == qpp && !I1.contains(v));
            if (!fires) continue;
            out.all_zero = false;
            if (out.witnesses.size() < max_witnesses) {
                bool found = false;
                for (std::size_t b = 0; b < eqs.basesBC.size() && !found; ++b) {
                    EquationId id{'C', b, -1, {}, static_cast<int>(gi)};
                    ExtVec val = evaluate_equation_element(eqs, id, oracle);
                    if (!val.empty()) {
                        out.witnesses.push_back({id, val.begin()->first, val.begin()->second});
                        found = true;
                    }
                }
                if (!found)
                    throw internal_error("family C fired by rank logic but no instance expanded nonzero");
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// group action, complement forms, membership
// ---------------------------------------------------------------------------

GroupSample default_group_sample(int n, long seed, int extra) {
    GroupSample out;
    // coordinate permutations (identity excluded; it is always tested first)
    std::vector<int> perm(n + 1);
    for (int i = 0; i <= n; ++i) perm[i] = i;
    long count = 1;
    for (int i = 2; i <= n + 1; ++i) count *= i;
    if (count <= 120) {
        while (std::next_permutation(perm.begin(), perm.end())) {
            QMatrix g(n + 1, n + 1);
            for (int i = 0; i <= n; ++i) g.at(perm[i], i) = 1;
            out.mats.push_back(std::move(g));
        }
    } else {
        for (int i = 0; i < n; ++i) {  // adjacent transpositions only
            QMatrix g(n + 1, n + 1);
            for (int k = 0; k <= n; ++k) g.at(k, k) = 1;
            g.at(i, i) = g.at(i + 1, i + 1) = 0;
            g.at(i, i + 1) = g.at(i + 1, i) = 1;
            out.mats.push_back(std::move(g));
        }
    }
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 0x9e3779b97f4a7c15ULL + 1);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int k = 0; k < extra; ++k) {
        QMatrix g(n + 1, n + 1);
        for (int i = 0; i <= n; ++i) {
            g.at(i, i) = 1;
            for (int j = i + 1; j <= n; ++j) g.at(i, j) = dist(rng);
        }
        out.mats.push_back(std::move(g));
    }
    return out;
}

QMatrix action_matrix(const QMatrix& g, int n, long s) {
    if (g.rows != static_cast<std::size_t>(n + 1) || g.cols != g.rows)
        throw err_dimension_mismatch("group element must be (n+1)x(n+1)");
    if (det(g) == 0) throw err_invalid_argument("singular matrix in group sample");
    TermList basis = monomial_basis(n, s);
    QMatrix A(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        // expand prod_i (sum_k g(k,i) x_k)^{e_i}
        std::map<std::vector<int>, Rat> acc{{std::vector<int>(n + 1, 0), Rat(1)}};
        for (int i = 0; i <= n; ++i) {
            for (int rep = 0; rep < basis[j].e[i]; ++rep) {
                std::map<std::vector<int>, Rat> nxt;
                for (const auto& [mono, c] : acc) {
                    for (int k = 0; k <= n; ++k) {
                        if (g.at(k, i) == 0) continue;
                        std::vector<int> m2 = mono;
                        ++m2[k];
                        auto [it, fresh] = nxt.emplace(std::move(m2), c * g.at(k, i));
                        if (!fresh) it->second += c * g.at(k, i);
                    }
                }
                acc = std::move(nxt);
            }
        }
        for (const auto& [mono, c] : acc)
            A.at(term_position(basis, Term(mono)) - 1, j) = c;
    }
    return A;
}

GrassmannPoint transform_point(const GrassmannPoint& L, const QMatrix& g) {
    QMatrix A = action_matrix(g, L.n, L.s);
    QMatrix out(L.rows.rows, L.rows.cols);
    for (std::size_t i = 0; i < L.rows.rows; ++i)
        for (std::size_t k = 0; k < A.rows; ++k) {
            // (L A^T)_{ik} = sum_j L_{ij} A_{kj}
            Rat v(0);
            for (std::size_t j = 0; j < L.rows.cols; ++j)
                if (L.rows.at(i, j) != 0 && A.at(k, j) != 0) v += L.rows.at(i, j) * A.at(k, j);
            out.at(i, k) = v;
        }
    return GrassmannPoint{L.n, L.s, std::move(out)};
}

Rat LinearForm::eval(const MinorOracle& oracle) const {
    Rat out(0);
    for (const auto& [I, c] : terms) out += c * oracle.delta(I);
    return out;
}

std::vector<LinearForm> complement_linear_forms(const HilbertContext& ctx,
                                                const GroupSample& sample) {
    long N = ctx.Ns.get_si();
    long p = ctx.ps.get_si();
    if (binomial(N, p) > 10000)
        throw size_guard_error("complement_linear_forms: C(N,p) exceeds the guard");
    std::vector<BorelIdeal> charts = enumerate_borel(ctx.n, ctx.p, ctx.rprime);
    std::vector<std::vector<long>> Is;
    for (const BorelIdeal& J : charts) Is.push_back(multiindex_of(J, ctx.s).indices);
    std::vector<LinearForm> out;
    for (const auto& I : Is)
        out.push_back(LinearForm{"id:D" + subset_text(I), {{I, Rat(1)}}});
    std::vector<std::vector<long>> allJ = subsets(N, p);
    for (std::size_t gi = 0; gi < sample.mats.size(); ++gi) {
        QMatrix A = action_matrix(sample.mats[gi], ctx.n, ctx.s);
        for (const auto& I : Is) {
            std::vector<long> Ic = complement_in(N, I);
            LinearForm f;
            f.label = "g" + std::to_string(gi) + ":D" + subset_text(I);
            for (const auto& J : allJ) {
                std::vector<long> Jc = complement_in(N, J);
                QMatrix sub(Ic.size(), Jc.size());
                for (std::size_t r = 0; r < Ic.size(); ++r)
                    for (std::size_t c = 0; c < Jc.size(); ++c)
                        sub.at(r, c) = A.at(Ic[r] - 1, Jc[c] - 1);
                Rat coeff = Rat(shuffle_sign(Ic, I)) * Rat(shuffle_sign(Jc, J)) * det(std::move(sub));
                if (coeff != 0) f.terms.emplace_back(J, std::move(coeff));
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::string verdict_name(MembershipVerdict v) {
    switch (v) {
        case MembershipVerdict::Member: return "Member";
        case MembershipVerdict::InComplement: return "InComplement";
        case MembershipVerdict::EquationsViolated: return "EquationsViolated";
    }
    return "?";
}

Int ideal_rank_at(const GrassmannPoint& L, long t) {
    if (t < L.s) throw err_invalid_argument("ideal_rank_at needs t >= s");
    TermList bt = monomial_basis(L.n, t);
    TermList bs = monomial_basis(L.n, L.s);
    RowSpan span(bt.size());
    for (const Term& eta : monomial_basis(L.n, t - L.s)) {
        std::vector<int> sm(bs.size() + 1, 0);
        for (std::size_t j = 0; j < bs.size(); ++j)
            sm[j + 1] = static_cast<int>(term_position(bt, mono_mul(bs[j], eta)));
        for (std::size_t i = 0; i < L.rows.rows; ++i) {
            std::vector<Rat> row(bt.size(), Rat(0));
            for (std::size_t j = 0; j < L.rows.cols; ++j)
                if (L.rows.at(i, j) != 0) row[sm[j + 1] - 1] += L.rows.at(i, j);
            span.add(std::move(row));
        }
    }
    return Int(static_cast<long>(span.rank()));
}

MembershipReport membership_test(const GrassmannPoint& L, const HilbertContext& ctx,
                                 const GroupSample& sample, const MembershipOptions& opts) {
    if (Int(static_cast<long>(L.rows.rows)) != ctx.qs)
        throw err_rank_deficient("point has " + std::to_string(L.rows.rows) +
                                 " rows, context expects q(s) = " + ctx.qs.get_str());
    MembershipReport rep;
    rep.group_sample_size = 1 + sample.mats.size();

    std::vector<BorelIdeal> charts = enumerate_borel(ctx.n, ctx.p, ctx.rprime);
    std::vector<std::vector<long>> Is;
    for (const BorelIdeal& J : charts) Is.push_back(multiindex_of(J, ctx.s).indices);

    // complement forms: Delta_I(g L) over the sample; all zero -> InComplement
    bool any_nonzero = false;
    std::size_t witness_chart = 0, witness_g = 0;  // g = 0 means identity
    for (std::size_t gi = 0; gi <= sample.mats.size() && !any_nonzero; ++gi) {
        GrassmannPoint Lg = (gi == 0) ? L : transform_point(L, sample.mats[gi - 1]);
        MinorOracle og(Lg);
        for (std::size_t ci = 0; ci < Is.size(); ++ci) {
            if (og.delta(Is[ci]) != 0) {
                any_nonzero = true;
                witness_chart = ci;
                witness_g = gi;
                break;
            }
        }
    }
    if (!any_nonzero) {
        rep.verdict = MembershipVerdict::InComplement;
        rep.rank_I1 = ideal_rank_at(L, ctx.s + 1);  // informational
        return rep;
    }
    rep.witness_chart = (witness_g == 0 ? "id" : "g" + std::to_string(witness_g - 1)) + ":D" +
                        subset_text(Is[witness_chart]);

    auto run_oracle = [&]() -> bool {
        GrassmannPoint Lg = (witness_g == 0) ? L : transform_point(L, sample.mats[witness_g - 1]);
        RationalMarkedSet F = marked_set_from_subspace(Lg.rows, charts[witness_chart], ctx.s);
        return is_marked_basis(F);
    };

    long N = ctx.Ns.get_si();
    long p = ctx.ps.get_si();
    bool guard_ok = binomial(N, p + 1) <= 10000 && ctx.qpps1.get_si() + 1 <= 12;
    if (!guard_ok) {
        rep.fallback_oracle_used = true;
        rep.rank_I1 = ideal_rank_at(L, ctx.s + 1);
        if (run_oracle()) {
            rep.verdict = MembershipVerdict::Member;
            rep.oracle_confirmed = true;
        } else {
            rep.verdict = MembershipVerdict::EquationsViolated;
        }
        return rep;
    }

    EquationSet eqs = equations(ctx);
    MinorOracle oracle(L);
    EquationCheck chk = check_equations(eqs, L, oracle, opts.max_witnesses);
    rep.rank_I1 = chk.rank_I1;
    if (!chk.all_zero) {
        rep.verdict = MembershipVerdict::EquationsViolated;
        rep.violations = chk.witnesses;
        return rep;
    }
    rep.verdict = MembershipVerdict::Member;
    rep.oracle_confirmed = run_oracle();
    return rep;
}

}  // namespace hilbreg
