#include "hilbreg/marked.hpp"

#include <algorithm>
#include <set>

#include "hilbreg/errors.hpp"

namespace hilbreg {

// ---------------------------------------------------------------------------
// ParamTable / ParamPoly
// ---------------------------------------------------------------------------

int ParamTable::id(const Term& head, const Term& tail) {
    auto key = std::make_pair(head.e, tail.e);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int nid = static_cast<int>(vars_.size());
    vars_.emplace_back(head, tail);
    index_.emplace(std::move(key), nid);
    return nid;
}

int ParamTable::find(const Term& head, const Term& tail) const {
    auto it = index_.find(std::make_pair(head.e, tail.e));
    return it == index_.end() ? -1 : it->second;
}

std::string ParamTable::name(int id) const {
    const auto& [h, t] = vars_.at(id);
    return "c[" + term_text(h) + "][" + term_text(t) + "]";
}

void ParamPoly::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

ParamPoly ParamPoly::constant(const Rat& c) {
    ParamPoly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

ParamPoly ParamPoly::variable(int id) {
    ParamPoly p;
    p.terms_[{id}] = 1;
    return p;
}

long ParamPoly::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(m.size()));
    return d;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) it->second += c;
    }
    strip_zeros();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, -c);
        if (!fresh) it->second -= c;
    }
    strip_zeros();
    return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly p = *this;
    p += o;
    return p;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly p = *this;
    p -= o;
    return p;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly p;
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly p;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            auto [it, fresh] = p.terms_.emplace(std::move(m), c1 * c2);
            if (!fresh) it->second += c1 * c2;
        }
    }
    p.strip_zeros();
    return p;
}

Rat ParamPoly::eval(const std::vector<Rat>& assignment) const {
    Rat out(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (int id : m) v *= assignment.at(id);
        out += v;
    }
    return out;
}

std::string ParamPoly::text(const ParamTable& table) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        int i = 0;
        while (i < static_cast<int>(m.size())) {
            int j = i;
            while (j < static_cast<int>(m.size()) && m[j] == m[i]) ++j;
            if (!mono.empty()) mono += "*";
            mono += table.name(m[i]);
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
        }
        std::string cs = rat_text(abs(c));
        bool neg = c < 0;
        std::string piece = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
        if (s.empty()) s += (neg ? "-" : "") + piece;
        else s += (neg ? " - " : " + ") + piece;
    }
    return s;
}

// ---------------------------------------------------------------------------
// marked sets
// ---------------------------------------------------------------------------

static TermList complement_basis(const BorelIdeal& J, long s) {
    TermList out;
    for (const Term& b : monomial_basis(J.n, s))
        if (!J.contains(b)) out.push_back(b);
    return out;
}

RationalMarkedSet make_marked_set(
    const BorelIdeal& J, long s,
    const std::map<Term, std::map<Term, Rat, DrlGreater>, DrlGreater>& tails) {
    TermList heads = truncation(J, s);
    std::set<std::vector<int>> headset;
    for (const Term& h : heads) headset.insert(h.e);
    for (const auto& [h, _] : tails)
        if (!headset.count(h.e))
            throw err_head_missing("tail given for " + term_text(h) + ", not a head of J_" +
                                   std::to_string(s));
    RationalMarkedSet F;
    F.J = J;
    F.s = s;
    for (const Term& h : heads) {
        MarkedPoly<Rat> f;
        f.head = h;
        auto it = tails.find(h);
        if (it != tails.end()) {
            for (const auto& [gamma, c] : it->second) {
                if (gamma.degree() != s)
                    throw err_degree_mismatch("tail term " + term_text(gamma) +
                                              " has degree != " + std::to_string(s));
                if (J.contains(gamma))
                    throw err_tail_in_ideal("tail term " + term_text(gamma) + " lies in J");
                if (c != 0) f.tail.emplace_back(gamma, c);
            }
            std::sort(f.tail.begin(), f.tail.end(),
                      [](const auto& a, const auto& b) { return drl_greater(a.first, b.first); });
        }
        F.polys.push_back(std::move(f));
    }
    return F;
}

ParametricMarkedSet make_parametric_marked_set(const BorelIdeal& J, long s, ParamTable& table) {
    TermList heads = truncation(J, s);
    TermList comp = complement_basis(J, s);
    ParametricMarkedSet F;
    F.J = J;
    F.s = s;
    for (const Term& h : heads) {
        MarkedPoly<ParamPoly> f;
        f.head = h;
        for (const Term& gamma : comp)
            f.tail.emplace_back(gamma, ParamPoly::variable(table.id(h, gamma)));
        F.polys.push_back(std::move(f));
    }
    return F;
}

bool is_marked_basis(const RationalMarkedSet& F) {
    for (const auto& f : F.polys) {
        int mv = min_var(f.head);
        for (int i = mv + 1; i <= F.J.n; ++i) {
            HPoly<Rat> xf;
            xf.emplace(mul_var(f.head, i), Rat(1));
            for (const auto& [gamma, c] : f.tail) xf.emplace(mul_var(gamma, i), -c);
            if (!reduce(std::move(xf), F).empty()) return false;
        }
    }
    return true;
}

std::vector<std::pair<long, Int>> rank_profile(const RationalMarkedSet& F, long t_max) {
    std::vector<std::pair<long, Int>> out;
    for (long t = F.s; t <= t_max; ++t) {
        TermList basis = monomial_basis(F.J.n, t);
        RowSpan span(basis.size());
        TermList etas = monomial_basis(F.J.n, t - F.s);
        for (const auto& f : F.polys) {
            for (const Term& eta : etas) {
                std::vector<Rat> row(basis.size(), Rat(0));
                row[term_position(basis, mono_mul(eta, f.head)) - 1] += 1;
                for (const auto& [gamma, c] : f.tail)
                    row[term_position(basis, mono_mul(eta, gamma)) - 1] -= c;
                span.add(std::move(row));
            }
        }
        Int rkJ(static_cast<long>(ideal_degree_part(F.J.n, F.J.gens, t).size()));
        Int rkI(static_cast<long>(span.rank()));
        if (rkI < rkJ)
            throw internal_error("rank_profile: rk I_t < rk J_t at t=" + std::to_string(t));
        out.emplace_back(t, rkI);
    }
    return out;
}

std::vector<RankProfileEntry> rank_profile(const RationalMarkedSet& F, long t_max,
                                           const IntegerPolynomial& p) {
    std::vector<RankProfileEntry> out;
    for (const auto& [t, rk] : rank_profile(F, t_max)) {
        Int q = binomial(F.J.n + t, F.J.n) - p.value_at(t);
        out.push_back({t, rk, q, rk == q});
    }
    return out;
}

std::vector<ParamPoly> marked_scheme_equations(const BorelIdeal& J, long s, ParamTable& table) {
    ParametricMarkedSet F = make_parametric_marked_set(J, s, table);
    std::vector<ParamPoly> eqs;
    for (const auto& f : F.polys) {
        int mv = min_var(f.head);
        for (int i = mv + 1; i <= J.n; ++i) {
            HPoly<ParamPoly> xf;
            xf.emplace(mul_var(f.head, i), ParamPoly::constant(1));
            for (const auto& [gamma, c] : f.tail) xf.emplace(mul_var(gamma, i), -c);
            HPoly<ParamPoly> nf = reduce(std::move(xf), F);
            for (auto& [term, coeff] : nf)
                if (!coeff.is_zero()) eqs.push_back(coeff);
        }
    }
    std::sort(eqs.begin(), eqs.end());
    eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
    return eqs;
}

QMatrix marked_set_matrix(const RationalMarkedSet& F) {
    TermList basis = monomial_basis(F.J.n, F.s);
    QMatrix M(F.polys.size(), basis.size());
    for (std::size_t i = 0; i < F.polys.size(); ++i) {
        M.at(i, term_position(basis, F.polys[i].head) - 1) = 1;
        for (const auto& [gamma, c] : F.polys[i].tail)
            M.at(i, term_position(basis, gamma) - 1) = -c;
    }
    return M;
}

RationalMarkedSet marked_set_from_subspace(const QMatrix& L, const BorelIdeal& J, long s) {
    TermList basis = monomial_basis(J.n, s);
    TermList heads = truncation(J, s);
    if (L.cols != basis.size())
        throw err_dimension_mismatch("subspace matrix has " + std::to_string(L.cols) +
                                     " columns, expected N(s)");
    if (L.rows != heads.size())
        throw err_rank_deficient("subspace matrix has " + std::to_string(L.rows) +
                                 " rows, expected q(s) = " + std::to_string(heads.size()));
    // permute columns: J_s block first, then the complement
    std::vector<std::size_t> order;
    std::vector<char> in_J(basis.size(), 0);
    for (const Term& h : heads) in_J[term_position(basis, h) - 1] = 1;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (in_J[j]) order.push_back(j);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!in_J[j]) order.push_back(j);
    QMatrix M(L.rows, L.cols);
    for (std::size_t i = 0; i < L.rows; ++i)
        for (std::size_t j = 0; j < L.cols; ++j) M.at(i, j) = L.at(i, order[j]);
    std::vector<std::size_t> piv = rref_inplace(M);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] != i)
            throw err_chart_miss("J_s-columns minor is singular; the point misses this chart");
    if (piv.size() != heads.size()) throw err_rank_deficient("subspace matrix is rank deficient");
    // row i is now heads[i] + sum over complement columns
    std::map<Term, std::map<Term, Rat, DrlGreater>, DrlGreater> tails;
    std::size_t ncomp = basis.size() - heads.size();
    for (std::size_t i = 0; i < heads.size(); ++i) {
        std::map<Term, Rat, DrlGreater> t;
        for (std::size_t j = 0; j < ncomp; ++j) {
            Rat v = M.at(i, heads.size() + j);
            if (v != 0) t.emplace(basis[order[heads.size() + j]], -v);
        }
        if (!t.empty()) tails.emplace(heads[i], std::move(t));
    }
    return make_marked_set(J, s, tails);
}

RationalMarkedSet evaluate_marked_set(const ParametricMarkedSet& F, const std::vector<Rat>& c) {
    RationalMarkedSet out;
    out.J = F.J;
    out.s = F.s;
    for (const auto& f : F.polys) {
        MarkedPoly<Rat> g;
        g.head = f.head;
        for (const auto& [gamma, coeff] : f.tail) {
            Rat v = coeff.eval(c);
            if (v != 0) g.tail.emplace_back(gamma, v);
        }
        out.polys.push_back(std::move(g));
    }
    return out;
}

}  // namespace hilbreg
