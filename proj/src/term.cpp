#include "hilbreg/term.hpp"

#include <algorithm>
#include <set>

namespace hilbreg {

Ordering compare_degrevlex(const Term& u, const Term& v) {
    if (u.nvars() != v.nvars())
        throw err_dimension_mismatch("terms over different variable counts");
    long du = u.degree(), dv = v.degree();
    if (du != dv) return du > dv ? Ordering::GT : Ordering::LT;
    for (int i = 0; i < u.nvars(); ++i) {
        if (u.e[i] != v.e[i]) return u.e[i] < v.e[i] ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

TermList monomial_basis(int n, long t) {
    if (n < 0 || t < 0) throw err_invalid_argument("monomial_basis needs n >= 0, t >= 0");
    TermList out;
    std::vector<int> cur(n + 1, 0);
    // enumerate recursively, then sort descending
    auto rec = [&](auto&& self, int i, long rem) -> void {
        if (i == n) {
            cur[i] = static_cast<int>(rem);
            out.push_back(Term(cur));
            return;
        }
        for (long e = 0; e <= rem; ++e) {
            cur[i] = static_cast<int>(e);
            self(self, i + 1, rem - e);
        }
    };
    rec(rec, 0, t);
    std::sort(out.begin(), out.end(), DrlGreater{});
    return out;
}

long term_position(const TermList& basis, const Term& u) {
    auto it = std::lower_bound(basis.begin(), basis.end(), u, DrlGreater{});
    if (it != basis.end() && *it == u) return static_cast<long>(it - basis.begin()) + 1;
    return 0;
}

int min_var(const Term& u) {
    for (int i = 0; i < u.nvars(); ++i)
        if (u.e[i] > 0) return i;
    throw err_invalid_argument("min_var of the constant term");
}

int max_var(const Term& u) {
    for (int i = u.nvars() - 1; i >= 0; --i)
        if (u.e[i] > 0) return i;
    throw err_invalid_argument("max_var of the constant term");
}

bool divides(const Term& u, const Term& v) {
    if (u.nvars() != v.nvars()) throw err_dimension_mismatch("divides: variable counts differ");
    for (int i = 0; i < u.nvars(); ++i)
        if (u.e[i] > v.e[i]) return false;
    return true;
}

Term mono_mul(const Term& u, const Term& v) {
    if (u.nvars() != v.nvars()) throw err_dimension_mismatch("mono_mul: variable counts differ");
    std::vector<int> e(u.e);
    for (int i = 0; i < v.nvars(); ++i) e[i] += v.e[i];
    return Term(std::move(e));
}

Term mul_var(const Term& u, int i) {
    std::vector<int> e(u.e);
    e.at(i) += 1;
    return Term(std::move(e));
}

std::vector<Term> elevations(const Term& u) {
    if (u.degree() < 1) throw err_invalid_argument("elevations of the constant term");
    std::set<std::vector<int>> seen;
    std::vector<Term> out;
    for (int i = 0; i < u.nvars(); ++i) {
        if (u.e[i] == 0) continue;
        for (int j = i + 1; j < u.nvars(); ++j) {
            std::vector<int> e(u.e);
            --e[i];
            ++e[j];
            if (seen.insert(e).second) out.push_back(Term(std::move(e)));
        }
    }
    std::sort(out.begin(), out.end(), DrlGreater{});
    return out;
}

static void check_same_degree(const std::vector<Term>& M) {
    for (std::size_t i = 1; i < M.size(); ++i)
        if (M[i].degree() != M[0].degree() || M[i].nvars() != M[0].nvars())
            throw err_degree_mismatch("set mixes degrees or variable counts");
}

bool is_borel_set(const TermList& M) {
    check_same_degree(M);
    std::set<std::vector<int>> S;
    for (const Term& u : M) S.insert(u.e);
    for (const Term& u : M)
        for (const Term& v : elevations(u))
            if (!S.count(v.e)) return false;
    return true;
}

TermList borel_closure(const std::vector<Term>& M) {
    check_same_degree(M);
    std::set<std::vector<int>> S;
    std::vector<Term> queue;
    for (const Term& u : M)
        if (S.insert(u.e).second) queue.push_back(u);
    while (!queue.empty()) {
        Term u = queue.back();
        queue.pop_back();
        for (Term& v : elevations(u))
            if (S.insert(v.e).second) queue.push_back(std::move(v));
    }
    TermList out;
    for (const auto& e : S) out.push_back(Term(e));
    std::sort(out.begin(), out.end(), DrlGreater{});
    return out;
}

std::string term_text(const Term& u) {
    if (u.is_one()) return "1";
    std::string s;
    for (int i = u.nvars() - 1; i >= 0; --i) {
        if (u.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (u.e[i] > 1) s += "^" + std::to_string(u.e[i]);
    }
    return s;
}

Term parse_term(const std::string& s, int n) {
    std::vector<int> e(n + 1, 0);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i < s.size() && s[i] == '1') {
        ++i;
        skip_ws();
        if (i != s.size()) throw err_parse("unexpected input after '1' in term '" + s + "'");
        return Term(std::move(e));
    }
    if (i == s.size()) throw err_parse("empty term");
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        if (!first) {
            if (s[i] != '*') throw err_parse("expected '*' in term '" + s + "'");
            ++i;
            skip_ws();
        }
        first = false;
        if (i >= s.size() || s[i] != 'x') throw err_parse("expected variable in term '" + s + "'");
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw err_parse("missing variable index in '" + s + "'");
        int var = std::stoi(s.substr(i, j - i));
        if (var < 0 || var > n) throw err_parse("variable x" + std::to_string(var) + " out of range");
        i = j;
        int exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw err_parse("missing exponent in '" + s + "'");
            exp = std::stoi(s.substr(i, j - i));
            i = j;
        }
        e[var] += exp;
        skip_ws();
    }
    return Term(std::move(e));
}

std::string term_list_text(const TermList& ts) {
    std::string s = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) s += ", ";
        s += term_text(ts[i]);
    }
    return s + "}";
}

}  // namespace hilbreg
