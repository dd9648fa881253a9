#include "hilbreg/intpoly.hpp"

#include <algorithm>
#include <cctype>

#include "hilbreg/errors.hpp"

namespace hilbreg {

IntegerPolynomial::IntegerPolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void IntegerPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::constant(const Rat& c) {
    return IntegerPolynomial(std::vector<Rat>{c});
}

Rat IntegerPolynomial::operator()(const Rat& t) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

Int IntegerPolynomial::value_at(long t) const {
    Rat v = (*this)(Rat(t));
    if (!is_integer(v)) throw internal_error("polynomial not integral at t=" + std::to_string(t));
    return v.get_num();
}

bool IntegerPolynomial::is_integer_valued() const {
    // integer-valued iff all forward differences Delta^k p(0) are integers
    std::vector<Rat> vals;
    long d = std::max<long>(degree(), 0);
    for (long t = 0; t <= d; ++t) vals.push_back((*this)(Rat(t)));
    for (long k = 0; k <= d; ++k) {
        if (!is_integer(vals[0])) return false;
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
        if (!vals.empty()) vals.pop_back();
    }
    return true;
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    std::size_t m = pts.size();
    std::vector<Rat> coeffs(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rat> num{Rat(1)};
        Rat den(1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            std::vector<Rat> nxt(num.size() + 1, Rat(0));
            for (std::size_t k = 0; k < num.size(); ++k) {
                nxt[k] += num[k] * (-pts[j].first);
                nxt[k + 1] += num[k];
            }
            num = std::move(nxt);
            den *= (pts[i].first - pts[j].first);
        }
        for (std::size_t k = 0; k < num.size(); ++k) coeffs[k] += pts[i].second * num[k] / den;
    }
    return IntegerPolynomial(std::move(coeffs));
}

std::string IntegerPolynomial::text() const {
    if (is_zero()) return "0";
    Int den(1);
    for (const Rat& c : c_) {
        Int d = c.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    auto body = [&](const Int& scale) {
        std::string s;
        for (long k = degree(); k >= 0; --k) {
            Rat c = c_[k] * Rat(scale);
            if (c == 0) continue;
            Int ci = c.get_num();  // integral after scaling
            std::string mag = Int(abs(ci)).get_str();
            bool neg = ci < 0;
            std::string termstr;
            if (k == 0) {
                termstr = mag;
            } else {
                termstr = (mag == "1") ? "" : mag + "*";
                termstr += "t";
                if (k > 1) termstr += "^" + std::to_string(k);
            }
            if (s.empty())
                s += (neg ? "-" : "") + termstr;
            else
                s += (neg ? "-" : "+") + termstr;
        }
        return s;
    };
    if (den == 1) return body(Int(1));
    return "(" + body(den) + ")/" + den.get_str();
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyParser(const std::string& str) : s(str) {}

    void ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool digit() const { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }

    Int integer() {
        ws();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw err_parse("expected integer in polynomial at '" + s.substr(i) + "'");
        Int v(s.substr(i, j - i));
        i = j;
        return v;
    }

    // term := coeff ['*'? t-part] | t-part, with optional '/int' after coeff or t-part
    std::vector<Rat> term() {
        ws();
        Rat coeff(1);
        bool saw_coeff = false;
        if (digit()) {
            Int num = integer();
            coeff = Rat(num);
            saw_coeff = true;
            if (eat('/')) coeff /= Rat(integer());
        }
        long k = 0;
        ws();
        bool star = false;
        if (saw_coeff && eat('*')) star = true;
        ws();
        if (i < s.size() && s[i] == 't') {
            ++i;
            k = 1;
            if (eat('^')) k = integer().get_si();
            if (eat('/')) coeff /= Rat(integer());
        } else if (star) {
            throw err_parse("dangling '*' in polynomial '" + s + "'");
        } else if (!saw_coeff) {
            throw err_parse("expected term in polynomial '" + s + "'");
        }
        std::vector<Rat> out(k + 1, Rat(0));
        out[k] = coeff;
        return out;
    }

    std::vector<Rat> sum() {
        std::vector<Rat> acc;
        bool neg = false;
        ws();
        if (eat('-')) neg = true;
        else eat('+');
        while (true) {
            std::vector<Rat> t = term();
            if (acc.size() < t.size()) acc.resize(t.size(), Rat(0));
            for (std::size_t j = 0; j < t.size(); ++j) acc[j] += neg ? -t[j] : t[j];
            ws();
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else break;
        }
        return acc;
    }
};

}  // namespace

IntegerPolynomial parse_intpoly(const std::string& str) {
    PolyParser p(str);
    p.ws();
    std::vector<Rat> coeffs;
    if (p.eat('(')) {
        coeffs = p.sum();
        if (!p.eat(')')) throw err_parse("missing ')' in polynomial '" + str + "'");
        if (p.eat('/')) {
            Rat den(p.integer());
            for (Rat& c : coeffs) c /= den;
        }
    } else {
        coeffs = p.sum();
    }
    p.ws();
    if (p.i != str.size()) throw err_parse("trailing input in polynomial '" + str + "'");
    IntegerPolynomial out{std::move(coeffs)};
    if (!out.is_integer_valued())
        throw err_parse("polynomial '" + str + "' is not integer-valued");
    return out;
}

IntegerPolynomial binomial_poly(long a, long shift) {
    // product_{k=0..a-1} (t + shift - k) / a!
    std::vector<Rat> out{Rat(1)};
    for (long k = 0; k < a; ++k) {
        std::vector<Rat> nxt(out.size() + 1, Rat(0));
        for (std::size_t j = 0; j < out.size(); ++j) {
            nxt[j] += out[j] * Rat(shift - k);
            nxt[j + 1] += out[j];
        }
        out = std::move(nxt);
    }
    Int fact(1);
    for (long k = 2; k <= a; ++k) fact *= k;
    for (Rat& c : out) c /= Rat(fact);
    return IntegerPolynomial(std::move(out));
}

}  // namespace hilbreg
