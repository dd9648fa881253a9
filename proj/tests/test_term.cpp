#include <doctest.h>

#include <algorithm>

#include "hilbreg/term.hpp"
#include "oracles.hpp"

using namespace hilbreg;
using oracles::T;

TEST_CASE("degrevlex: pinned comparisons") {
    // n=3 degree-2 basis in the pinned order
    TermList b = monomial_basis(3, 2);
    REQUIRE(b.size() == 10);
    CHECK(term_text(b[0]) == "x3^2");
    CHECK(term_text(b[1]) == "x3*x2");
    CHECK(term_text(b[2]) == "x2^2");
    CHECK(term_text(b[3]) == "x3*x1");
    CHECK(term_text(b[4]) == "x2*x1");
    CHECK(term_text(b[5]) == "x1^2");
    CHECK(term_text(b[6]) == "x3*x0");
    CHECK(term_text(b[7]) == "x2*x0");
    CHECK(term_text(b[8]) == "x1*x0");
    CHECK(term_text(b[9]) == "x0^2");

    // x2^2 > x3*x1
    CHECK(compare_degrevlex(T({0, 0, 2, 0}), T({0, 1, 0, 1})) == Ordering::GT);
    // reflexivity
    CHECK(compare_degrevlex(T({0, 1, 0, 1}), T({0, 1, 0, 1})) == Ordering::EQ);
    // x1^2 > x3*x0 (positions 6 and 7)
    CHECK(compare_degrevlex(T({0, 2, 0, 0}), T({1, 0, 0, 1})) == Ordering::GT);
    CHECK(term_position(b, T({0, 2, 0, 0})) == 6);
    CHECK(term_position(b, T({1, 0, 0, 1})) == 7);

    CHECK_THROWS_AS(compare_degrevlex(T({1, 0}), T({1, 0, 0})), domain_error);
}

TEST_CASE("degrevlex is a strict total order; sorting the basis is a no-op") {
    for (int n = 1; n <= 3; ++n) {
        for (long t = 1; t <= 4; ++t) {
            TermList b = monomial_basis(n, t);
            TermList sorted = b;
            std::sort(sorted.begin(), sorted.end(), DrlGreater{});
            CHECK(sorted == b);
            // antisymmetry + transitivity on a sample of triples
            oracles::TestRng rng(7 * n + t);
            for (int k = 0; k < 40; ++k) {
                const Term& u = b[rng.integer(0, static_cast<int>(b.size()) - 1)];
                const Term& v = b[rng.integer(0, static_cast<int>(b.size()) - 1)];
                const Term& w = b[rng.integer(0, static_cast<int>(b.size()) - 1)];
                if (compare_degrevlex(u, v) == Ordering::GT)
                    CHECK(compare_degrevlex(v, u) == Ordering::LT);
                if (drl_greater(u, v) && drl_greater(v, w)) CHECK(drl_greater(u, w));
            }
        }
    }
}

TEST_CASE("monomial_basis pinned examples and counting") {
    CHECK(monomial_basis(0, 5) == TermList{T({5})});
    TermList b21 = monomial_basis(2, 1);
    CHECK(term_text(b21[0]) == "x2");
    CHECK(term_text(b21[1]) == "x1");
    CHECK(term_text(b21[2]) == "x0");
    for (int n = 0; n <= 5; ++n)
        for (long t = 0; t <= 8; ++t)
            CHECK(Int(static_cast<long>(monomial_basis(n, t).size())) == binomial(n + t, n));
}

TEST_CASE("min_var / max_var") {
    CHECK(min_var(T({1, 0, 0, 1})) == 0);
    CHECK(max_var(T({1, 0, 0, 1})) == 3);
    CHECK(min_var(T({0, 1, 2})) == 1);
    CHECK_THROWS_AS(min_var(T({0, 0, 0})), domain_error);
}

TEST_CASE("elevations") {
    // x1^2 in n=2: single move
    auto e1 = elevations(T({0, 2, 0}));
    REQUIRE(e1.size() == 1);
    CHECK(term_text(e1[0]) == "x2*x1");
    // x0^t: only divisor is x0
    auto e2 = elevations(T({3, 0, 0, 0}));
    REQUIRE(e2.size() == 3);
    CHECK(term_text(e2[0]) == "x3*x0^2");
    CHECK(term_text(e2[1]) == "x2*x0^2");
    CHECK(term_text(e2[2]) == "x1*x0^2");
    // x2*x0 in n=3: all of the (x1/x0), (x2/x0), (x3/x0), (x3/x2) moves
    auto e3 = elevations(T({1, 0, 1, 0}));
    TermList expect{T({0, 0, 1, 1}), T({0, 0, 2, 0}), T({0, 1, 1, 0}), T({1, 0, 0, 1})};
    std::sort(expect.begin(), expect.end(), DrlGreater{});
    CHECK(e3 == expect);
    // elevations preserve degree
    for (const Term& u : monomial_basis(3, 3))
        for (const Term& v : elevations(u)) CHECK(v.degree() == u.degree());
}

TEST_CASE("is_borel_set pinned examples") {
    TermList M1{T({0, 0, 0, 2}), T({0, 0, 1, 1}), T({0, 0, 2, 0}), T({0, 1, 0, 1}),
                T({0, 1, 1, 0})};
    CHECK(is_borel_set(M1));
    TermList M2{T({0, 0, 0, 2}), T({0, 0, 1, 1}), T({0, 1, 0, 1}), T({1, 0, 0, 1})};
    CHECK(is_borel_set(M2));
    CHECK_FALSE(is_borel_set(TermList{T({1, 0, 0, 1})}));
    CHECK_THROWS_AS(is_borel_set(TermList{T({1, 0, 0, 1}), T({0, 0, 0, 1})}), domain_error);
}

TEST_CASE("borel_closure pinned examples and properties") {
    TermList c1 = borel_closure({T({1, 0, 0, 1})});
    TermList expect{T({0, 0, 0, 2}), T({0, 0, 1, 1}), T({0, 1, 0, 1}), T({1, 0, 0, 1})};
    std::sort(expect.begin(), expect.end(), DrlGreater{});
    CHECK(c1 == expect);

    TermList c2 = borel_closure({T({0, 2, 0})});
    CHECK(c2 == TermList{T({0, 0, 2}), T({0, 1, 1}), T({0, 2, 0})});

    // idempotence, closedness, monotonicity on random subsets
    oracles::TestRng rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        int n = rng.integer(1, 3);
        long t = rng.integer(1, 3);
        TermList b = monomial_basis(n, t);
        std::vector<Term> M;
        for (const Term& u : b)
            if (rng.integer(0, 2) == 0) M.push_back(u);
        if (M.empty()) continue;
        std::vector<Term> M2 = M;
        M2.push_back(b[rng.integer(0, static_cast<int>(b.size()) - 1)]);
        TermList cl = borel_closure(M);
        CHECK(is_borel_set(cl));
        CHECK(borel_closure(cl) == cl);
        TermList cl2 = borel_closure(M2);
        for (const Term& u : cl) CHECK(std::find(cl2.begin(), cl2.end(), u) != cl2.end());
    }
}

TEST_CASE("term text round trips") {
    CHECK(term_text(T({0, 1, 0, 2})) == "x3^2*x1");
    CHECK(term_text(T({0, 0, 0, 0})) == "1");
    CHECK(parse_term("x3^2*x1", 3) == T({0, 1, 0, 2}));
    CHECK(parse_term("1", 3) == T({0, 0, 0, 0}));
    CHECK(parse_term(" x2 * x0 ", 3) == T({1, 0, 1, 0}));
    CHECK_THROWS_AS(parse_term("x9", 3), domain_error);
    CHECK_THROWS_AS(parse_term("y2", 3), domain_error);
    for (const Term& u : monomial_basis(3, 3)) CHECK(parse_term(term_text(u), 3) == u);
}
