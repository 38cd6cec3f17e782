/*
   Copyright 2026 The hyperbms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "hyperbms/bms.hpp"
#include "hyperbms/recovery.hpp"
#include "support.hpp"

using namespace hbms;
using namespace hbms::testing;

namespace {

Polynomial P(const std::string& text) { return parse_polynomial(*gf16(), text); }

EvaluationPoint point() { return EvaluationPoint::standard(*gf16(), {5, 5}); }

IncompleteTable table_from(const CellGrid& cells) {
    IncompleteTable t;
    t.field = gf16();
    t.cells = cells;
    t.point = point();
    return t;
}

}  // namespace

TEST(Recovery, DefiningSet) {
    const std::vector<Polynomial> F{P("X1 + a^6"), P("X2 + a^9")};
    EXPECT_EQ(defining_set(F, point()), (std::vector<IndexPair>{{2, 3}}));
    EXPECT_TRUE(defining_set(std::vector<Polynomial>{P("1")}, point()).empty());
    EXPECT_EQ(defining_set(std::vector<Polynomial>{P("X1^5 + 1")}, point()).size(), 25u);
}

TEST(Recovery, DefiningSetOfOracleBasisIsSupport) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        auto terms = random_terms(rng, 1 + trial % 2);
        const auto u = syndrome_by_hand(terms, {trial % 5, trial / 5 % 5});
        std::vector<IndexPair> support;
        for (const auto& t : terms) support.push_back(t.m);
        std::sort(support.begin(), support.end());
        for (auto order : {OrderKind::Lex, OrderKind::Graded}) {
            const auto out = run(*gf16(), u, 2, order, true);
            ASSERT_EQ(out.kind, OutcomeKind::Basis);
            ASSERT_EQ(defining_set(out.state.F, point()), support);
        }
    }
}

TEST(Recovery, SolveConstant) {
    const auto u = syndrome_by_hand({{{0, 0}, 11}});
    const std::vector<IndexPair> supp{{0, 0}};
    const auto cells = known_cells(u);
    const auto e = solve_coefficients(*gf16(), supp, u, point(), cells);
    ASSERT_TRUE(e);
    EXPECT_EQ(e->coeff({0, 0}), *u.at({0, 0}));
}

TEST(Recovery, SolveSingleTermFromAnyCell) {
    const auto u = syndrome_by_hand({{{3, 1}, 4}});
    const std::vector<IndexPair> supp{{3, 1}};
    for (const auto& n : known_cells(u)) {
        const std::vector<IndexPair> one{n};
        const auto e = solve_coefficients(*gf16(), supp, u, point(), one);
        ASSERT_TRUE(e);
        EXPECT_EQ(*e, P("a^4*X1^3*X2"));
    }
}

TEST(Recovery, SolveWeightTwo) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const auto terms = random_terms(rng, 2);
        auto u = syndrome_by_hand(terms);
        const std::vector<IndexPair> supp{terms[0].m, terms[1].m};
        const auto e = solve_coefficients(*gf16(), supp, u, point(), known_cells(u));
        ASSERT_TRUE(e);
        EXPECT_EQ(*e, poly_of(terms));
        // A wrong support makes the system inconsistent.
        const std::vector<IndexPair> wrong{terms[0].m, IndexPair{(terms[1].m.n1 + 1) % 5, terms[1].m.n2}};
        if (wrong[1] != terms[0].m) {
            EXPECT_FALSE(solve_coefficients(*gf16(), wrong, u, point(), known_cells(u)));
        }
    }
}

TEST(Recovery, SolveSingularSystem) {
    const auto u = syndrome_by_hand({{{1, 0}, 0}, {{2, 0}, 0}});
    // Only row 0 cells: the X1 exponents cannot be told apart.
    const std::vector<IndexPair> cells{{0, 0}, {0, 1}, {0, 2}};
    const std::vector<IndexPair> supp{{1, 0}, {2, 0}};
    EXPECT_FALSE(solve_coefficients(*gf16(), supp, u, point(), cells));
}

TEST(Recovery, DescentAlreadyOverBase) {
    const auto d = descend_to_base(P("X1*X2 + X1^3"), point());
    ASSERT_TRUE(d);
    EXPECT_EQ(d->tau, (IndexPair{0, 0}));
    EXPECT_EQ(d->e, P("X1*X2 + X1^3"));
}

TEST(Recovery, DescentFindsAShift) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto terms = random_terms(rng, 1 + trial % 3, true);
        const IndexPair tau{trial % 5, trial / 5 % 5};
        // e'_m = e_m alpha^{tau.m} with alpha = (a^3, a^3).
        Polynomial e_prime(*gf16());
        for (const auto& t : terms) e_prime.set(t.m, gf16()->exp(3 * (tau.n1 * t.m.n1 + tau.n2 * t.m.n2)));
        const auto d = descend_to_base(e_prime, point());
        ASSERT_TRUE(d);
        for (const auto& [m, c] : d->e.terms()) {
            EXPECT_TRUE(gf16()->in_base_field(c));
            EXPECT_EQ(c * point().monomial(d->tau, m), e_prime.coeff(m));
        }
    }
}

TEST(Recovery, DescentFailsOffEveryCoset) {
    // Exhaustive scan: a coefficient a^k is reachable only when k is a multiple of 3.
    const auto e_prime = P("a*X1 + a^2*X2");
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const auto c1 = gf16()->exp(1) / point().monomial({i, j}, {1, 0});
            EXPECT_FALSE(gf16()->in_base_field(c1));
        }
    EXPECT_FALSE(descend_to_base(e_prime, point()));
}

TEST(Recovery, VerifyAfforded) {
    const auto terms = std::vector<Term>{{{1, 2}, 3}, {{4, 0}, 7}};
    const IndexPair tau{2, 1};
    auto H = table_from(syndrome_by_hand(terms, tau));
    H.cells.set({0, 3}, std::nullopt);
    // e' for the working array at tau' = (1, 4) is e shifted by tau + tau'.
    const IndexPair wt{1, 4};
    Polynomial e_prime(*gf16());
    for (const auto& [m, c] : terms)
        e_prime.set(m, gf16()->exp(c + 3 * ((tau.n1 + wt.n1) * m.n1 + (tau.n2 + wt.n2) * m.n2)));
    EXPECT_TRUE(verify_afforded(H, e_prime, wt, point()));
    EXPECT_FALSE(verify_afforded(H, e_prime, {1, 3}, point()));
    EXPECT_FALSE(verify_afforded(H, e_prime * gf16()->exp(1), wt, point()));
    auto bad = H;
    bad.cells.set({4, 4}, *H.cells.at({4, 4}) + gf16()->one());
    EXPECT_FALSE(verify_afforded(bad, e_prime, wt, point()));
    const auto empty = table_from(CellGrid({5, 5}));
    EXPECT_TRUE(verify_afforded(empty, P("a^5*X1"), {0, 0}, point()));
}

TEST(Recovery, SupportAndWeight) {
    const SparseGenerator g{P("X1 + a*X2^3"), std::nullopt};
    EXPECT_EQ(g.weight(), 2u);
    EXPECT_EQ(g.support(), (std::vector<IndexPair>{{0, 3}, {1, 0}}));
}
