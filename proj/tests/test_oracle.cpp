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

#include "hyperbms/oracle.hpp"
#include "support.hpp"

namespace hbms {
namespace {

using testing::gf16;

const EvaluationPoint& point() {
    static const auto p = EvaluationPoint::standard(*gf16(), {5, 5});
    return p;
}

TEST(SyndromeTable, ZeroGenerator) {
    const auto g = syndrome_table(Polynomial(*gf16()), {2, 3}, point());
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) EXPECT_TRUE(g.at({i, j})->is_zero());
}

TEST(SyndromeTable, Constant) {
    const auto& L = *gf16();
    const auto g = syndrome_table(Polynomial::constant(L, L.exp(9)), {4, 1}, point());
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) EXPECT_EQ(g.at({i, j}), L.exp(9));
}

TEST(SyndromeTable, MonomialMatchesHandFormula) {
    const auto& L = *gf16();
    for (int m1 = 0; m1 < 5; ++m1)
        for (int m2 = 0; m2 < 5; ++m2)
            for (IndexPair tau : {IndexPair{0, 0}, IndexPair{3, 1}, IndexPair{4, 4}}) {
                const auto g = syndrome_table(Polynomial::monomial(L, {m1, m2}, L.exp(6)), tau, point());
                EXPECT_EQ(g, testing::syndrome_by_hand({{{m1, m2}, 6}}, tau));
            }
}

TEST(SyndromeTable, RandomGeneratorsMatchHandFormula) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto terms = testing::random_terms(rng, 1 + trial % 4);
        const IndexPair tau{trial % 5, (trial / 5) % 5};
        EXPECT_EQ(syndrome_table(testing::poly_of(terms), tau, point()), testing::syndrome_by_hand(terms, tau));
    }
}

TEST(SyndromeTable, DoublyPeriodic) {
    std::mt19937_64 rng(6);
    const auto terms = testing::random_terms(rng, 3);
    const auto e = testing::poly_of(terms);
    const auto g = syndrome_table(e, {1, 2}, point());
    for (int i = -5; i < 10; ++i)
        for (int j = -5; j < 10; ++j) EXPECT_EQ(g.at({i, j}), point().evaluate(e, IndexPair{1 + i, 2 + j}));
}

TEST(ShiftGenerator, AbsorbsOffset) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto e = testing::poly_of(testing::random_terms(rng, 2));
        const IndexPair off{trial % 5, (3 * trial) % 5};
        const auto shifted = shift_generator(e, off, point());
        EXPECT_EQ(syndrome_table(shifted, {0, 0}, point()), syndrome_table(e, off, point()));
        ASSERT_EQ(shifted.size(), e.size());
        for (const auto& [m, c] : e.terms()) EXPECT_FALSE(shifted.coeff(m).is_zero());
    }
}

TEST(RandomInstance, Reproducible) {
    InstanceOptions opts;
    opts.t = 2;
    opts.holes = 5;
    const auto a = random_instance(gf16(), {5, 5}, 42, opts);
    const auto b = random_instance(gf16(), {5, 5}, 42, opts);
    EXPECT_EQ(a.e, b.e);
    EXPECT_EQ(a.tau, b.tau);
    EXPECT_EQ(a.window, b.window);
    EXPECT_EQ(a.table.cells, b.table.cells);
    EXPECT_EQ(format_table(a.table), format_table(b.table));
}

TEST(RandomInstance, NoHolesIsFullyKnown) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        InstanceOptions opts;
        opts.t = 2;
        const auto inst = random_instance(gf16(), {5, 5}, seed, opts);
        EXPECT_EQ(inst.table.hole_count(), 0u);
        EXPECT_EQ(inst.table.cells, inst.full);
        EXPECT_GE(inst.e.size(), 1u);
        EXPECT_LE(inst.e.size(), 2u);
        for (const auto& [m, c] : inst.e.terms()) EXPECT_TRUE(gf16()->in_base_field(c));
    }
}

TEST(RandomInstance, HolesStayOutsideWindow) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        InstanceOptions opts;
        opts.t = 2;
        opts.holes = 12;
        const auto inst = random_instance(gf16(), {5, 5}, seed, opts);
        EXPECT_EQ(inst.table.hole_count(), 12u);
        EXPECT_EQ(max_hyperbolic_t(inst.table, inst.window), 2);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (inst.table.cells.known({i, j})) {
                    EXPECT_EQ(inst.table.cells.at({i, j}), inst.full.at({i, j}));
                }
    }
    InstanceOptions too_many;
    too_many.t = 2;
    too_many.holes = 18;
    EXPECT_THROW(random_instance(gf16(), {5, 5}, 1, too_many), Error);
}

TEST(RandomInstance, PuncturedWindow) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        InstanceOptions opts;
        opts.t = 2;
        opts.puncture = {{1, 1}};
        const auto inst = random_instance(gf16(), {5, 5}, seed, opts);
        EXPECT_EQ(inst.table.hole_count(), 1u);
        EXPECT_FALSE(inst.table.cells.known(inst.window + IndexPair{1, 1}));
        EXPECT_LT(max_hyperbolic_t(inst.table, inst.window), 2);
        const auto det = detect_hyperbolic(inst.table);
        for (const auto& c : det.candidates) EXPECT_NE(c.tau, inst.window);
        const auto placements = candidate_placements(inst.table, true);
        EXPECT_NE(std::find(placements.begin(), placements.end(), Placement{inst.window, 2}), placements.end());
    }
}

TEST(RandomInstance, ExtensionCoefficients) {
    InstanceOptions opts;
    opts.t = 2;
    opts.weight = 2;
    opts.base_field = false;
    bool outside = false;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = random_instance(gf16(), {5, 5}, seed, opts);
        for (const auto& [m, c] : inst.e.terms()) outside = outside || !gf16()->in_base_field(c);
    }
    EXPECT_TRUE(outside);
}

TEST(RandomInstance, RejectsBadT) {
    InstanceOptions opts;
    opts.t = 3;
    EXPECT_THROW(random_instance(gf16(), {5, 5}, 1, opts), Error);
}

TEST(Sweep, WeightOneRecoversEverything) {
    std::vector<Element> coeffs;
    for (const auto& x : gf16()->elements())
        if (!x.is_zero()) coeffs.push_back(x);
    const auto s = exhaustive_sweep(gf16(), {5, 5}, 1, coeffs, 2);
    EXPECT_EQ(s.instances, 25u * 15u * 25u);
    EXPECT_TRUE(s.all_recovered());
    EXPECT_EQ(s.footprint_ok, s.instances);
}

TEST(Sweep, WeightTwoWithTwoCoefficients) {
    const auto& L = *gf16();
    const auto s = exhaustive_sweep(gf16(), {5, 5}, 2, {L.one(), L.exp(1)}, 2);
    EXPECT_EQ(s.instances, 300u * 4u * 25u);
    EXPECT_TRUE(s.all_recovered());
    EXPECT_EQ(s.footprint_ok, s.instances);
}

TEST(Sweep, WeightThreeIsRejectedAtTwo) {
    SweepSummary s;
    ResolveConfig config;
    config.t = 2;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        InstanceOptions opts;
        opts.t = 2;
        opts.weight = 3;
        opts.base_field = seed % 2 == 0;
        check_instance(random_instance(gf16(), {5, 5}, seed, opts), config, s);
    }
    EXPECT_EQ(s.instances, 1000u);
    EXPECT_EQ(s.completed, 0u);
    EXPECT_EQ(s.rejected, s.instances);
}

TEST(CheckInstance, CountsOneInstance) {
    InstanceOptions opts;
    opts.t = 2;
    opts.holes = 4;
    const auto inst = random_instance(gf16(), {5, 5}, 9, opts);
    SweepSummary s;
    check_instance(inst, {}, s);
    EXPECT_EQ(s.instances, 1u);
    EXPECT_EQ(s.completed, 1u);
    EXPECT_TRUE(s.all_recovered());
}

}  // namespace
}  // namespace hbms
