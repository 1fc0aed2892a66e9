#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bbrc/harness.hpp"
#include "bbrc/shapes.hpp"

using namespace bbrc;

namespace {

TensorState state_of(int n, const std::vector<std::vector<int>>& mults) {
    TensorState t;
    t.n = n;
    for (const auto& m : mults) t.factors.push_back(CoordinateVector{m});
    return t;
}

TensorState random_state(std::mt19937_64& rng, int n, int m, int lo, int hi) {
    TensorState t;
    t.n = n;
    for (int j = 0; j < m; ++j) {
        CoordinateVector b;
        for (int a = 0; a < n; ++a)
            b.mult.push_back(lo + static_cast<int>(rng() % (hi - lo + 1)));
        t.factors.push_back(b);
    }
    return t;
}

}  // namespace

TEST_CASE("the sl3 counterexample of the Remark") {
    auto b = state_of(3, {{17, 8, 46}, {48, 42, 36}, {29, 50, 11}});
    auto rc = phi_inverse(b);
    long long oracle2 = rc.rig[0][1] + 2LL * rc.nu[0][1];
    long long oracle3 = rc.rig[0][1] + 3LL * rc.nu[0][1];
    CHECK(oracle2 == 144);
    CHECK(conjectured_rigging(b, 1, 2, 2) == 143);
    CHECK(conjectured_rigging(b, 1, 2, 3) == 234);
    CHECK(oracle3 == 234);
}

TEST_CASE("appendix numerics") {
    // generate_rc_data(2, 3, 0, 0, [10,4,2,4,6,2]): two sl3 factors
    auto b = state_of(3, {{10, 4, 2}, {4, 6, 2}});
    auto rc = phi_inverse(b);
    REQUIRE(!rc.nu[0].empty());
    CHECK(rc.nu[0][0] == 12);
    CHECK(rc.rig[0][0] == -6);
    std::vector<long long> seq;
    for (int i = 0; i < 6; ++i) seq.push_back(rc.rig[0][0] + i * rc.nu[0][0]);
    CHECK(seq == std::vector<long long>{-6, 6, 18, 30, 42, 54});
    // the printed tropical difference 30 = the conjectured rigging at t = 3
    CHECK(conjectured_rigging(b, 1, 1, 3) == 30);
}

TEST_CASE("m=1 closed forms, exhaustive") {
    for (int n = 2; n <= 5; ++n)
        for (int s = 0; s <= 6; ++s)
            for (const auto& el : all_elements(n, s)) {
                TensorState b{n, {el}};
                auto rc = phi_inverse(b);
                for (int a = 1; a <= n - 1; ++a) {
                    int tail = 0;
                    for (int c = a; c < n; ++c) tail += el.mult[c];
                    if (tail == 0) {
                        CHECK(rc.nu[a - 1].empty());
                    } else {
                        REQUIRE(rc.nu[a - 1].size() == 1);
                        CHECK(rc.nu[a - 1][0] == tail);
                        CHECK(rc.rig[a - 1][0] == -el.mult[a]);
                    }
                    CHECK(conjectured_row_length(b, a, 1) == tail);
                    Trop want = tail == 0 ? 0 : tail - el.mult[a];
                    CHECK(conjectured_rigging(b, a, 1, 1) == want);
                }
            }
}

TEST_CASE("check_state on single factors matches at T <= 1") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        auto b = random_state(rng, n, 1, 0, 6);
        auto reports = check_state(b);
        for (const auto& rep : reports) {
            REQUIRE(rep.first_match_T.has_value());
            CHECK(*rep.first_match_T <= 1);
            CHECK(rep.row_length_match);
            CHECK(rep.stabilization_ok);
        }
    }
}

TEST_CASE("conjectured values for absent rows are zero") {
    auto b = state_of(3, {{2, 0, 0}});  // vacuum: nu empty
    for (int a = 1; a <= 2; ++a)
        for (int i = 1; i <= 3; ++i) {
            CHECK(conjectured_row_length(b, a, i) == 0);
            CHECK(conjectured_rigging(b, a, i, 2) == 0);
        }
}

TEST_CASE("column fusion checks") {
    std::mt19937_64 rng(8);
    // leading letter 1 is trivially fusible
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        auto rest = random_state(rng, n, 3, 0, 5);
        TensorState b{n, {vacuum(n, 1)}};
        b.factors.insert(b.factors.end(), rest.factors.begin(), rest.factors.end());
        CHECK(column_fusion_check(b));
    }
    // random fusible states with leading letter k
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % n);
        CoordinateVector lead;
        lead.mult.assign(n, 0);
        lead.mult[k - 1] = 1;
        CoordinateVector next;
        next.mult.assign(n, 0);
        for (int a = k - 1; a < n; ++a) next.mult[a] = static_cast<int>(rng() % 6);
        TensorState b{n, {lead, next}};
        auto rest = random_state(rng, n, 2, 0, 5);
        b.factors.insert(b.factors.end(), rest.factors.begin(), rest.factors.end());
        CHECK(column_fusion_check(b));
    }
    CHECK_THROWS(column_fusion_check(state_of(3, {{0, 0, 1}, {1, 0, 0}})));
}

TEST_CASE("fuzz determinism and reporting") {
    FuzzParams p;
    p.n = 3;
    p.m = 3;
    p.s_max = 4;
    p.trials = 24;
    p.seed = 12345;
    auto s1 = fuzz(p);
    auto s2 = fuzz(p);
    CHECK(s1.trials == 24);
    CHECK(s1.matched == s2.matched);
    CHECK(s1.inconclusive == s2.inconclusive);
    CHECK(s1.hard_failures == 0);
    CHECK(s1.reports == s1.matched + s1.inconclusive);

    FuzzParams zero;
    zero.trials = 0;
    auto s0 = fuzz(zero);
    CHECK(s0.trials == 0);
    CHECK(s0.reports == 0);
}

TEST_CASE("counterexample state is reported as late-T, not failure") {
    auto b = state_of(3, {{17, 8, 46}, {48, 42, 36}, {29, 50, 11}});
    CheckParams cp;
    cp.t_max = 6;
    cp.colors = {1};
    auto reports = check_state(b, cp);
    for (const auto& rep : reports) {
        if (rep.i == 2) {
            REQUIRE(rep.first_match_T.has_value());
            CHECK(*rep.first_match_T == 3);
            CHECK(!rep.table[2].match);
        }
    }
}
