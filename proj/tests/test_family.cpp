#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "peano/family.hpp"

using namespace peano;

namespace {

struct Frac {
    long p, q;
};

// All reduced fractions of height |p| + q <= max_height in enumeration order,
// built by sorting rather than by generating heights in sequence.
std::vector<Frac> sorted_fractions(long max_height) {
    std::vector<std::tuple<long, long, int, long>> keyed; // height, q, sign rank, p
    keyed.emplace_back(1, 1, 0, 0);
    for (long q = 1; q < max_height; ++q)
        for (long a = 1; a + q <= max_height; ++a) {
            if (std::gcd(a, q) != 1) continue;
            keyed.emplace_back(a + q, q, 0, a);
            keyed.emplace_back(a + q, q, 1, -a);
        }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Frac> out;
    for (const auto& [h, q, s, p] : keyed) out.push_back({p, q});
    return out;
}

// Greedy schedule evaluated in long double.
std::vector<std::uint64_t> greedy_oracle(long double alpha, std::size_t count, const std::vector<Frac>& qs) {
    std::vector<std::uint64_t> out;
    for (std::size_t n = 1; n <= qs.size() && out.size() < count; ++n) {
        const long double v = static_cast<long double>(qs[n - 1].p) / qs[n - 1].q;
        if (std::fabs(v - alpha) < 1.0L / (out.size() + 1)) out.push_back(n);
    }
    return out;
}

const std::vector<std::string> kTenSeeds{"ln2", "sqrt2", "sqrt3", "sqrt5", "e",
                                         "pi", "-ln2", "-sqrt2", "-sqrt3", "-sqrt5"};

TargetSpace plane() { return TargetSpace::euclidean(2); }

std::vector<FamilyMember> ten_members(unsigned depth = 10) {
    std::vector<FamilyMember> out;
    for (const auto& s : kTenSeeds) out.push_back(FamilyMember::from_ad_set(ad_set(s, 24), plane(), depth));
    return out;
}

} // namespace

TEST(Enumeration, OpeningTerms) {
    RationalEnumeration q;
    const std::vector<Fraction> expected{{0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2},
                                         {-1, 2}, {3, 1}, {-3, 1}, {1, 3}, {-1, 3}};
    for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(q.at(n), expected[n - 1]) << n;
}

TEST(Enumeration, MatchesSortedOracleAndIsInjective) {
    const auto oracle = sorted_fractions(100);
    RationalEnumeration q;
    std::set<std::pair<long, long>> seen;
    for (std::size_t n = 1; n <= oracle.size(); ++n) {
        const Fraction f = q.at(n);
        ASSERT_EQ(f.p, oracle[n - 1].p) << n;
        ASSERT_EQ(f.q, oracle[n - 1].q) << n;
        EXPECT_TRUE(seen.insert({f.p, f.q}).second);
    }
    // Every reduced p/q with |p|, q <= 50 has height <= 100, so lies in this prefix.
    for (long qq = 1; qq <= 50; ++qq)
        for (long p = -50; p <= 50; ++p) {
            if (std::gcd(p, qq) != 1) continue;
            EXPECT_TRUE(seen.count({p, qq})) << p << "/" << qq;
        }
    EXPECT_EQ(q.index_of(3, 2), 14u);
    EXPECT_EQ(q.index_of(6, 4), 14u);
}

TEST(AdSetTest, SqrtTwoGolden) {
    const auto a = ad_set("sqrt2", 5);
    EXPECT_EQ(a.indices, (std::vector<std::uint64_t>{2, 14, 28, 48, 86}));
    EXPECT_EQ(a.indices, greedy_oracle(std::sqrt(2.0L), 5, sorted_fractions(60)));
    EXPECT_EQ(a.decided_through, 86u);
}

TEST(AdSetTest, ScheduleAndMonotonicityAgainstOracle) {
    const auto qs = sorted_fractions(200);
    for (const auto& name : seed_names()) {
        const auto a = ad_set(name, 30);
        ASSERT_EQ(a.indices.size(), 30u);
        EXPECT_TRUE(std::is_sorted(a.indices.begin(), a.indices.end()));
        EXPECT_EQ(std::adjacent_find(a.indices.begin(), a.indices.end()), a.indices.end());
        const long double alpha = a.seed.value.convert_to<long double>();
        EXPECT_EQ(a.indices, greedy_oracle(alpha, 30, qs)) << name;
        for (std::size_t k = 1; k <= a.indices.size(); ++k) {
            const auto& f = qs[a.indices[k - 1] - 1];
            EXPECT_LT(std::fabs(static_cast<long double>(f.p) / f.q - alpha), 1.0L / k);
        }
    }
}

TEST(AdSetTest, MembershipOutsideDecidedRangeIsRefused) {
    const auto a = ad_set("pi", 3);
    EXPECT_TRUE(a.contains(a.indices.back()));
    EXPECT_FALSE(a.contains(a.indices.back() - 1));
    EXPECT_THROW(a.contains(a.decided_through + 1), Error);
}

TEST(AdSetTest, TieRaisesPrecisionExhausted) {
    // alpha = 3/2 sits exactly 1/2 from q_4 = 2 when the second index is sought.
    const Seed rational{"three_halves", SeedValue(3) / 2};
    try {
        ad_set(rational, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::precision_exhausted);
    }
    EXPECT_THROW(named_seed("sqrt11"), Error);
}

TEST(AdSetTest, IntersectionsStabilizeWithinPrefix) {
    std::vector<AdSet> small, large;
    for (const auto& s : kTenSeeds) {
        small.push_back(ad_set_through(named_seed(s), 10000));
        large.push_back(ad_set_through(named_seed(s), 100000));
    }
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) {
            const auto x = intersect(small[i], small[j]);
            EXPECT_TRUE(x.stabilized) << x.alpha << " " << x.beta;
            EXPECT_LE(x.stable_from, 10000u);
            EXPECT_EQ(intersect(large[i], large[j]).common, x.common) << x.alpha << " " << x.beta;
        }
    EXPECT_STREQ(AdIntersection::label, "stabilized count over tested prefix");
}

TEST(AdSetTest, LatePositionsNeverCoincide) {
    const auto names = seed_names();
    std::vector<AdSet> sets;
    for (const auto& n : names) sets.push_back(ad_set_through(named_seed(n), 20000));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const double gap = abs(sets[i].seed.value - sets[j].seed.value).convert_to<double>();
            if (gap <= 0.1) continue;
            const auto x = intersect(sets[i], sets[j]);
            const std::size_t late = x.bound - 1; // 0-based position of the K-th element
            std::set<std::uint64_t> tail(sets[j].indices.begin() + std::min(late, sets[j].indices.size()),
                                         sets[j].indices.end());
            for (std::size_t k = late; k < sets[i].indices.size(); ++k)
                EXPECT_FALSE(tail.count(sets[i].indices[k])) << names[i] << " " << names[j];
        }
}

TEST(Member, ActiveOnlyOnItsChannels) {
    const auto m = FamilyMember::from_ad_set(ad_set("sqrt2", 5), plane(), 10);
    const Rational u(5, 17);
    for (std::uint64_t n = 1; n <= 86; ++n) {
        for (std::uint64_t k = 1; k <= 3; ++k) {
            const Rational t = Rational(pair_index(k, n)) + u;
            const Point v = member_eval(m, t);
            if (m.active_on(n))
                EXPECT_EQ(v, TiledLineMap::block(plane(), n, 10).eval(t));
            else
                EXPECT_EQ(v, (Point{Rational(0), Rational(0)}));
        }
    }
    EXPECT_EQ(member_eval(m, Rational(-1)), (Point{Rational(0), Rational(0)}));
}

TEST(Combination, TrivialCases) {
    const auto members = ten_members();
    const std::vector<double> zeros(members.size(), 0.0);
    std::vector<double> unit(members.size(), 0.0);
    unit[3] = 1;
    for (std::uint64_t j = 0; j < 300; j += 7) {
        const Rational t = Rational(j) + Rational(3, 7);
        EXPECT_EQ(combo_eval(zeros, members, t), (Point{Rational(0), Rational(0)}));
        EXPECT_EQ(combo_eval(unit, members, t), member_eval(members[3], t));
    }
    EXPECT_THROW(combo_eval(std::vector<double>{1.0}, members, Rational(1)), Error);
}

TEST(Combination, BlockIdentityOnDistinguishedChannel) {
    const auto members = ten_members();
    const std::vector<double> coeffs{0.5, -1.25, 2, 3.75, -0.125, 1, -2, 0.25, 1.5, -3};
    // A channel of the last member used by no other member.
    std::vector<FamilyMember> all = members;
    const auto n0 = exclusive_channel(all, all.size() - 1);
    ASSERT_TRUE(n0.has_value());
    const auto block = TiledLineMap::block(plane(), *n0, 10);
    const Rational last = exact(coeffs.back());
    for (std::uint64_t k = 1; k <= 4; ++k) {
        const std::uint64_t j = pair_index(k, *n0);
        for (int i = 0; i <= 64; ++i) {
            const Rational t = Rational(j) + Rational(i, 64);
            const Point combo = combo_eval(coeffs, members, t);
            const Point single = block.eval(t);
            for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(combo[c] - last * single[c], 0) << k << " " << i;
        }
    }
}

TEST(Rank, DisjointMembersHaveFullRank) {
    std::vector<FamilyMember> m{FamilyMember::finite("a", {1, 3, 5}, plane(), 8),
                                FamilyMember::finite("b", {2, 4, 6}, plane(), 8)};
    const auto r = independence_test(m, default_sample_plan(m, 4));
    EXPECT_EQ(r.rank, 2u);
    EXPECT_TRUE(r.pass);
}

TEST(Rank, DuplicateMemberFails) {
    const auto a = FamilyMember::finite("a", {1, 3, 5}, plane(), 8);
    const auto b = FamilyMember::finite("b", {2, 4, 6}, plane(), 8);
    const auto plan = default_sample_plan({a, b}, 4);
    const auto r = independence_test({a, a, b}, plan);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_FALSE(r.pass);
    const auto only = independence_test({a, a}, plan);
    EXPECT_EQ(only.rank, 1u);
    EXPECT_FALSE(only.pass);
}

TEST(Rank, TenSeedsGiveRankTen) {
    const auto members = ten_members();
    const auto r = independence_test(members, default_sample_plan(members, 8));
    EXPECT_EQ(r.rank, 10u);
    EXPECT_TRUE(r.pass);
    EXPECT_GT(r.singular_values.back() / r.singular_values.front(), 1e-8);
}

TEST(Rank, PlanWithoutExclusiveSamplesIsDegenerate) {
    std::vector<FamilyMember> m{FamilyMember::finite("a", {1, 2}, plane(), 8),
                                FamilyMember::finite("b", {2, 3}, plane(), 8)};
    const SamplePlan shared{Rational(pair_index(1, 2)) + Rational(1, 2)};
    try {
        independence_test(m, shared);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degenerate_sample_plan);
    }
    std::vector<FamilyMember> nested{FamilyMember::finite("a", {1, 2}, plane(), 8),
                                     FamilyMember::finite("b", {1, 2, 3}, plane(), 8)};
    EXPECT_THROW(default_sample_plan(nested), Error);
}
