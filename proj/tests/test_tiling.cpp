#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "peano/tiling.hpp"

using namespace peano;

namespace {

Point pt(std::initializer_list<double> xs) { return exact(std::vector<double>(xs)); }

// Brute-force pairing: walk the anti-diagonals k + n = 2, 3, ... with n increasing.
std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> brute_pairing(std::uint64_t count) {
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> out;
    std::uint64_t j = 0;
    for (std::uint64_t sum = 2; j < count; ++sum)
        for (std::uint64_t n = 1; n < sum && j < count; ++n) out[j++] = {sum - n, n};
    return out;
}

} // namespace

TEST(Pairing, MatchesDiagonalWalk) {
    const auto brute = brute_pairing(20000);
    for (const auto& [j, kn] : brute) {
        const auto c = tile_of_index(j);
        EXPECT_EQ(c.k, kn.first);
        EXPECT_EQ(c.n, kn.second);
        EXPECT_EQ(pair_index(kn.first, kn.second), j);
    }
    EXPECT_EQ(tile_of_index(0), (TileCoord{0, 1, 1}));
}

TEST(Pairing, RoundTripOnMillionPrefix) {
    for (std::uint64_t j = 0; j < 1000000; ++j) {
        const auto c = tile_of_index(j);
        ASSERT_EQ(pair_index(c.k, c.n), j);
    }
}

TEST(Pairing, NextTileOfChannel) {
    for (std::uint64_t n : {1u, 2u, 7u, 40u}) {
        for (std::uint64_t j0 : {0u, 1u, 5u, 99u, 1000u, 12345u}) {
            std::uint64_t j = j0;
            while (tile_of_index(j).n != n) ++j;
            EXPECT_EQ(next_tile_of_channel(n, j0).j, j) << "n=" << n << " j0=" << j0;
        }
    }
}

TEST(Tiling, ChannelsAreUnboundedInK) {
    for (std::uint64_t n = 1; n <= 5; ++n) {
        const auto t = next_tile_of_channel(n, 1000000);
        EXPECT_GE(t.j, 1000000u);
        EXPECT_EQ(t.n, n);
    }
}

TEST(TileLookup, Examples) {
    const auto half = tile_lookup(Rational(1, 2));
    EXPECT_EQ(half.tile, (TileCoord{0, 1, 1}));
    EXPECT_EQ(half.local, Rational(1, 2));
    const auto at = tile_lookup(Rational(17));
    EXPECT_EQ(at.tile.j, 17u);
    EXPECT_EQ(at.local, 0);
    EXPECT_EQ(tile_lookup(Rational(35, 2)).tile.j, 17u);
    EXPECT_EQ(tile_lookup(Rational(37, 2)).tile.j, 18u);
    try {
        tile_lookup(Rational(-1, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::negative_parameter);
    }
}

TEST(BlockMap, VanishesOffChannelAndAtEndpoints) {
    const auto f3 = TiledLineMap::block(TargetSpace::euclidean(2), 3, 10);
    const Point zero = pt({0, 0});
    EXPECT_EQ(f3.eval(Rational(-7)), zero);
    for (std::uint64_t j = 0; j <= 1000; ++j) {
        EXPECT_EQ(f3.eval(Rational(j)), zero);
        const Rational inside = Rational(j) + Rational(3, 7);
        if (tile_of_index(j).n != 3) {
            EXPECT_EQ(f3.eval(inside), zero) << "tile " << j;
        }
    }
}

TEST(BlockMap, MidpointIsScaledCurveMidpoint) {
    const unsigned depth = 6;
    const auto leaves = oracle::hilbert_leaves(depth);
    const auto mid = leaves[leaves.size() / 2].entry;
    const auto f = TiledLineMap::block(TargetSpace::euclidean(2), 2, depth);
    for (std::uint64_t k : {1u, 2u, 5u}) {
        const auto j = pair_index(k, 2);
        const Point value = f.eval(Rational(j) + Rational(1, 2));
        const Rational side(BigInt(1) << depth);
        ASSERT_EQ(value.size(), 2u);
        EXPECT_EQ(value[0], Rational(-BigInt(k)) + Rational(2 * k) * Rational(mid[0]) / side);
        EXPECT_EQ(value[1], Rational(-BigInt(k)) + Rational(2 * k) * Rational(mid[1]) / side);
    }
}

TEST(BlockMap, LegsMeetCurveEnds) {
    const auto f = TiledLineMap::composite(TargetSpace::euclidean(2), 8);
    const std::uint64_t j = pair_index(3, 1);
    EXPECT_EQ(f.eval(Rational(j) + Rational(1, 8)), pt({-3, -3}));
    EXPECT_EQ(f.eval(Rational(j) + Rational(7, 8)), pt({3, -3}));
    EXPECT_EQ(f.eval(Rational(j) + Rational(1, 16)), pt({-1.5, -1.5}));
}

TEST(Composite, EndpointContinuity) {
    const auto f = TiledLineMap::composite(TargetSpace::euclidean(2), 8);
    const Rational eps(1, 1 << 20);
    for (std::uint64_t j = 1; j <= 1000; ++j) {
        EXPECT_EQ(f.eval(Rational(j)), f.origin());
        const auto k = tile_of_index(j - 1).k;
        // Just left of j the return leg is at 8 * eps of the way from the exit corner.
        const Point left = f.eval(Rational(j) - eps);
        EXPECT_EQ(left, (Point{Rational(8) * eps * k, Rational(-8) * eps * k}));
        const Point right = f.eval(Rational(j) + eps);
        const auto kr = tile_of_index(j).k;
        EXPECT_EQ(right, (Point{Rational(-8) * eps * kr, Rational(-8) * eps * kr}));
    }
}

TEST(Composite, AgreesWithBlockMapOnItsChannel) {
    const auto F = TiledLineMap::composite(TargetSpace::euclidean(2), 10);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Rational t = Rational(rng() % 500) + Rational(rng() % 4096, 4096);
        const auto n = tile_lookup(t).tile.n;
        EXPECT_EQ(F.eval(t), TiledLineMap::block(TargetSpace::euclidean(2), n, 10).eval(t));
    }
    EXPECT_EQ(F.eval(-3.0), F.origin());
}

TEST(Composite, CoversNetOfK2AtResolution) {
    const unsigned depth = 16;
    const auto F = TiledLineMap::composite(TargetSpace::euclidean(2), depth);
    const double diam = 4.0 * std::sqrt(2.0);
    const double eps = 2.0 * diam * std::ldexp(1.0, -int(depth));
    WitnessOptions opts;
    opts.tol = eps;
    for (int ix = 0; ix <= 16; ++ix) {
        for (int iy = 0; iy <= 16; ++iy) {
            const Point a = pt({-2.0 + ix * 0.25 + 0.0123, -2.0 + iy * 0.25 - 0.0071});
            if (!TargetSpace::euclidean(2).peano_box(2).contains(a)) continue;
            const auto w = F.fiber_witnesses(a, opts);
            ASSERT_EQ(w.size(), 1u);
            EXPECT_LE(w[0].residual, eps);
            EXPECT_LE(w[0].tile.k, 2u);
        }
    }
}

TEST(Witness, OriginGivesTileEndpoints) {
    const auto F = TiledLineMap::composite(TargetSpace::euclidean(2), 12);
    WitnessOptions opts;
    opts.count = 3;
    const auto w = F.fiber_witnesses(pt({0, 0}), opts);
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[0].t, 0);
    EXPECT_EQ(w[1].t, 1);
    EXPECT_EQ(w[2].t, 2);
    opts.beyond = 100;
    EXPECT_EQ(F.fiber_witnesses(pt({0, 0}), opts).front().t, 101);
}

TEST(Witness, BeyondBoundsAndTightTolerance) {
    const auto F = TiledLineMap::composite(TargetSpace::euclidean(2), 24);
    WitnessOptions opts;
    opts.count = 4;
    opts.beyond = 100;
    opts.tol = 1e-6;
    const Point a = pt({0.3, 0.7});
    const auto w = F.fiber_witnesses(a, opts);
    ASSERT_EQ(w.size(), 4u);
    EXPECT_GT(w.front().t, 100);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) {
            EXPECT_LT(w[i - 1].t, w[i].t);
        }
        const Point value = F.eval(w[i].t);
        const double dx = to_double(value[0] - a[0]), dy = to_double(value[1] - a[1]);
        EXPECT_LE(std::hypot(dx, dy), 1e-6);
    }
}

TEST(Witness, UnboundedFibersOnNetOfK2) {
    const auto F = TiledLineMap::composite(TargetSpace::euclidean(2), 16);
    for (double b : {10.0, 100.0, 1000.0}) {
        WitnessOptions opts;
        opts.beyond = exact(b);
        opts.tol = 1e-3;
        for (int ix = 0; ix < 5; ++ix) {
            for (int iy = 0; iy < 5; ++iy) {
                const Point a = pt({-2.0 + ix, -2.0 + iy});
                const auto w = F.fiber_witnesses(a, opts);
                EXPECT_GT(w.front().t, exact(b));
            }
        }
    }
}

TEST(Witness, BlockMapWitnessesStayOnItsChannel) {
    const auto f = TiledLineMap::block(TargetSpace::euclidean(2), 4, 14);
    WitnessOptions opts;
    opts.count = 5;
    opts.tol = 1e-3;
    for (const auto& w : f.fiber_witnesses(pt({1.5, -0.25}), opts)) EXPECT_EQ(w.tile.n, 4u);
}

TEST(Witness, ErrorContract) {
    const auto F = TiledLineMap::composite(TargetSpace::euclidean(2), 4);
    WitnessOptions opts;
    opts.tol = 1e-9;
    try {
        F.fiber_witnesses(pt({0.3, 0.3}), opts);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::resolution_too_coarse);
    }
    opts.tol = 0.5;
    opts.tile_limit = 50;
    opts.beyond = 60;
    try {
        F.fiber_witnesses(pt({0.3, 0.3}), opts);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::budget_exhausted);
    }
    const auto G = TiledLineMap::composite(TargetSpace::c00(), 8);
    try {
        G.fiber_witnesses(Point(9, Rational(1, 2)), WitnessOptions{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::target_out_of_range);
    }
}

TEST(TargetSpaces, BoxesNestAndCoverPoints) {
    for (const auto& space : {TargetSpace::euclidean(3), TargetSpace::c00()}) {
        for (std::uint64_t k = 1; k < 8; ++k) EXPECT_TRUE(space.peano_box(k + 1).contains(space.peano_box(k)));
    }
    const auto c00 = TargetSpace::c00();
    EXPECT_EQ(c00.smallest_box(pt({0.5, 0.5})), 2u);
    EXPECT_EQ(c00.smallest_box(pt({2.5})), 3u);
    EXPECT_EQ(TargetSpace::euclidean(2).smallest_box(pt({-2.5, 1})), 3u);
    EXPECT_FALSE(TargetSpace::euclidean(2).smallest_box(pt({1, 1, 1})).has_value());
}

TEST(TargetSpaces, C00ValuesUseKCoordinates) {
    const auto G = TiledLineMap::composite(TargetSpace::c00(), 8);
    const auto j = pair_index(3, 2);
    const Point v = G.eval(Rational(j) + Rational(1, 2));
    EXPECT_EQ(v.size(), 3u);
    for (const auto& x : v) EXPECT_LE(abs(x), 3);
    WitnessOptions opts;
    opts.tol = 0.05;
    opts.beyond = 100;
    const auto w = G.fiber_witnesses(pt({0.5, -0.75}), opts);
    EXPECT_GT(w.front().t, 100);
    EXPECT_LE(w.front().residual, 0.05);
}

TEST(Projection, IgnoresTrailingVariables) {
    const auto F = TiledLineMap::composite(TargetSpace::euclidean(2), 10);
    const auto G = projection_lift(F, 2);
    for (int i = 0; i < 50; ++i) {
        const Rational t(i * 37, 16);
        EXPECT_EQ(G.eval({t, Rational(5)}), F.eval(t));
        EXPECT_EQ(G.eval({t, Rational(-5)}), F.eval(t));
    }
    EXPECT_EQ(projection_lift(F, 1).eval({Rational(3, 2)}), F.eval(Rational(3, 2)));
    WitnessOptions opts;
    opts.count = 2;
    opts.tol = 0.01;
    for (const auto& p : G.fiber_points(pt({1, 1}), opts, Rational(1000000)))
        EXPECT_LE(F.target().distance(G.eval(p), pt({1, 1})), 0.01);
}
