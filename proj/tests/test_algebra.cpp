#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "peano/algebra.hpp"

using namespace peano;

namespace {

// Random polynomial without constant term in `vars` variables, exponents in {0, 1, 2}.
PolySpec random_poly(std::mt19937_64& rng, unsigned vars) {
    std::uniform_int_distribution<unsigned> exponent(0, 2), terms(1, 3);
    std::uniform_real_distribution<double> coeff(-2, 2);
    while (true) {
        PolySpec p(vars);
        const unsigned count = terms(rng);
        for (unsigned i = 0; i < count; ++i) {
            std::vector<unsigned> e(vars);
            for (auto& x : e) x = exponent(rng);
            if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) e[rng() % vars] = 1;
            p.add_term(e, Complex(coeff(rng)));
        }
        if (!p.is_constant()) return p;
    }
}

// Sample parameters on tiles whose box is K_1 or K_2.
std::vector<Rational> small_box_parameters(std::size_t count) {
    std::vector<Rational> out;
    for (std::uint64_t j = 0; out.size() < count; ++j) {
        if (tile_of_index(j).k > 2) continue;
        for (int i = 1; i <= 50 && out.size() < count; ++i) out.push_back(Rational(j) + Rational(i, 51));
    }
    return out;
}

} // namespace

TEST(Generator, RejectsIntegerOrders) {
    try {
        GeneratorSpec g(2.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_alpha);
    }
    EXPECT_THROW(GeneratorSpec(-0.5), Error);
    EXPECT_EQ(GeneratorSpec(1.5).series()[0], 0);
}

TEST(Element, ConstructionContract) {
    EXPECT_THROW(AlgebraElement::make("z1 + 1", {1.5}), Error);
    EXPECT_THROW(AlgebraElement::make("z1*z2", {1.5, 1.5}), Error);
    try {
        AlgebraElement::make("3", {1.5});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::constant_polynomial);
    }
}

TEST(Element, VanishesOnNegativeRayAndTileEndpoints) {
    const auto e = AlgebraElement::make("z1*z2 - 2*z2^2 + z1", {0.5, 1.5}, 12);
    for (int i = 0; i < 50; ++i) EXPECT_EQ(element_eval(e, Rational(-i, 7)), cplx(0));
    for (std::uint64_t j = 0; j < 200; ++j) EXPECT_EQ(element_eval(e, Rational(j)), cplx(0));
}

TEST(Element, SingleGeneratorMatchesDirectSum) {
    const auto e = AlgebraElement::make("z1", {1.5}, 16);
    WitnessOptions opts;
    opts.tol = 0;
    const auto w = e.base().fiber_witnesses({Rational(1), Rational(0)}, opts);
    ASSERT_EQ(e.base().eval(w.front().t), (Point{Rational(1), Rational(0)}));
    const cplx expected = oracle::prescribed_series_sum(1.5, 400, 1.0);
    EXPECT_NEAR(std::abs(element_eval(e, w.front().t) - expected), 0.0, 1e-12);
}

TEST(Element, SumIsPointwiseSum) {
    const auto sum = AlgebraElement::make("z1 + z2", {0.7, 1.9}, 12);
    const auto first = AlgebraElement::make("z1", {0.7}, 12);
    const auto second = AlgebraElement::make("z1", {1.9}, 12);
    for (const auto& t : small_box_parameters(300)) {
        const cplx expected = element_eval(first, t) + element_eval(second, t);
        EXPECT_NEAR(std::abs(element_eval(sum, t) - expected), 0.0, 1e-12);
    }
}

TEST(Element, OrderFollowsLargestGeneratorInIndexSet) {
    EXPECT_DOUBLE_EQ(element_order(AlgebraElement::make("z1", {2.5})).value, 2.5);
    const auto pair = AlgebraElement::make("z1*z2", {0.7, 1.9});
    EXPECT_NEAR(element_order(pair).value, 1.9, 0.15);
    EXPECT_DOUBLE_EQ(expected_element_order(pair), 1.9);
    const auto only_second = AlgebraElement::make("z2", {0.7, 1.9, 2.5});
    EXPECT_DOUBLE_EQ(element_order(only_second).value, 1.9);
    EXPECT_DOUBLE_EQ(expected_element_order(only_second), 1.9);
}

TEST(Element, CompositionConsistency) {
    const auto e = AlgebraElement::make("z1*z2 + 0.5*z1^2 - z2", {0.5, 1.5}, 14);
    const auto h = element_series(e);
    std::mt19937_64 rng(4);
    const auto params = small_box_parameters(2000);
    for (int i = 0; i < 100; ++i) {
        const Rational& t = params[rng() % params.size()];
        const cplx z = AlgebraElement::as_complex(e.base().eval(t));
        const cplx direct = element_eval(e, t);
        EXPECT_NEAR(std::abs(direct - h.eval(z)), 0.0, 1e-9 * (1 + std::abs(direct)));
    }
}

TEST(Element, FreenessEvidence) {
    std::mt19937_64 rng(2024);
    const std::vector<double> orders{0.5, 1.5, 2.5};
    const auto params = small_box_parameters(1000);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement e(random_poly(rng, 3), {GeneratorSpec(0.5), GeneratorSpec(1.5), GeneratorSpec(2.5)},
                         TiledLineMap::composite(TargetSpace::euclidean(2), 12));
        EXPECT_GE(element_order(e).value, 0.5 - 0.2) << e.polynomial().str();
        double biggest = 0;
        for (const auto& t : params) biggest = std::max(biggest, std::abs(element_eval(e, t)));
        EXPECT_GT(biggest, 1e-6) << e.polynomial().str();
    }
}

TEST(Element, VectorValuedCoordinatesAreIndependent) {
    ElementVector v{{AlgebraElement::make("z1", {0.5}, 10), AlgebraElement::make("z1", {1.5}, 10)}};
    const Rational t(7, 3);
    const auto values = v.eval(t);
    ASSERT_EQ(values.size(), 2u);
    EXPECT_EQ(values[0], element_eval(v.coordinates[0], t));
    EXPECT_EQ(values[1], element_eval(v.coordinates[1], t));
}

TEST(Scan, CoarseNetIsCoveredAndDeterministic) {
    const auto e = AlgebraElement::make("z1", {1.5}, 16);
    const auto a = surjectivity_scan(e, 1.5, 0.25);
    EXPECT_TRUE(a.complete()) << (a.misses.empty() ? "" : a.misses.front().reason);
    EXPECT_LE(a.max_residual(), 0.25);
    const auto b = surjectivity_scan(e, 1.5, 0.25);
    ASSERT_EQ(a.hits.size(), b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i) {
        EXPECT_EQ(a.hits[i].t, b.hits[i].t);
        EXPECT_EQ(a.hits[i].residual, b.hits[i].residual);
    }
    for (const auto& h : a.hits) {
        if (h.point == std::vector<double>{0.0, 0.0}) {
            EXPECT_EQ(h.t, 0);
        }
        EXPECT_LE(std::abs(element_eval(e, h.t) - cplx(h.point[0], h.point[1])), 0.25);
    }
}

TEST(Scan, MixedElement) {
    const auto e = AlgebraElement::make("z1*z2 + z1", {0.5, 1.5}, 16);
    const auto r = surjectivity_scan(e, 1.0, 0.2);
    EXPECT_TRUE(r.complete()) << (r.misses.empty() ? "" : r.misses.front().reason);
}
