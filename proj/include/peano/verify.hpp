#pragma once

// Verification harness: eps-net coverage scans, fiber-unboundedness checks and
// named property suites, all with JSON reports that are byte-identical for a
// fixed invocation and seed.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "peano/algebra.hpp"
#include "peano/error.hpp"
#include "peano/family.hpp"
#include "peano/report.hpp"
#include "peano/sequence.hpp"
#include "peano/series.hpp"
#include "peano/tiling.hpp"

namespace peano {

using json = nlohmann::json;

/// mt19937_64 with distribution mappings fixed here, so a seed reproduces the
/// same cases with any standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * double(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in {0, ..., n - 1}.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------- results

struct SuiteCase {
    enum class Kind { numeric, structural };

    std::string id;
    Kind kind = Kind::structural;
    json expected;
    json observed;
    double tolerance = 0;   // numeric cases only
    bool pass = false;
    bool control = false;   // negative control: expected to fail
    std::string detail;
};

/// |expected - observed| <= tolerance.
inline SuiteCase numeric_case(std::string id, double expected, double observed, double tolerance,
                              std::string detail = {}) {
    SuiteCase c;
    c.id = std::move(id);
    c.kind = SuiteCase::Kind::numeric;
    c.expected = expected;
    c.observed = observed;
    c.tolerance = tolerance;
    c.pass = std::isfinite(observed) && std::abs(expected - observed) <= tolerance;
    c.detail = std::move(detail);
    return c;
}

/// expected == observed.
inline SuiteCase structural_case(std::string id, json expected, json observed, std::string detail = {}) {
    SuiteCase c;
    c.id = std::move(id);
    c.kind = SuiteCase::Kind::structural;
    c.pass = expected == observed;
    c.expected = std::move(expected);
    c.observed = std::move(observed);
    c.detail = std::move(detail);
    return c;
}

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    json parameters = json::object();
    std::vector<SuiteCase> cases;

    /// Ordinary cases pass and negative controls fail.
    bool pass() const {
        return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass != c.control; });
    }

    std::size_t failures() const {
        return std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass == c.control; });
    }
};

inline json to_json(const SuiteCase& c) {
    json j{{"id", c.id},
           {"kind", c.kind == SuiteCase::Kind::numeric ? "numeric" : "structural"},
           {"expected", c.expected},
           {"observed", c.observed},
           {"pass", c.pass}};
    if (c.kind == SuiteCase::Kind::numeric) j["tolerance"] = c.tolerance;
    if (c.control) j["control"] = true;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

inline json to_json(const SuiteResult& s) {
    json cases = json::array();
    for (const auto& c : s.cases) cases.push_back(to_json(c));
    return {{"suite", s.name},  {"seed", s.seed},         {"parameters", s.parameters},
            {"pass", s.pass()}, {"failures", s.failures()}, {"cases", cases}};
}

inline json to_json(const CoverageReport& r, bool timing = false) {
    json hits = json::array(), misses = json::array();
    for (const auto& h : r.hits) hits.push_back({{"point", h.point}, {"t", to_string(h.t)}, {"residual", h.residual}});
    for (const auto& m : r.misses) misses.push_back({{"point", m.point}, {"reason", m.reason}});
    json j{{"net", r.net},           {"eps", r.eps},       {"net_size", r.net_size},
           {"complete", r.complete()}, {"max_residual", r.max_residual()}, {"hit_count", r.hits.size()},
           {"miss_count", r.misses.size()}, {"hits", hits}, {"misses", misses}};
    if (timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

inline json to_json(const RankReport& r) {
    return {{"members", r.members},       {"samples", r.samples}, {"rank", r.rank},
            {"singular_values", r.singular_values}, {"threshold", r.threshold}, {"pass", r.pass}};
}

/// Two-space-indented JSON with a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- scans

struct CoverageOptions {
    std::uint64_t tile_limit = 1ull << 40;
    std::size_t max_attempts = 64;
    bool timing = false;
};

/// Largest cell diagonal of the curve grid on K_k, in the target's metric.
inline double cell_diameter(const TiledLineMap& f, std::uint64_t k) {
    const Box box = f.target().peano_box(k);
    const double side = std::pow(double(axis_base(f.curve())), double(f.depth_for(k)));
    double acc = 0;
    for (unsigned i = 0; i < box.dim(); ++i) {
        const double w = to_double(box.hi[i] - box.lo[i]) / side;
        acc = f.target().metric() == Metric::euclidean ? acc + w * w : std::max(acc, w);
    }
    return f.target().metric() == Metric::euclidean ? std::sqrt(acc) : acc;
}

/// Witness with count 1 and tolerance eps for every point of the eps-grid of [lo, hi].
inline CoverageReport coverage_scan(const TiledLineMap& f, const std::vector<double>& lo,
                                    const std::vector<double>& hi, double eps, const CoverageOptions& opts = {}) {
    require(lo.size() == hi.size() && !lo.empty(), Errc::invalid_argument, "box corners differ in dimension");
    require(eps > 0 && std::isfinite(eps), Errc::invalid_argument, "eps must be positive");
    for (std::size_t i = 0; i < lo.size(); ++i) require(lo[i] <= hi[i], Errc::invalid_argument, "empty box");
    const auto started = std::chrono::steady_clock::now();

    Point far(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) far[i] = exact(std::max(std::abs(lo[i]), std::abs(hi[i])));
    const auto k = f.target().smallest_box(far);
    if (!k) fail(Errc::target_out_of_range, "box is not inside a representable K_k");
    const double resolution = cell_diameter(f, *k);
    require(eps >= resolution, Errc::resolution_too_coarse,
            "eps " + std::to_string(eps) + " is below the curve resolution " + std::to_string(resolution) +
                " at depth " + std::to_string(f.depth()));

    CoverageReport report;
    report.eps = eps;
    report.net = f.target().describe() + " box grid, step " + std::to_string(eps);
    WitnessOptions wo;
    wo.tol = eps;
    wo.tile_limit = opts.tile_limit;
    wo.max_attempts = opts.max_attempts;
    for (const auto& p : grid_net(lo, hi, eps)) {
        ++report.net_size;
        try {
            const Point a = exact(p);
            const auto w = f.fiber_witnesses(a, wo).front();
            const double residual = f.target().distance(f.eval(w.t), a);
            if (residual <= eps)
                report.hits.push_back({p, w.t, residual});
            else
                report.misses.push_back({p, "re-verified residual above eps"});
        } catch (const Error& e) {
            report.misses.push_back({p, e.what()});
        }
    }
    if (opts.timing)
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

/// One case per (point, bound): a witness t > bound with residual <= tol.
inline SuiteResult unboundedness_scan(const TiledLineMap& f, const std::vector<std::vector<double>>& points,
                                      const std::vector<double>& bounds, double tol = 1e-3,
                                      std::uint64_t tile_limit = 1ull << 40) {
    SuiteResult out;
    out.name = "unbounded";
    out.parameters = {{"tol", tol}, {"tile_limit", tile_limit}, {"bounds", bounds}, {"depth", f.depth()},
                      {"target", f.target().describe()}};
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (double b : bounds) {
            const std::string id = "point " + std::to_string(i) + " beyond " + json(b).dump();
            WitnessOptions wo;
            wo.tol = tol;
            wo.beyond = exact(b);
            wo.tile_limit = tile_limit;
            try {
                const Point a = exact(points[i]);
                const auto w = f.fiber_witnesses(a, wo).front();
                const double residual = f.target().distance(f.eval(w.t), a);
                const bool ok = w.t > exact(b) && residual <= tol;
                out.cases.push_back(structural_case(id, true, ok,
                                                    "t = " + to_string(w.t) + ", residual " + json(residual).dump()));
            } catch (const Error& e) {
                out.cases.push_back(structural_case(id, true, false, e.what()));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- suites

struct SuiteOptions {
    std::uint64_t seed = 2024;
    unsigned truncation = 400;
    unsigned depth = 16;
};

/// Random polynomial without constant term: 1-3 monomials, exponents in {0, 1, 2},
/// coefficients in [-2, 2) rounded to 1/8.
inline PolySpec random_polynomial(SeededRng& rng, unsigned vars) {
    while (true) {
        PolySpec p(vars);
        const auto count = 1 + rng.below(3);
        for (std::uint64_t i = 0; i < count; ++i) {
            std::vector<unsigned> e(vars);
            for (auto& x : e) x = static_cast<unsigned>(rng.below(3));
            if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) e[rng.below(vars)] = 1;
            double c = std::round(rng.uniform(-2, 2) * 8) / 8;
            if (c == 0) c = 1;
            p.add_term(e, Complex(c));
        }
        if (!p.is_constant()) return p;
    }
}

/// `count` orders in (0, 3), none an integer, pairwise at least `gap` apart, increasing.
inline std::vector<double> random_orders(SeededRng& rng, unsigned count, double gap = 0.4) {
    while (true) {
        std::vector<double> s(count);
        for (auto& x : s) x = std::round(rng.uniform(0, 3) * 1000) / 1000;
        std::sort(s.begin(), s.end());
        bool ok = s.front() > 0;
        for (unsigned i = 0; i < count && ok; ++i) {
            ok = s[i] != std::round(s[i]);
            if (i > 0) ok = ok && s[i] - s[i - 1] >= gap;
        }
        if (ok) return s;
    }
}

namespace detail {

inline std::string fixed(double v, int digits = 6) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

inline SuiteResult order_laws_suite(const SuiteOptions& o) {
    SuiteResult r;
    r.parameters = {{"truncation", o.truncation}};
    for (double a : {0.5, 1.5, 2.5})
        for (unsigned n : {2u, 3u, 10u, 100u, 400u, 1000u}) {
            const double v = order_from_coeffs(prescribed_order_series(a, n)).value;
            r.cases.push_back(numeric_case("exact alpha=" + fixed(a, 1) + " N=" + std::to_string(n), a, v,
                                           4 * std::numeric_limits<double>::epsilon() * a));
        }

    const double e1000 = order_from_coeffs(exponential_series(1000)).value;
    r.cases.push_back(numeric_case("exp N=1000 in [1, 1.25]", 1.125, e1000, 0.125));
    const double n = 500; // left end of the window, where n log n / log n! peaks
    r.cases.push_back(numeric_case("exp N=1000 Stirling", n * std::log(n) / std::lgamma(n + 1), e1000, 1e-9));
    std::vector<double> path;
    for (unsigned m : {250u, 500u, 1000u, 2000u}) path.push_back(order_from_coeffs(exponential_series(m)).value);
    r.cases.push_back(structural_case("exp decreases in N", true,
                                      std::is_sorted(path.rbegin(), path.rend()) &&
                                          std::adjacent_find(path.begin(), path.end()) == path.end(),
                                      json(path).dump()));

    for (double a : {0.5, 1.5, 2.5}) {
        const auto f = prescribed_order_series(a, o.truncation);
        const auto p = compose_poly(PolySpec::parse("3*z1^4", 1), {f});
        r.cases.push_back(numeric_case("power 3 f^4 alpha=" + fixed(a, 1), order_from_coeffs(f).value,
                                       order_from_coeffs(p).value, 0.1));
    }
    const auto sum = series_add(prescribed_order_series(0.5, o.truncation), prescribed_order_series(1.5, o.truncation));
    r.cases.push_back(numeric_case("sum f_0.5 + f_1.5", 1.5, order_from_coeffs(sum).value, 0.1));
    return r;
}

inline SuiteResult lemma_suite(const SuiteOptions& o) {
    SuiteResult r;
    r.parameters = {{"truncation", o.truncation}, {"polynomials", 20}, {"order_gap", 0.4}, {"tolerance", 0.2}};
    SeededRng rng(o.seed);
    for (int i = 0; i < 20; ++i) {
        const unsigned vars = 2 + static_cast<unsigned>(rng.below(2));
        const auto orders = random_orders(rng, vars);
        const auto p = random_polynomial(rng, vars);
        std::vector<TruncatedSeries> gens;
        for (double s : orders) gens.push_back(prescribed_order_series(s, o.truncation));
        double expected = 0;
        for (unsigned k : index_set(p)) expected = std::max(expected, orders[k - 1]);
        const double observed = order_from_coeffs(compose_poly(p, gens)).value;
        r.cases.push_back(numeric_case("P" + std::to_string(i), expected, observed, 0.2,
                                       p.str() + " over orders " + json(orders).dump()));
    }
    return r;
}

inline const std::vector<std::string>& family_seeds() {
    static const std::vector<std::string> seeds{"ln2", "sqrt2", "sqrt3", "sqrt5", "e",
                                                "pi",  "-ln2", "-sqrt2", "-sqrt3", "-sqrt5"};
    return seeds;
}

inline SuiteResult family_rank_suite(const SuiteOptions& o) {
    SuiteResult r;
    const unsigned depth = std::min(o.depth, 12u);
    r.parameters = {{"seeds", family_seeds()}, {"prefix", 24}, {"samples_per_member", 8}, {"depth", depth}};
    std::vector<FamilyMember> members;
    for (const auto& s : family_seeds())
        members.push_back(FamilyMember::from_ad_set(ad_set(s, 24), TargetSpace::euclidean(2), depth));

    const auto rank = independence_test(members, default_sample_plan(members, 8));
    const double ratio = rank.singular_values.back() / rank.singular_values.front();
    r.cases.push_back(structural_case("rank of 10 members", 10, rank.rank, "singular values " +
                                                                                json(rank.singular_values).dump()));
    r.cases.push_back(structural_case("sigma_min / sigma_max > 1e-8", true, ratio > 1e-8, json(ratio).dump()));

    // Seeded coefficients; the last one is nonzero.
    SeededRng rng(o.seed);
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < members.size(); ++i) coeffs.push_back(Rational(1 + std::int64_t(rng.below(15)), 4) *
                                                                      (rng.below(2) ? 1 : -1));
    const auto n0 = exclusive_channel(members, members.size() - 1);
    require(n0.has_value(), Errc::degenerate_sample_plan, "last member has no exclusive channel");
    const auto block = TiledLineMap::block(TargetSpace::euclidean(2), *n0, depth);
    std::size_t mismatches = 0, sampled = 0;
    for (std::uint64_t k = 1; k <= 4; ++k) {
        const std::uint64_t j = pair_index(k, *n0);
        for (int i = 0; i <= 64; ++i) {
            const Rational t = Rational(j) + Rational(i, 64);
            const Point combo = combo_eval(coeffs, members, t);
            const Point single = block.eval(t);
            ++sampled;
            for (std::size_t c = 0; c < 2; ++c)
                if (combo[c] != coeffs.back() * single[c]) {
                    ++mismatches;
                    break;
                }
        }
    }
    r.cases.push_back(structural_case("block identity on channel " + std::to_string(*n0), 0, mismatches,
                                      std::to_string(sampled) + " dyadic parameters on tiles k = 1..4"));

    // The combination covers an eps-net of K_2 with witnesses beyond 100, through its n0 tiles.
    const double eps = 0.05;
    const double scale = std::abs(to_double(coeffs.back()));
    std::size_t misses = 0, net = 0;
    WitnessOptions wo;
    wo.beyond = 100;
    wo.tol = eps / scale / 2;
    for (const auto& p : grid_net({-2, -2}, {2, 2}, eps)) {
        ++net;
        try {
            Point a = exact(p);
            for (auto& x : a) x /= coeffs.back();
            const auto w = block.fiber_witnesses(a, wo).front();
            const Point value = combo_eval(coeffs, members, w.t);
            if (!(w.t > 100) || !TargetSpace::euclidean(2).within(value, exact(p), eps)) ++misses;
        } catch (const Error&) {
            ++misses;
        }
    }
    r.cases.push_back(structural_case("combination covers 0.05-net of K_2 beyond t = 100", 0, misses,
                                      std::to_string(net) + " net points"));

    const auto duplicate = independence_test({members[0], members[0]}, default_sample_plan(members, 8));
    SuiteCase control = structural_case("duplicated member", 2, duplicate.rank,
                                        "negative control: a repeated member cannot be independent");
    control.control = true;
    r.cases.push_back(control);
    return r;
}

inline SuiteResult adset_suite(const SuiteOptions&) {
    SuiteResult r;
    constexpr std::uint64_t prefix = 10000;
    r.parameters = {{"seeds", family_seeds()}, {"prefix", prefix}, {"label", AdIntersection::label}};
    r.cases.push_back(structural_case("sqrt2 first 5", json::array({2, 14, 28, 48, 86}), ad_set("sqrt2", 5).indices));
    std::vector<AdSet> sets;
    RationalEnumeration q;
    for (const auto& s : family_seeds()) {
        sets.push_back(ad_set_through(named_seed(s), prefix));
        const auto& a = sets.back();
        const bool increasing = std::adjacent_find(a.indices.begin(), a.indices.end(),
                                                   std::greater_equal<>()) == a.indices.end();
        r.cases.push_back(structural_case("increasing " + s, true, increasing,
                                          std::to_string(a.indices.size()) + " indices"));
        const long double alpha = a.seed.value.convert_to<long double>();
        std::size_t violations = 0;
        for (std::size_t k = 1; k <= a.indices.size(); ++k) {
            const Fraction f = q.at(a.indices[k - 1]);
            if (!(std::fabs(static_cast<long double>(f.p) / f.q - alpha) < 1.0L / k)) ++violations;
        }
        r.cases.push_back(structural_case("schedule " + s, 0, violations));
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const auto x = intersect(sets[i], sets[j]);
            r.cases.push_back(structural_case(
                "stabilized " + x.alpha + " " + x.beta, true, x.stabilized,
                std::to_string(x.common.size()) + " common indices " + json(x.common).dump() + ", stable from " +
                    std::to_string(x.stable_from)));
        }
    return r;
}

inline FiniteSeq random_finite_seq(SeededRng& rng, double scale) {
    std::vector<double> e(rng.below(13));
    for (auto& x : e) x = rng.below(4) == 0 ? 0.0 : rng.uniform(-scale, scale);
    e.insert(e.end(), rng.below(4), 0.0);
    return FiniteSeq(e);
}

inline SuiteResult seq_bounds_suite(const SuiteOptions& o) {
    SuiteResult r;
    r.parameters = {{"depth", o.depth}, {"rates", {1.0, 0.5}}};
    SeededRng rng(o.seed);

    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const FiniteSeq x = random_finite_seq(rng, 3);
        const RateVector rv({rng.uniform(0.1, 3), rng.uniform(0.1, 3), rng.uniform(0.1, 3)}, rng.uniform(0.1, 3));
        const FiniteSeq y = big_phi(rv, x);
        bool same = y.support() == x.support();
        for (std::size_t n = 1; n <= x.support() && same; ++n) same = (y[n] == 0) == (x[n] == 0);
        bad += !same;
    }
    r.cases.push_back(structural_case("support preservation, 1000 vectors", 0, bad));

    bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const RateVector rv({rng.uniform(0.05, 3), rng.uniform(0.05, 3), rng.uniform(0.05, 3)}, rng.uniform(0.05, 3));
        const double t = rng.uniform(-5, 5), s = rng.uniform(-5, 5);
        const double bound = equicontinuity_bound(rv, t, s);
        for (std::size_t n = 1; n <= 4; ++n)
            if (std::abs(phi_r(rv[n], t) - phi_r(rv[n], s)) > bound * (1 + 1e-12)) {
                ++bad;
                break;
            }
    }
    r.cases.push_back(structural_case("equicontinuity bound, 10000 triples", 0, bad));

    bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const double rate = rng.uniform(1e-3, 3);
        double t = rng.uniform(-20, 20), s = rng.uniform(-20, 20);
        if (t > s) std::swap(t, s);
        if (t < s && !(phi_r(rate, t) < phi_r(rate, s))) ++bad;
    }
    r.cases.push_back(structural_case("phi_r strictly increasing, 10000 pairs", 0, bad));

    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const double rate = rng.uniform(0.1, 3), t = rng.uniform(-5, 5);
        worst = std::max(worst, std::abs(phi_r_inverse(rate, phi_r(rate, t)) - t));
    }
    r.cases.push_back(numeric_case("inverse round trip, 1000 pairs", 0, worst, 1e-10));

    bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const FiniteSeq x = random_finite_seq(rng, 5), y = random_finite_seq(rng, 5);
        const double d = product_metric(x, y, 16).value;
        IndexedValues f, g;
        for (std::size_t n = 1; n <= 12; ++n) {
            f[std::to_string(n)] = x[n];
            g[std::to_string(n)] = y[n];
        }
        if (d > 1 || uniform_metric(f, g) > 1) ++bad;
    }
    r.cases.push_back(structural_case("metrics bounded by 1, 1000 pairs", 0, bad));

    SequenceScanOptions so;
    so.depth = o.depth;
    const auto scan = sequence_surjection_scan(RateVector({1.0, 0.5}), {-1, -1}, {1, 1}, 0.05, so);
    bool beyond = true;
    for (const auto& h : scan.hits) beyond = beyond && h.t > 100;
    r.cases.push_back(structural_case("Phi_r o F covers 0.05-net of [-1,1]^2 x {0}", 0, scan.misses.size(),
                                      std::to_string(scan.net_size) + " net points, max residual " +
                                          json(scan.max_residual()).dump()));
    r.cases.push_back(structural_case("witnesses beyond t = 100", true, beyond));

    const IndexMap m({"l1", "l2", "l3", "l4", "l5", "l6", "l7", "l8"},
                     {{"l2", 1.0}, {"l3", 0.5}, {"l5", 0.25}, {"l8", 0.8}});
    const auto gamma = m.gamma();
    double err = 0;
    std::size_t points = 0;
    for (const auto& y : grid_net(std::vector<double>(4, -2), std::vector<double>(4, 2), 0.5)) {
        IndexedValues g;
        for (std::size_t i = 0; i < 4; ++i) g[gamma[i]] = y[i];
        const auto image = index_surjection(m, index_preimage(m, g, rng.uniform(-1, 1)));
        for (const auto& [key, v] : g) err = std::max(err, std::abs(image.at(key) - v));
        ++points;
    }
    r.cases.push_back(numeric_case("finite-index map hits 0.5-net of [-2,2]^4", 0, err, 1e-8,
                                   std::to_string(points) + " points, |Lambda| = 8, |Gamma| = 4"));
    return r;
}

} // namespace detail

inline std::vector<std::string> suite_names() { return {"order-laws", "lemma", "family-rank", "adset", "seq-bounds"}; }

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {}) {
    SuiteResult r;
    if (name == "order-laws")
        r = detail::order_laws_suite(opts);
    else if (name == "lemma")
        r = detail::lemma_suite(opts);
    else if (name == "family-rank")
        r = detail::family_rank_suite(opts);
    else if (name == "adset")
        r = detail::adset_suite(opts);
    else if (name == "seq-bounds")
        r = detail::seq_bounds_suite(opts);
    else
        fail(Errc::invalid_argument, "unknown suite '" + name + "'");
    r.name = name;
    r.seed = opts.seed;
    return r;
}

} // namespace peano
