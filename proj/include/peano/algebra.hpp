#pragma once

// Algebras of surjections R -> C built as phi o F, where F is the composite
// line map onto the plane (read as C) and phi runs over entire functions of
// non-integer order with phi(0) = 0. A polynomial without constant term in
// such generators is again entire of non-integer order, hence onto C, so
// every nonzero element of the algebra is a surjection with unbounded fibers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "peano/error.hpp"
#include "peano/report.hpp"
#include "peano/series.hpp"
#include "peano/tiling.hpp"

namespace peano {

constexpr unsigned kAlgebraTruncation = 400;

/// phi_s = f_s, the prescribed-order series of order s (s > 0, s not an integer).
class GeneratorSpec {
public:
    GeneratorSpec(double s, unsigned truncation = kAlgebraTruncation)
        : s_(s), series_(make_series(s, truncation)), derivative_(series_.derivative()),
          reliable_(reliable_radius(series_)) {}

    double order() const { return s_; }
    const TruncatedSeries& series() const { return series_; }
    const TruncatedSeries& derivative() const { return derivative_; }
    double reliable_radius_value() const { return reliable_; }

    cplx eval(cplx z) const {
        check(z);
        return series_.eval(z);
    }

    cplx eval_derivative(cplx z) const {
        check(z);
        return derivative_.eval(z);
    }

private:
    static TruncatedSeries make_series(double s, unsigned truncation) {
        require(std::isfinite(s) && s > 0, Errc::invalid_alpha, "generator order must be positive");
        require(std::abs(s - std::round(s)) > 1e-12, Errc::invalid_alpha,
                "generator order must not be an integer");
        return prescribed_order_series(s, truncation);
    }

    void check(cplx z) const {
        require(std::abs(z) <= reliable_, Errc::truncation_unreliable,
                "|z| = " + std::to_string(std::abs(z)) + " exceeds the reliable radius " + std::to_string(reliable_) +
                    " of the order " + std::to_string(s_) + " generator");
    }

    double s_;
    TruncatedSeries series_;
    TruncatedSeries derivative_;
    double reliable_;
};

/// P(phi_{s_1}, ..., phi_{s_M}) o F.
class AlgebraElement {
public:
    AlgebraElement(PolySpec p, std::vector<GeneratorSpec> generators, TiledLineMap base)
        : p_(std::move(p)), generators_(std::move(generators)), base_(std::move(base)) {
        require(!p_.is_constant(), Errc::constant_polynomial, "element polynomial is constant");
        require(!p_.has_constant_term(), Errc::invalid_argument, "element polynomial has a constant term");
        require(p_.variables() == generators_.size(), Errc::invalid_argument,
                "polynomial has " + std::to_string(p_.variables()) + " variables but " +
                    std::to_string(generators_.size()) + " generators were given");
        std::set<double> seen;
        for (const auto& g : generators_)
            require(seen.insert(g.order()).second, Errc::invalid_argument, "generator orders must be distinct");
        require(base_.target().kind() == TargetSpace::Kind::euclidean && base_.target().ambient_dim() == 2,
                Errc::invalid_argument, "the base map must take values in the plane");
    }

    /// Builds generators of the given orders on the composite plane map.
    static AlgebraElement make(const std::string& poly, const std::vector<double>& orders, unsigned depth = 16,
                               unsigned truncation = kAlgebraTruncation) {
        std::vector<GeneratorSpec> gens;
        for (double s : orders) gens.emplace_back(s, truncation);
        const auto p = PolySpec::parse(poly, static_cast<unsigned>(orders.size()));
        return AlgebraElement(p, std::move(gens), TiledLineMap::composite(TargetSpace::euclidean(2), depth));
    }

    const PolySpec& polynomial() const { return p_; }
    const std::vector<GeneratorSpec>& generators() const { return generators_; }
    const TiledLineMap& base() const { return base_; }

    /// h(z) = P(phi_1(z), ..., phi_M(z)).
    cplx value_at(cplx z) const {
        std::vector<cplx> v;
        v.reserve(generators_.size());
        for (const auto& g : generators_) v.push_back(g.eval(z));
        return p_.eval(v);
    }

    cplx derivative_at(cplx z) const {
        std::vector<cplx> v;
        for (const auto& g : generators_) v.push_back(g.eval(z));
        cplx sum = 0;
        for (unsigned k = 0; k < generators_.size(); ++k)
            sum += p_.partial(k, v) * generators_[k].eval_derivative(z);
        return sum;
    }

    /// Smallest reliable radius over the generators.
    double reliable_radius_value() const {
        double r = std::numeric_limits<double>::infinity();
        for (const auto& g : generators_) r = std::min(r, g.reliable_radius_value());
        return r;
    }

    static cplx as_complex(const Point& p) {
        return {p.empty() ? 0.0 : to_double(p[0]), p.size() < 2 ? 0.0 : to_double(p[1])};
    }

private:
    PolySpec p_;
    std::vector<GeneratorSpec> generators_;
    TiledLineMap base_;
};

inline cplx element_eval(const AlgebraElement& e, const Rational& t) {
    if (t <= 0) return 0; // F vanishes there and P has no constant term
    return e.value_at(AlgebraElement::as_complex(e.base().eval(t)));
}

inline cplx element_eval(const AlgebraElement& e, double t) { return element_eval(e, exact(t)); }

/// Series of P(phi_1, ..., phi_M).
inline TruncatedSeries element_series(const AlgebraElement& e) {
    std::vector<TruncatedSeries> s;
    for (const auto& g : e.generators()) s.push_back(g.series());
    return compose_poly(e.polynomial(), s);
}

inline OrderEstimate element_order(const AlgebraElement& e, double window = 0.5) {
    return order_from_coeffs(element_series(e), window);
}

/// max over I_P of the generator orders: the order the element should have.
inline double expected_element_order(const AlgebraElement& e) {
    double m = 0;
    for (unsigned k : index_set(e.polynomial())) m = std::max(m, e.generators()[k - 1].order());
    return m;
}

/// Independent per-coordinate elements: a map R -> C^n.
struct ElementVector {
    std::vector<AlgebraElement> coordinates;

    std::vector<cplx> eval(const Rational& t) const {
        std::vector<cplx> out;
        for (const auto& e : coordinates) out.push_back(element_eval(e, t));
        return out;
    }
};

// ---------------------------------------------------------------- scan

struct ScanOptions {
    unsigned grid_radii = 64;
    unsigned grid_angles = 64;
    unsigned newton_iterations = 50;
    unsigned newton_starts = 6;
    double z_radius = 0;        // 0: chosen from the growth of h
    std::uint64_t tile_limit = 1ull << 32;
    bool timing = false;
};

namespace detail {

/// Radius of the z-disk searched for preimages: where max |h| first exceeds
/// 100 (R + 1), kept inside the reliable radius. Preimages of points on the
/// slow side of h can sit well outside the disk where |h| first reaches R.
inline double scan_radius(const AlgebraElement& e, double disk_radius) {
    const double cap = std::min(0.95 * e.reliable_radius_value(), 1e3);
    double r = 0.25;
    for (; r < cap; r *= 1.25) {
        double m = 0;
        for (int i = 0; i < 64; ++i) m = std::max(m, std::abs(e.value_at(std::polar(r, 2 * M_PI * i / 64))));
        if (m > 100 * (disk_radius + 1)) break;
    }
    return std::min(r, cap);
}

/// Damped Newton on h(z) = w.
inline std::optional<cplx> newton(const AlgebraElement& e, cplx w, cplx z, double tol, unsigned iterations,
                                  double z_max) {
    cplx f = e.value_at(z) - w;
    for (unsigned it = 0; it < iterations && std::abs(f) > tol; ++it) {
        const cplx d = e.derivative_at(z);
        if (std::abs(d) == 0) return std::nullopt;
        const cplx step = f / d;
        double lambda = 1;
        bool improved = false;
        for (int halvings = 0; halvings < 30; ++halvings, lambda *= 0.5) {
            const cplx candidate = z - lambda * step;
            if (std::abs(candidate) > z_max) continue;
            const cplx fc = e.value_at(candidate) - w;
            if (std::abs(fc) < std::abs(f)) {
                z = candidate;
                f = fc;
                improved = true;
                break;
            }
        }
        if (!improved) return std::nullopt;
    }
    if (std::abs(f) > tol) return std::nullopt;
    return z;
}

} // namespace detail

/// For each point w of the eps-grid of the disk |w| <= radius, a parameter t with
/// |element_eval(t) - w| <= eps: a preimage z of w under h is found on a polar
/// z-grid refined by damped Newton, then the line map's fiber over z supplies t.
inline CoverageReport surjectivity_scan(const AlgebraElement& e, double radius, double eps,
                                        const ScanOptions& opts = {}) {
    require(radius > 0 && eps > 0, Errc::invalid_argument, "radius and eps must be positive");
    const auto started = std::chrono::steady_clock::now();
    CoverageReport report;
    report.eps = eps;
    report.net = "disk |w| <= " + std::to_string(radius) + ", grid step " + std::to_string(eps);

    const double z_max = opts.z_radius > 0 ? opts.z_radius : detail::scan_radius(e, radius);
    struct Node {
        cplx z, value;
    };
    std::vector<Node> grid;
    grid.reserve(std::size_t(opts.grid_radii) * opts.grid_angles + 1);
    grid.push_back({0, 0});
    for (unsigned i = 1; i <= opts.grid_radii; ++i) {
        const double r = z_max * double(i) / opts.grid_radii;
        for (unsigned j = 0; j < opts.grid_angles; ++j) {
            const cplx z = std::polar(r, 2 * M_PI * j / opts.grid_angles);
            grid.push_back({z, e.value_at(z)});
        }
    }

    for (const auto& p : grid_net({-radius, -radius}, {radius, radius}, eps)) {
        const cplx w(p[0], p[1]);
        if (std::abs(w) > radius * (1 + 1e-12)) continue;
        ++report.net_size;
        if (w == cplx(0)) {
            report.hits.push_back({p, Rational(0), std::abs(element_eval(e, Rational(0)))});
            continue;
        }
        std::vector<std::pair<double, std::size_t>> ranked;
        ranked.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) ranked.emplace_back(std::abs(grid[i].value - w), i);
        const std::size_t starts = std::min<std::size_t>(opts.newton_starts, ranked.size());
        std::partial_sort(ranked.begin(), ranked.begin() + starts, ranked.end());

        std::string reason = "no preimage found by Newton refinement";
        bool hit = false;
        for (std::size_t s = 0; s < starts && !hit; ++s) {
            const auto z = detail::newton(e, w, grid[ranked[s].second].z, eps / 10, opts.newton_iterations, z_max);
            if (!z) continue;
            const double slope = std::abs(e.derivative_at(*z));
            WitnessOptions wo;
            wo.tol = eps / (4 * (slope + 1));
            wo.tile_limit = opts.tile_limit;
            try {
                const auto witnesses = e.base().fiber_witnesses({exact(z->real()), exact(z->imag())}, wo);
                const Rational& t = witnesses.front().t;
                const double residual = std::abs(element_eval(e, t) - w);
                if (residual <= eps) {
                    report.hits.push_back({p, t, residual});
                    hit = true;
                } else {
                    reason = "witness residual " + std::to_string(residual) + " above eps";
                }
            } catch (const Error& err) {
                reason = err.what();
            }
        }
        if (!hit) report.misses.push_back({p, reason});
    }
    if (opts.timing)
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace peano
