#pragma once

// Sequence-space targets: eventually null sequences, the coordinate
// homeomorphisms phi_r(t) = e^{rt} - e^{-rt}, their products Phi_r, the
// product-topology and uniform metrics, and finite-index maps R^Lambda -> R^Gamma.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "peano/error.hpp"
#include "peano/numeric.hpp"
#include "peano/report.hpp"
#include "peano/tiling.hpp"

namespace peano {

/// Finitely supported real sequence x_1, x_2, ...; entries past support() are zero.
class FiniteSeq {
public:
    FiniteSeq() = default;
    explicit FiniteSeq(std::vector<double> entries) : entries_(std::move(entries)) {
        for (double v : entries_) require(std::isfinite(v), Errc::invalid_argument, "non-finite sequence entry");
        trim();
    }

    static FiniteSeq from_point(const Point& p) { return FiniteSeq(to_doubles(p)); }

    /// Index of the last nonzero entry, 0 for the zero sequence.
    std::size_t support() const { return entries_.size(); }
    const std::vector<double>& entries() const { return entries_; }

    /// x_n for n >= 1.
    double operator[](std::size_t n) const { return n >= 1 && n <= entries_.size() ? entries_[n - 1] : 0.0; }

    double sup_norm() const {
        double m = 0;
        for (double v : entries_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const FiniteSeq&) const = default;

private:
    void trim() {
        while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    }

    std::vector<double> entries_;
};

/// Rates r_1, r_2, ... > 0: explicit leading entries, then a constant tail.
class RateVector {
public:
    explicit RateVector(std::vector<double> leading = {}, double tail = 1.0)
        : leading_(std::move(leading)), tail_(tail) {
        require(std::isfinite(tail_) && tail_ > 0, Errc::invalid_argument, "rates must be positive and finite");
        for (double r : leading_)
            require(std::isfinite(r) && r > 0, Errc::invalid_argument, "rates must be positive and finite");
    }

    double operator[](std::size_t n) const { return n >= 1 && n <= leading_.size() ? leading_[n - 1] : tail_; }
    const std::vector<double>& leading() const { return leading_; }
    double tail() const { return tail_; }

    double sup_norm() const {
        double m = tail_;
        for (double r : leading_) m = std::max(m, r);
        return m;
    }

private:
    std::vector<double> leading_;
    double tail_;
};

// ---------------------------------------------------------------- phi

/// phi_r(t) = e^{rt} - e^{-rt} = 2 sinh(rt).
inline double phi_r(double r, double t) {
    require(std::isfinite(r) && r > 0, Errc::invalid_argument, "rate must be positive");
    require(std::isfinite(t), Errc::invalid_argument, "non-finite argument");
    const double v = 2 * std::sinh(r * t);
    require(std::isfinite(v), Errc::overflow, "phi_r saturates at r*t = " + std::to_string(r * t));
    return v;
}

/// Inverse of phi_r: asinh(y / 2) / r.
inline double phi_r_inverse(double r, double y) {
    require(std::isfinite(r) && r > 0, Errc::invalid_argument, "rate must be positive");
    require(std::isfinite(y), Errc::overflow, "non-finite value has no preimage");
    return std::asinh(y / 2) / r;
}

namespace detail {

template <class Fn>
FiniteSeq map_coordinates(const RateVector& r, const FiniteSeq& x, Fn fn) {
    std::vector<double> out(x.support());
    for (std::size_t n = 1; n <= x.support(); ++n) {
        try {
            out[n - 1] = fn(r[n], x[n]);
        } catch (const Error& e) {
            fail(e.code(), "coordinate " + std::to_string(n) + ": " + e.what());
        }
    }
    return FiniteSeq(std::move(out));
}

} // namespace detail

/// Phi_r(x) = (phi_{r_n}(x_n))_n.
inline FiniteSeq big_phi(const RateVector& r, const FiniteSeq& x) {
    return detail::map_coordinates(r, x, phi_r);
}

inline FiniteSeq big_phi_inverse(const RateVector& r, const FiniteSeq& y) {
    return detail::map_coordinates(r, y, phi_r_inverse);
}

/// Mean-value bound for |phi_{r_n}(t) - phi_{r_n}(s)| valid for every n:
/// 2 R cosh(R max(|t|, |s|)) |t - s| with R = sup r.
inline double equicontinuity_bound(const RateVector& r, double t, double s) {
    if (t == s) return 0;
    const double big_r = r.sup_norm();
    return 2 * big_r * std::cosh(big_r * std::max(std::abs(t), std::abs(s))) * std::abs(t - s);
}

// ---------------------------------------------------------------- metrics

struct MetricValue {
    double value = 0;
    double uncertainty = 0; // mass of the omitted tail
};

/// sum_{n <= terms} 2^{-n} |x_n - y_n| / (1 + |x_n - y_n|).
inline MetricValue product_metric(const FiniteSeq& x, const FiniteSeq& y, std::size_t terms) {
    require(terms >= std::max(x.support(), y.support()), Errc::invalid_argument,
            "terms must cover both supports");
    MetricValue m;
    double weight = 1;
    for (std::size_t n = 1; n <= terms; ++n) {
        weight /= 2;
        const double d = std::abs(x[n] - y[n]);
        m.value += weight * d / (1 + d);
    }
    m.uncertainty = std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(terms, 1074)));
    return m;
}

/// A real function on a finite index set.
using IndexedValues = std::map<std::string, double>;

/// sup over the common index set of min(1, |f - g|).
inline double uniform_metric(const IndexedValues& f, const IndexedValues& g) {
    require(f.size() == g.size(), Errc::index_mismatch, "functions live on different index sets");
    double m = 0;
    for (const auto& [key, value] : f) {
        const auto it = g.find(key);
        require(it != g.end(), Errc::index_mismatch, "index '" + key + "' missing from the second function");
        m = std::max(m, std::min(1.0, std::abs(value - it->second)));
    }
    return m;
}

// ---------------------------------------------------------------- finite index maps

/// Gamma inside Lambda with a rate in (0, 1] for every gamma.
class IndexMap {
public:
    IndexMap(std::vector<std::string> lambda, std::map<std::string, double> rates)
        : lambda_(std::move(lambda)), rates_(std::move(rates)) {
        const std::set<std::string> all(lambda_.begin(), lambda_.end());
        require(all.size() == lambda_.size(), Errc::invalid_argument, "duplicate index in Lambda");
        for (const auto& [gamma, r] : rates_) {
            require(all.count(gamma), Errc::index_mismatch, "index '" + gamma + "' of Gamma is not in Lambda");
            require(r > 0 && r <= 1, Errc::invalid_argument, "rates over Gamma must lie in (0, 1]");
        }
    }

    const std::vector<std::string>& lambda() const { return lambda_; }
    const std::map<std::string, double>& rates() const { return rates_; }

    std::vector<std::string> gamma() const {
        std::vector<std::string> out;
        for (const auto& [g, r] : rates_) out.push_back(g);
        return out;
    }

private:
    std::vector<std::string> lambda_;
    std::map<std::string, double> rates_;
};

/// Phi_r(f)(gamma) = phi_{r_gamma}(f(gamma)).
inline IndexedValues index_surjection(const IndexMap& m, const IndexedValues& f) {
    require(f.size() == m.lambda().size(), Errc::index_mismatch, "function is not defined on Lambda");
    for (const auto& key : m.lambda())
        require(f.count(key), Errc::index_mismatch, "function has no value at '" + key + "'");
    IndexedValues out;
    for (const auto& [gamma, r] : m.rates()) out[gamma] = phi_r(r, f.at(gamma));
    return out;
}

/// A preimage of g under index_surjection; coordinates outside Gamma take `fill`.
inline IndexedValues index_preimage(const IndexMap& m, const IndexedValues& g, double fill = 0) {
    require(g.size() == m.rates().size(), Errc::index_mismatch, "function is not defined on Gamma");
    IndexedValues out;
    for (const auto& key : m.lambda()) out[key] = fill;
    for (const auto& [gamma, r] : m.rates()) {
        const auto it = g.find(gamma);
        require(it != g.end(), Errc::index_mismatch, "function has no value at '" + gamma + "'");
        out[gamma] = phi_r_inverse(r, it->second);
    }
    return out;
}

// ---------------------------------------------------------------- boxes

/// [-k, k]^dims.
inline Box box_cover(unsigned k, unsigned dims) {
    require(k >= 1 && dims >= 1, Errc::invalid_argument, "box index and dimension must be positive");
    return Box::cube(dims, Rational(k));
}

/// prod_{n <= dims} [-1/n, 1/n].
inline Box hilbert_cube_box(unsigned dims) {
    require(dims >= 1, Errc::invalid_argument, "dimension must be positive");
    Box b{Point(dims), Point(dims)};
    for (unsigned n = 1; n <= dims; ++n) {
        b.lo[n - 1] = Rational(-1, n);
        b.hi[n - 1] = Rational(1, n);
    }
    return b;
}

// ---------------------------------------------------------------- composition scan

struct SequenceScanOptions {
    Rational beyond = 100; // every witness satisfies t > beyond
    unsigned depth = 16;
    std::uint64_t tile_limit = 1ull << 40;
    bool timing = false;
};

/// For each point y of the eps-grid of [lo, hi] x {0} in c00, a parameter t with
/// sup |Phi_r(F(t)) - y| <= eps, where F is the composite line map onto c00.
inline CoverageReport sequence_surjection_scan(const RateVector& r, const std::vector<double>& lo,
                                               const std::vector<double>& hi, double eps,
                                               const SequenceScanOptions& opts = {}) {
    require(lo.size() == hi.size() && !lo.empty(), Errc::invalid_argument, "box corners differ in dimension");
    require(eps > 0, Errc::invalid_argument, "eps must be positive");
    const auto started = std::chrono::steady_clock::now();
    const auto f = TiledLineMap::composite(TargetSpace::c00(), opts.depth);
    CoverageReport report;
    report.eps = eps;
    report.net = "box in c00, grid step " + std::to_string(eps);
    for (const auto& y : grid_net(lo, hi, eps)) {
        ++report.net_size;
        const FiniteSeq target(y);
        try {
            const FiniteSeq x = big_phi_inverse(r, target);
            // Lipschitz constant of every phi_{r_n} on [-reach, reach].
            const double reach = x.sup_norm() + eps;
            const double slope = 2 * r.sup_norm() * std::cosh(r.sup_norm() * reach);
            WitnessOptions wo;
            wo.beyond = opts.beyond;
            wo.tol = eps / (2 * slope);
            wo.tile_limit = opts.tile_limit;
            const auto w = f.fiber_witnesses(exact(x.entries()), wo).front();
            const FiniteSeq value = big_phi(r, FiniteSeq::from_point(f.eval(w.t)));
            double residual = 0;
            for (std::size_t n = 1; n <= std::max(value.support(), target.support()); ++n)
                residual = std::max(residual, std::abs(value[n] - target[n]));
            if (residual <= eps)
                report.hits.push_back({y, w.t, residual});
            else
                report.misses.push_back({y, "witness residual " + std::to_string(residual) + " above eps"});
        } catch (const Error& e) {
            report.misses.push_back({y, e.what()});
        }
    }
    if (opts.timing)
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace peano
