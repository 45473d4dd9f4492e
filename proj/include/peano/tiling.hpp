#pragma once

// Continuous surjections of the real line with unbounded fibers.
//
// [0, inf) is cut into unit tiles [j, j+1]; tile j carries the pair (k, n)
// through the Cantor pairing. On a tile of channel n, the block map f_n runs
// a straight leg from the origin to the start of a space-filling curve over the
// box K_k, the curve itself, and a leg back to the origin. Every channel owns
// tiles of every k, so each point of K_k is hit on infinitely many tiles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "peano/curve.hpp"
#include "peano/error.hpp"
#include "peano/numeric.hpp"

namespace peano {

// ---------------------------------------------------------------- pairing

struct TileCoord {
    std::uint64_t j = 0; // tile [j, j+1]
    std::uint64_t k = 1; // box index
    std::uint64_t n = 1; // channel

    friend bool operator==(const TileCoord&, const TileCoord&) = default;
};

/// Cantor pairing with (1, 1) -> 0: j = (k+n-2)(k+n-1)/2 + (n-1).
inline std::uint64_t pair_index(std::uint64_t k, std::uint64_t n) {
    require(k >= 1 && n >= 1, Errc::invalid_argument, "tile labels start at 1");
    const u128 w = u128(k) + n - 2;
    const u128 j = w * (w + 1) / 2 + (n - 1);
    require(j <= std::numeric_limits<std::uint64_t>::max(), Errc::overflow, "tile index exceeds 64 bits");
    return static_cast<std::uint64_t>(j);
}

inline TileCoord tile_of_index(std::uint64_t j) {
    const std::uint64_t w = (boost::multiprecision::sqrt(BigInt(8) * j + 1).convert_to<std::uint64_t>() - 1) / 2;
    const std::uint64_t y = j - w * (w + 1) / 2;
    return {j, w - y + 1, y + 1};
}

/// First tile of channel n with index >= j0.
inline TileCoord next_tile_of_channel(std::uint64_t n, std::uint64_t j0) {
    // j(k, n) grows with k, so the diagonal through j0 bounds the search.
    const TileCoord here = tile_of_index(j0);
    const std::uint64_t w = here.k + here.n - 2;
    std::uint64_t k = w + 2 > n ? w + 2 - n : 1;
    while (k > 1 && pair_index(k - 1, n) >= j0) --k;
    while (pair_index(k, n) < j0) ++k;
    return {pair_index(k, n), k, n};
}

struct TilePosition {
    TileCoord tile;
    Rational local; // in [0, 1)
};

/// Tile containing t >= 0, right-open at interior endpoints.
inline TilePosition tile_lookup(const Rational& t) {
    require(t >= 0, Errc::negative_parameter, "parameter " + to_string(t) + " lies on the constant ray");
    const BigInt j = floor_of(t);
    require(j <= std::numeric_limits<std::uint64_t>::max(), Errc::overflow, "parameter too large");
    const auto ju = j.convert_to<std::uint64_t>();
    return {tile_of_index(ju), t - Rational(j)};
}

// ---------------------------------------------------------------- targets

/// Axis-aligned box lo <= x <= hi.
struct Box {
    std::vector<Rational> lo;
    std::vector<Rational> hi;

    unsigned dim() const { return static_cast<unsigned>(lo.size()); }

    bool contains(const Point& p) const {
        for (unsigned i = 0; i < std::max<std::size_t>(dim(), p.size()); ++i) {
            const Rational x = i < p.size() ? p[i] : Rational(0);
            if (i >= dim()) {
                if (x != 0) return false;
            } else if (x < lo[i] || x > hi[i]) {
                return false;
            }
        }
        return true;
    }

    bool contains(const Box& other) const {
        if (other.dim() > dim()) return false;
        for (unsigned i = 0; i < other.dim(); ++i)
            if (other.lo[i] < lo[i] || other.hi[i] > hi[i]) return false;
        return true;
    }

    static Box cube(unsigned dim, const Rational& half) { return {Point(dim, -half), Point(dim, half)}; }
};

enum class Metric { euclidean, sup };

/// A space covered by the increasing boxes K_1 ⊆ K_2 ⊆ ...; points carry
/// as many coordinates as needed, missing ones are zero.
class TargetSpace {
public:
    enum class Kind { euclidean, c00, box };

    /// R^d with K_k = [-k, k]^d.
    static TargetSpace euclidean(unsigned d) {
        require(d >= 1 && d <= kMaxCubeDim, Errc::unsupported_dimension, "euclidean target dimension out of range");
        TargetSpace s;
        s.kind_ = Kind::euclidean;
        s.metric_ = Metric::euclidean;
        s.unit_ = Box::cube(d, 1);
        return s;
    }

    /// Eventually null sequences with K_k = [-k, k]^k x {0}, sup distance.
    static TargetSpace c00() {
        TargetSpace s;
        s.kind_ = Kind::c00;
        s.metric_ = Metric::sup;
        return s;
    }

    /// Fixed compact box (K_k = box for every k), or k * box when `grows`.
    static TargetSpace box(Box b, bool grows = false, Metric metric = Metric::sup) {
        require(b.dim() >= 1 && b.dim() <= kMaxCubeDim, Errc::unsupported_dimension, "box dimension out of range");
        for (unsigned i = 0; i < b.dim(); ++i)
            require(b.lo[i] <= 0 && 0 <= b.hi[i] && b.lo[i] < b.hi[i], Errc::invalid_argument,
                    "box must contain the origin and have positive widths");
        TargetSpace s;
        s.kind_ = Kind::box;
        s.metric_ = metric;
        s.unit_ = std::move(b);
        s.grows_ = grows;
        return s;
    }

    Kind kind() const { return kind_; }
    Metric metric() const { return metric_; }

    /// Coordinates a point may use (0 for c00, which is unbounded).
    unsigned ambient_dim() const { return kind_ == Kind::c00 ? 0 : unit_.dim(); }

    unsigned cube_dim(std::uint64_t k) const {
        if (kind_ == Kind::c00) return static_cast<unsigned>(std::min<std::uint64_t>(k, 1u << 20));
        return unit_.dim();
    }

    /// K_k is reachable by the curve engine.
    bool representable(std::uint64_t k) const { return cube_dim(k) <= kMaxCubeDim; }

    Box peano_box(std::uint64_t k) const {
        require(k >= 1, Errc::invalid_argument, "box index starts at 1");
        if (kind_ == Kind::c00) {
            require(representable(k), Errc::target_out_of_range,
                    "K_" + std::to_string(k) + " of c00 exceeds the supported cube dimension");
            return Box::cube(static_cast<unsigned>(k), Rational(k));
        }
        if (kind_ == Kind::box && !grows_) return unit_;
        Box out = unit_;
        for (unsigned i = 0; i < out.dim(); ++i) {
            out.lo[i] *= k;
            out.hi[i] *= k;
        }
        return out;
    }

    /// Smallest k with a in K_k, if K_k is representable.
    std::optional<std::uint64_t> smallest_box(const Point& a) const {
        std::size_t support = a.size();
        while (support > 0 && a[support - 1] == 0) --support;
        if (kind_ != Kind::c00 && support > unit_.dim()) return std::nullopt;
        Rational need = 0;
        for (std::size_t i = 0; i < support; ++i) {
            if (kind_ == Kind::c00) {
                need = std::max(need, abs(a[i]));
            } else {
                const Rational& bound = a[i] < 0 ? unit_.lo[i] : unit_.hi[i];
                if (a[i] == 0) continue;
                if (!grows_ && kind_ == Kind::box) {
                    if (a[i] < unit_.lo[i] || a[i] > unit_.hi[i]) return std::nullopt;
                    continue;
                }
                need = std::max(need, a[i] / bound);
            }
        }
        BigInt k = floor_of(need);
        if (Rational(k) < need) k += 1;
        if (k < 1) k = 1;
        if (kind_ == Kind::c00 && k < BigInt(support)) k = support;
        if (k > BigInt(std::numeric_limits<std::uint32_t>::max())) return std::nullopt;
        const auto ku = k.convert_to<std::uint64_t>();
        if (!representable(ku)) return std::nullopt;
        return ku;
    }

    /// Exact squared distance (euclidean) or exact sup distance, missing coordinates zero.
    Rational exact_distance_measure(const Point& a, const Point& b) const {
        Rational acc = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            const Rational d = (i < a.size() ? a[i] : Rational(0)) - (i < b.size() ? b[i] : Rational(0));
            if (metric_ == Metric::euclidean) acc += d * d;
            else acc = std::max(acc, abs(d));
        }
        return acc;
    }

    double distance(const Point& a, const Point& b) const {
        const double m = to_double(exact_distance_measure(a, b));
        return metric_ == Metric::euclidean ? std::sqrt(m) : m;
    }

    /// distance(a, b) <= tol, decided exactly.
    bool within(const Point& a, const Point& b, double tol) const {
        const Rational t = exact(tol);
        const Rational m = exact_distance_measure(a, b);
        return metric_ == Metric::euclidean ? m <= t * t : m <= t;
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::euclidean: return "R^" + std::to_string(unit_.dim());
        case Kind::c00: return "c00";
        case Kind::box: return std::string(grows_ ? "scaled box" : "box") + " in R^" + std::to_string(unit_.dim());
        }
        return "";
    }

private:
    Kind kind_ = Kind::euclidean;
    Metric metric_ = Metric::euclidean;
    Box unit_;
    bool grows_ = true;
};

// ---------------------------------------------------------------- channels

/// Which channels a line map is active on.
class ChannelSet {
public:
    /// Every channel (the composite map F).
    static ChannelSet all() { return ChannelSet(Kind::all, {}, 0); }

    /// One channel (the block map f_n).
    static ChannelSet single(std::uint64_t n) {
        require(n >= 1, Errc::invalid_argument, "channels start at 1");
        return ChannelSet(Kind::listed, {n}, std::numeric_limits<std::uint64_t>::max());
    }

    /// Sorted channel list, with membership decided for every channel <= decided_through.
    static ChannelSet listed(std::vector<std::uint64_t> channels, std::uint64_t decided_through) {
        std::sort(channels.begin(), channels.end());
        channels.erase(std::unique(channels.begin(), channels.end()), channels.end());
        require(channels.empty() || channels.front() >= 1, Errc::invalid_argument, "channels start at 1");
        require(channels.empty() || channels.back() <= decided_through, Errc::invalid_argument,
                "listed channel beyond the decided range");
        return ChannelSet(Kind::listed, std::move(channels), decided_through);
    }

    static ChannelSet finite(std::vector<std::uint64_t> channels) {
        return listed(std::move(channels), std::numeric_limits<std::uint64_t>::max());
    }

    bool is_all() const { return kind_ == Kind::all; }
    const std::vector<std::uint64_t>& channels() const { return channels_; }
    std::uint64_t decided_through() const { return decided_; }

    bool contains(std::uint64_t n) const {
        if (kind_ == Kind::all) return true;
        require(n <= decided_, Errc::invalid_argument,
                "membership of channel " + std::to_string(n) + " is undecided (known through " +
                    std::to_string(decided_) + ")");
        return std::binary_search(channels_.begin(), channels_.end(), n);
    }

    /// First tile with index >= j0 whose channel belongs to the set.
    std::optional<TileCoord> next_tile(std::uint64_t j0) const {
        if (kind_ == Kind::all) return tile_of_index(j0);
        std::optional<TileCoord> best;
        for (std::uint64_t n : channels_) {
            const TileCoord c = next_tile_of_channel(n, j0);
            if (!best || c.j < best->j) best = c;
        }
        return best;
    }

private:
    enum class Kind { all, listed };
    ChannelSet(Kind kind, std::vector<std::uint64_t> channels, std::uint64_t decided)
        : kind_(kind), channels_(std::move(channels)), decided_(decided) {}

    Kind kind_;
    std::vector<std::uint64_t> channels_;
    std::uint64_t decided_;
};

// ---------------------------------------------------------------- line maps

struct Witness {
    Rational t;
    double residual = 0;
    TileCoord tile;
};

struct WitnessOptions {
    std::size_t count = 1;
    Rational beyond = -1;               // every witness satisfies t > beyond
    double tol = 1e-2;
    std::uint64_t tile_limit = 1ull << 40; // tiles [0, tile_limit) are searched
    std::size_t max_attempts = 64;      // eligible tiles tried per witness
};

/// Piecewise map R -> X built from the tiles: 0 on (-inf, 0]; on a tile of
/// channel n in `channels`, the block map f_n; 0 on every other tile.
class TiledLineMap {
public:
    TiledLineMap(TargetSpace target, ChannelSet channels, unsigned depth, CurveKind curve = CurveKind::hilbert)
        : target_(std::move(target)), channels_(std::move(channels)), depth_(depth), curve_(curve) {
        require(depth >= 1 && depth <= kDefaultMaxDepth, Errc::depth_overflow,
                "depth " + std::to_string(depth) + " is outside [1, " + std::to_string(kDefaultMaxDepth) + "]");
    }

    /// Composite map F (every channel).
    static TiledLineMap composite(TargetSpace target, unsigned depth, CurveKind curve = CurveKind::hilbert) {
        return TiledLineMap(std::move(target), ChannelSet::all(), depth, curve);
    }

    /// Block map f_n.
    static TiledLineMap block(TargetSpace target, std::uint64_t n, unsigned depth,
                              CurveKind curve = CurveKind::hilbert) {
        return TiledLineMap(std::move(target), ChannelSet::single(n), depth, curve);
    }

    const TargetSpace& target() const { return target_; }
    const ChannelSet& channels() const { return channels_; }
    unsigned depth() const { return depth_; }
    CurveKind curve() const { return curve_; }

    /// Curve depth used on boxes of index k.
    unsigned depth_for(std::uint64_t k) const {
        const unsigned dim = target_.cube_dim(k);
        return std::min(depth_, max_depth(curve_, dim));
    }

    Point eval(const Rational& t) const {
        if (t <= 0) return origin();
        const auto pos = tile_lookup(t);
        if (!channels_.contains(pos.tile.n)) return origin();
        return block_value(pos.tile.k, pos.local);
    }

    Point eval(double t) const { return eval(exact(t)); }

    /// Value of the block map on a tile with box index k at local u in [0, 1].
    Point block_value(std::uint64_t k, const Rational& u) const {
        const Box box = target_.peano_box(k);
        const unsigned dim = box.dim();
        const Rational eighth(1, 8);
        if (u <= eighth) return scale(box, curve_point(dim, k, Rational(0)), u * 8);
        if (u >= 1 - eighth) return scale(box, curve_point(dim, k, Rational(1)), (1 - u) * 8);
        return scale(box, curve_point(dim, k, (u * 8 - 1) / 6), Rational(1));
    }

    Point origin() const { return Point(target_.ambient_dim(), Rational(0)); }

    /// Parameters t_1 < ... < t_count, all beyond opts.beyond, with |F(t_i) - a| <= tol,
    /// found by inverse cell lookup inside successive tiles.
    std::vector<Witness> fiber_witnesses(const Point& a, const WitnessOptions& opts) const {
        require(opts.count >= 1, Errc::invalid_argument, "witness count must be positive");
        require(opts.tol >= 0 && std::isfinite(opts.tol), Errc::invalid_argument, "tolerance must be finite");
        const auto k_min = target_.smallest_box(a);
        if (!k_min) fail(Errc::target_out_of_range, "point lies outside every representable K_k");

        std::uint64_t j = 0;
        if (opts.beyond >= 0) {
            const BigInt b = floor_of(opts.beyond) + 1;
            if (b >= BigInt(opts.tile_limit)) fail(Errc::budget_exhausted, "bound lies beyond the tile prefix");
            j = b.convert_to<std::uint64_t>();
        }

        std::vector<Witness> out;
        if (is_origin(a)) {
            // Every map in the family vanishes at every tile endpoint.
            for (; out.size() < opts.count; ++j) {
                if (j >= opts.tile_limit) fail(Errc::budget_exhausted, "tile prefix exhausted");
                out.push_back({Rational(j), 0.0, tile_of_index(j)});
            }
            return out;
        }

        std::map<std::uint64_t, std::optional<Witness>> by_box; // local solution per box index
        while (out.size() < opts.count) {
            std::size_t attempts = 0;
            bool tried_any = false;
            bool found = false;
            while (!found) {
                const auto tile = channels_.next_tile(j);
                if (!tile || tile->j >= opts.tile_limit || attempts >= opts.max_attempts) {
                    if (tried_any)
                        fail(Errc::resolution_too_coarse,
                             "no tile reaches tolerance " + std::to_string(opts.tol) + " at depth " +
                                 std::to_string(depth_));
                    fail(Errc::budget_exhausted, "no eligible tile within the search budget");
                }
                j = tile->j + 1;
                if (tile->k < *k_min || !target_.representable(tile->k)) continue;
                ++attempts;
                tried_any = true;
                auto it = by_box.find(tile->k);
                if (it == by_box.end()) it = by_box.emplace(tile->k, local_witness(a, tile->k, opts.tol)).first;
                if (!it->second) continue;
                Witness w = *it->second;
                w.t += Rational(tile->j);
                w.tile = *tile;
                // Certify by evaluating the full map again.
                const Point value = eval(w.t);
                if (!target_.within(value, a, opts.tol)) continue;
                w.residual = target_.distance(value, a);
                out.push_back(std::move(w));
                found = true;
            }
        }
        return out;
    }

private:
    bool is_origin(const Point& a) const {
        return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
    }

    CurvePoint curve_point(unsigned dim, std::uint64_t k, const Rational& s) const {
        return curve_at(curve_, s, dim, depth_for(k));
    }

    static Point scale(const Box& box, const CurvePoint& c, const Rational& lambda) {
        Point out(box.dim());
        const Rational unit(BigInt(1), BigInt(c.scale()));
        for (unsigned i = 0; i < box.dim(); ++i)
            out[i] = lambda * (box.lo[i] + (box.hi[i] - box.lo[i]) * unit * BigInt(c.numerators[i]));
        return out;
    }

    // Local parameter (in [0, 1]) on a tile with box index k whose value is
    // closest to a among the entry corners of the cells around a.
    std::optional<Witness> local_witness(const Point& a, std::uint64_t k, double tol) const {
        const Box box = target_.peano_box(k);
        const unsigned dim = box.dim();
        const unsigned depth = depth_for(k);
        const std::uint64_t base = axis_base(curve_);
        const std::uint64_t side = static_cast<std::uint64_t>(checked_pow(base, depth));

        std::vector<std::int64_t> centre(dim);
        for (unsigned i = 0; i < dim; ++i) {
            const Rational x = i < a.size() ? a[i] : Rational(0);
            const Rational c = (x - box.lo[i]) / (box.hi[i] - box.lo[i]);
            BigInt cell = floor_of(c * BigInt(side));
            if (cell >= BigInt(side)) cell = side - 1;
            if (cell < 0) cell = 0;
            centre[i] = cell.convert_to<std::int64_t>();
        }

        const unsigned reach = dim <= 4 ? 1 : 0;
        std::vector<std::int64_t> offset(dim, -std::int64_t(reach));
        std::optional<std::pair<double, u128>> best;
        std::vector<double> ad(dim);
        for (unsigned i = 0; i < dim; ++i) ad[i] = i < a.size() ? to_double(a[i]) : 0.0;
        std::vector<double> lo(dim), width(dim);
        for (unsigned i = 0; i < dim; ++i) {
            lo[i] = to_double(box.lo[i]);
            width[i] = to_double(box.hi[i] - box.lo[i]);
        }
        while (true) {
            std::vector<std::uint64_t> cell(dim);
            bool inside = true;
            for (unsigned i = 0; i < dim; ++i) {
                const std::int64_t c = centre[i] + offset[i];
                if (c < 0 || c >= std::int64_t(side)) inside = false;
                cell[i] = static_cast<std::uint64_t>(c);
            }
            if (inside) {
                const u128 index = index_of_corner(curve_, cell, depth);
                const auto corner = entry_corner(curve_, index, dim, depth);
                double d = 0;
                for (unsigned i = 0; i < dim; ++i) {
                    const double diff = lo[i] + width[i] * double(corner[i]) / double(side) - ad[i];
                    d = target_.metric() == Metric::euclidean ? d + diff * diff : std::max(d, std::abs(diff));
                }
                if (!best || d < best->first) best = {d, index};
            }
            unsigned i = 0;
            while (i < dim && offset[i] == std::int64_t(reach)) offset[i++] = -std::int64_t(reach);
            if (i == dim) break;
            ++offset[i];
        }
        if (!best) return std::nullopt;
        const double approx = target_.metric() == Metric::euclidean ? std::sqrt(best->first) : best->first;
        if (approx > tol * (1 + 1e-9) + 1e-300) return std::nullopt;
        const Rational cells(to_bigint(checked_pow(level_radix(curve_, dim), depth)));
        const Rational local = Rational(1, 8) + Rational(3, 4) * Rational(to_bigint(best->second)) / cells;
        return Witness{local, approx, {}};
    }

    TargetSpace target_;
    ChannelSet channels_;
    unsigned depth_;
    CurveKind curve_;
};

/// G(t_1, ..., t_m) = F(t_1).
class ProjectedMap {
public:
    ProjectedMap(TiledLineMap base, unsigned m) : base_(std::move(base)), m_(m) {
        require(m >= 1, Errc::invalid_argument, "projection needs at least one variable");
    }

    unsigned arity() const { return m_; }
    const TiledLineMap& base() const { return base_; }

    Point eval(const std::vector<Rational>& t) const {
        require(t.size() == m_, Errc::invalid_argument, "expected " + std::to_string(m_) + " parameters");
        return base_.eval(t.front());
    }

    /// Fiber points (t_i, s, ..., s) for the line witnesses t_i and a free value s.
    std::vector<std::vector<Rational>> fiber_points(const Point& a, const WitnessOptions& opts,
                                                    const Rational& free_value) const {
        std::vector<std::vector<Rational>> out;
        for (const auto& w : base_.fiber_witnesses(a, opts)) {
            std::vector<Rational> p(m_, free_value);
            p[0] = w.t;
            out.push_back(std::move(p));
        }
        return out;
    }

private:
    TiledLineMap base_;
    unsigned m_;
};

/// Projection lift with m = 1 returns the line map itself.
inline ProjectedMap projection_lift(const TiledLineMap& f, unsigned m) { return ProjectedMap(f, m); }

} // namespace peano
