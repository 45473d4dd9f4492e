#pragma once

// Linearly independent families of surjections R -> X with unbounded fibers.
// Each irrational seed alpha selects an index set A_alpha of enumerated
// rationals converging to alpha; two such sets meet in finitely many indices.
// The member F_alpha switches on exactly the channels in A_alpha.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SVD>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "peano/error.hpp"
#include "peano/numeric.hpp"
#include "peano/tiling.hpp"

namespace peano {

// ---------------------------------------------------------------- enumeration

struct Fraction {
    std::int64_t p = 0;
    std::int64_t q = 1;

    Rational value() const { return Rational(p, q); }
    bool operator==(const Fraction&) const = default;
};

/// q_1, q_2, ... over Q: 0 first, then reduced p/q by height |p| + q, with q
/// increasing inside a height and p/q listed before -p/q.
class RationalEnumeration {
public:
    /// q_n for n >= 1.
    Fraction at(std::uint64_t n) {
        require(n >= 1, Errc::invalid_argument, "enumeration indices start at 1");
        while (cache_.size() < n) extend();
        return cache_[n - 1];
    }

    /// Smallest n with q_n = p/q (p/q reduced or not).
    std::uint64_t index_of(std::int64_t p, std::int64_t q) {
        require(q > 0, Errc::invalid_argument, "denominator must be positive");
        const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
        const Fraction target{p / g, q / g};
        for (std::uint64_t n = 1;; ++n)
            if (at(n) == target) return n;
    }

    std::uint64_t materialized() const { return cache_.size(); }

private:
    void extend() {
        if (cache_.empty()) {
            cache_.push_back({0, 1});
            return;
        }
        ++height_;
        for (std::int64_t q = 1; q < height_; ++q) {
            const std::int64_t p = height_ - q;
            if (std::gcd(p, q) != 1) continue;
            cache_.push_back({p, q});
            cache_.push_back({-p, q});
        }
    }

    std::vector<Fraction> cache_;
    std::int64_t height_ = 1;
};

// ---------------------------------------------------------------- seeds

using SeedValue = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                                boost::multiprecision::et_off>;

/// Relative precision trusted in a seed value.
constexpr int kSeedPrecisionBits = 128;

struct Seed {
    std::string tag;
    SeedValue value;
};

/// Named irrational: sqrt2, sqrt3, sqrt5, sqrt6, sqrt7, sqrt10, phi, pi, e, ln2,
/// pi_4, inv_sqrt2, each optionally prefixed by '-'.
inline Seed named_seed(const std::string& name) {
    namespace c = boost::math::constants;
    const bool negative = !name.empty() && name[0] == '-';
    const std::string base = negative ? name.substr(1) : name;
    static const std::map<std::string, int> roots{{"sqrt2", 2}, {"sqrt3", 3}, {"sqrt5", 5},
                                                  {"sqrt6", 6}, {"sqrt7", 7}, {"sqrt10", 10}};
    SeedValue v;
    if (auto it = roots.find(base); it != roots.end())
        v = sqrt(SeedValue(it->second));
    else if (base == "phi")
        v = c::phi<SeedValue>();
    else if (base == "pi")
        v = c::pi<SeedValue>();
    else if (base == "e")
        v = c::e<SeedValue>();
    else if (base == "ln2")
        v = c::ln_two<SeedValue>();
    else if (base == "pi_4")
        v = c::pi<SeedValue>() / 4;
    else if (base == "inv_sqrt2")
        v = 1 / sqrt(SeedValue(2));
    else
        fail(Errc::invalid_argument, "unknown seed '" + name + "'");
    return {name, negative ? SeedValue(-v) : v};
}

inline std::vector<std::string> seed_names() {
    return {"sqrt2", "sqrt3", "sqrt5", "sqrt6", "sqrt7", "sqrt10", "phi", "pi", "e", "ln2", "pi_4", "inv_sqrt2"};
}

// ---------------------------------------------------------------- AdSet

/// Prefix n_1 < ... < n_K of A_alpha, where n_k is the least n > n_{k-1}
/// with |q_n - alpha| < 1/k. Membership is decided for every n <= decided_through.
struct AdSet {
    Seed seed;
    std::vector<std::uint64_t> indices;
    std::uint64_t decided_through = 0;

    bool contains(std::uint64_t n) const {
        require(n <= decided_through, Errc::invalid_argument,
                "membership of " + std::to_string(n) + " in A_" + seed.tag + " is undecided");
        return std::binary_search(indices.begin(), indices.end(), n);
    }
};

namespace detail {

/// Decides |p/q - alpha| < 1/k, refusing when the seed's precision cannot tell.
inline bool within_schedule(const Fraction& f, const SeedValue& alpha, std::uint64_t k) {
    const SeedValue q(f.q);
    const SeedValue gap = abs(SeedValue(f.p) - q * alpha); // q |p/q - alpha|
    const SeedValue margin = q / SeedValue(k) - gap;
    const SeedValue resolution = ldexp(q * (abs(alpha) + 1), -kSeedPrecisionBits);
    require(abs(margin) > resolution, Errc::precision_exhausted,
            "cannot decide |" + std::to_string(f.p) + "/" + std::to_string(f.q) + " - " +
                std::to_string(alpha.convert_to<double>()) + "| < 1/" + std::to_string(k) + " at " +
                std::to_string(kSeedPrecisionBits) + " bits");
    return margin > 0;
}

inline AdSet build_ad_set(const Seed& seed, RationalEnumeration& q, std::size_t count, std::uint64_t through) {
    AdSet out{seed, {}, 0};
    std::uint64_t n = 0;
    while (out.indices.size() < count && n < through) {
        ++n;
        if (within_schedule(q.at(n), seed.value, out.indices.size() + 1)) out.indices.push_back(n);
    }
    out.decided_through = n;
    return out;
}

} // namespace detail

/// First `count` indices of A_alpha.
inline AdSet ad_set(const Seed& seed, std::size_t count) {
    require(count >= 1, Errc::invalid_argument, "count must be positive");
    RationalEnumeration q;
    return detail::build_ad_set(seed, q, count, std::numeric_limits<std::uint64_t>::max());
}

inline AdSet ad_set(const std::string& name, std::size_t count) { return ad_set(named_seed(name), count); }

/// Every index of A_alpha up to enumeration index `through`.
inline AdSet ad_set_through(const Seed& seed, std::uint64_t through) {
    RationalEnumeration q;
    return detail::build_ad_set(seed, q, std::numeric_limits<std::size_t>::max(), through);
}

/// Intersection of two AdSets over a tested enumeration prefix. A common index
/// at positions k in A_alpha and k' in A_beta forces |alpha - beta| < 1/k + 1/k',
/// so once both positions reach `bound` no further common index exists.
struct AdIntersection {
    std::string alpha, beta;
    std::uint64_t prefix = 0;
    std::vector<std::uint64_t> common;
    std::size_t bound = 0;     // least K with 2/K < |alpha - beta|
    bool stabilized = false;   // both sets reach position K - 1 inside the prefix
    std::uint64_t stable_from = 0; // enumeration index after which the count cannot change
    static constexpr const char* label = "stabilized count over tested prefix";
};

inline AdIntersection intersect(const AdSet& a, const AdSet& b) {
    AdIntersection out;
    out.alpha = a.seed.tag;
    out.beta = b.seed.tag;
    out.prefix = std::min(a.decided_through, b.decided_through);
    for (std::uint64_t n : a.indices)
        if (n <= out.prefix && std::binary_search(b.indices.begin(), b.indices.end(), n)) out.common.push_back(n);
    const double gap = abs(a.seed.value - b.seed.value).convert_to<double>();
    require(gap > 0, Errc::invalid_argument, "seeds coincide");
    out.bound = static_cast<std::size_t>(std::floor(2 / gap)) + 1;
    const std::size_t before = out.bound - 1; // positions 1 .. K-1 may still be shared
    if (before == 0) {
        out.stabilized = true;
    } else if (a.indices.size() >= before && b.indices.size() >= before) {
        out.stable_from = std::max(a.indices[before - 1], b.indices[before - 1]);
        out.stabilized = out.stable_from <= out.prefix;
    }
    return out;
}

// ---------------------------------------------------------------- members

/// F_J = sum over n in J of the block maps f_n.
class FamilyMember {
public:
    FamilyMember(std::string tag, ChannelSet channels, TargetSpace target, unsigned depth,
                 CurveKind curve = CurveKind::hilbert)
        : tag_(std::move(tag)), map_(std::move(target), std::move(channels), depth, curve) {}

    static FamilyMember from_ad_set(const AdSet& a, TargetSpace target, unsigned depth) {
        return FamilyMember(a.seed.tag, ChannelSet::listed(a.indices, a.decided_through), std::move(target), depth);
    }

    /// Explicit finite index set J.
    static FamilyMember finite(std::string tag, std::vector<std::uint64_t> indices, TargetSpace target,
                               unsigned depth) {
        return FamilyMember(std::move(tag), ChannelSet::finite(std::move(indices)), std::move(target), depth);
    }

    const std::string& tag() const { return tag_; }
    const TiledLineMap& map() const { return map_; }
    const ChannelSet& channels() const { return map_.channels(); }

    bool active_on(std::uint64_t n) const { return map_.channels().contains(n); }

private:
    std::string tag_;
    TiledLineMap map_;
};

inline Point member_eval(const FamilyMember& m, const Rational& t) { return m.map().eval(t); }

inline Point combo_eval(const std::vector<Rational>& coeffs, const std::vector<FamilyMember>& members,
                        const Rational& t) {
    require(coeffs.size() == members.size(), Errc::invalid_argument, "coefficient and member counts differ");
    require(!members.empty(), Errc::invalid_argument, "no members");
    Point out(members.front().map().target().ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const Point v = member_eval(members[i], t);
        if (out.size() < v.size()) out.resize(v.size(), Rational(0));
        for (std::size_t c = 0; c < v.size(); ++c) out[c] += coeffs[i] * v[c];
    }
    return out;
}

inline Point combo_eval(const std::vector<double>& coeffs, const std::vector<FamilyMember>& members,
                        const Rational& t) {
    return combo_eval(exact(coeffs), members, t);
}

/// Least channel of `members[i]` that no member with a different channel set uses,
/// within the range where every membership is decided.
inline std::optional<std::uint64_t> exclusive_channel(const std::vector<FamilyMember>& members, std::size_t i) {
    std::uint64_t decided = std::numeric_limits<std::uint64_t>::max();
    for (const auto& m : members)
        if (!m.channels().is_all()) decided = std::min(decided, m.channels().decided_through());
    const auto& own = members[i].channels();
    require(!own.is_all(), Errc::invalid_argument, "member uses every channel");
    for (std::uint64_t n : own.channels()) {
        if (n > decided) break;
        bool exclusive = true;
        for (std::size_t o = 0; o < members.size() && exclusive; ++o) {
            if (o == i || members[o].channels().channels() == own.channels()) continue;
            exclusive = !members[o].active_on(n);
        }
        if (exclusive) return n;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- rank

using SamplePlan = std::vector<Rational>;

/// For each member, `per_member` parameters spread over the middle leg of the
/// first tile of its least exclusive channel.
inline SamplePlan default_sample_plan(const std::vector<FamilyMember>& members, unsigned per_member = 8) {
    require(per_member >= 1, Errc::invalid_argument, "need at least one sample per member");
    SamplePlan plan;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto n = exclusive_channel(members, i);
        if (!n) fail(Errc::degenerate_sample_plan, "member '" + members[i].tag() + "' has no exclusive channel");
        const std::uint64_t j = pair_index(1, *n);
        for (unsigned s = 1; s <= per_member; ++s)
            plan.push_back(Rational(j) + Rational(1, 8) + Rational(3 * s, 4 * (per_member + 1)));
    }
    return plan;
}

struct RankReport {
    std::size_t members = 0;
    std::size_t samples = 0;
    std::size_t rank = 0;
    std::vector<double> singular_values;
    double threshold = 1e-8;
    bool pass = false;
};

/// Numerical rank of the member-by-(sample, coordinate) value matrix, rows normalized.
inline RankReport independence_test(const std::vector<FamilyMember>& members, const SamplePlan& plan) {
    require(members.size() >= 2, Errc::invalid_argument, "need at least two members");
    // Every member needs a sample on a channel outside all members that differ from it.
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool covered = false;
        for (const auto& t : plan) {
            if (t <= 0) continue;
            const std::uint64_t n = tile_lookup(t).tile.n;
            if (!members[i].active_on(n)) continue;
            bool exclusive = true;
            for (std::size_t o = 0; o < members.size() && exclusive; ++o) {
                if (o == i || members[o].channels().channels() == members[i].channels().channels()) continue;
                exclusive = !members[o].active_on(n);
            }
            if (exclusive) {
                covered = true;
                break;
            }
        }
        if (!covered)
            fail(Errc::degenerate_sample_plan,
                 "no sample on a channel exclusive to member '" + members[i].tag() + "'");
    }

    const std::size_t dim = members.front().map().target().ambient_dim();
    Eigen::MatrixXd a(members.size(), plan.size() * dim);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t s = 0; s < plan.size(); ++s) {
            const Point v = member_eval(members[i], plan[s]);
            for (std::size_t c = 0; c < dim; ++c) a(i, s * dim + c) = c < v.size() ? to_double(v[c]) : 0.0;
        }
        const double norm = a.row(i).norm();
        if (norm > 0) a.row(i) /= norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    RankReport r;
    r.members = members.size();
    r.samples = plan.size();
    const auto& sv = svd.singularValues();
    for (Eigen::Index k = 0; k < sv.size(); ++k) r.singular_values.push_back(sv[k]);
    const double top = r.singular_values.empty() ? 0.0 : r.singular_values.front();
    for (double s : r.singular_values)
        if (top > 0 && s > r.threshold * top) ++r.rank;
    r.pass = r.rank == r.members;
    return r;
}

} // namespace peano
