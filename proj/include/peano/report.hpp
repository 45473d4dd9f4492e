#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "peano/numeric.hpp"

namespace peano {

struct CoverageHit {
    std::vector<double> point;
    Rational t;
    double residual = 0;
};

struct CoverageMiss {
    std::vector<double> point;
    std::string reason;
};

/// Outcome of an eps-net scan. Hits and misses partition the net.
struct CoverageReport {
    std::string net;
    double eps = 0;
    std::size_t net_size = 0;
    std::vector<CoverageHit> hits;
    std::vector<CoverageMiss> misses;
    double wall_seconds = 0; // only reported on request; varies between runs

    bool complete() const { return misses.empty() && hits.size() == net_size; }
    double max_residual() const {
        double m = 0;
        for (const auto& h : hits) m = std::max(m, h.residual);
        return m;
    }
};

/// Points of the grid eps * Z^d that lie in the box [lo, hi]; with eps at least
/// the box width, only the box centre.
inline std::vector<std::vector<double>> grid_net(const std::vector<double>& lo, const std::vector<double>& hi,
                                                 double eps) {
    const std::size_t d = lo.size();
    std::vector<std::vector<double>> axes(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double width = hi[i] - lo[i];
        if (eps >= width) {
            axes[i].push_back(0.5 * (lo[i] + hi[i]));
            continue;
        }
        const auto steps = static_cast<long>(std::floor(width / eps + 1e-9));
        for (long s = 0; s <= steps; ++s) axes[i].push_back(lo[i] + double(s) * eps);
        if (hi[i] - axes[i].back() > 1e-12 * std::max(1.0, std::abs(hi[i]))) axes[i].push_back(hi[i]);
    }
    std::vector<std::vector<double>> out;
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        std::vector<double> p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = axes[i][idx[i]];
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < d && ++idx[i] == axes[i].size()) idx[i++] = 0;
        if (i == d) break;
    }
    return out;
}

} // namespace peano
