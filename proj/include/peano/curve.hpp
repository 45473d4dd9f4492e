#pragma once

// Exact space-filling curves of the unit interval onto the unit square and cube.
//
// A curve parameter at depth d selects one of radix^d consecutive parameter
// cells; the depth-d approximation of the curve maps every parameter in
// [i/radix^d, (i+1)/radix^d) to the point where the limit curve enters spatial
// cell i. Those entry points are exact values of the limit curve, so all
// arithmetic stays in integers.
//
// Conventions (frozen by golden tests):
//   * Hilbert curves start at the all-zero corner and end at (1, 0, ..., 0).
//     Level-one visit order in 2-D: lower-left, upper-left, upper-right, lower-right.
//   * Peano's ternary curve starts at (0, 0) and ends at (1, 1).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "peano/error.hpp"
#include "peano/numeric.hpp"

namespace peano {

enum class CurveKind { hilbert, peano };

inline std::string to_string(CurveKind kind) { return kind == CurveKind::hilbert ? "hilbert" : "peano"; }

constexpr unsigned kDefaultMaxDepth = 32;
/// Largest cube dimension the Hilbert engine accepts (used by the c00 targets).
constexpr unsigned kMaxCubeDim = 8;

/// Per-axis base of the coordinate grid.
constexpr unsigned axis_base(CurveKind kind) { return kind == CurveKind::hilbert ? 2u : 3u; }

/// Number of parameter cells a cell splits into at the next depth.
constexpr unsigned level_radix(CurveKind kind, unsigned dim) {
    return kind == CurveKind::hilbert ? (1u << dim) : 9u;
}

/// Deepest admissible depth: the parameter numerator at depth+1 must fit in 127 bits.
constexpr unsigned max_depth(CurveKind kind, unsigned dim) {
    const unsigned bits_per_level = kind == CurveKind::hilbert ? dim : 4; // 9 < 2^4
    return std::min(kDefaultMaxDepth, 126u / bits_per_level - 1);
}

/// Exact parameter numerator / radix^depth on [0, 1], kept in canonical form.
class CurveParam {
public:
    CurveParam() = default;

    CurveParam(u128 numerator, unsigned depth, unsigned radix)
        : numerator_(numerator), depth_(depth), radix_(radix) {
        require(radix >= 2, Errc::invalid_argument, "curve parameter radix must be at least 2");
        require(numerator <= checked_pow(radix, depth), Errc::invalid_argument,
                "curve parameter exceeds 1");
        while (depth_ > 0 && numerator_ % radix_ == 0) {
            numerator_ /= radix_;
            --depth_;
        }
    }

    static CurveParam zero(unsigned radix) { return CurveParam(0, 0, radix); }
    static CurveParam one(unsigned radix) { return CurveParam(1, 0, radix); }

    u128 numerator() const { return numerator_; }
    unsigned depth() const { return depth_; }
    unsigned radix() const { return radix_; }

    bool is_one() const { return depth_ == 0 && numerator_ == 1; }

    Rational value() const { return Rational(to_bigint(numerator_), to_bigint(checked_pow(radix_, depth_))); }
    double to_double() const { return static_cast<double>(numerator_) / std::pow(double(radix_), double(depth_)); }

    friend bool operator==(const CurveParam&, const CurveParam&) = default;
    friend bool operator<(const CurveParam& a, const CurveParam& b) { return a.value() < b.value(); }

private:
    u128 numerator_ = 0;
    unsigned depth_ = 0;
    unsigned radix_ = 4;
};

/// Point of [0,1]^dim with coordinates numerators[i] / base^depth.
struct CurvePoint {
    unsigned base = 2;
    unsigned depth = 0;
    std::vector<std::uint64_t> numerators;

    unsigned dim() const { return static_cast<unsigned>(numerators.size()); }
    std::uint64_t scale() const { return static_cast<std::uint64_t>(checked_pow(base, depth)); }
    double coord(unsigned i) const { return double(numerators.at(i)) / double(scale()); }
    Rational exact(unsigned i) const { return Rational(BigInt(numerators.at(i)), BigInt(scale())); }
    std::vector<double> coords() const {
        std::vector<double> out;
        for (unsigned i = 0; i < dim(); ++i) out.push_back(coord(i));
        return out;
    }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Spatial subcube of side base^-depth, addressed by one digit per level.
/// Hilbert digit: bit j holds the level bit of coordinate j. Peano digit: x + 3*y.
struct CellAddress {
    CurveKind kind = CurveKind::hilbert;
    unsigned dim = 2;
    std::vector<unsigned> digits;

    unsigned depth() const { return static_cast<unsigned>(digits.size()); }

    /// Lower corner in units of base^-depth.
    std::vector<std::uint64_t> corner() const {
        std::vector<std::uint64_t> out(dim, 0);
        for (unsigned level = 0; level < depth(); ++level) {
            for (unsigned j = 0; j < dim; ++j) {
                if (kind == CurveKind::hilbert) {
                    out[j] = out[j] * 2 + ((digits[level] >> j) & 1u);
                } else {
                    out[j] = out[j] * 3 + (j == 0 ? digits[level] % 3 : digits[level] / 3);
                }
            }
        }
        return out;
    }

    static CellAddress from_corner(CurveKind kind, unsigned dim, unsigned depth,
                                   std::span<const std::uint64_t> corner) {
        CellAddress cell{kind, dim, std::vector<unsigned>(depth, 0)};
        const std::uint64_t base = axis_base(kind);
        for (unsigned j = 0; j < dim; ++j) {
            std::uint64_t c = corner[j];
            for (unsigned level = depth; level-- > 0;) {
                const auto digit = static_cast<unsigned>(c % base);
                c /= base;
                cell.digits[level] += kind == CurveKind::hilbert ? (digit << j) : (j == 0 ? digit : 3 * digit);
            }
        }
        return cell;
    }

    friend bool operator==(const CellAddress&, const CellAddress&) = default;
};

struct ParamInterval {
    CurveParam lo;
    CurveParam hi;
};

namespace detail {

inline void validate(CurveKind kind, unsigned dim, unsigned depth) {
    if (kind == CurveKind::peano)
        require(dim == 2, Errc::unsupported_dimension, "Peano's curve is two-dimensional");
    require(dim >= 1 && dim <= kMaxCubeDim, Errc::unsupported_dimension,
            "cube dimension " + std::to_string(dim) + " is not supported");
    require(depth >= 1, Errc::invalid_argument, "depth must be positive");
    require(depth <= max_depth(kind, dim), Errc::depth_overflow,
            "depth " + std::to_string(depth) + " exceeds the maximum " +
                std::to_string(max_depth(kind, dim)) + " for this curve");
}

// Skilling's transpose formulation ("Programming the Hilbert curve", 2004).
// The index is stored transposed: bit p (from the top) of the index lives in
// coordinate p % dim at level bits-1-p/dim.
inline std::vector<std::uint64_t> index_to_transpose(u128 index, unsigned dim, unsigned bits) {
    std::vector<std::uint64_t> x(dim, 0);
    const unsigned total = dim * bits;
    for (unsigned p = 0; p < total; ++p) {
        const auto bit = static_cast<std::uint64_t>((index >> (total - 1 - p)) & 1u);
        x[p % dim] |= bit << (bits - 1 - p / dim);
    }
    return x;
}

inline u128 transpose_to_index(const std::vector<std::uint64_t>& x, unsigned bits) {
    const auto dim = static_cast<unsigned>(x.size());
    u128 index = 0;
    for (unsigned p = 0; p < dim * bits; ++p)
        index = (index << 1) | ((x[p % dim] >> (bits - 1 - p / dim)) & 1u);
    return index;
}

inline std::vector<std::uint64_t> hilbert_axes(u128 index, unsigned dim, unsigned bits) {
    if (dim == 1) return {static_cast<std::uint64_t>(index)};
    auto x = index_to_transpose(index, dim, bits);
    const std::uint64_t top = std::uint64_t{2} << (bits - 1);
    std::uint64_t t = x[dim - 1] >> 1;
    for (unsigned i = dim - 1; i > 0; --i) x[i] ^= x[i - 1];
    x[0] ^= t;
    for (std::uint64_t q = 2; q != top; q <<= 1) {
        const std::uint64_t p = q - 1;
        for (unsigned i = dim; i-- > 0;) {
            if (x[i] & q) {
                x[0] ^= p;
            } else {
                t = (x[0] ^ x[i]) & p;
                x[0] ^= t;
                x[i] ^= t;
            }
        }
    }
    return x;
}

inline u128 hilbert_index(std::vector<std::uint64_t> x, unsigned bits) {
    const auto dim = static_cast<unsigned>(x.size());
    if (dim == 1) return x[0];
    const std::uint64_t high = std::uint64_t{1} << (bits - 1);
    for (std::uint64_t q = high; q > 1; q >>= 1) {
        const std::uint64_t p = q - 1;
        for (unsigned i = 0; i < dim; ++i) {
            if (x[i] & q) {
                x[0] ^= p;
            } else {
                const std::uint64_t t = (x[0] ^ x[i]) & p;
                x[0] ^= t;
                x[i] ^= t;
            }
        }
    }
    for (unsigned i = 1; i < dim; ++i) x[i] ^= x[i - 1];
    std::uint64_t t = 0;
    for (std::uint64_t q = high; q > 1; q >>= 1)
        if (x[dim - 1] & q) t ^= q - 1;
    for (auto& xi : x) xi ^= t;
    return transpose_to_index(x, bits);
}

/// Ternary digits of a Peano parameter index, most significant first (2*depth of them).
inline std::vector<unsigned> ternary_digits(u128 index, unsigned depth) {
    std::vector<unsigned> digits(2 * depth, 0);
    for (unsigned i = 2 * depth; i-- > 0;) {
        digits[i] = static_cast<unsigned>(index % 3);
        index /= 3;
    }
    return digits;
}

constexpr unsigned reflect(unsigned digit, unsigned parity) { return parity % 2 ? 2 - digit : digit; }

struct PeanoCell {
    std::uint64_t x = 0, y = 0;
    unsigned even_sum = 0, odd_sum = 0; // digit sums at even / odd positions (1-based)
};

// x digit n = k^(t2+...+t_{2n-2})(t_{2n-1}), y digit n = k^(t1+...+t_{2n-1})(t_{2n}), k(d) = 2-d.
inline PeanoCell peano_cell(u128 index, unsigned depth) {
    const auto t = ternary_digits(index, depth);
    PeanoCell cell;
    for (unsigned n = 0; n < depth; ++n) {
        const unsigned odd_digit = t[2 * n];
        const unsigned even_digit = t[2 * n + 1];
        cell.x = cell.x * 3 + reflect(odd_digit, cell.even_sum);
        cell.odd_sum += odd_digit;
        cell.y = cell.y * 3 + reflect(even_digit, cell.odd_sum);
        cell.even_sum += even_digit;
    }
    return cell;
}

inline u128 peano_index(std::uint64_t x, std::uint64_t y, unsigned depth) {
    std::vector<unsigned> xd(depth), yd(depth);
    for (unsigned n = depth; n-- > 0;) {
        xd[n] = static_cast<unsigned>(x % 3);
        yd[n] = static_cast<unsigned>(y % 3);
        x /= 3;
        y /= 3;
    }
    u128 index = 0;
    unsigned even_sum = 0, odd_sum = 0;
    for (unsigned n = 0; n < depth; ++n) {
        const unsigned odd_digit = reflect(xd[n], even_sum);
        odd_sum += odd_digit;
        const unsigned even_digit = reflect(yd[n], odd_sum);
        even_sum += even_digit;
        index = index * 9 + odd_digit * 3 + even_digit;
    }
    return index;
}

/// Spatial lower corner of parameter cell `index` at `depth`, in units of base^-depth.
inline std::vector<std::uint64_t> cell_corner(CurveKind kind, u128 index, unsigned dim, unsigned depth) {
    if (kind == CurveKind::hilbert) return hilbert_axes(index, dim, depth);
    const auto c = peano_cell(index, depth);
    return {c.x, c.y};
}

inline u128 cell_index(CurveKind kind, std::span<const std::uint64_t> corner, unsigned depth) {
    if (kind == CurveKind::hilbert) return hilbert_index({corner.begin(), corner.end()}, depth);
    return peano_index(corner[0], corner[1], depth);
}

// The limit curve enters (exits) cell i at the corner it shares with its first
// (last) child cell.
inline std::vector<std::uint64_t> boundary_corner(CurveKind kind, u128 index, unsigned dim, unsigned depth,
                                                  bool exit) {
    if (kind == CurveKind::peano) {
        const auto c = peano_cell(index, depth);
        // Trailing zeros (entry) or twos (exit) continue the digit recursion.
        const bool x_tail = exit ? c.even_sum % 2 == 0 : c.even_sum % 2 == 1;
        const bool y_tail = exit ? c.odd_sum % 2 == 0 : c.odd_sum % 2 == 1;
        return {c.x + (x_tail ? 1u : 0u), c.y + (y_tail ? 1u : 0u)};
    }
    if (dim == 1) return {static_cast<std::uint64_t>(index) + (exit ? 1u : 0u)};
    const u128 children = u128{1} << dim;
    const auto parent = hilbert_axes(index, dim, depth);
    const auto child = hilbert_axes(index * children + (exit ? children - 1 : 0), dim, depth + 1);
    std::vector<std::uint64_t> out(dim);
    for (unsigned j = 0; j < dim; ++j) out[j] = parent[j] + (child[j] - 2 * parent[j]);
    return out;
}

/// Parameter cell containing t at `depth`; t == 1 maps to the last cell.
inline u128 param_cell(const CurveParam& t, unsigned depth) {
    const u128 cells = checked_pow(t.radix(), depth);
    if (t.is_one()) return cells - 1;
    if (t.depth() <= depth) return t.numerator() * checked_pow(t.radix(), depth - t.depth());
    return t.numerator() / checked_pow(t.radix(), t.depth() - depth);
}

inline void check_radix(const CurveParam& t, CurveKind kind, unsigned dim) {
    require(t.radix() == level_radix(kind, dim), Errc::invalid_argument,
            "parameter radix " + std::to_string(t.radix()) + " does not match the curve");
}

inline CurvePoint to_point(CurveKind kind, unsigned depth, std::vector<std::uint64_t> numerators) {
    return CurvePoint{axis_base(kind), depth, std::move(numerators)};
}

} // namespace detail

/// Depth-`depth` approximation of the curve at t (any supported kind / cube dimension).
inline CurvePoint curve_eval(CurveKind kind, const CurveParam& t, unsigned dim, unsigned depth) {
    detail::validate(kind, dim, depth);
    detail::check_radix(t, kind, dim);
    const u128 cell = detail::param_cell(t, depth);
    return detail::to_point(kind, depth, detail::boundary_corner(kind, cell, dim, depth, t.is_one()));
}

/// Depth-`depth` Hilbert approximation at t; t is a CurveParam of radix 2^dim.
inline CurvePoint hilbert_eval(const CurveParam& t, unsigned dim, unsigned depth) {
    require(dim == 2 || dim == 3, Errc::unsupported_dimension, "Hilbert curves are provided for dim 2 and 3");
    return curve_eval(CurveKind::hilbert, t, dim, depth);
}

/// Peano's ternary curve; t is a CurveParam of radix 9.
inline CurvePoint peano_eval(const CurveParam& t, unsigned depth) {
    return curve_eval(CurveKind::peano, t, 2, depth);
}

inline CellAddress cell_of(CurveKind kind, const CurveParam& t, unsigned dim, unsigned depth) {
    if (kind == CurveKind::hilbert)
        require(dim == 2 || dim == 3, Errc::unsupported_dimension, "Hilbert curves are provided for dim 2 and 3");
    detail::validate(kind, dim, depth);
    detail::check_radix(t, kind, dim);
    const auto corner = detail::cell_corner(kind, detail::param_cell(t, depth), dim, depth);
    return CellAddress::from_corner(kind, dim, depth, corner);
}

/// Parameter interval [i, i+1] / radix^depth that the curve spends inside `cell`.
inline ParamInterval preimage_of_cell(const CellAddress& cell) {
    const unsigned digit_limit = cell.kind == CurveKind::hilbert ? (1u << cell.dim) : 9u;
    require(cell.depth() >= 1, Errc::invalid_cell, "cell has no digits");
    if (cell.kind == CurveKind::peano)
        require(cell.dim == 2, Errc::invalid_cell, "Peano cells are two-dimensional");
    require(cell.dim >= 1 && cell.dim <= kMaxCubeDim, Errc::invalid_cell, "cell dimension out of range");
    require(cell.depth() <= max_depth(cell.kind, cell.dim), Errc::invalid_cell, "cell depth out of range");
    for (unsigned d : cell.digits)
        require(d < digit_limit, Errc::invalid_cell, "cell digit " + std::to_string(d) + " out of range");
    const auto corner = cell.corner();
    const u128 index = detail::cell_index(cell.kind, corner, cell.depth());
    const unsigned radix = level_radix(cell.kind, cell.dim);
    return {CurveParam(index, cell.depth(), radix), CurveParam(index + 1, cell.depth(), radix)};
}

/// Curve index of the parameter cell whose image is the spatial cell with the given lower corner.
inline u128 index_of_corner(CurveKind kind, std::span<const std::uint64_t> corner, unsigned depth) {
    return detail::cell_index(kind, corner, depth);
}

/// Where the curve enters parameter cell `index`, in units of base^-depth.
inline std::vector<std::uint64_t> entry_corner(CurveKind kind, u128 index, unsigned dim, unsigned depth) {
    return detail::boundary_corner(kind, index, dim, depth, false);
}

inline std::vector<std::uint64_t> exit_corner(CurveKind kind, u128 index, unsigned dim, unsigned depth) {
    return detail::boundary_corner(kind, index, dim, depth, true);
}

/// Depth-`depth` approximation at an arbitrary rational s in [0, 1].
inline CurvePoint curve_at(CurveKind kind, const Rational& s, unsigned dim, unsigned depth) {
    detail::validate(kind, dim, depth);
    require(s >= 0 && s <= 1, Errc::invalid_argument, "curve parameter outside [0, 1]");
    const u128 cells = checked_pow(level_radix(kind, dim), depth);
    if (s == 1) return detail::to_point(kind, depth, exit_corner(kind, cells - 1, dim, depth));
    const u128 index = to_u128(floor_of(s * Rational(to_bigint(cells))));
    return detail::to_point(kind, depth, entry_corner(kind, index, dim, depth));
}

} // namespace peano
