#pragma once

// Truncated MacLaurin series and growth orders of entire functions.
//
// The order of f(z) = sum a_n z^n is
//   rho(f) = limsup_{r->inf} log log M(f, r) / log r = limsup_n n log n / log(1/|a_n|).
// Both expressions are estimated at finite scale: the coefficient formula as a
// maximum over a tail window of indices, the growth formula as a least-squares
// slope over a list of radii.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "peano/error.hpp"

namespace peano {

namespace mp = boost::multiprecision;

/// Coefficients such as n^(-n/alpha) underflow double long before n = 400.
using Real = mp::number<mp::cpp_bin_float<50>, mp::et_off>;
using Complex = mp::number<mp::cpp_complex_backend<50>, mp::et_off>;
using cplx = std::complex<double>;

/// Value reported for an infinite or unmeasurably large order.
constexpr double kOrderCap = 1e6;

inline double log_abs(const Complex& c) {
    const Real m = abs(c);
    if (m == 0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(log(m));
}

// ---------------------------------------------------------------- series

/// a_0 .. a_N of an entire function. `polynomial` marks an exact finite
/// expansion (all later coefficients are zero) as opposed to a truncation.
class TruncatedSeries {
public:
    TruncatedSeries() : TruncatedSeries(std::vector<Complex>(2), true) {}

    explicit TruncatedSeries(std::vector<Complex> coeffs, bool polynomial = false)
        : coeffs_(std::move(coeffs)), polynomial_(polynomial) {
        require(coeffs_.size() >= 2, Errc::invalid_argument, "a series needs N >= 1");
        for (const auto& c : coeffs_) {
            require(boost::multiprecision::isfinite(c.real()) && boost::multiprecision::isfinite(c.imag()),
                    Errc::invalid_argument, "series coefficients must be finite");
        }
        log_abs_.reserve(coeffs_.size());
        phase_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) {
            log_abs_.push_back(log_abs(c));
            const Real m = abs(c);
            phase_.push_back(m == 0 ? cplx(0) : cplx(static_cast<double>(c.real() / m), static_cast<double>(c.imag() / m)));
        }
    }

    static TruncatedSeries from_doubles(const std::vector<cplx>& coeffs, bool polynomial = false) {
        std::vector<Complex> c;
        for (const auto& x : coeffs) c.emplace_back(x.real(), x.imag());
        return TruncatedSeries(std::move(c), polynomial);
    }

    static TruncatedSeries zero(unsigned n) { return TruncatedSeries(std::vector<Complex>(n + 1), true); }

    /// The constant c (as a polynomial of degree <= n).
    static TruncatedSeries constant(const Complex& c, unsigned n) {
        std::vector<Complex> v(std::max(2u, n + 1));
        v[0] = c;
        return TruncatedSeries(std::move(v), true);
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    bool polynomial() const { return polynomial_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    const Complex& operator[](std::size_t n) const { return coeffs_.at(n); }
    double log_abs_coeff(std::size_t n) const { return log_abs_.at(n); }

    bool is_zero() const {
        return std::all_of(log_abs_.begin(), log_abs_.end(), [](double l) { return std::isinf(l); });
    }

    bool is_constant() const {
        return std::all_of(log_abs_.begin() + 1, log_abs_.end(), [](double l) { return std::isinf(l); });
    }

    /// Largest n <= N with a_n != 0, or 0.
    unsigned degree() const {
        for (unsigned n = order(); n > 0; --n)
            if (!std::isinf(log_abs_[n])) return n;
        return 0;
    }

    /// Value at z as mantissa * exp(scale), so huge values are still representable.
    struct Scaled {
        cplx mantissa;
        double log_scale = 0;

        double log_abs() const {
            const double m = std::abs(mantissa);
            return m == 0 ? -std::numeric_limits<double>::infinity() : std::log(m) + log_scale;
        }
    };

    Scaled eval_scaled(cplx z) const {
        const double r = std::abs(z);
        if (r == 0) return {phase_[0] * (std::isinf(log_abs_[0]) ? 0.0 : std::exp(log_abs_[0])), 0.0};
        const double log_r = std::log(r);
        const cplx w = z / r;
        double top = -std::numeric_limits<double>::infinity();
        for (std::size_t n = 0; n < log_abs_.size(); ++n) top = std::max(top, log_abs_[n] + double(n) * log_r);
        if (std::isinf(top)) return {0.0, 0.0};
        cplx acc = 0;
        for (std::size_t n = log_abs_.size(); n-- > 0;) {
            const double l = log_abs_[n] + double(n) * log_r - top;
            acc = acc * w + (l < -745 ? cplx(0) : phase_[n] * std::exp(l));
        }
        return {acc, top};
    }

    cplx eval(cplx z) const {
        const auto s = eval_scaled(z);
        require(s.log_scale < 709, Errc::overflow, "series value exceeds double range");
        return s.mantissa * std::exp(s.log_scale);
    }

    /// Term-wise derivative sum n a_n z^(n-1).
    TruncatedSeries derivative() const {
        std::vector<Complex> d(std::max<std::size_t>(2, coeffs_.size() - 1));
        for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = coeffs_[n] * Real(n);
        return TruncatedSeries(std::move(d), polynomial_);
    }

    /// log of the largest term max_n |a_n| r^n.
    double log_max_term(double r) const {
        const double log_r = std::log(r);
        double top = -std::numeric_limits<double>::infinity();
        for (std::size_t n = 0; n < log_abs_.size(); ++n) top = std::max(top, log_abs_[n] + double(n) * log_r);
        return top;
    }

private:
    std::vector<Complex> coeffs_;
    bool polynomial_ = false;
    std::vector<double> log_abs_;
    std::vector<cplx> phase_;
};

/// a_0 = 0 and a_n = n^(-n/alpha): an entire function of order exactly alpha.
inline TruncatedSeries prescribed_order_series(double alpha, unsigned n_max) {
    require(std::isfinite(alpha) && alpha > 0, Errc::invalid_alpha, "order must be a positive real");
    require(n_max >= 2, Errc::invalid_argument, "truncation order must be at least 2");
    std::vector<Complex> c(n_max + 1);
    const Real a(alpha);
    for (unsigned n = 1; n <= n_max; ++n) c[n] = Complex(exp(-Real(n) / a * log(Real(n))));
    return TruncatedSeries(std::move(c));
}

/// a_n = 1 / n!, the exponential (order 1).
inline TruncatedSeries exponential_series(unsigned n_max) {
    std::vector<Complex> c(n_max + 1);
    Real term = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) term /= n;
        c[n] = Complex(term);
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned n;
    if (a.polynomial() && b.polynomial()) n = std::max(a.order(), b.order());
    else if (a.polynomial()) n = b.order();
    else if (b.polynomial()) n = a.order();
    else n = std::min(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        if (i <= a.order()) c[i] += a[i];
        if (i <= b.order()) c[i] += b[i];
    }
    return TruncatedSeries(std::move(c), a.polynomial() && b.polynomial());
}

inline TruncatedSeries series_scale(const TruncatedSeries& a, const Complex& s) {
    std::vector<Complex> c = a.coeffs();
    for (auto& x : c) x *= s;
    return TruncatedSeries(std::move(c), a.polynomial());
}

/// Cauchy product, kept up to the order where every contributing coefficient is known.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned n;
    if (a.polynomial() && b.polynomial()) n = std::max(1u, a.degree() + b.degree());
    else if (a.polynomial()) n = b.order();
    else if (b.polynomial()) n = a.order();
    else n = std::min(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (unsigned i = 0; i <= std::min(n, a.order()); ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j <= std::min(n - i, b.order()); ++j) c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(c), a.polynomial() && b.polynomial());
}

// ---------------------------------------------------------------- orders

struct OrderEstimate {
    enum class Method { coefficient, growth };

    double value = 0;
    bool infinite = false;  // value is capped at kOrderCap
    bool constant = false;  // constant function: order 0 by convention
    bool vanishing_tail = false; // every coefficient in the window is zero
    Method method = Method::coefficient;
    unsigned window_lo = 0; // coefficient method: index range used
    unsigned window_hi = 0;
    unsigned argmax = 0;
    double residual = 0;    // growth method: RMS residual of the fit
    std::vector<double> radii;
    std::vector<std::string> warnings;
};

inline std::string to_string(OrderEstimate::Method m) {
    return m == OrderEstimate::Method::coefficient ? "coeff" : "growth";
}

/// max over n in [ceil(window * N), N] of n log n / log(1/|a_n|), skipping zero coefficients.
inline OrderEstimate order_from_coeffs(const TruncatedSeries& s, double window = 0.5) {
    require(window > 0 && window <= 1, Errc::invalid_argument, "window must lie in (0, 1]");
    OrderEstimate est;
    est.method = OrderEstimate::Method::coefficient;
    const unsigned n_max = s.order();
    est.window_lo = std::max(1u, static_cast<unsigned>(std::ceil(window * n_max)));
    est.window_hi = n_max;
    if (s.is_constant()) {
        est.constant = true;
        est.warnings.push_back("constant series: order 0 by convention");
        return est;
    }
    bool any = false;
    for (unsigned n = est.window_lo; n <= n_max; ++n) {
        const double l = s.log_abs_coeff(n);
        if (std::isinf(l)) continue;
        any = true;
        if (n == 1) continue; // n log n = 0
        if (l >= 0) {
            est.infinite = true;
            est.value = kOrderCap;
            est.argmax = n;
            est.warnings.push_back("coefficient with |a_n| >= 1 in the window: order reported as infinite");
            return est;
        }
        const double ratio = double(n) * std::log(double(n)) / -l;
        if (ratio > est.value) {
            est.value = ratio;
            est.argmax = n;
        }
    }
    if (!any) {
        est.vanishing_tail = true;
        est.warnings.push_back("all coefficients in the window vanish: order 0");
    }
    if (est.value > kOrderCap) {
        est.value = kOrderCap;
        est.infinite = true;
    }
    return est;
}

constexpr double kReliabilityRatio = 1e-12;

/// |a_N| r^N below 1e-12 of M(f, r); a trailing run of zero coefficients is skipped
/// and exact polynomials are always reliable.
inline bool truncation_reliable(const TruncatedSeries& s, double r, double log_m) {
    const unsigned d = s.degree();
    if (s.polynomial() || r == 0 || d == 0) return true;
    const double tail = s.log_abs_coeff(d) + double(d) * std::log(r);
    return tail < std::log(kReliabilityRatio) + log_m;
}

/// Largest radius at which the truncation is reliable, judged against the largest
/// term (a lower bound for M); infinity for polynomials.
inline double reliable_radius(const TruncatedSeries& s) {
    if (s.polynomial() || s.degree() == 0) return std::numeric_limits<double>::infinity();
    auto ok = [&](double log_r) {
        const double r = std::exp(log_r);
        return truncation_reliable(s, r, s.log_max_term(r));
    };
    double lo = -50, hi = 50;
    if (!ok(lo)) return 0;
    if (ok(hi)) return std::exp(hi);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    return std::exp(lo);
}

/// log M(f, r) from `samples` equally spaced points on |z| = r.
inline double log_max_modulus(const TruncatedSeries& s, double r, unsigned samples = 512) {
    require(r > 0 && std::isfinite(r), Errc::invalid_argument, "radius must be positive");
    require(samples >= 1, Errc::invalid_argument, "need at least one sample");
    double best = -std::numeric_limits<double>::infinity();
    for (unsigned i = 0; i < samples; ++i) {
        const double theta = 2.0 * M_PI * double(i) / double(samples);
        best = std::max(best, s.eval_scaled(std::polar(r, theta)).log_abs());
    }
    if (s.is_zero()) return best;
    require(truncation_reliable(s, r, best), Errc::truncation_unreliable,
            "tail term |a_N| r^N is not negligible at r = " + std::to_string(r));
    return best;
}

inline double max_modulus(const TruncatedSeries& s, double r, unsigned samples = 512) {
    const double l = log_max_modulus(s, r, samples);
    if (std::isinf(l)) return 0;
    require(l < 709, Errc::overflow, "M(f, r) exceeds double range; use log_max_modulus");
    return std::exp(l);
}

/// Least-squares slope of log log M(f, r) against log r.
inline OrderEstimate order_from_growth(const TruncatedSeries& s, const std::vector<double>& radii,
                                       unsigned samples = 512) {
    require(!radii.empty(), Errc::invalid_argument, "no radii given");
    require(std::is_sorted(radii.begin(), radii.end()) &&
                std::adjacent_find(radii.begin(), radii.end()) == radii.end(),
            Errc::invalid_argument, "radii must be strictly increasing");
    OrderEstimate est;
    est.method = OrderEstimate::Method::growth;
    std::vector<double> xs, ys;
    for (double r : radii) {
        const double log_m = log_max_modulus(s, r, samples);
        if (!(log_m > 1.0)) {
            est.warnings.push_back("radius " + std::to_string(r) + " dropped: M(f, r) <= e");
            continue;
        }
        xs.push_back(std::log(r));
        ys.push_back(std::log(log_m));
        est.radii.push_back(r);
    }
    require(xs.size() >= 2, Errc::domain_error, "fewer than two radii with M(f, r) > e");
    const double n = double(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / n;
        my += ys[i] / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    double rss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (my + slope * (xs[i] - mx));
        rss += e * e;
    }
    est.value = std::max(0.0, slope);
    est.residual = std::sqrt(rss / n);
    if (slope < 0) est.warnings.push_back("negative fitted slope clamped to 0");
    return est;
}

/// n geometrically spaced radii between r_lo and r_hi.
inline std::vector<double> geometric_radii(double r_lo, double r_hi, unsigned n) {
    require(r_lo > 0 && r_hi > r_lo && n >= 2, Errc::invalid_argument, "bad radius range");
    std::vector<double> out;
    for (unsigned i = 0; i < n; ++i) out.push_back(r_lo * std::pow(r_hi / r_lo, double(i) / double(n - 1)));
    return out;
}

// ---------------------------------------------------------------- polynomials

/// Multivariate polynomial sum c_alpha z^alpha in M variables, zero coefficients dropped.
class PolySpec {
public:
    using Exponents = std::vector<unsigned>;

    PolySpec() = default;

    explicit PolySpec(unsigned variables) : variables_(variables) {}

    void add_term(const Exponents& e, const Complex& c) {
        require(e.size() <= variables_, Errc::invalid_argument, "monomial uses too many variables");
        Exponents key = e;
        key.resize(variables_, 0);
        auto& slot = terms_[key];
        slot += c;
        if (slot == 0) terms_.erase(key);
    }

    unsigned variables() const { return variables_; }
    const std::map<Exponents, Complex>& terms() const { return terms_; }

    bool has_constant_term() const { return terms_.count(Exponents(variables_, 0)) > 0; }
    bool is_constant() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
            return std::all_of(kv.first.begin(), kv.first.end(), [](unsigned x) { return x == 0; });
        });
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (unsigned x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    cplx eval(const std::vector<cplx>& z) const {
        require(z.size() == variables_, Errc::invalid_argument, "wrong number of arguments");
        cplx sum = 0;
        for (const auto& [e, c] : terms_) {
            cplx term(static_cast<double>(c.real()), static_cast<double>(c.imag()));
            for (unsigned k = 0; k < variables_; ++k)
                for (unsigned p = 0; p < e[k]; ++p) term *= z[k];
            sum += term;
        }
        return sum;
    }

    /// Partial derivative in variable k (0-based), evaluated at z.
    cplx partial(unsigned k, const std::vector<cplx>& z) const {
        cplx sum = 0;
        for (const auto& [e, c] : terms_) {
            if (e[k] == 0) continue;
            cplx term = cplx(static_cast<double>(c.real()), static_cast<double>(c.imag())) * double(e[k]);
            for (unsigned j = 0; j < variables_; ++j) {
                const unsigned p = j == k ? e[j] - 1 : e[j];
                for (unsigned q = 0; q < p; ++q) term *= z[j];
            }
            sum += term;
        }
        return sum;
    }

    std::string str() const;

    /// Parses expressions such as "z1*z2 + z1", "3*z1^4", "z2 + 7", "-0.5*z1^2*z3".
    /// `variables` = 0 takes the largest variable index that appears.
    static PolySpec parse(std::string_view text, unsigned variables = 0);

private:
    unsigned variables_ = 0;
    std::map<Exponents, Complex> terms_;
};

namespace detail {

struct PolyParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::invalid_argument, "polynomial '" + std::string(s) + "': " + what + " at position " +
                                         std::to_string(pos));
    }

    unsigned integer() {
        skip();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) error("expected an integer");
        return static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
    }

    double number() {
        skip();
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(std::string(s.substr(pos)), &used);
        } catch (const std::exception&) {
            error("expected a number");
        }
        pos += used;
        return v;
    }

    // factor := number | 'i' | 'z' integer ['^' integer]
    void factor(std::map<unsigned, unsigned>& powers, cplx& coeff) {
        skip();
        if (pos >= s.size()) error("unexpected end");
        const char c = s[pos];
        if (c == 'z' || c == 'Z') {
            ++pos;
            const unsigned k = integer();
            if (k == 0) error("variables are numbered from 1");
            unsigned p = 1;
            skip();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                p = integer();
            }
            powers[k] += p;
        } else if (c == 'i' || c == 'I') {
            ++pos;
            coeff *= cplx(0, 1);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            coeff *= number();
        } else {
            error(std::string("unexpected '") + c + "'");
        }
    }

    template <class Sink>
    void parse(Sink&& sink) {
        skip();
        bool first = true;
        while (pos < s.size()) {
            double sign = 1;
            skip();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                error("expected '+' or '-'");
            }
            std::map<unsigned, unsigned> powers;
            cplx coeff = sign;
            factor(powers, coeff);
            skip();
            while (pos < s.size() && s[pos] == '*') {
                ++pos;
                factor(powers, coeff);
                skip();
            }
            sink(powers, coeff);
            first = false;
        }
        if (first) error("empty polynomial");
    }
};

} // namespace detail

inline PolySpec PolySpec::parse(std::string_view text, unsigned variables) {
    std::vector<std::pair<std::map<unsigned, unsigned>, cplx>> raw;
    detail::PolyParser p{text};
    unsigned largest = 0;
    p.parse([&](const std::map<unsigned, unsigned>& powers, cplx c) {
        for (const auto& [k, e] : powers) largest = std::max(largest, k);
        raw.emplace_back(powers, c);
    });
    if (variables == 0) variables = std::max(1u, largest);
    require(largest <= variables, Errc::invalid_argument, "polynomial uses more variables than declared");
    PolySpec out(variables);
    for (const auto& [powers, c] : raw) {
        Exponents e(variables, 0);
        for (const auto& [k, x] : powers) e[k - 1] = x;
        out.add_term(e, Complex(Real(c.real()), Real(c.imag())));
    }
    return out;
}

inline std::string PolySpec::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const double re = static_cast<double>(c.real()), im = static_cast<double>(c.imag());
        std::string coeff;
        char buf[64];
        if (im == 0) {
            std::snprintf(buf, sizeof buf, "%.17g", std::abs(re));
            coeff = buf;
            out += out.empty() ? (re < 0 ? "-" : "") : (re < 0 ? " - " : " + ");
        } else {
            std::snprintf(buf, sizeof buf, "(%.17g%+.17g*i)", re, im);
            coeff = buf;
            out += out.empty() ? "" : " + ";
        }
        std::string mono;
        for (unsigned k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "z" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) out += coeff;
        else if (coeff == "1") out += mono;
        else out += coeff + "*" + mono;
    }
    return out;
}

/// Variables (1-based) with a positive exponent in some monomial.
inline std::set<unsigned> index_set(const PolySpec& p) {
    require(!p.is_constant(), Errc::constant_polynomial, "polynomial is constant");
    std::set<unsigned> out;
    for (const auto& [e, c] : p.terms())
        for (unsigned k = 0; k < e.size(); ++k)
            if (e[k] > 0) out.insert(k + 1);
    return out;
}

/// P(s_1, ..., s_M) computed in the series ring.
inline TruncatedSeries compose_poly(const PolySpec& p, const std::vector<TruncatedSeries>& series) {
    require(!p.is_constant(), Errc::constant_polynomial, "polynomial is constant");
    require(series.size() == p.variables(), Errc::invalid_argument,
            "expected " + std::to_string(p.variables()) + " series, got " + std::to_string(series.size()));
    unsigned n = 0;
    bool all_poly = true;
    for (const auto& s : series) {
        if (!s.polynomial()) {
            n = all_poly ? s.order() : std::min(n, s.order());
            all_poly = false;
        }
    }
    // powers[k][e] = s_k^e, built on demand
    std::vector<std::vector<TruncatedSeries>> powers(series.size());
    auto power = [&](unsigned k, unsigned e) -> const TruncatedSeries& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(series[k]);
        while (cache.size() < e) cache.push_back(series_mul(cache.back(), series[k]));
        return cache[e - 1];
    };
    std::optional<TruncatedSeries> sum;
    for (const auto& [e, c] : p.terms()) {
        std::optional<TruncatedSeries> term;
        for (unsigned k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            term = term ? series_mul(*term, power(k, e[k])) : power(k, e[k]);
        }
        TruncatedSeries t = term ? series_scale(*term, c) : TruncatedSeries::constant(c, all_poly ? 1 : n);
        sum = sum ? series_add(*sum, t) : t;
    }
    return *sum;
}

} // namespace peano
