// peano-lab: command-line front end for the curve, line-map, order, algebra,
// family, sequence and verification modules. Reports are JSON (CSV for curve
// traces); exit code 0 means pass, 1 fail, 2 configuration error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "peano/peano.hpp"

using namespace peano;

namespace {

struct Globals {
    std::string out;
    std::uint64_t seed = 2024;
    unsigned depth = 16;
    unsigned trunc = 400;
    bool timing = false;
};

/// Thrown for bad flags or input files; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + g.out);
    f << text;
}

json header(const Globals& g, const std::string& command) {
    return {{"tool", "peano-lab"}, {"command", command}, {"seed", g.seed}, {"depth", g.depth}, {"trunc", g.trunc}};
}

int report(const Globals& g, const std::string& command, json result, std::optional<bool> pass = std::nullopt) {
    json doc{{"header", header(g, command)}, {"result", std::move(result)}};
    if (pass) doc["pass"] = *pass;
    emit(g, dump(doc));
    return pass && !*pass ? 1 : 0;
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("malformed number list '" + text + "'");
        }
    }
    return out;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

CurveKind parse_kind(const std::string& s) {
    if (s == "hilbert") return CurveKind::hilbert;
    if (s == "peano") return CurveKind::peano;
    throw ConfigError("unknown curve '" + s + "'");
}

TargetSpace parse_target(const std::string& s) {
    if (s == "plane" || s == "r2") return TargetSpace::euclidean(2);
    if (s == "space" || s == "r3") return TargetSpace::euclidean(3);
    if (s == "c00") return TargetSpace::c00();
    throw ConfigError("unknown target '" + s + "' (r2, r3, c00)");
}

std::vector<std::string> strings(const Point& p) {
    std::vector<std::string> out;
    for (const auto& x : p) out.push_back(to_string(x));
    return out;
}

json estimate_json(const OrderEstimate& e) {
    json j{{"estimate", e.value},    {"method", to_string(e.method)}, {"infinite", e.infinite},
           {"constant", e.constant},   {"vanishing_tail", e.vanishing_tail}, {"warnings", e.warnings},
           {"residual", nullptr}};
    if (e.method == OrderEstimate::Method::coefficient) {
        j["window"] = {e.window_lo, e.window_hi};
        j["argmax"] = e.argmax;
    } else {
        j["radii"] = e.radii;
        j["residual"] = e.residual;
    }
    return j;
}

FiniteSeq read_seq(const std::string& path) {
    const json j = read_json(path);
    if (!j.contains("entries") || !j["entries"].is_array()) throw ConfigError(path + ": expected {\"entries\": [...]}");
    return FiniteSeq(j["entries"].get<std::vector<double>>());
}

IndexedValues read_indexed(const std::string& path) {
    const json j = read_json(path);
    IndexedValues out;
    if (j.contains("values") && j["values"].is_object()) {
        for (const auto& [k, v] : j["values"].items()) out[k] = v.get<double>();
        return out;
    }
    if (!j.contains("entries") || !j["entries"].is_array()) throw ConfigError(path + ": expected entries or values");
    const auto e = j["entries"].get<std::vector<double>>();
    for (std::size_t i = 0; i < e.size(); ++i) out[std::to_string(i + 1)] = e[i];
    return out;
}

AlgebraElement make_element(const Globals& g, const std::string& poly, const std::string& orders) {
    return AlgebraElement::make(poly, parse_list(orders), g.depth, g.trunc);
}

} // namespace

int main(int argc, char** argv) {
    Globals g;
    CLI::App app{"Space-filling curves, surjections with unbounded fibers, and their algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", g.out, "Write the report to FILE instead of stdout");
    app.add_option("--seed", g.seed, "Seed for random cases");
    app.add_option("--depth", g.depth, "Curve depth");
    app.add_option("--trunc", g.trunc, "Series truncation order N");
    app.add_flag("--timing", g.timing, "Include wall times (makes output run-dependent)");

    std::function<int()> action;

    // ------------------------------------------------------------ curve
    auto* curve = app.add_subcommand("curve", "Space-filling curves on [0,1]");
    curve->require_subcommand(1);
    std::string kind = "hilbert", t_text = "1/3";
    unsigned dim = 2, samples = 256;
    auto* curve_eval_cmd = curve->add_subcommand("eval", "Curve point at a rational parameter");
    curve_eval_cmd->add_option("--kind", kind, "hilbert or peano");
    curve_eval_cmd->add_option("--t", t_text, "Parameter in [0,1], e.g. 1/3 or 0.25");
    curve_eval_cmd->add_option("--dim", dim, "Cube dimension (Hilbert)");
    curve_eval_cmd->callback([&] {
        action = [&] {
            const CurveKind k = parse_kind(kind);
            const unsigned d = k == CurveKind::peano ? 2 : dim;
            const Rational t = parse_rational(t_text);
            const CurvePoint p = curve_at(k, t, d, g.depth);
            Point exact_point;
            for (unsigned i = 0; i < p.dim(); ++i) exact_point.push_back(p.exact(i));
            return report(g, "curve eval",
                          {{"kind", to_string(k)}, {"t", to_string(t)}, {"dim", d}, {"point", strings(exact_point)},
                           {"approx", p.coords()}});
        };
    });
    auto* trace = curve->add_subcommand("trace", "CSV of curve points at t = i / samples");
    trace->add_option("--kind", kind, "hilbert or peano");
    trace->add_option("--dim", dim, "Cube dimension (Hilbert)");
    trace->add_option("--samples", samples, "Number of intervals");
    trace->callback([&] {
        action = [&] {
            const CurveKind k = parse_kind(kind);
            const unsigned d = k == CurveKind::peano ? 2 : dim;
            if (samples == 0) throw ConfigError("samples must be positive");
            std::ostringstream csv;
            csv << "t";
            for (unsigned i = 0; i < d; ++i) csv << ",x" << i + 1;
            csv << "\n";
            csv.precision(17);
            for (unsigned i = 0; i <= samples; ++i) {
                const CurvePoint p = curve_at(k, Rational(i, samples), d, g.depth);
                csv << double(i) / samples;
                for (unsigned c = 0; c < d; ++c) csv << "," << p.coord(c);
                csv << "\n";
            }
            emit(g, csv.str());
            return 0;
        };
    });

    // ------------------------------------------------------------ surjection
    auto* surj = app.add_subcommand("surjection", "The tiled line map R -> X");
    surj->require_subcommand(1);
    std::string target = "plane", point_text = "0.5,0.25";
    std::uint64_t channel = 0, count = 1;
    double beyond = -1, tol = 1e-3;
    auto* seval = surj->add_subcommand("eval", "F(t), or the block map f_n with --channel");
    seval->add_option("--t", t_text, "Parameter, e.g. 12.5 or 37/3");
    seval->add_option("--target", target, "plane, space or c00");
    seval->add_option("--channel", channel, "Evaluate the block map of this channel");
    seval->callback([&] {
        action = [&] {
            const auto tgt = parse_target(target);
            const auto f = channel ? TiledLineMap::block(tgt, channel, g.depth) : TiledLineMap::composite(tgt, g.depth);
            const Rational t = parse_rational(t_text);
            const Point v = f.eval(t);
            json j{{"t", to_string(t)}, {"target", tgt.describe()}, {"point", strings(v)}, {"approx", to_doubles(v)}};
            if (t > 0) {
                const auto pos = tile_lookup(t);
                j["tile"] = {{"j", pos.tile.j}, {"k", pos.tile.k}, {"n", pos.tile.n}};
            }
            if (channel) j["channel"] = channel;
            return report(g, "surjection eval", j);
        };
    });
    auto* wit = surj->add_subcommand("witnesses", "Parameters t with F(t) within tol of a point");
    wit->add_option("--point", point_text, "Comma-separated coordinates");
    wit->add_option("--target", target, "plane, space or c00");
    wit->add_option("--count", count, "Number of witnesses");
    wit->add_option("--beyond", beyond, "Every witness exceeds this bound");
    wit->add_option("--tol", tol, "Distance tolerance");
    wit->callback([&] {
        action = [&] {
            const auto f = TiledLineMap::composite(parse_target(target), g.depth);
            WitnessOptions wo;
            wo.count = count;
            wo.beyond = exact(beyond);
            wo.tol = tol;
            const auto ws = f.fiber_witnesses(exact(parse_list(point_text)), wo);
            json list = json::array(), residuals = json::array();
            for (const auto& w : ws) {
                residuals.push_back(w.residual);
                list.push_back({{"t", to_string(w.t)},
                                {"residual", w.residual},
                                {"tile", {{"j", w.tile.j}, {"k", w.tile.k}, {"n", w.tile.n}}}});
            }
            return report(g, "surjection witnesses",
                          {{"point", parse_list(point_text)},
                           {"tol", tol},
                           {"beyond", beyond},
                           {"witnesses", list},
                           {"residuals", residuals}});
        };
    });

    // ------------------------------------------------------------ order
    auto* order = app.add_subcommand("order", "Orders of entire functions from MacLaurin coefficients");
    order->require_subcommand(1);
    double alpha = 1.5, window = 0.5;
    std::string series_name, poly, orders_text, method = "coeff", radii_text = "2,200,12";
    unsigned n_terms = 0;
    auto series_of = [&]() -> TruncatedSeries {
        const unsigned n = n_terms ? n_terms : g.trunc;
        if (series_name == "exp") return exponential_series(n);
        if (!series_name.empty()) {
            const json doc = read_json(series_name);
            const json& j = doc.contains("result") ? doc["result"] : doc;
            if (!j.contains("coeffs") || !j["coeffs"].is_array())
                throw ConfigError(series_name + ": expected {\"coeffs\": [[re, im], ...]}");
            std::vector<cplx> c;
            for (const auto& pair : j["coeffs"]) {
                if (!pair.is_array() || pair.size() != 2) throw ConfigError(series_name + ": coefficient is not [re, im]");
                c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
            }
            return TruncatedSeries::from_doubles(c);
        }
        if (!poly.empty()) {
            const auto ords = parse_list(orders_text);
            std::vector<TruncatedSeries> gens;
            for (double s : ords) gens.push_back(prescribed_order_series(s, n));
            return compose_poly(PolySpec::parse(poly, static_cast<unsigned>(ords.size())), gens);
        }
        return prescribed_order_series(alpha, n);
    };
    auto add_series_options = [&](CLI::App* c) {
        c->add_option("--alpha", alpha, "Order of the prescribed series f_alpha");
        c->add_option("--n", n_terms, "Truncation order (defaults to --trunc)");
        c->add_option("--series", series_name, "Series file {\"coeffs\": [[re, im], ...]} or the name exp");
        c->add_option("--poly", poly, "Polynomial in z1..zM composed with f_{s_k}");
        c->add_option("--orders", orders_text, "Comma-separated generator orders s_k");
    };
    auto* coeffs = order->add_subcommand("coeffs", "MacLaurin coefficients, in the series file format");
    add_series_options(coeffs);
    coeffs->callback([&] {
        action = [&] {
            const auto s = series_of();
            json cs = json::array(), logs = json::array();
            for (unsigned n = 0; n <= s.order(); ++n) {
                const auto& c = s[n];
                cs.push_back({static_cast<double>(c.real()), static_cast<double>(c.imag())});
                const double l = s.log_abs_coeff(n);
                logs.push_back(std::isinf(l) ? json(nullptr) : json(l));
            }
            return report(g, "order coeffs", {{"truncation", s.order()}, {"coeffs", cs}, {"log_abs_coeffs", logs}});
        };
    });
    auto* estimate = order->add_subcommand("estimate", "Order estimate");
    add_series_options(estimate);
    estimate->add_option("--method", method, "coeff or growth");
    estimate->add_option("--window", window, "Tail window fraction (coeff)");
    estimate->add_option("--radii", radii_text, "lo,hi,count of geometric radii (growth)");
    estimate->callback([&] {
        action = [&] {
            const auto s = series_of();
            OrderEstimate e;
            if (method == "coeff") {
                e = order_from_coeffs(s, window);
            } else if (method == "growth") {
                const auto r = parse_list(radii_text);
                if (r.size() != 3) throw ConfigError("--radii expects lo,hi,count");
                e = order_from_growth(s, geometric_radii(r[0], r[1], static_cast<unsigned>(r[2])));
            } else {
                throw ConfigError("unknown method '" + method + "'");
            }
            return report(g, "order estimate", estimate_json(e));
        };
    });

    // ------------------------------------------------------------ algebra
    auto* algebra = app.add_subcommand("algebra", "Elements P(phi_{s_1}, ..., phi_{s_M}) o F");
    algebra->require_subcommand(1);
    double radius = 1.5, eps = 0.05;
    auto* aorder = algebra->add_subcommand("order", "Estimated and expected order of an element");
    aorder->add_option("--poly", poly, "Polynomial without constant term")->required();
    aorder->add_option("--orders", orders_text, "Generator orders")->required();
    aorder->callback([&] {
        action = [&] {
            const auto e = make_element(g, poly, orders_text);
            const double expected = expected_element_order(e);
            json j = estimate_json(element_order(e));
            j["expected"] = expected;
            j["polynomial"] = e.polynomial().str();
            return report(g, "algebra order", j);
        };
    });
    auto* ascan = algebra->add_subcommand("scan", "Cover an eps-net of the disk |w| <= radius");
    ascan->add_option("--poly", poly, "Polynomial without constant term")->required();
    ascan->add_option("--orders", orders_text, "Generator orders")->required();
    ascan->add_option("--radius", radius, "Disk radius");
    ascan->add_option("--eps", eps, "Net step and tolerance");
    ascan->callback([&] {
        action = [&] {
            const auto e = make_element(g, poly, orders_text);
            ScanOptions so;
            so.timing = g.timing;
            const auto r = surjectivity_scan(e, radius, eps, so);
            json j = to_json(r, g.timing);
            j["polynomial"] = e.polynomial().str();
            j["radius"] = radius;
            return report(g, "algebra scan", j, r.complete());
        };
    });

    // ------------------------------------------------------------ family
    auto* family = app.add_subcommand("family", "Linearly independent families F_alpha");
    family->require_subcommand(1);
    std::string seeds_text = "sqrt2,sqrt3,phi", family_file;
    std::size_t prefix = 64;
    unsigned per_member = 8;
    auto* build = family->add_subcommand("build", "Index sets A_alpha for named irrational seeds");
    build->add_option("--seeds", seeds_text, "Comma-separated seed names");
    build->add_option("--prefix", prefix, "Number of indices per seed");
    build->callback([&] {
        action = [&] {
            std::vector<AdSet> sets;
            json members = json::array(), pairs = json::array();
            for (const auto& name : split(seeds_text)) {
                sets.push_back(ad_set(name, prefix));
                members.push_back({{"seed", name},
                                   {"value", sets.back().seed.value.str(40)},
                                   {"indices", sets.back().indices},
                                   {"decided_through", sets.back().decided_through}});
            }
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (std::size_t j = i + 1; j < sets.size(); ++j) {
                    const auto x = intersect(sets[i], sets[j]);
                    pairs.push_back({{"alpha", x.alpha},
                                     {"beta", x.beta},
                                     {"prefix", x.prefix},
                                     {"common", x.common},
                                     {"bound", x.bound},
                                     {"stabilized", x.stabilized},
                                     {"stable_from", x.stable_from},
                                     {"label", AdIntersection::label}});
                }
            return report(g, "family build", {{"members", members}, {"intersections", pairs}});
        };
    });
    auto* rank = family->add_subcommand("rank", "Numerical rank of sampled member values");
    rank->add_option("--family", family_file, "Report written by family build")->required();
    rank->add_option("--samples-per-member", per_member, "Samples on each member's exclusive channel");
    rank->callback([&] {
        action = [&] {
            const json doc = read_json(family_file);
            const json& list = doc.contains("result") ? doc["result"]["members"] : doc["members"];
            std::vector<FamilyMember> members;
            for (const auto& m : list)
                members.emplace_back(m["seed"].get<std::string>(),
                                     ChannelSet::listed(m["indices"].get<std::vector<std::uint64_t>>(),
                                                        m["decided_through"].get<std::uint64_t>()),
                                     TargetSpace::euclidean(2), g.depth);
            const auto r = independence_test(members, default_sample_plan(members, per_member));
            return report(g, "family rank", to_json(r), r.pass);
        };
    });

    // ------------------------------------------------------------ seq
    auto* seq = app.add_subcommand("seq", "Sequence-space maps and metrics");
    seq->require_subcommand(1);
    double r_value = 1.0, t_value = 1.0;
    bool inverse = false;
    std::string metric_kind = "product", x_file, y_file;
    std::size_t terms = 0;
    auto* phi = seq->add_subcommand("phi", "phi_r(t) = e^{rt} - e^{-rt}");
    phi->add_option("--r", r_value, "Rate r > 0");
    phi->add_option("--t", t_value, "Argument");
    phi->add_flag("--inverse", inverse, "Evaluate the inverse at t instead");
    phi->callback([&] {
        action = [&] {
            const double v = inverse ? phi_r_inverse(r_value, t_value) : phi_r(r_value, t_value);
            return report(g, "seq phi", {{"r", r_value}, {"t", t_value}, {"inverse", inverse}, {"value", v}});
        };
    });
    auto* metric = seq->add_subcommand("metric", "Product-topology or uniform distance");
    metric->add_option("--kind", metric_kind, "product or uniform");
    metric->add_option("--x", x_file, "JSON file {\"entries\": [...]}")->required();
    metric->add_option("--y", y_file, "JSON file {\"entries\": [...]}")->required();
    metric->add_option("--terms", terms, "Truncation for the product metric (default: max support)");
    metric->callback([&] {
        action = [&] {
            if (metric_kind == "product") {
                const FiniteSeq x = read_seq(x_file), y = read_seq(y_file);
                const std::size_t n = terms ? terms : std::max<std::size_t>({x.support(), y.support(), 1});
                const auto m = product_metric(x, y, n);
                return report(g, "seq metric",
                              {{"kind", "product"}, {"terms", n}, {"value", m.value}, {"uncertainty", m.uncertainty}});
            }
            if (metric_kind == "uniform")
                return report(g, "seq metric",
                              {{"kind", "uniform"}, {"value", uniform_metric(read_indexed(x_file), read_indexed(y_file))}});
            throw ConfigError("unknown metric '" + metric_kind + "'");
        };
    });

    // ------------------------------------------------------------ verify
    auto* verify = app.add_subcommand("verify", "Coverage, unboundedness and property suites");
    verify->require_subcommand(1);
    std::string lo_text = "-2,-2", hi_text = "2,2", bounds_text = "10,100,1000", suite_name;
    double net_eps = 0.02;
    std::size_t points = 20;
    auto* cov = verify->add_subcommand("coverage", "Witness every point of an eps-net of a box");
    cov->add_option("--lo", lo_text, "Lower box corner");
    cov->add_option("--hi", hi_text, "Upper box corner");
    cov->add_option("--eps", net_eps, "Net step and tolerance");
    cov->add_option("--target", target, "plane or space");
    cov->callback([&] {
        action = [&] {
            const auto f = TiledLineMap::composite(parse_target(target), g.depth);
            CoverageOptions co;
            co.timing = g.timing;
            const auto r = coverage_scan(f, parse_list(lo_text), parse_list(hi_text), net_eps, co);
            json j = to_json(r, g.timing);
            j["lo"] = parse_list(lo_text);
            j["hi"] = parse_list(hi_text);
            return report(g, "verify coverage", j, r.complete());
        };
    });
    auto* unb = verify->add_subcommand("unbounded", "Witnesses beyond each bound for seeded net points");
    unb->add_option("--lo", lo_text, "Lower box corner");
    unb->add_option("--hi", hi_text, "Upper box corner");
    unb->add_option("--eps", net_eps, "Step of the net the points are drawn from");
    unb->add_option("--points", points, "Number of net points");
    unb->add_option("--bounds", bounds_text, "Comma-separated bounds B");
    unb->add_option("--tol", tol, "Distance tolerance");
    unb->callback([&] {
        action = [&] {
            const auto f = TiledLineMap::composite(TargetSpace::euclidean(2), g.depth);
            const auto net = grid_net(parse_list(lo_text), parse_list(hi_text), net_eps);
            SeededRng rng(g.seed);
            std::vector<std::vector<double>> chosen;
            for (std::size_t i = 0; i < points; ++i) chosen.push_back(net[rng.below(net.size())]);
            auto r = unboundedness_scan(f, chosen, parse_list(bounds_text), tol);
            r.seed = g.seed;
            json j = to_json(r);
            j["points"] = chosen;
            return report(g, "verify unbounded", j, r.pass());
        };
    });
    auto* suite = verify->add_subcommand("suite", "Run a named property suite");
    suite->add_option("--name", suite_name, "order-laws, lemma, family-rank, adset or seq-bounds")->required();
    suite->callback([&] {
        action = [&] {
            SuiteOptions o;
            o.seed = g.seed;
            o.truncation = g.trunc;
            o.depth = g.depth;
            const auto r = run_suite(suite_name, o);
            return report(g, "verify suite", to_json(r), r.pass());
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action();
    } catch (const ConfigError& e) {
        std::cerr << "peano-lab: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "peano-lab: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "peano-lab: " << e.what() << "\n";
    }
    return 2;
}
