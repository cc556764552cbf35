// Command-line surface for the Ewens-Pitman partition library: exact-rational
// pmf/statistic queries, grid tables, and the invariant verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epp/branching.hpp"
#include "epp/ewens_pitman.hpp"
#include "epp/exp_series.hpp"
#include "epp/riordan.hpp"
#include "epp/verify.hpp"

using json = nlohmann::ordered_json;
using namespace epp;

namespace {

constexpr int kDecimalPlaces = 12;

struct GlobalOpts {
    std::string alpha = "0";
    std::string theta = "1";
    std::string format = "plain";
    int oracle_bound = kDefaultOracleBound;
    int order = 0; // 0 = choose automatically per query
};

EPParams params_of(const GlobalOpts& g) {
    return EPParams(Rational::parse(g.alpha), Rational::parse(g.theta));
}

json value_cell(const Rational& v) {
    return json{{"value", v.str()}, {"decimal", v.decimal(kDecimalPlaces)}};
}

void emit_scalar(const GlobalOpts& g, json query, const Rational& value,
                 const std::string& route, bool verified) {
    if (g.format == "json") {
        json out;
        out["query"] = std::move(query);
        out["value"] = value.str();
        out["decimal"] = value.decimal(kDecimalPlaces);
        out["route"] = route;
        out["verified"] = verified;
        std::cout << out.dump() << "\n";
    } else if (g.format == "csv") {
        std::cout << "value,decimal\n" << value.str() << "," << value.decimal(kDecimalPlaces) << "\n";
    } else {
        std::cout << value.str() << "  " << value.decimal(kDecimalPlaces) << "\n";
    }
}

struct TableRow {
    json fields;                  // row-identifying fields, insertion-ordered
    std::optional<Rational> value;
    std::string error;
};

void emit_table(const GlobalOpts& g, json query, const std::vector<std::string>& columns,
                const std::vector<TableRow>& rows, const std::string& route, bool verified) {
    if (g.format == "json") {
        json out;
        out["query"] = std::move(query);
        out["route"] = route;
        out["verified"] = verified;
        out["rows"] = json::array();
        for (const auto& row : rows) {
            json r = row.fields;
            if (row.value) {
                r["value"] = row.value->str();
                r["decimal"] = row.value->decimal(kDecimalPlaces);
            } else {
                r["error"] = row.error;
            }
            out["rows"].push_back(std::move(r));
        }
        std::cout << out.dump() << "\n";
        return;
    }
    const char sep = (g.format == "csv") ? ',' : '\t';
    for (size_t i = 0; i < columns.size(); ++i) std::cout << (i ? std::string(1, sep) : "") << columns[i];
    std::cout << sep << "value" << sep << "decimal\n";
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& [key, val] : row.fields.items()) {
            (void)key;
            if (!first) std::cout << sep;
            first = false;
            if (val.is_string()) std::cout << val.get<std::string>();
            else std::cout << val.dump();
        }
        if (row.value)
            std::cout << sep << row.value->str() << sep << row.value->decimal(kDecimalPlaces) << "\n";
        else
            std::cout << sep << "error:" << row.error << "\n";
    }
}

StatRoute stat_route(const std::string& name) {
    if (name == "ftra" || name == "closed") return StatRoute::ClosedForm;
    if (name == "bruteforce") return StatRoute::BruteForce;
    throw ParseError("unknown route '" + name + "' (expected ftra, closed or bruteforce)");
}

PmfRoute pmf_route(const std::string& name) {
    if (name == "closed") return PmfRoute::Closed;
    if (name == "newton") return PmfRoute::Newton;
    if (name == "altrep") return PmfRoute::AltRep;
    throw ParseError("unknown route '" + name + "' (expected closed, newton or altrep)");
}

ExpSeries named_d_series(const std::string& name, int order) {
    if (name == "one") return ExpSeries::one(order);
    if (name == "exp") return ExpSeries::exponential(Rational(1), order);
    if (name == "geom") return ExpSeries::binomial_series(Rational(-1), Rational(-1), order);
    throw ParseError("unknown d series '" + name + "' (expected one, exp or geom)");
}

ExpSeries named_h_series(const std::string& name, const Rational& alpha, int order) {
    if (name == "id") return ExpSeries::identity(order);
    if (name == "kingman") {
        if (alpha.is_zero())
            return ExpSeries::log1p(Rational(-1), order) * Rational(-1);
        return (ExpSeries::one(order) - ExpSeries::binomial_series(alpha, Rational(-1), order)) *
               (Rational(1) / alpha);
    }
    if (name == "laguerre")
        return ExpSeries::identity(order) *
               ExpSeries::binomial_series(Rational(-1), Rational(-1), order) * Rational(-1);
    throw ParseError("unknown h series '" + name + "' (expected id, kingman or laguerre)");
}

ExpSeries named_c_series(const std::string& name, const EPParams& p, int order) {
    if (name == "exp") return ExpSeries::exponential(p.theta, order);
    if (name == "rising") {
        if (p.alpha.is_zero()) return ExpSeries::exponential(p.theta, order);
        return ExpSeries::binomial_series(-p.theta / p.alpha, -p.alpha, order);
    }
    throw ParseError("unknown c series '" + name + "' (expected exp or rising)");
}

// --- subcommand handlers -----------------------------------------------------

int run_pmf(const GlobalOpts& g, const std::string& lambda_text, const std::string& route_name,
            bool verify) {
    const EPParams p = params_of(g);
    const IntegerPartition lam = IntegerPartition::parse(lambda_text);
    const Rational value = pmf(p, lam, pmf_route(route_name), verify);
    json query{{"op", "pmf"}, {"lambda", lam.str()}, {"alpha", p.alpha.str()}, {"theta", p.theta.str()}};
    emit_scalar(g, std::move(query), value, route_name, verify);
    return 0;
}

int run_verify(const GlobalOpts& g, int max_n, const std::string& fault,
               const std::vector<std::string>& only) {
    verify::Options opts;
    opts.max_n = max_n;
    if (fault == "altrep-sign") opts.fault = verify::Fault::AltrepSign;
    else if (!fault.empty()) throw ParseError("unknown fault '" + fault + "'");

    std::vector<verify::CheckResult> results;
    if (only.empty()) {
        results = verify::run_all(opts);
    } else {
        for (const auto& name : only) results.push_back(verify::run_check(name, opts));
    }
    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;

    if (g.format == "json") {
        json out;
        out["max_n"] = max_n;
        out["passed"] = all_passed;
        out["checks"] = json::array();
        for (const auto& r : results)
            out["checks"].push_back(json{{"name", r.name},
                                         {"passed", r.passed},
                                         {"millis", r.millis},
                                         {"detail", r.detail}});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.name << "  ("
                      << Rational(static_cast<long>(r.millis * 1000), 1000).decimal(3) << " ms)";
            if (!r.detail.empty()) std::cout << "  " << r.detail;
            std::cout << "\n";
        }
        std::cout << (all_passed ? "verification passed" : "VERIFICATION FAILED") << " ("
                  << results.size() << " checks, max-n " << max_n << ")\n";
    }
    return all_passed ? 0 : 1;
}

struct TableArgs {
    int n = 0;
    int m = 0;
    int max_k = 3;
    std::string mu;
    std::string orders;
    std::string a, b, c;
    std::string d_name = "one", h_name = "id", c_name = "rising";
    std::string route;
    bool verify = false;
    bool strict = false;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("invalid order list entry: '" + tok + "'");
        }
    }
    return out;
}

int run_table(const GlobalOpts& g, const std::string& kind, const TableArgs& a) {
    const EPParams p = params_of(g);
    std::vector<TableRow> rows;
    std::vector<std::string> columns;
    json query{{"op", "table"}, {"kind", kind}, {"alpha", p.alpha.str()}, {"theta", p.theta.str()}};
    std::string route = a.route;
    const auto add_row = [&](json fields, const std::function<Rational()>& compute) {
        TableRow row;
        row.fields = std::move(fields);
        try {
            row.value = compute();
        } catch (const Error& e) {
            if (a.strict) throw;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    };

    if (kind == "marginal-length") {
        if (route.empty()) route = "ftra";
        query["n"] = a.n;
        columns = {"l"};
        for (int l = 1; l <= a.n; ++l)
            add_row(json{{"l", l}}, [&, l] {
                return marginal_length(p, a.n, l, stat_route(route), a.verify, g.oracle_bound);
            });
    } else if (kind == "moment-length") {
        if (route.empty()) route = "closed";
        query["n"] = a.n;
        columns = {"k"};
        for (int k = 1; k <= std::min(a.max_k, a.n); ++k)
            add_row(json{{"k", k}}, [&, k] {
                return moment_length(p, a.n, k, stat_route(route), a.verify, g.oracle_bound);
            });
    } else if (kind == "moment-sizes") {
        if (route.empty()) route = "closed";
        const std::vector<int> orders = parse_int_list(a.orders);
        query["n"] = a.n;
        query["orders"] = a.orders;
        columns = {"orders"};
        add_row(json{{"orders", a.orders}}, [&] {
            return joint_moment_sizes(p, a.n, orders, stat_route(route), a.verify, g.oracle_bound);
        });
    } else if (kind == "cond-moment") {
        if (route.empty()) route = "closed";
        const ConditionalQuery q{IntegerPartition::parse(a.mu), a.m, parse_int_list(a.orders)};
        query["mu"] = q.mu.str();
        query["m"] = a.m;
        query["orders"] = a.orders;
        columns = {"mu", "m", "orders"};
        add_row(json{{"mu", q.mu.str()}, {"m", a.m}, {"orders", a.orders}}, [&] {
            return conditional_moment(p, q, stat_route(route), a.verify, g.oracle_bound);
        });
    } else if (kind == "stirling") {
        if (route.empty()) route = "riordan";
        const GStirlingParams sp{Rational::parse(a.a), Rational::parse(a.b), Rational::parse(a.c)};
        query["a"] = sp.a.str();
        query["b"] = sp.b.str();
        query["c"] = sp.c.str();
        query["n"] = a.n;
        columns = {"n", "l"};
        const StirlingRoute r = route == "bell" ? StirlingRoute::BellSum : StirlingRoute::Riordan;
        for (int n = 0; n <= a.n; ++n)
            for (int l = 0; l <= n; ++l)
                add_row(json{{"n", n}, {"l", l}}, [&, n, l] {
                    const Rational v = gstirling(sp, n, l, r);
                    if (a.verify) {
                        const Rational other = gstirling(sp, n, l,
                                                         r == StirlingRoute::Riordan
                                                             ? StirlingRoute::BellSum
                                                             : StirlingRoute::Riordan);
                        if (other != v)
                            throw IdentityViolation("Stirling routes disagree at (" +
                                                    std::to_string(n) + "," + std::to_string(l) + ")");
                    }
                    return v;
                });
    } else if (kind == "riordan-entry") {
        const int order = g.order > 0 ? g.order : a.n + 2;
        const ExpRiordan r(named_d_series(a.d_name, order), named_h_series(a.h_name, p.alpha, order));
        query["d"] = a.d_name;
        query["h"] = a.h_name;
        query["n"] = a.n;
        columns = {"k"};
        route = "riordan";
        for (int k = 0; k <= a.n; ++k)
            add_row(json{{"k", k}}, [&, k] { return r.entry(a.n, k); });
    } else if (kind == "ftra") {
        const int order = g.order > 0 ? g.order : a.n + 2;
        const ExpRiordan r(named_d_series(a.d_name, order), named_h_series(a.h_name, p.alpha, order));
        const ExpSeries c = named_c_series(a.c_name, p, order);
        query["d"] = a.d_name;
        query["h"] = a.h_name;
        query["c"] = a.c_name;
        query["n"] = a.n;
        columns = {"n"};
        route = "ftra";
        add_row(json{{"n", a.n}}, [&] {
            const Rational v = ftra(r, c, a.n);
            if (a.verify) {
                Rational direct(0);
                for (int k = 0; k <= a.n; ++k) direct += r.entry(a.n, k) * c.coeff(k);
                if (direct != v)
                    throw IdentityViolation("FTRA differs from the direct row sum");
            }
            return v;
        });
    } else {
        throw ParseError("unknown table kind '" + kind + "'");
    }

    emit_table(g, std::move(query), columns, rows, route, a.verify);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ewens-Pitman partition structure: probabilities, moments and "
                 "estimators through Riordan arrays, with enumeration oracles"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help and exit"); // keep --h free for series names

    GlobalOpts g;
    app.add_option("--alpha", g.alpha, "discount parameter as a rational 'p/q' (0 <= alpha < 1)");
    app.add_option("--theta", g.theta, "concentration parameter as a rational 'p/q' (theta > -alpha)");
    app.add_option("--format", g.format, "output format: plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--oracle-bound", g.oracle_bound, "largest n the enumeration oracle accepts");
    app.add_option("--order", g.order, "series truncation order override");

    // pmf
    auto* pmf_cmd = app.add_subcommand("pmf", "probability of one partition");
    std::string lambda_text, pmf_route_name = "closed";
    bool pmf_verify = false;
    pmf_cmd->add_option("--lambda", lambda_text, "partition as descending parts, e.g. 2,2,1")
        ->required();
    pmf_cmd->add_option("--route", pmf_route_name, "closed, newton or altrep");
    pmf_cmd->add_flag("--verify", pmf_verify, "compare all constructions before returning");

    // table
    auto* table_cmd = app.add_subcommand("table", "statistic tables over a grid");
    table_cmd->set_help_flag("--help", "print help and exit");
    std::string table_kind;
    TableArgs ta;
    table_cmd->add_option("kind", table_kind,
                          "one of: marginal-length, moment-length, moment-sizes, cond-moment, "
                          "stirling, riordan-entry, ftra")
        ->required();
    table_cmd->add_option("--n", ta.n, "sample size / triangle depth / row index");
    table_cmd->add_option("--m", ta.m, "additional sample size (cond-moment)");
    table_cmd->add_option("--max-k", ta.max_k, "largest moment order (moment-length)");
    table_cmd->add_option("--mu", ta.mu, "observed partition (cond-moment)");
    table_cmd->add_option("--orders", ta.orders, "comma-separated orders k_1,k_2,...");
    table_cmd->add_option("--a", ta.a, "Stirling parameter a");
    table_cmd->add_option("--b", ta.b, "Stirling parameter b");
    table_cmd->add_option("--c", ta.c, "Stirling parameter c");
    table_cmd->add_option("--d", ta.d_name, "named d series: one, exp, geom");
    table_cmd->add_option("--h", ta.h_name, "named h series: id, kingman, laguerre");
    table_cmd->add_option("--c-series", ta.c_name, "named c series for ftra: exp, rising");
    table_cmd->add_option("--route", ta.route, "evaluation route (kind-specific)");
    table_cmd->add_flag("--verify", ta.verify, "cross-check each row against the second route");
    table_cmd->add_flag("--strict", ta.strict, "abort on the first row error");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the exact invariant suite");
    int max_n = 10;
    std::string fault;
    std::vector<std::string> only_checks;
    verify_cmd->add_option("--max-n", max_n, "scale knob for the grids (default 10)");
    verify_cmd->add_option("--check", only_checks, "run only the named checks");
    verify_cmd->add_option("--inject-fault", fault, "testing only: altrep-sign")
        ->group(""); // hidden

    bool list_checks = false;
    verify_cmd->add_flag("--list-checks", list_checks, "print available check names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pmf_cmd->parsed()) return run_pmf(g, lambda_text, pmf_route_name, pmf_verify);
        if (table_cmd->parsed()) return run_table(g, table_kind, ta);
        if (verify_cmd->parsed()) {
            if (list_checks) {
                for (const auto& name : verify::check_names()) std::cout << name << "\n";
                return 0;
            }
            return run_verify(g, max_n, fault, only_checks);
        }
    } catch (const IdentityViolation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
