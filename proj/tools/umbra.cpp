#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "umbra/catalog.hpp"
#include "umbra/errors.hpp"
#include "umbra/expr.hpp"
#include "umbra/flow.hpp"
#include "umbra/fps.hpp"
#include "umbra/io.hpp"
#include "umbra/sigma.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kInputError = 2;

struct Config {
    std::size_t order = 16;
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    bool decimal = false;
};

// Raised when a cross-check inside a command fails; carries a JSON counterexample.
struct IdentityFailure {
    json detail;
};

std::string fmt(const Config& cfg, const Rat& r) { return cfg.decimal ? r.to_decimal() : r.to_string(); }

// Every rational string in a JSON value, rendered as a decimal.
json decimalize(const json& j) {
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>()).to_decimal();
        } catch (const std::exception&) {
            return j;
        }
    }
    if (j.is_array() || j.is_object()) {
        json out = j;
        for (auto it = out.begin(); it != out.end(); ++it) *it = decimalize(*it);
        return out;
    }
    return j;
}

void emit_json(const Config& cfg, const json& j) {
    if (cfg.decimal)
        std::cout << json{{"lossy", true}, {"exact", j}, {"decimal", decimalize(j)}}.dump() << "\n";
    else
        std::cout << j.dump() << "\n";
}

void lossy_banner(const Config& cfg) {
    if (cfg.decimal) std::cout << "# lossy decimal approximation\n";
}

std::string term(const std::string& c, std::size_t k, char var) {
    if (k == 0) return c;
    std::string v = k == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(k);
    if (c == "1") return v;
    if (c == "-1") return "-" + v;
    return c + "*" + v;
}

std::string pretty_sum(const Config& cfg, std::span<const Rat> c, char var) {
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        std::string t = term(fmt(cfg, c[k]), k, var);
        if (s.empty())
            s = t;
        else if (t[0] == '-')
            s += " - " + t.substr(1);
        else
            s += " + " + t;
    }
    return s.empty() ? "0" : s;
}

void output(const Config& cfg, const Series& s) {
    if (cfg.format == "json") return emit_json(cfg, io::to_json(s));
    lossy_banner(cfg);
    if (cfg.format == "tsv") {
        for (std::size_t k = 0; k <= s.trunc(); ++k) std::cout << k << "\t" << fmt(cfg, s[k]) << "\n";
        return;
    }
    std::cout << pretty_sum(cfg, s.coeffs(), 'x') << " + O(x^" << s.trunc() + 1 << ")\n";
}

void output(const Config& cfg, const Poly& p) {
    if (cfg.format == "json") return emit_json(cfg, io::to_json(p));
    lossy_banner(cfg);
    if (cfg.format == "tsv") {
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) std::cout << k << "\t" << fmt(cfg, p.coeffs()[k]) << "\n";
        return;
    }
    std::cout << pretty_sum(cfg, p.coeffs(), 'x') << "\n";
}

void output(const Config& cfg, const Rat& r) {
    if (cfg.format == "json") return emit_json(cfg, json(r.to_string()));
    lossy_banner(cfg);
    std::cout << fmt(cfg, r) << "\n";
}

template <class Rows>
void output_rows(const Config& cfg, std::size_t count, const Rows& row_of) {
    lossy_banner(cfg);
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (std::size_t n = 0; n < count; ++n) {
        cells.emplace_back();
        for (const Rat& r : row_of(n)) {
            cells.back().push_back(fmt(cfg, r));
            width = std::max(width, cells.back().back().size());
        }
    }
    for (const auto& row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (cfg.format == "tsv") {
                std::cout << (k ? "\t" : "") << row[k];
            } else {
                std::cout << (k ? " " : "") << std::string(width - row[k].size(), ' ') << row[k];
            }
        }
        std::cout << "\n";
    }
}

void output(const Config& cfg, const Triangle& t) {
    if (cfg.format == "json") return emit_json(cfg, io::to_json(t));
    output_rows(cfg, t.max_row() + 1, [&](std::size_t n) {
        auto r = t.row(n);
        return std::vector<Rat>(r.begin(), r.end());
    });
}

void output(const Config& cfg, const Matrix& m) {
    if (cfg.format == "json") return emit_json(cfg, io::to_json(m));
    output_rows(cfg, m.dim(), [&](std::size_t i) {
        std::vector<Rat> r;
        for (std::size_t j = 0; j < m.dim(); ++j) r.push_back(m(i, j));
        return r;
    });
}

int output(const Config& cfg, const Report& r) {
    if (cfg.format == "json") {
        emit_json(cfg, io::to_json(r));
    } else {
        for (const auto& e : r.results) {
            std::string status = e.passed ? "pass" : "fail";
            if (cfg.format == "tsv")
                std::cout << e.family << "\t" << e.params << "\t" << e.identity << "\t" << status << "\t"
                          << e.counterexample.value_or("") << "\n";
            else
                std::cout << (e.passed ? "PASS " : "FAIL ") << e.family << (e.params.empty() ? "" : "(" + e.params + ")")
                          << " " << e.identity << (e.counterexample ? ": " + *e.counterexample : "") << "\n";
        }
    }
    return r.all_passed() ? kOk : kIdentityFailure;
}

Rat parse_rat(const std::string& s, const char* what) {
    try {
        return Rat::parse(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("--") + what + ": '" + s + "' is not a rational number");
    }
}

Params parse_params(const std::vector<std::string>& items) {
    Params p;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string kv;
        while (std::getline(ss, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("--params expects key=value, got '" + kv + "'");
            p[kv.substr(0, eq)] = parse_rat(kv.substr(eq + 1), "params");
        }
    }
    return p;
}

DeltaOp delta_from(const std::string& src, std::size_t trunc) { return validate_delta(ShiftOp(eval(src, trunc))); }

std::size_t order_from_env() {
    const char* env = std::getenv("UMBRA_ORDER");
    if (!env) return 16;
    try {
        std::size_t pos = 0;
        long v = std::stol(env, &pos);
        if (pos != std::string(env).size() || v < 0) throw std::invalid_argument(env);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("UMBRA_ORDER='") + env + "' is not a natural number");
    }
}

json failure_json(const std::string& identity, const std::string& detail) {
    return json::array({{{"identity", identity}, {"family", ""}, {"params", ""}, {"status", "fail"}, {"counterexample", detail}}});
}

int run(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Exact umbral calculus on truncated power series and coefficient triangles."};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<std::size_t> order_opt;
    app.add_option("--order", order_opt, "Truncation order (default 16 or $UMBRA_ORDER, max 64)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized checks");
    app.add_flag("--decimal", cfg.decimal, "Add lossy decimal renderings");

    std::function<int()> action;
    std::string expr, delta, appell, series, poly, family_name, s_str, from_str = "0", at_str, route = "transfer";
    std::vector<std::string> params;
    std::size_t k = 1, n = 0;
    bool all = false;

    auto* c_series = app.add_subcommand("series", "Evaluate an expression as a truncated series");
    c_series->add_option("expr", expr)->required();
    c_series->callback([&] { action = [&] { output(cfg, eval(expr, cfg.order)); return kOk; }; });

    auto* c_inverse = app.add_subcommand("inverse", "Compositional inverse of a series of order 1");
    c_inverse->add_option("expr", expr)->required();
    c_inverse->callback([&] { action = [&] { output(cfg, comp_inv(eval(expr, cfg.order))); return kOk; }; });

    auto* c_basic = app.add_subcommand("basic", "Basic set of a delta operator");
    c_basic->add_option("--delta", delta)->required();
    c_basic->add_option("--route", route)->check(CLI::IsMember({"transfer", "steffensen", "recurrence", "genfunc", "km", "all"}));
    c_basic->callback([&] {
        action = [&] {
            DeltaOp Q = delta_from(delta, cfg.order + 1);
            if (route != "all") {
                for (BasicRoute r : kAllRoutes)
                    if (route == route_name(r)) output(cfg, basic(Q, cfg.order, r).triangle());
                return kOk;
            }
            Triangle ref = basic(Q, cfg.order, BasicRoute::transfer).triangle();
            for (BasicRoute r : kAllRoutes) {
                Triangle t = basic(Q, cfg.order, r).triangle();
                for (std::size_t i = 0; i <= cfg.order; ++i)
                    for (std::size_t j = 0; j <= i; ++j)
                        if (t(i, j) != ref(i, j))
                            throw IdentityFailure{failure_json(
                                "five_routes", std::string(route_name(r)) + " differs from transfer at n=" + std::to_string(i) +
                                                   ",k=" + std::to_string(j))};
            }
            output(cfg, ref);
            return kOk;
        };
    });

    auto* c_triangle = app.add_subcommand("triangle", "Coefficient triangle of a named family");
    c_triangle->add_option("--family", family_name)->required();
    c_triangle->add_option("--params", params, "key=value, repeated or comma separated");
    c_triangle->callback([&] {
        action = [&] { output(cfg, family_triangle(family_name, parse_params(params), cfg.order)); return kOk; };
    });

    auto* c_sheffer = app.add_subcommand("sheffer", "Sheffer set for an Appell operator and a delta operator");
    c_sheffer->add_option("--appell", appell)->required();
    c_sheffer->add_option("--delta", delta)->required();
    c_sheffer->callback([&] {
        action = [&] {
            UmbralOp phi = basic(delta_from(delta, cfg.order + 1), cfg.order, BasicRoute::transfer);
            output(cfg, sheffer(ShiftOp(eval(appell, cfg.order)), phi).tri);
            return kOk;
        };
    });

    auto* c_iterate = app.add_subcommand("iterate", "Fractional iterate f^s(x)^k / k! of a unitary series");
    c_iterate->add_option("--series", series)->required();
    c_iterate->add_option("--s", s_str)->required();
    c_iterate->add_option("--k", k);
    c_iterate->callback([&] {
        action = [&] { output(cfg, frac_iterate(eval(series, cfg.order), parse_rat(s_str, "s"), k, cfg.order)); return kOk; };
    });

    auto* c_itlog = app.add_subcommand("itlog", "Iterative logarithm of a unitary series");
    c_itlog->add_option("--series", series)->required();
    c_itlog->callback([&] { action = [&] { output(cfg, itlog(eval(series, cfg.order))); return kOk; }; });

    auto* c_phipow = app.add_subcommand("phipow", "Triangle of the s-th power of a unitary umbral operator");
    c_phipow->add_option("--delta", delta)->required();
    c_phipow->add_option("--s", s_str)->required();
    c_phipow->callback([&] {
        action = [&] { output(cfg, phi_pow(delta_from(delta, cfg.order), parse_rat(s_str, "s"), cfg.order)); return kOk; };
    });

    auto* c_sum = app.add_subcommand("sum", "Indefinite sum of a polynomial anchored at --from");
    c_sum->add_option("--poly", poly)->required();
    c_sum->add_option("--from", from_str);
    c_sum->add_option("--at", at_str);
    c_sum->callback([&] {
        action = [&] {
            Poly p = eval_poly(poly, cfg.order);
            std::size_t d = p.degree() < 0 ? 0 : static_cast<std::size_t>(p.degree());
            SigmaOp S(named::forward_difference(d + 2), parse_rat(from_str, "from"), d);
            Poly sum = sigma_apply(S, p);
            if (at_str.empty())
                output(cfg, sum);
            else
                output(cfg, sum(parse_rat(at_str, "at")));
            return kOk;
        };
    });

    auto* c_faulhaber = app.add_subcommand("faulhaber", "Polynomial sum_{k<x} k^n");
    c_faulhaber->add_option("--n", n)->required();
    c_faulhaber->callback([&] {
        action = [&] {
            if (n > cfg.order) throw TruncationError("--n exceeds --order");
            output(cfg, faulhaber(n));
            return kOk;
        };
    });

    auto* c_jab = app.add_subcommand("jabotinsky", "Jabotinsky matrix of the composition operator of a series");
    c_jab->add_option("--series", series)->required();
    c_jab->callback([&] {
        action = [&] {
            Series f = eval(series, cfg.order);
            if (f.order() != 1) throw OrderError("the series must have order 1");
            output(cfg, jabotinsky(power_triangle(f, cfg.order)));
            return kOk;
        };
    });

    auto* c_check = app.add_subcommand("check", "Run family identities");
    auto* fam_opt = c_check->add_option("--family", family_name);
    c_check->add_option("--params", params)->needs(fam_opt);
    c_check->add_flag("--all", all)->excludes(fam_opt);
    c_check->callback([&] {
        if (!all && family_name.empty()) throw CLI::ValidationError("check", "give --family or --all");
        action = [&] {
            Report r = all ? check_all(cfg.order, cfg.seed) : identity_check(family_name, parse_params(params), cfg.order, cfg.seed);
            return output(cfg, r);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    cfg.order = order_opt ? *order_opt : order_from_env();
    if (cfg.order > kMaxOrder) throw std::invalid_argument("--order " + std::to_string(cfg.order) + " exceeds 64");
    return action();
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IdentityFailure& f) {
        std::cout << f.detail.dump() << "\n";
        return kIdentityFailure;
    } catch (const ConsistencyError& e) {
        std::cout << failure_json("consistency", e.what()).dump() << "\n";
        return kIdentityFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
