#include "umbra/catalog.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "umbra/bell.hpp"
#include "umbra/errors.hpp"
#include "umbra/flow.hpp"
#include "umbra/fps.hpp"
#include "umbra/sigma.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

namespace numbers {

Rat stirling1(std::size_t n, std::size_t k) {
    std::vector<Rat> row{Rat(1)};
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Rat> next(m + 2);
        for (std::size_t j = 0; j <= m + 1; ++j) {
            if (j >= 1) next[j] += row[j - 1];
            if (j <= m) next[j] -= Rat(static_cast<long>(m)) * row[j];
        }
        row = std::move(next);
    }
    return k <= n ? row[k] : Rat(0);
}

Rat stirling2(std::size_t n, std::size_t k) {
    std::vector<Rat> row{Rat(1)};
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Rat> next(m + 2);
        for (std::size_t j = 0; j <= m + 1; ++j) {
            if (j >= 1) next[j] += row[j - 1];
            if (j <= m) next[j] += Rat(static_cast<long>(j)) * row[j];
        }
        row = std::move(next);
    }
    return k <= n ? row[k] : Rat(0);
}

Rat lah(std::size_t n, std::size_t k) {
    if (n == 0 && k == 0) return Rat(1);
    if (k == 0 || k > n) return Rat(0);
    return binom(static_cast<long>(n - 1), static_cast<long>(k - 1)) * factorial(n) / factorial(k);
}

Rat catalan(std::size_t n) {
    return binom(static_cast<long>(2 * n), static_cast<long>(n)) / Rat(static_cast<long>(n + 1));
}

}  // namespace numbers

namespace {

// Bernoulli numbers from sum_{j<=m} binom(m+1, j) B_j = 0.
std::vector<Rat> bernoulli_numbers(std::size_t n) {
    std::vector<Rat> b(n + 1);
    b[0] = Rat(1);
    for (std::size_t m = 1; m <= n; ++m) {
        Rat acc;
        for (std::size_t j = 0; j < m; ++j) acc += binom(static_cast<long>(m + 1), static_cast<long>(j)) * b[j];
        b[m] = -acc / Rat(static_cast<long>(m + 1));
    }
    return b;
}

Rat ipow(const Rat& base, std::size_t e) { return pow(base, static_cast<long>(e)); }

const std::vector<std::string>& names() {
    static const std::vector<std::string> v{
        "abel",    "bernoulli", "bernoulli2",  "catalan",   "catalan_inverse", "degenerate_laguerre",
        "divided_difference", "falling", "idempotent", "laguerre", "monomial", "rising",
        "smooth_abel", "stretch", "touchard"};
    return v;
}

Rat param(const Params& p, const char* key) { return p.at(key); }

std::size_t positive_int_param(const Params& p, const char* key) {
    const Rat& v = p.at(key);
    if (!v.is_integer() || v.sign() <= 0)
        throw std::invalid_argument(std::string("parameter ") + key + " must be a positive integer");
    return static_cast<std::size_t>(v.to_long());
}

}  // namespace

std::vector<std::string> family_names() { return names(); }

Params default_params(std::string_view name) {
    if (name == "stretch") return {{"lambda", Rat(2)}};
    if (name == "divided_difference") return {{"h", Rat(1, 2)}};
    if (name == "abel" || name == "smooth_abel") return {{"a", Rat(1)}};
    if (name == "degenerate_laguerre") return {{"p", Rat(2)}, {"alpha", Rat(0)}};
    if (std::find(names().begin(), names().end(), name) == names().end())
        throw UnknownFamily("unknown family '" + std::string(name) + "'");
    return {};
}

std::string format_params(const Params& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ",";
        s += k + "=" + v.to_string();
    }
    return s;
}

FamilySpec family(std::string_view name, const Params& given, std::size_t order) {
    Params p = default_params(name);
    for (const auto& [k, v] : given) {
        if (!p.count(k))
            throw UnknownFamily("family '" + std::string(name) + "' has no parameter '" + k + "'");
        p[k] = v;
    }
    std::size_t T = order;
    std::string n(name);
    auto make = [&](DeltaOp Q, std::function<Rat(std::size_t, std::size_t)> cf,
                    std::optional<ShiftOp> A = std::nullopt) {
        return FamilySpec{n, p, std::move(Q), std::move(A), std::move(cf)};
    };
    auto diag = [](std::size_t a, std::size_t b) { return Rat(a == b ? 1 : 0); };

    if (name == "monomial") return make(named::derivative(T), diag);
    if (name == "stretch") {
        Rat l = param(p, "lambda");
        return make(named::stretch(l, T), [l](std::size_t a, std::size_t b) { return a == b ? ipow(l, a) : Rat(0); });
    }
    if (name == "falling") return make(named::forward_difference(T), numbers::stirling1);
    if (name == "rising")
        return make(named::backward_difference(T), [](std::size_t a, std::size_t b) {
            Rat s = numbers::stirling1(a, b);
            return s.sign() < 0 ? -s : s;
        });
    if (name == "divided_difference") {
        Rat h = param(p, "h");
        return make(named::divided_difference(h, T), [h](std::size_t a, std::size_t b) {
            if (h.is_zero()) return Rat(a == b ? 1 : 0);
            return ipow(h, a - b) * numbers::stirling1(a, b);
        });
    }
    if (name == "touchard") return make(named::log1p(T), numbers::stirling2);
    if (name == "abel") {
        Rat a = param(p, "a");
        return make(named::abel(a, T), [a](std::size_t nn, std::size_t k) {
            if (nn == 0) return Rat(k == 0 ? 1 : 0);
            if (k == 0) return Rat(0);
            return binom(static_cast<long>(nn - 1), static_cast<long>(k - 1)) *
                   ipow(-a * Rat(static_cast<long>(nn)), nn - k);
        });
    }
    if (name == "smooth_abel") {
        Rat a = param(p, "a");
        // (x - an)^n = (1 + aD)^{-1} A_n
        ShiftOp A(mul_inv(Series::one(T) + Series::monomial(a, 1, T)));
        return make(named::abel(a, T),
                    [a](std::size_t nn, std::size_t k) {
                        return binom(static_cast<long>(nn), static_cast<long>(k)) *
                               ipow(-a * Rat(static_cast<long>(nn)), nn - k);
                    },
                    A);
    }
    if (name == "laguerre")
        return make(named::laguerre(T), [](std::size_t a, std::size_t b) {
            Rat l = numbers::lah(a, b);
            return (a - b) % 2 ? -l : l;
        });
    if (name == "catalan")
        return make(named::catalan(T), [](std::size_t a, std::size_t b) {
            if (a == 0) return Rat(b == 0 ? 1 : 0);
            if (b == 0) return Rat(0);
            return binom(static_cast<long>(2 * a - b - 1), static_cast<long>(a - 1)) * factorial(a - 1) /
                   factorial(b - 1);
        });
    if (name == "catalan_inverse") {
        // (1 - sqrt(1 - 4t)) / 2
        Series s = Rat(-1, 2) * (pow_rat(Series::one(T) - Series::monomial(Rat(4), 1, T), Rat(1, 2)) - Rat(1));
        return make(validate_delta(ShiftOp(s)), [](std::size_t a, std::size_t b) {
            Rat c = binom(static_cast<long>(b), static_cast<long>(a - b)) * factorial(a) / factorial(b);
            return (a - b) % 2 ? -c : c;
        });
    }
    if (name == "idempotent") {
        Series te = Series::variable(T) * exp_series(Series::variable(T));
        return make(validate_delta(ShiftOp(comp_inv(te))), [](std::size_t a, std::size_t b) {
            return binom(static_cast<long>(a), static_cast<long>(b)) * ipow(Rat(static_cast<long>(b)), a - b);
        });
    }
    if (name == "degenerate_laguerre") {
        std::size_t pp = positive_int_param(p, "p");
        Rat alpha = param(p, "alpha");
        std::optional<ShiftOp> A;
        if (!alpha.is_zero())
            A = ShiftOp(pow_rat(Series::one(T) - Series::monomial(Rat(static_cast<long>(pp)), pp, T), alpha));
        return make(named::degenerate_laguerre(pp, T),
                    [pp, alpha](std::size_t a, std::size_t j) {
                        if ((a - j) % pp) return Rat(0);
                        std::size_t k = (a - j) / pp;
                        Rat top = Rat(static_cast<long>(a), static_cast<long>(pp)) + alpha - Rat(1);
                        return binom(top, k) * factorial(a) / factorial(j) * ipow(Rat(-static_cast<long>(pp)), k);
                    },
                    A);
    }
    if (name == "bernoulli") {
        std::vector<Rat> b = bernoulli_numbers(T);
        return make(named::derivative(T),
                    [b](std::size_t a, std::size_t k) {
                        return binom(static_cast<long>(a), static_cast<long>(k)) * b.at(a - k);
                    },
                    named::bernoulli(T));
    }
    if (name == "bernoulli2") {
        // integral of (t)_n over [x, x+1], term by term
        return make(named::forward_difference(T),
                    [](std::size_t a, std::size_t i) {
                        Rat c;
                        for (std::size_t j = i; j <= a; ++j)
                            c += numbers::stirling1(a, j) * binom(static_cast<long>(j + 1), static_cast<long>(i)) /
                                 Rat(static_cast<long>(j + 1));
                        return c;
                    },
                    ShiftOp(shift_down(named::forward_difference(T + 1).indicator(), 1)));
    }
    throw UnknownFamily("unknown family '" + n + "'");
}

Triangle family_triangle(std::string_view name, const Params& params, std::size_t N) {
    FamilySpec spec = family(name, params, N + 2);
    UmbralOp phi = basic(spec.delta, N, BasicRoute::transfer);
    if (spec.appell) return sheffer(*spec.appell, phi).tri;
    return phi.triangle();
}

bool Report::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

namespace {

using Outcome = std::optional<std::string>;  // counterexample on failure

std::string at(std::size_t n, std::size_t k, const Rat& got, const Rat& want) {
    return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": got " + got.to_string() + ", expected " +
           want.to_string();
}

Outcome compare(const Triangle& got, const Triangle& want) {
    for (std::size_t n = 0; n <= got.max_row(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            if (got(n, k) != want(n, k)) return at(n, k, got(n, k), want(n, k));
    return std::nullopt;
}

Outcome expect(bool ok, const std::string& what) { return ok ? Outcome() : Outcome(what); }

Triangle from_closed_form(const FamilySpec& spec, std::size_t N) {
    Triangle t(N);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k) t(n, k) = spec.closed_form(n, k);
    return t;
}

Triangle stretch_triangle(const Rat& l, std::size_t N) {
    Triangle t(N);
    for (std::size_t n = 0; n <= N; ++n) t(n, n) = ipow(l, n);
    return t;
}

// Umbral operator of a triangle applied to a polynomial.
Poly apply_tri(const Triangle& t, const Poly& p) {
    Poly out;
    for (long j = 0; j <= p.degree(); ++j) out += p.coeff(j) * t.row_poly(static_cast<std::size_t>(j));
    return out;
}

ShiftOp op_from(std::vector<Rat> head, std::size_t T) {
    Series s(T);
    for (std::size_t i = 0; i < head.size() && i <= T; ++i) s[i] = head[i];
    return ShiftOp(s);
}

std::vector<Rat> random_sequence(std::mt19937_64& rng, std::size_t len) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rat> v;
    for (std::size_t i = 0; i < len; ++i) v.emplace_back(num(rng), den(rng));
    return v;
}

class Checker {
public:
    Checker(std::string family, std::string params, Report& report)
        : family_(std::move(family)), params_(std::move(params)), report_(report) {}

    template <class F>
    void run(const std::string& identity, F&& f) {
        IdentityResult r{identity, family_, params_, false, std::nullopt};
        try {
            Outcome o = f();
            r.passed = !o;
            r.counterexample = o;
        } catch (const std::exception& e) {
            r.counterexample = std::string("exception: ") + e.what();
        }
        report_.results.push_back(std::move(r));
    }

private:
    std::string family_, params_;
    Report& report_;
};

void basic_checks(Checker& c, const FamilySpec& spec, const UmbralOp& phi, std::size_t N, std::uint64_t seed) {
    const Triangle& tri = phi.triangle();
    c.run("five_routes", [&]() -> Outcome {
        for (BasicRoute r : kAllRoutes) {
            Outcome o = compare(basic(spec.delta, N, r).triangle(), tri);
            if (o) return std::string(route_name(r)) + " route: " + *o;
        }
        Outcome o = compare(coeff_via_ratio(spec.delta, N), tri);
        if (o) return "ratio route: " + *o;
        return std::nullopt;
    });
    c.run("binomial_type", [&] { return expect(is_binomial_type(tri), "binomial identity fails"); });
    c.run("differential_equation", [&] { return expect(differential_equation_check(phi), "(n - X Q/Q') p_n != 0"); });
    c.run("commutation_expansion", [&]() -> Outcome {
        for (std::size_t n = 1; n <= std::min<std::size_t>(4, N); ++n)
            if (!commutation_expansion_check(phi, n)) return "n=" + std::to_string(n);
        return std::nullopt;
    });
    c.run("niederhausen", [&] {
        UmbralOp nh = niederhausen(phi);
        return expect(is_binomial_type(nh.triangle()), "transform is not of binomial type");
    });
    c.run("inversion_duality", [&]() -> Outcome {
        std::mt19937_64 rng(seed);
        Triangle inv = tri_invert(tri);
        for (int trial = 0; trial < 5; ++trial) {
            auto a = random_sequence(rng, N + 1);
            for (std::size_t bound : {std::size_t{0}, N / 2}) {
                auto b = transform_seq(tri, a, TransformMode::row, bound);
                auto back = transform_seq(inv, b, TransformMode::row, bound);
                for (std::size_t i = bound; i <= N; ++i)
                    if (back[i] != a[i]) return "row mode, bound " + std::to_string(bound);
                std::size_t top = N - bound;
                auto bc = transform_seq(tri, a, TransformMode::column, top);
                auto backc = transform_seq(inv, bc, TransformMode::column, top);
                for (std::size_t i = 0; i <= top; ++i)
                    if (backc[i] != a[i]) return "column mode, bound " + std::to_string(top);
            }
        }
        return std::nullopt;
    });
}

Outcome special(const UmbralOp& phi, const ShiftOp& U, const ShiftOp& V, std::size_t N) {
    for (std::size_t n = 0; n <= std::min<std::size_t>(6, N); ++n)
        if (!special_class_check(phi, U, V, n)) return "n=" + std::to_string(n);
    return std::nullopt;
}

void family_checks(Checker& c, const FamilySpec& spec, const UmbralOp& phi, const Triangle& tri, std::size_t N) {
    const std::string& name = spec.name;
    std::size_t T = N + 2;
    if (name == "falling") {
        c.run("special_class", [&] { return special(phi, named::identity(T), named::shift(Rat(-1), T), N); });
        c.run("stirling_recurrences", [&]() -> Outcome {
            for (std::size_t n = 0; n < N; ++n)
                for (std::size_t k = 1; k <= n + 1; ++k) {
                    Rat want = (k <= n ? Rat(0) - Rat(static_cast<long>(n)) * tri(n, k) : Rat(0)) + tri(n, k - 1);
                    if (tri(n + 1, k) != want) return at(n + 1, k, tri(n + 1, k), want);
                }
            return std::nullopt;
        });
        c.run("chu_vandermonde", [&]() -> Outcome {
            // (x+y)_n = sum_k binom(n,k) (x)_k (y)_{n-k}
            auto grid = grid_points(6);
            for (std::size_t n = 0; n <= N; ++n)
                for (const Rat& x : grid)
                    for (const Rat& y : grid) {
                        Rat lhs(1), rhs;
                        for (std::size_t i = 0; i < n; ++i) lhs *= x + y - Rat(static_cast<long>(i));
                        for (std::size_t k = 0; k <= n; ++k)
                            rhs += binom(static_cast<long>(n), static_cast<long>(k)) * phi.poly(k)(x) * phi.poly(n - k)(y);
                        if (lhs != rhs) return "n=" + std::to_string(n) + ",x=" + x.to_string() + ",y=" + y.to_string();
                    }
            return std::nullopt;
        });
        c.run("gen_bernoulli", [&]() -> Outcome {
            DeltaOp Q = named::forward_difference(T);
            for (std::size_t n = 1; n <= N; ++n) {
                auto a = power_coeffs(Q, n);
                for (std::size_t k = 0; k < n; ++k) {
                    Rat s = numbers::stirling1(n, n - k);
                    if (s.sign() < 0) s = -s;
                    Rat want = (k % 2 ? -s : s) / binom(static_cast<long>(n - 1), static_cast<long>(k));
                    if (a[k] != want) return at(n, k, a[k], want);
                }
            }
            return std::nullopt;
        });
    } else if (name == "rising") {
        c.run("stirling_recurrences", [&]() -> Outcome {
            for (std::size_t n = 0; n < N; ++n)
                for (std::size_t k = 1; k <= n + 1; ++k) {
                    Rat want = (k <= n ? Rat(static_cast<long>(n)) * tri(n, k) : Rat(0)) + tri(n, k - 1);
                    if (tri(n + 1, k) != want) return at(n + 1, k, tri(n + 1, k), want);
                }
            return std::nullopt;
        });
        c.run("lah_connection", [&]() -> Outcome {
            UmbralOp falling = basic(named::forward_difference(T), N, BasicRoute::transfer);
            Triangle cc = connection_constants(phi, falling);
            Triangle lah(N);
            for (std::size_t n = 0; n <= N; ++n)
                for (std::size_t k = 0; k <= n; ++k) lah(n, k) = numbers::lah(n, k);
            return compare(cc, lah);
        });
    } else if (name == "divided_difference") {
        Rat h = spec.params.at("h");
        c.run("special_class", [&] { return special(phi, named::identity(T), named::shift(-h, T), N); });
        if (!h.is_zero())
            c.run("stretch_conjugation", [&] {
                UmbralOp falling = basic(named::forward_difference(T), N, BasicRoute::transfer);
                Triangle conj = tri_compose(stretch_triangle(Rat(1) / h, N),
                                            tri_compose(falling.triangle(), stretch_triangle(h, N)));
                return compare(tri, conj);
            });
    } else if (name == "touchard") {
        c.run("special_class", [&] { return special(phi, op_from({Rat(1), Rat(1)}, T), named::identity(T), N); });
        c.run("stirling_recurrences", [&]() -> Outcome {
            for (std::size_t n = 0; n < N; ++n)
                for (std::size_t k = 1; k <= n + 1; ++k) {
                    Rat want = (k <= n ? Rat(static_cast<long>(k)) * tri(n, k) : Rat(0)) + tri(n, k - 1);
                    if (tri(n + 1, k) != want) return at(n + 1, k, tri(n + 1, k), want);
                }
            return std::nullopt;
        });
        c.run("spivey", [&]() -> Outcome {
            // T x^n p = sum_k S(n,k) x^k T E^k p on p = x^m
            for (std::size_t n = 0; n <= N; ++n)
                for (std::size_t m = 0; n + m <= N; ++m) {
                    Poly xm = Poly::monomial(Rat(1), static_cast<long>(m));
                    Poly rhs;
                    for (std::size_t k = 0; k <= n; ++k)
                        rhs += tri(n, k) * (Poly::monomial(Rat(1), static_cast<long>(k)) *
                                            apply_tri(tri, xm.shifted(Rat(static_cast<long>(k)))));
                    if (rhs != phi.poly(n + m)) return "operator form, n=" + std::to_string(n) + ",m=" + std::to_string(m);
                }
            // Bell numbers: B_{n+m} = sum_k S(n,k) sum_j binom(m,j) k^{m-j} B_j
            std::vector<Rat> bell(N + 1);
            for (std::size_t n = 0; n <= N; ++n)
                for (std::size_t k = 0; k <= n; ++k) bell[n] += numbers::stirling2(n, k);
            for (std::size_t n = 0; n <= N; ++n)
                for (std::size_t m = 0; n + m <= N; ++m) {
                    Rat rhs;
                    for (std::size_t k = 0; k <= n; ++k)
                        for (std::size_t j = 0; j <= m; ++j)
                            rhs += tri(n, k) * binom(static_cast<long>(m), static_cast<long>(j)) *
                                   ipow(Rat(static_cast<long>(k)), m - j) * bell[j];
                    if (rhs != bell[n + m]) return "Bell numbers, n=" + std::to_string(n) + ",m=" + std::to_string(m);
                }
            return std::nullopt;
        });
        c.run("dobinski", [&]() -> Outcome {
            for (std::size_t n = 0; n <= N; ++n)
                for (std::size_t m = 0; m <= n; ++m) {
                    Rat s;
                    for (std::size_t j = 0; j <= m; ++j) {
                        Rat t = binom(static_cast<long>(m), static_cast<long>(j)) * ipow(Rat(static_cast<long>(j)), n);
                        s += (m - j) % 2 ? -t : t;
                    }
                    s /= factorial(m);
                    if (s != tri(n, m)) return at(n, m, tri(n, m), s);
                }
            return std::nullopt;
        });
        c.run("touchard_recurrence", [&]() -> Outcome {
            for (std::size_t n = 0; n < N; ++n) {
                Poly s;
                for (std::size_t k = 0; k <= n; ++k)
                    s += binom(static_cast<long>(n), static_cast<long>(k)) * phi.poly(k);
                if (s.mulx() != phi.poly(n + 1)) return "n=" + std::to_string(n);
            }
            return std::nullopt;
        });
    } else if (name == "abel") {
        Rat a = spec.params.at("a");
        c.run("abel_identity", [&]() -> Outcome {
            // (x+y)(x+y-an)^{n-1} = sum_k binom(n,k) x(x-ak)^{k-1} y(y-a(n-k))^{n-k-1}
            auto A = [&](std::size_t n, const Rat& x) {
                if (n == 0) return Rat(1);
                return x * ipow(x - a * Rat(static_cast<long>(n)), n - 1);
            };
            for (std::size_t n = 0; n <= N; ++n) {
                auto grid = grid_points(n + 2);
                for (const Rat& x : grid)
                    for (const Rat& y : grid) {
                        Rat rhs;
                        for (std::size_t k = 0; k <= n; ++k)
                            rhs += binom(static_cast<long>(n), static_cast<long>(k)) * A(k, x) * A(n - k, y);
                        if (A(n, x + y) != rhs) return "n=" + std::to_string(n) + ",x=" + x.to_string() + ",y=" + y.to_string();
                    }
            }
            return std::nullopt;
        });
        if (!a.is_zero())
            c.run("niederhausen_stretch", [&] {
                UmbralOp str = basic(named::stretch(a, T), N, BasicRoute::transfer);
                return compare(niederhausen(str).triangle(), tri_invert(tri));
            });
    } else if (name == "laguerre") {
        c.run("laguerre_commutation", [&] {
            ShiftOp U = op_from({Rat(1), Rat(-1)}, T);
            return special(phi, U, U, N);
        });
        c.run("laguerre_involution", [&] {
            Triangle ln = tri;
            for (std::size_t n = 1; n <= N; n += 2)
                for (std::size_t k = 0; k <= n; ++k) ln(n, k) = -ln(n, k);
            return compare(tri_compose(ln, ln), Triangle::identity(N));
        });
        c.run("lah_connection", [&] {
            Triangle rising = basic(named::backward_difference(T), N, BasicRoute::transfer).triangle();
            Triangle falling = basic(named::forward_difference(T), N, BasicRoute::transfer).triangle();
            return compare(tri_compose(rising, tri), falling);
        });
        c.run("erdelyi", [&]() -> Outcome {
            for (const Rat& l : {Rat(2), Rat(1, 2), Rat(-1)})
                for (std::size_t n = 0; n <= std::min<std::size_t>(8, N); ++n) {
                    Poly lhs = phi.poly(n).compose(Poly::monomial(l, 1));
                    Poly rhs;
                    for (std::size_t k = 0; k <= n; ++k)
                        rhs += (numbers::lah(n, k) * ipow(l, k) * ipow(l - Rat(1), n - k)) * phi.poly(k);
                    if (lhs != rhs) return "lambda=" + l.to_string() + ",n=" + std::to_string(n);
                }
            return std::nullopt;
        });
        c.run("laguerre_powers", [&]() -> Outcome {
            for (const Rat& r : {Rat(1, 2), Rat(-1, 3), Rat(2), Rat(-1)}) {
                Triangle want(N);
                for (std::size_t n = 0; n <= N; ++n)
                    for (std::size_t k = 0; k <= n; ++k) want(n, k) = tri(n, k) * ipow(r, n - k);
                Outcome o = compare(phi_pow(spec.delta, r, N), want);
                if (o) return "r=" + r.to_string() + ": " + *o;
                if (r.is_integer()) {
                    o = compare(tri_power(tri, r.to_long()), want);
                    if (o) return "integer power r=" + r.to_string() + ": " + *o;
                }
            }
            return std::nullopt;
        });
    } else if (name == "catalan") {
        c.run("special_class", [&] {
            ShiftOp U = op_from({Rat(1), Rat(-2)}, T);
            return special(phi, U, power(U, -2), N);
        });
        c.run("catalan_bell", [&]() -> Outcome {
            std::vector<Rat> a;
            for (std::size_t i = 1; i <= N; ++i) a.push_back(factorial(i) * numbers::catalan(i - 1));
            for (std::size_t n = 1; n <= N; ++n)
                for (std::size_t k = 1; k <= n; ++k) {
                    Rat want = factorial(n - 1) / factorial(k - 1) *
                               binom(static_cast<long>(2 * n - k - 1), static_cast<long>(n - 1));
                    Rat got = partial_bell(n, k, a);
                    if (got != want) return at(n, k, got, want);
                }
            return std::nullopt;
        });
    } else if (name == "catalan_inverse") {
        c.run("special_class", [&] {
            ShiftOp U = op_from({Rat(1), Rat(-4)}, T);
            return special(phi, U, ShiftOp(pow_rat(U.indicator(), Rat(-1, 2))), N);
        });
        c.run("inverse_of_catalan", [&] {
            UmbralOp cat = basic(named::catalan(T), N, BasicRoute::transfer);
            return compare(tri, tri_invert(cat.triangle()));
        });
    } else if (name == "idempotent") {
        c.run("niederhausen_identity", [&] {
            UmbralOp id = basic(named::derivative(T), N, BasicRoute::transfer);
            return compare(niederhausen(id).triangle(), tri);
        });
        c.run("lambert_series", [&]() -> Outcome {
            // delta indicator sum_n (-n)^{n-1} t^n / n!
            DeltaOp R = phi.delta();
            for (std::size_t n = 1; n <= N; ++n) {
                Rat want = ipow(Rat(-static_cast<long>(n)), n - 1) / factorial(n);
                if (R.indicator()[n] != want) return at(n, 1, R.indicator()[n], want);
            }
            return std::nullopt;
        });
    }
}

void degenerate_checks(Checker& c, const FamilySpec& spec, const Triangle& tri, std::size_t N) {
    std::size_t p = static_cast<std::size_t>(spec.params.at("p").to_long());
    Rat alpha = spec.params.at("alpha");
    std::size_t T = N + 2;
    c.run("degenerate_laguerre_ode", [&]() -> Outcome {
        // x p f^{(p+1)} + alpha p^2 f^{(p)} - x f' + n f = 0
        Rat pr(static_cast<long>(p));
        for (std::size_t n = 0; n <= std::min<std::size_t>(8, N); ++n) {
            Poly f = tri.row_poly(n);
            Poly dp = f;
            for (std::size_t i = 0; i < p; ++i) dp = dp.derivative();
            Poly lhs = (pr * dp.derivative()).mulx() + (alpha * pr * pr) * dp - f.derivative().mulx() +
                       Rat(static_cast<long>(n)) * f;
            if (!lhs.is_zero()) return "p=" + std::to_string(p) + ",n=" + std::to_string(n);
        }
        return std::nullopt;
    });
    c.run("degenerate_cross", [&]() -> Outcome {
        UmbralOp base = basic(spec.delta, N, BasicRoute::transfer);
        ShiftOp C(Series::one(T) - Series::monomial(Rat(static_cast<long>(p)), p, T));
        Rat v(1, 2);
        Triangle tu = cross(C, alpha, base).tri;
        Triangle tv = cross(C, v, base).tri;
        Triangle tuv = cross(C, alpha + v, base).tri;
        for (std::size_t n = 0; n <= N; ++n) {
            auto grid = grid_points(n + 2);
            for (const Rat& x : grid)
                for (const Rat& y : grid) {
                    Rat rhs;
                    for (std::size_t k = 0; k <= n; ++k)
                        rhs += binom(static_cast<long>(n), static_cast<long>(k)) * tu.row_poly(k)(x) *
                               tv.row_poly(n - k)(y);
                    if (tuv.row_poly(n)(x + y) != rhs) return "n=" + std::to_string(n);
                }
        }
        return std::nullopt;
    });
}

}  // namespace

Report identity_check(std::string_view name, const Params& params, std::size_t N, std::uint64_t seed) {
    Report report;
    FamilySpec spec = family(name, params, N + 2);
    Checker c(spec.name, format_params(spec.params), report);
    UmbralOp phi = basic(spec.delta, N, BasicRoute::transfer);
    Triangle tri = spec.appell ? sheffer(*spec.appell, phi).tri : phi.triangle();
    c.run("closed_form", [&] { return compare(tri, from_closed_form(spec, N)); });
    if (spec.appell) {
        ShefferOp s = sheffer(*spec.appell, phi);
        c.run("sheffer_identity", [&] { return expect(sheffer_identity_check(s, phi), "binomial identity fails"); });
        c.run("not_binomial_type", [&] { return expect(!is_binomial_type(tri), "accepted as binomial type"); });
    } else {
        basic_checks(c, spec, phi, N, seed);
        family_checks(c, spec, phi, tri, N);
    }
    if (spec.name == "degenerate_laguerre") degenerate_checks(c, spec, tri, N);
    if (spec.name == "bernoulli2")
        c.run("commutes_with_derivative", [&]() -> Outcome {
            // psi_m' = m (x)_{m-1}
            for (std::size_t m = 1; m <= N; ++m) {
                Poly falling = phi.poly(m - 1);
                if (tri.row_poly(m).derivative() != Rat(static_cast<long>(m)) * falling)
                    return "m=" + std::to_string(m);
                if (tri.row_poly(m) != bernoulli2_poly(m)) return "sigma route, m=" + std::to_string(m);
            }
            return std::nullopt;
        });
    if (spec.name == "smooth_abel")
        c.run("smooth_abel_identity", [&]() -> Outcome {
            // (x+y-an)^n = sum_k binom(n,k) A_k(x) (y-a(n-k))^{n-k}
            Rat a = spec.params.at("a");
            auto grid = grid_points(6);
            for (std::size_t n = 0; n <= N; ++n)
                for (const Rat& x : grid)
                    for (const Rat& y : grid) {
                        Rat rhs;
                        for (std::size_t k = 0; k <= n; ++k)
                            rhs += binom(static_cast<long>(n), static_cast<long>(k)) * phi.poly(k)(x) *
                                   tri.row_poly(n - k)(y);
                        if (ipow(x + y - a * Rat(static_cast<long>(n)), n) != rhs)
                            return "n=" + std::to_string(n) + ",x=" + x.to_string() + ",y=" + y.to_string();
                    }
            return std::nullopt;
        });
    if (spec.name == "bernoulli")
        c.run("faulhaber_integral", [&]() -> Outcome {
            for (std::size_t n = 0; n <= N; ++n)
                if (tri.row_poly(n).antiderivative() != faulhaber(n)) return "n=" + std::to_string(n);
            return std::nullopt;
        });
    return report;
}

Report check_all(std::size_t N, std::uint64_t seed) {
    std::vector<std::pair<std::string, Params>> jobs;
    for (const auto& name : family_names()) jobs.emplace_back(name, Params{});
    jobs.emplace_back("abel", Params{{"a", Rat(-1, 2)}});
    jobs.emplace_back("smooth_abel", Params{{"a", Rat(2, 3)}});
    jobs.emplace_back("stretch", Params{{"lambda", Rat(-3)}});
    jobs.emplace_back("divided_difference", Params{{"h", Rat(2)}});
    for (long p = 1; p <= 3; ++p)
        for (const Rat& alpha : {Rat(0), Rat(1, 2)})
            if (!(p == 2 && alpha.is_zero())) jobs.emplace_back("degenerate_laguerre", Params{{"p", Rat(p)}, {"alpha", alpha}});
    std::vector<Report> parts(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i) {
        try {
            parts[i] = identity_check(jobs[i].first, jobs[i].second, N, seed);
        } catch (const std::exception& e) {
            parts[i].results.push_back({"setup", jobs[i].first, format_params(jobs[i].second), false, e.what()});
        }
    }
    Report all;
    for (auto& p : parts)
        for (auto& r : p.results) all.results.push_back(std::move(r));
    std::stable_sort(all.results.begin(), all.results.end(), [](const IdentityResult& a, const IdentityResult& b) {
        return std::tie(a.family, a.params, a.identity) < std::tie(b.family, b.params, b.identity);
    });
    return all;
}

}  // namespace umbra
