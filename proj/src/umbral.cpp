#include "umbra/umbral.hpp"

#include <algorithm>

#include "umbra/bell.hpp"
#include "umbra/errors.hpp"
#include "umbra/fps.hpp"
#include "umbra/kernels.hpp"

namespace umbra {

namespace {

void need_trunc(const DeltaOp& Q, std::size_t need, const char* route) {
    if (Q.trunc() < need)
        throw TruncationError(std::string(route) + " route needs the indicator to trunc " + std::to_string(need) +
                              ", got " + std::to_string(Q.trunc()));
}

// n!/k! as a rational
Rat fact_ratio(std::size_t n, std::size_t k) { return factorial(n) / factorial(k); }

Triangle route_transfer(const DeltaOp& Q, std::size_t N) {
    need_trunc(Q, N + 1, "transfer");
    Series P = divide(named::derivative(Q.trunc()), Q).indicator();
    Series Qp = derive(Q.indicator());
    // pw[n] = Q' P^{n+1}
    std::vector<Series> pw;
    pw.reserve(N + 1);
    Series cur = Qp * P;
    for (std::size_t n = 0; n <= N; ++n) {
        pw.push_back(cur);
        cur = cur * P;
    }
    Triangle t(N);
#pragma omp parallel for schedule(dynamic) if (N >= 24)
    for (long ln = 0; ln <= static_cast<long>(N); ++ln) {
        auto n = static_cast<std::size_t>(ln);
        for (std::size_t k = 0; k <= n; ++k) t(n, k) = pw[n][n - k] * fact_ratio(n, k);
    }
    return t;
}

Triangle route_steffensen(const DeltaOp& Q, std::size_t N) {
    need_trunc(Q, N, "steffensen");
    Series P = divide(named::derivative(Q.trunc()), Q).indicator();
    std::vector<Series> pw;
    pw.reserve(N + 1);
    Series cur = Series::one(P.trunc());
    for (std::size_t n = 0; n <= N; ++n) {
        pw.push_back(cur);
        cur = cur * P;
    }
    Triangle t(N);
    t(0, 0) = Rat(1);
#pragma omp parallel for schedule(dynamic) if (N >= 24)
    for (long ln = 1; ln <= static_cast<long>(N); ++ln) {
        auto n = static_cast<std::size_t>(ln);
        // x * P^n x^{n-1}
        for (std::size_t k = 1; k <= n; ++k) t(n, k) = pw[n][n - k] * fact_ratio(n - 1, k - 1);
    }
    return t;
}

Triangle route_recurrence(const DeltaOp& Q, std::size_t N) {
    need_trunc(Q, N, "recurrence");
    ShiftOp R(mul_inv(derive(Q.indicator())));
    Triangle t(N);
    Poly p = Poly::constant(Rat(1));
    t.set_row(0, p);
    for (std::size_t n = 1; n <= N; ++n) {
        p = apply(R, p).mulx();
        t.set_row(n, p);
    }
    return t;
}

Triangle route_km(const DeltaOp& Q, std::size_t N) {
    need_trunc(Q, N, "km");
    Series W = comp_inv(Q.indicator()).truncated(N) - Series::variable(N);
    std::vector<Series> pw;
    pw.reserve(N + 1);
    Series cur = Series::one(N);
    for (std::size_t j = 0; j <= N; ++j) {
        pw.push_back(cur);
        cur = cur * W;
    }
    Triangle t(N);
#pragma omp parallel for schedule(dynamic) if (N >= 24)
    for (long ln = 0; ln <= static_cast<long>(N); ++ln) {
        auto n = static_cast<std::size_t>(ln);
        // sum_j x^j/j! W^j x^n; W^j D-degree starts at j
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = j; i <= n; ++i) {
                if (pw[j][i].is_zero()) continue;
                t(n, n - i + j) += pw[j][i] * fact_ratio(n, n - i) / factorial(j);
            }
    }
    return t;
}

}  // namespace

UmbralOp::UmbralOp(Triangle tri, std::optional<DeltaOp> delta) : tri_(std::move(tri)), delta_(std::move(delta)) {
    if (tri_(0, 0) != Rat(1)) throw NotDelta("row 0 of an umbral triangle must be 1");
    for (std::size_t n = 1; n <= tri_.max_row(); ++n) {
        if (!tri_(n, 0).is_zero()) throw NotDelta("p_" + std::to_string(n) + "(0) must vanish");
        if (tri_(n, n).is_zero()) throw SingularTriangle("zero diagonal entry in row " + std::to_string(n));
    }
#ifndef NDEBUG
    if (delta_) {
        DeltaOp rec = delta_of(tri_);
        if (!agree(rec.indicator(), delta_->indicator()))
            throw ConsistencyError("cached delta operator disagrees with the triangle");
    }
#endif
}

DeltaOp UmbralOp::delta() const { return delta_ ? *delta_ : delta_of(tri_); }

const char* route_name(BasicRoute r) {
    switch (r) {
        case BasicRoute::transfer: return "transfer";
        case BasicRoute::steffensen: return "steffensen";
        case BasicRoute::recurrence: return "recurrence";
        case BasicRoute::genfunc: return "genfunc";
        case BasicRoute::km: return "km";
    }
    return "?";
}

UmbralOp basic(const DeltaOp& Q, std::size_t N, BasicRoute route) {
    switch (route) {
        case BasicRoute::transfer: return UmbralOp(route_transfer(Q, N), Q);
        case BasicRoute::steffensen: return UmbralOp(route_steffensen(Q, N), Q);
        case BasicRoute::recurrence: return UmbralOp(route_recurrence(Q, N), Q);
        case BasicRoute::genfunc:
            need_trunc(Q, N, "genfunc");
            return UmbralOp(power_triangle(comp_inv(Q.indicator()), N), Q);
        case BasicRoute::km: return UmbralOp(route_km(Q, N), Q);
    }
    throw std::invalid_argument("unknown route");
}

Triangle power_triangle(const Series& g, std::size_t N) {
    if (g.order() < 1) throw OrderError("power_triangle needs a series with zero constant term");
    if (g.trunc() < N)
        throw TruncationError("power_triangle to " + std::to_string(N) + " needs the series to trunc " +
                              std::to_string(N));
    Series gg = g.truncated(N);
    Triangle t(N);
    Series cur = Series::one(N);
    for (std::size_t k = 0; k <= N; ++k) {
        for (std::size_t n = k; n <= N; ++n) t(n, k) = cur[n] * fact_ratio(n, k);
        cur = cur * gg;
    }
    return t;
}

DeltaOp delta_of(const Triangle& tri) {
    std::size_t N = tri.max_row();
    if (N == 0) throw NotDelta("a triangle with a single row does not determine a delta operator");
    Series g(N);
    for (std::size_t n = 1; n <= N; ++n) g[n] = tri(n, 1) / factorial(n);
    if (g[1].is_zero()) throw NotDelta("coefficient of x in p_1 is zero");
    return validate_delta(ShiftOp(comp_inv(g)));
}

Triangle tri_compose(const Triangle& outer, const Triangle& inner) { return kernels::compose(outer, inner); }
Triangle tri_invert(const Triangle& t) { return kernels::invert(t); }

Triangle tri_power(const Triangle& t, long e) {
    Triangle base = e < 0 ? tri_invert(t) : t;
    Triangle acc = Triangle::identity(t.max_row());
    for (unsigned long u = static_cast<unsigned long>(std::labs(e)); u; u >>= 1) {
        if (u & 1) acc = tri_compose(acc, base);
        if (u > 1) base = tri_compose(base, base);
    }
    return acc;
}

std::vector<Rat> transform_seq(const Triangle& t, std::span<const Rat> a, TransformMode mode, std::size_t bound) {
    if (a.size() > t.max_row() + 1)
        throw IndexError("sequence of length " + std::to_string(a.size()) + " exceeds triangle size " +
                         std::to_string(t.max_row() + 1));
    std::vector<Rat> out(a.size());
    if (mode == TransformMode::row) {
        for (std::size_t n = bound; n < a.size(); ++n)
            for (std::size_t k = bound; k <= n; ++k) out[n] += t(n, k) * a[k];
    } else {
        if (bound >= a.size()) throw IndexError("column transform bound past the end of the sequence");
        for (std::size_t k = 0; k <= bound; ++k)
            for (std::size_t n = k; n <= bound; ++n) out[k] += t(n, k) * a[n];
    }
    return out;
}

std::vector<Rat> grid_points(std::size_t count) {
    // (2i+1)/(i+2) is strictly increasing, so alternating its sign keeps every point distinct.
    std::vector<Rat> g;
    g.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rat r(static_cast<long>(2 * i + 1), static_cast<long>(i + 2));
        g.push_back(i % 2 ? -r : r);
    }
    return g;
}

bool is_binomial_type(const Triangle& t) {
    std::size_t N = t.max_row();
    if (t(0, 0) != Rat(1)) return false;
    for (std::size_t n = 1; n <= N; ++n)
        if (!t(n, 0).is_zero() || t(n, n).is_zero()) return false;
    // binom(i+j, i) c(n, i+j) = sum_k binom(n,k) c(k,i) c(n-k,j)
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j) {
                Rat rhs;
                for (std::size_t k = i; k + j <= n; ++k)
                    rhs += binom(static_cast<long>(n), static_cast<long>(k)) * t(k, i) * t(n - k, j);
                if (binom(static_cast<long>(i + j), static_cast<long>(i)) * t(n, i + j) != rhs) return false;
            }
    // p_n(x+y) = sum_k binom(n,k) p_k(x) p_{n-k}(y) on an (n+2) x (n+2) grid
    std::vector<Poly> p;
    for (std::size_t n = 0; n <= N; ++n) p.push_back(t.row_poly(n));
    for (std::size_t n = 0; n <= N; ++n) {
        auto grid = grid_points(n + 2);
        for (const Rat& x : grid)
            for (const Rat& y : grid) {
                Rat rhs;
                for (std::size_t k = 0; k <= n; ++k)
                    rhs += binom(static_cast<long>(n), static_cast<long>(k)) * p[k](x) * p[n - k](y);
                if (p[n](x + y) != rhs) return false;
            }
    }
    return true;
}

ShefferOp sheffer(const ShiftOp& A, const UmbralOp& phi) {
    if (!is_appell(A)) throw NotAppell("Sheffer operator needs an invertible shift-invariant operator");
    std::size_t N = phi.max_row();
    if (A.trunc() < N)
        throw TruncationError("Appell operator known to trunc " + std::to_string(A.trunc()) + ", need " +
                              std::to_string(N));
    Triangle t(N);
#pragma omp parallel for schedule(dynamic) if (N >= 24)
    for (long ln = 0; ln <= static_cast<long>(N); ++ln) {
        auto n = static_cast<std::size_t>(ln);
        t.set_row(n, apply(A, phi.poly(n)));
    }
    return ShefferOp{std::move(t), phi.delta(), A};
}

ShefferOp cross(const ShiftOp& C, const Rat& u, const UmbralOp& phi) {
    if (C.indicator()[0] != Rat(1))
        throw ConstantTermError("cross sequence needs C(0) = 1, got " + C.indicator()[0].to_string());
    return sheffer(ShiftOp(pow_rat(C.indicator(), u)), phi);
}

Triangle connection_constants(const UmbralOp& phi, const UmbralOp& psi) {
    return tri_compose(tri_invert(psi.triangle()), phi.triangle());
}

UmbralOp niederhausen(const UmbralOp& phi) {
    std::size_t N = phi.max_row();
    const Triangle& src = phi.triangle();
    Triangle t(N);
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            Poly q = src.row_poly(n - k);
            t(n, k) = binom(static_cast<long>(n), static_cast<long>(k)) * q(Rat(static_cast<long>(k)));
        }
    }
    // R^{[-1]} = t e^{Q^{-1}(t)}, with Q^{-1} read off column 1.
    Series g(N);
    for (std::size_t n = 1; n <= N; ++n) g[n] = src(n, 1) / factorial(n);
    Series r1 = comp_inv(Series::variable(N) * exp_series(g));
    // R = sum_n p_{n-1}(-n)/n! D^n
    Series r2(N);
    for (std::size_t n = 1; n <= N; ++n) r2[n] = src.row_poly(n - 1)(Rat(-static_cast<long>(n))) / factorial(n);
    if (r1 != r2) throw ConsistencyError("Niederhausen delta operator routes disagree");
    DeltaOp R = validate_delta(ShiftOp(r1));
    if (delta_of(t).indicator() != r1) throw ConsistencyError("Niederhausen triangle disagrees with its delta operator");
    return UmbralOp(std::move(t), R);
}

std::vector<Rat> power_coeffs(const DeltaOp& Q, std::size_t n) {
    if (n == 0) return {};
    need_trunc(Q, n, "power_coeffs");
    Triangle t = power_triangle(comp_inv(Q.indicator()), n);
    std::vector<Rat> a(n);
    for (std::size_t k = 1; k <= n; ++k)
        a[n - k] = t(n, k) / binom(static_cast<long>(n - 1), static_cast<long>(k - 1));
    return a;
}

Triangle coeff_via_ratio(const DeltaOp& Q, std::size_t N) {
    need_trunc(Q, N, "ratio");
    Series h = shift_down(comp_inv(Q.indicator()), 1);  // Q^{-1}(t)/t
    Triangle t(N);
    Series cur = Series::one(h.trunc());
    for (std::size_t k = 0; k <= N; ++k) {
        for (std::size_t n = k; n <= N; ++n) t(n, k) = cur[n - k] * fact_ratio(n, k);
        cur = cur * h;
    }
    return t;
}

bool special_class_check(const UmbralOp& phi, const ShiftOp& U, const ShiftOp& V, std::size_t n) {
    std::size_t N = phi.max_row();
    if (n > N) throw IndexError("special class check past the triangle");
    const Triangle& c = phi.triangle();
    std::size_t mmax = std::min(N - n, std::min(U.trunc(), V.trunc()));
    ShiftOp Vn = power(V, static_cast<long>(n));
    for (std::size_t m = 0; m <= mmax; ++m) {
        Poly lhs = phi.poly(n + m);
        Poly rhs;
        ShiftOp Uk = named::identity(U.trunc());
        for (std::size_t k = 0; k <= n; ++k) {
            if (!c(n, k).is_zero()) {
                Poly term = apply(Uk * Vn, phi.poly(m));
                for (std::size_t i = 0; i < k; ++i) term = term.mulx();
                rhs += c(n, k) * term;
            }
            Uk = Uk * U;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool commutation_expansion_check(const UmbralOp& phi, std::size_t n) {
    std::size_t N = phi.max_row();
    if (n > N) throw IndexError("commutation check past the triangle");
    DeltaOp Q = phi.delta();
    Series g = comp_inv(Q.indicator());
    std::vector<Series> a;
    Series d = g;
    std::size_t tmin = Q.trunc();
    for (std::size_t i = 1; i <= n; ++i) {
        d = derive(d);
        a.push_back(compose(d, Q.indicator()));
        tmin = std::min(tmin, a.back().trunc());
    }
    if (n == 0) return true;
    auto B = partial_bell_table<Series>(n, n, a, Series::zero(tmin), Series::one(tmin));
    std::size_t mmax = std::min(N - n, tmin);
    for (std::size_t m = 0; m <= mmax; ++m) {
        Poly lhs = phi.poly(n + m);
        Poly rhs;
        for (std::size_t k = 0; k <= n; ++k) {
            Poly term = apply(ShiftOp(B[n][k]), phi.poly(m));
            for (std::size_t i = 0; i < k; ++i) term = term.mulx();
            rhs += term;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool sheffer_identity_check(const ShefferOp& s, const UmbralOp& phi) {
    std::size_t N = std::min(s.tri.max_row(), phi.max_row());
    for (std::size_t n = 0; n <= N; ++n) {
        auto grid = grid_points(n + 2);
        for (const Rat& x : grid)
            for (const Rat& y : grid) {
                Rat rhs;
                for (std::size_t k = 0; k <= n; ++k)
                    rhs += binom(static_cast<long>(n), static_cast<long>(k)) * s.tri.row_poly(k)(x) *
                           phi.poly(n - k)(y);
                if (s.tri.row_poly(n)(x + y) != rhs) return false;
            }
    }
    return true;
}

bool differential_equation_check(const UmbralOp& phi) {
    DeltaOp Q = phi.delta();
    ShiftOp ratio = divide(Q, pincherle(Q));
    std::size_t top = std::min(phi.max_row(), ratio.trunc());
    for (std::size_t n = 0; n <= top; ++n) {
        Poly p = phi.poly(n);
        if (Rat(static_cast<long>(n)) * p != apply(ratio, p).mulx()) return false;
    }
    return true;
}

}  // namespace umbra
