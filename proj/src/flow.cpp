#include "umbra/flow.hpp"

#include <vector>

#include "umbra/errors.hpp"
#include "umbra/fps.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

namespace {

void need_unitary(const Series& f) {
    if (f.order() != 1 || f[1] != Rat(1))
        throw NotUnitary("series must start x + ..., got order " +
                         (f.order() == kOrderInf ? std::string("inf") : std::to_string(f.order())) +
                         (f.order() == 1 ? " and linear coefficient " + f[1].to_string() : std::string()));
}

Triangle minus_identity(const Triangle& t) {
    Triangle m = t;
    for (std::size_t n = 0; n <= t.max_row(); ++n) m(n, n) -= Rat(1);
    return m;
}

// sum_p w_p (phi - 1)^p, keeping only the p <= n - k terms that can be nonzero.
template <class Weight>
Triangle nilpotent_sum(const Triangle& phi, Weight w) {
    std::size_t N = phi.max_row();
    Triangle M = minus_identity(phi);
    Triangle out(N);
    Triangle Mp = Triangle::identity(N);
    for (std::size_t p = 0; p <= N; ++p) {
        Rat wp = w(p);
        if (!wp.is_zero())
            for (std::size_t n = 0; n <= N; ++n)
                for (std::size_t k = 0; k + p <= n; ++k) out(n, k) += wp * Mp(n, k);
        if (p < N) Mp = tri_compose(Mp, M);
    }
    return out;
}

}  // namespace

Series iterate_int(const Series& f, long m) {
    Series base = m < 0 ? comp_inv(f) : f;
    Series acc = Series::variable(f.trunc());
    for (long i = 0; i < std::labs(m); ++i) acc = compose(base, acc);
    return acc;
}

Series itlog_operator_route(const Series& f) {
    need_unitary(f);
    std::size_t N = f.trunc();
    std::vector<Series> it{Series::variable(N)};
    for (std::size_t l = 1; l + 1 <= N; ++l) it.push_back(compose(f, it.back()));
    Series res(N);
    for (std::size_t p = 1; p + 1 <= N; ++p) {
        Series term(N);
        for (std::size_t l = 0; l <= p; ++l) {
            Rat c = binom(static_cast<long>(p), static_cast<long>(l));
            if ((p - l) % 2) c = -c;
            term = term + c * it[l];
        }
        Rat w(1, static_cast<long>(p));
        if (p % 2 == 0) w = -w;
        res = res + w * term;
    }
    return res;
}

Series itlog_coefficient_route(const Series& f) {
    need_unitary(f);
    std::size_t N = f.trunc();
    Triangle M = minus_identity(power_triangle(f, N));
    Series res(N);
    Triangle Mp = M;
    for (std::size_t p = 1; p + 1 <= N; ++p) {
        Rat w(1, static_cast<long>(p));
        if (p % 2 == 0) w = -w;
        for (std::size_t n = p + 1; n <= N; ++n) res[n] += w * Mp(n, 1) / factorial(n);
        Mp = tri_compose(Mp, M);
    }
    return res;
}

Series itlog(const Series& f) {
    Series a = itlog_operator_route(f);
    Series b = itlog_coefficient_route(f);
    if (a != b) throw ConsistencyError("iterative logarithm routes disagree");
    return a;
}

Series frac_iterate(const Series& f, const Rat& s, std::size_t k, std::size_t N) {
    need_unitary(f);
    if (f.trunc() < N)
        throw TruncationError("iterate to trunc " + std::to_string(N) + " needs the series to trunc " +
                              std::to_string(N));
    if (k > N) return Series(N);
    Triangle phi = power_triangle(f, N);
    Triangle first = nilpotent_sum(phi, [&](std::size_t p) { return binom(s, p); });
    // second form: sum_p binom(s,p) binom(n-k-s, n-k-p) phi^p(n,k)
    Series out(N);
    Triangle php = Triangle::identity(N);
    std::vector<Rat> second(N + 1);
    for (std::size_t p = 0; p + k <= N; ++p) {
        Rat bs = binom(s, p);
        for (std::size_t n = k + p; n <= N; ++n)
            second[n] += bs * binom(Rat(static_cast<long>(n - k)) - s, n - k - p) * php(n, k);
        php = tri_compose(php, phi);
    }
    for (std::size_t n = k; n <= N; ++n) {
        if (first(n, k) != second[n])
            throw ConsistencyError("fractional iterate forms disagree at n = " + std::to_string(n));
        out[n] = first(n, k) / factorial(n);
    }
    return out;
}

Rat minus_one_power_coeff(const Triangle& phi, std::size_t p, std::size_t n, std::size_t k) {
    if (n > phi.max_row() || k > n) throw IndexError("entry outside the triangle");
    if (p > n - k) return Rat(0);
    // dp[j]: weight of chains from k ending at j
    std::vector<Rat> dp(n + 1);
    dp[k] = Rat(1);
    for (std::size_t step = 0; step < p; ++step) {
        std::vector<Rat> next(n + 1);
        for (std::size_t j = k; j <= n; ++j) {
            if (dp[j].is_zero()) continue;
            for (std::size_t j2 = j + 1; j2 <= n; ++j2) next[j2] += dp[j] * phi(j2, j);
        }
        dp = std::move(next);
    }
    return dp[n];
}

Triangle minus_one_power(const Triangle& phi, std::size_t p) {
    return tri_power(minus_identity(phi), static_cast<long>(p));
}

Rat integer_power_chain_coeff(const Triangle& phi, std::size_t s, std::size_t n, std::size_t k) {
    if (n > phi.max_row() || k > n) throw IndexError("entry outside the triangle");
    std::vector<Rat> dp(n + 1);
    dp[k] = Rat(1);
    for (std::size_t step = 0; step < s; ++step) {
        std::vector<Rat> next(n + 1);
        for (std::size_t j = k; j <= n; ++j) {
            if (dp[j].is_zero()) continue;
            for (std::size_t j2 = j; j2 <= n; ++j2) next[j2] += dp[j] * phi(j2, j);
        }
        dp = std::move(next);
    }
    return dp[n];
}

Triangle phi_pow(const DeltaOp& Q, const Rat& s, std::size_t N) {
    need_unitary(Q.indicator());
    if (Q.trunc() < N)
        throw TruncationError("phi_pow to " + std::to_string(N) + " needs the indicator to trunc " + std::to_string(N));
    Series qs = itlog(Q.indicator()).truncated(N);
    ShiftOp Qstar(qs);
    Triangle ecalle(N);
    for (std::size_t n = 0; n <= N; ++n) {
        // sum_j (-s)^j / j! (X Q_*)^j x^n
        Poly term = Poly::monomial(Rat(1), n);
        Poly row;
        Rat w(1);
        for (std::size_t j = 0; !term.is_zero(); ++j) {
            row += w * term;
            term = apply(Qstar, term).mulx();
            w = w * (-s) / Rat(static_cast<long>(j + 1));
        }
        ecalle.set_row(n, row);
    }
    Triangle phi = power_triangle(comp_inv(Q.indicator()).truncated(N), N);
    Triangle binomial = nilpotent_sum(phi, [&](std::size_t p) { return binom(s, p); });
    if (ecalle != binomial) throw ConsistencyError("fractional umbral power routes disagree");
    return ecalle;
}

bool group_law_check(const Series& f, const Rat& r, const Rat& s, std::size_t N) {
    Series fr = frac_iterate(f, r, 1, N);
    Series fs = frac_iterate(f, s, 1, N);
    if (compose(fr, fs) != frac_iterate(f, r + s, 1, N)) return false;
    return frac_iterate(fr, s, 1, N) == frac_iterate(f, r * s, 1, N);
}

Matrix jabotinsky(const Triangle& phi) {
    Matrix J(phi.max_row() + 1);
    for (std::size_t n = 0; n <= phi.max_row(); ++n)
        for (std::size_t k = 0; k <= n; ++k) J(n, k) = factorial(k) / factorial(n) * phi(n, k);
    return J;
}

}  // namespace umbra
