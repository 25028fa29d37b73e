#include "umbra/fps.hpp"

#include <algorithm>

#include "umbra/errors.hpp"
#include "umbra/kernels.hpp"

namespace umbra {

namespace {

std::size_t common(const Series& f, const Series& g) { return std::min(f.trunc(), g.trunc()); }

void need_order_one(const Series& f, const char* what) {
    std::size_t ord = f.order();
    if (ord != 1)
        throw OrderError(std::string(what) + " needs a series of order exactly 1, got order " +
                         (ord == kOrderInf ? std::string("inf") : std::to_string(ord)));
}

void need_constant(const Series& f, const Rat& c, const char* what) {
    if (f[0] != c)
        throw ConstantTermError(std::string(what) + " needs constant term " + c.to_string() + ", got " +
                                f[0].to_string());
}

}  // namespace

Series operator+(const Series& f, const Series& g) {
    Series r(common(f, g));
    for (std::size_t k = 0; k <= r.trunc(); ++k) r[k] = f[k] + g[k];
    return r;
}

Series operator-(const Series& f, const Series& g) {
    Series r(common(f, g));
    for (std::size_t k = 0; k <= r.trunc(); ++k) r[k] = f[k] - g[k];
    return r;
}

Series operator-(const Series& f) {
    Series r(f.trunc());
    for (std::size_t k = 0; k <= r.trunc(); ++k) r[k] = -f[k];
    return r;
}

Series operator*(const Series& f, const Series& g) { return kernels::mul(f, g); }

Series operator*(const Rat& s, const Series& f) {
    Series r(f.trunc());
    for (std::size_t k = 0; k <= r.trunc(); ++k) r[k] = s * f[k];
    return r;
}

Series operator+(const Series& f, const Rat& c) {
    Series r = f;
    r[0] += c;
    return r;
}

Series operator-(const Series& f, const Rat& c) { return f + (-c); }

Series derive(const Series& f) {
    if (f.trunc() == 0) throw TruncationError("derivative of a series truncated at 0 carries no coefficients");
    Series r(f.trunc() - 1);
    for (std::size_t k = 1; k <= f.trunc(); ++k) r[k - 1] = Rat(static_cast<long>(k)) * f[k];
    return r;
}

Series integrate(const Series& f, const Rat& c0) {
    Series r(f.trunc());
    r[0] = c0;
    for (std::size_t k = 1; k <= f.trunc(); ++k) r[k] = f[k - 1] / Rat(static_cast<long>(k));
    return r;
}

Series shift_up(const Series& f, std::size_t k) {
    Series r(f.trunc() + k);
    for (std::size_t i = 0; i <= f.trunc(); ++i) r[i + k] = f[i];
    return r;
}

Series shift_down(const Series& f, std::size_t k) {
    if (k > f.trunc()) throw TruncationError("cannot divide a series truncated at " + std::to_string(f.trunc()) +
                                             " by t^" + std::to_string(k));
    for (std::size_t i = 0; i < k; ++i)
        if (!f[i].is_zero()) throw OrderError("series of order " + std::to_string(i) + " is not divisible by t^" +
                                              std::to_string(k));
    Series r(f.trunc() - k);
    for (std::size_t i = 0; i <= r.trunc(); ++i) r[i] = f[i + k];
    return r;
}

Series compose(const Series& f, const Series& g) {
    if (g.order() < 1) throw OrderError("inner series of a composition must have zero constant term");
    std::size_t n = common(f, g);
    Series acc = Series::constant(f[n], n);
    for (std::size_t k = n; k-- > 0;) acc = acc * g + f[k];
    return acc;
}

Series mul_inv(const Series& f) {
    if (f[0].is_zero()) throw NotInvertible("reciprocal needs a nonzero constant term");
    Series r(f.trunc());
    Rat inv0 = Rat(1) / f[0];
    r[0] = inv0;
    for (std::size_t n = 1; n <= f.trunc(); ++n) {
        Rat acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k].is_zero()) continue;
            acc += f[k] * r[n - k];
        }
        r[n] = -inv0 * acc;
    }
    return r;
}

Series comp_inv(const Series& f) {
    need_order_one(f, "comp_inv");
    std::size_t N = f.trunc();
    // pw[k][m] = [t^m] g^k, filled one degree at a time as the coefficients of g become known.
    std::vector<std::vector<Rat>> pw(N + 1, std::vector<Rat>(N + 1));
    pw[0][0] = Rat(1);
    Series g(N);
    Rat inv1 = Rat(1) / f[1];
    for (std::size_t m = 1; m <= N; ++m) {
        Rat acc;
        for (std::size_t k = 2; k <= m; ++k) {
            Rat c;
            for (std::size_t j = 1; j + k - 1 <= m; ++j) c += g[j] * pw[k - 1][m - j];
            pw[k][m] = c;
            acc += f[k] * c;
        }
        g[m] = m == 1 ? inv1 : -inv1 * acc;
        pw[1][m] = g[m];
    }
    return g;
}

Series pow_int(const Series& f, long e) {
    if (e < 0) return pow_int(mul_inv(f), -e);
    Series result = Series::one(f.trunc());
    Series base = f;
    for (unsigned long u = static_cast<unsigned long>(e); u; u >>= 1) {
        if (u & 1) result = result * base;
        if (u > 1) base = base * base;
    }
    return result;
}

Series pow_rat(const Series& f, const Rat& r) {
    if (r.is_integer() && r.sign() >= 0) return pow_int(f, r.to_long());
    need_constant(f, Rat(1), "rational power");
    // h = f^r satisfies f h' = r f' h, which gives h_n = (1/n) sum_k ((r+1)k - n) f_k h_{n-k}.
    Series h(f.trunc());
    h[0] = Rat(1);
    for (std::size_t n = 1; n <= f.trunc(); ++n) {
        Rat acc;
        Rat nn(static_cast<long>(n));
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k].is_zero()) continue;
            acc += ((r + Rat(1)) * Rat(static_cast<long>(k)) - nn) * f[k] * h[n - k];
        }
        h[n] = acc / nn;
    }
    return h;
}

Series exp_series(const Series& f) {
    need_constant(f, Rat(0), "exp");
    Series h(f.trunc());
    h[0] = Rat(1);
    for (std::size_t n = 1; n <= f.trunc(); ++n) {
        Rat acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k].is_zero()) continue;
            acc += Rat(static_cast<long>(k)) * f[k] * h[n - k];
        }
        h[n] = acc / Rat(static_cast<long>(n));
    }
    return h;
}

Series log_series(const Series& f) {
    need_constant(f, Rat(1), "log");
    Series g(f.trunc());
    for (std::size_t n = 1; n <= f.trunc(); ++n) {
        Rat acc = Rat(static_cast<long>(n)) * f[n];
        for (std::size_t k = 1; k < n; ++k) acc -= Rat(static_cast<long>(k)) * g[k] * f[n - k];
        g[n] = acc / Rat(static_cast<long>(n));
    }
    return g;
}

Series lagrange_power(const Series& f, std::size_t k, std::size_t N) {
    need_order_one(f, "lagrange_power");
    if (k == 0) return Series::one(N);
    if (k <= N && f.trunc() < N - k + 1)
        throw TruncationError("lagrange_power to " + std::to_string(N) + " needs the series to trunc " +
                              std::to_string(N - k + 1));
    Series out(N);
    if (k > N) return out;
    Series a = mul_inv(shift_down(f, 1)).truncated(N - k);  // x/f
    Series an = pow_int(a, static_cast<long>(k));
    for (std::size_t n = k; n <= N; ++n) {
        out[n] = Rat(static_cast<long>(k), static_cast<long>(n)) * an[n - k];
        an = an * a;
    }
    return out;
}

}  // namespace umbra
