#include "umbra/operators.hpp"

#include <algorithm>

#include "umbra/errors.hpp"
#include "umbra/fps.hpp"

namespace umbra {

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) { return ShiftOp(a.indicator() * b.indicator()); }
ShiftOp operator+(const ShiftOp& a, const ShiftOp& b) { return ShiftOp(a.indicator() + b.indicator()); }
ShiftOp operator-(const ShiftOp& a, const ShiftOp& b) { return ShiftOp(a.indicator() - b.indicator()); }
ShiftOp operator*(const Rat& s, const ShiftOp& a) { return ShiftOp(s * a.indicator()); }

ShiftOp inverse(const ShiftOp& T) {
    if (!is_appell(T)) throw NotInvertible("operator with zero constant term has no inverse");
    return ShiftOp(mul_inv(T.indicator()));
}

ShiftOp power(const ShiftOp& T, long e) {
    if (e < 0 && !is_appell(T)) throw NotInvertible("negative power of a non-invertible operator");
    return ShiftOp(pow_int(T.indicator(), e));
}

Poly apply(const ShiftOp& T, const Poly& p) {
    if (p.is_zero()) return p;
    auto d = static_cast<std::size_t>(p.degree());
    if (T.trunc() < d)
        throw TruncationError("operator known to degree " + std::to_string(T.trunc()) +
                              " applied to a polynomial of degree " + std::to_string(d));
    const Series& a = T.indicator();
    // D^j x^m = m!/(m-j)! x^{m-j}
    std::vector<Rat> out(d + 1);
    for (std::size_t m = 0; m <= d; ++m) {
        const Rat c = p.coeff(m);
        if (c.is_zero()) continue;
        Rat fall(1);
        for (std::size_t j = 0; j <= m; ++j) {
            if (!a[j].is_zero()) out[m - j] += a[j] * fall * c;
            fall *= Rat(static_cast<long>(m - j));
        }
    }
    return Poly(std::move(out));
}

ShiftOp pincherle(const ShiftOp& T) { return ShiftOp(derive(T.indicator())); }

ShiftOp divide(const ShiftOp& U, const ShiftOp& V) {
    std::size_t k = V.indicator().order();
    if (k == kOrderInf) throw DivisionOrderError("division by the zero operator");
    std::size_t ku = U.indicator().order();
    if (ku < k)
        throw DivisionOrderError("numerator of order " + std::to_string(ku) + " is not divisible by a denominator of order " +
                                 std::to_string(k));
    Series p = shift_down(U.indicator(), k);
    Series r = shift_down(V.indicator(), k);
    return ShiftOp(p * mul_inv(r));
}

ShiftOp diamond(const ShiftOp& T, const ShiftOp& U) { return ShiftOp(compose(T.indicator(), U.indicator())); }

DeltaOp bracket_iterate(const DeltaOp& Q, long n) {
    Series base = n < 0 ? comp_inv(Q.indicator()) : Q.indicator();
    Series acc = Series::variable(base.trunc());
    for (long i = 0; i < std::labs(n); ++i) acc = compose(acc, base);
    return validate_delta(ShiftOp(acc));
}

DeltaOp validate_delta(const ShiftOp& T) {
    std::size_t ord = T.indicator().order();
    if (ord == kOrderInf) throw NotDelta("indicator is zero");
    if (ord == 0) throw NotDelta("indicator has nonzero constant term " + T.indicator()[0].to_string());
    if (ord >= 2) throw NotDelta("indicator has order " + std::to_string(ord) + ", a delta operator needs order 1");
    return DeltaOp(T, T.indicator()[1]);
}

bool is_appell(const ShiftOp& T) { return !T.indicator()[0].is_zero(); }

std::variant<Poly, Rat> apply(Elementary op, const Rat& param, const Poly& p) {
    switch (op) {
        case Elementary::identity: return p;
        case Elementary::eval: return p(param);
        case Elementary::scalar: return param * p;
        case Elementary::mulx: return p.mulx();
        case Elementary::shift: return p.shifted(param);
        case Elementary::symmetry: return p.compose(Poly(std::vector<Rat>{Rat(0), Rat(-1)}));
        case Elementary::derivative: return p.derivative();
    }
    return p;
}

namespace named {

namespace {
// e^{a t} truncated at N.
Series exp_at(const Rat& a, std::size_t N) {
    Series s(N);
    Rat term(1);
    for (std::size_t k = 0; k <= N; ++k) {
        s[k] = term;
        term = term * a / Rat(static_cast<long>(k + 1));
    }
    return s;
}
}  // namespace

ShiftOp identity(std::size_t N) { return ShiftOp(Series::one(N)); }
ShiftOp shift(const Rat& a, std::size_t N) { return ShiftOp(exp_at(a, N)); }

ShiftOp bernoulli(std::size_t N) {
    // t/(e^t - 1) = 1 / ((e^t - 1)/t)
    return ShiftOp(mul_inv(shift_down(exp_at(Rat(1), N + 1) - Rat(1), 1)));
}

DeltaOp derivative(std::size_t N) { return validate_delta(ShiftOp(Series::variable(N))); }

DeltaOp stretch(const Rat& lambda, std::size_t N) {
    if (lambda.is_zero()) throw NotDelta("stretch by zero");
    return validate_delta(ShiftOp(Series::monomial(Rat(1) / lambda, 1, N)));
}

DeltaOp forward_difference(std::size_t N) { return validate_delta(ShiftOp(exp_at(Rat(1), N) - Rat(1))); }

DeltaOp backward_difference(std::size_t N) { return validate_delta(ShiftOp(-(exp_at(Rat(-1), N) - Rat(1)))); }

DeltaOp divided_difference(const Rat& h, std::size_t N) {
    if (h.is_zero()) return derivative(N);
    return validate_delta(ShiftOp((Rat(1) / h) * (exp_at(h, N) - Rat(1))));
}

DeltaOp log1p(std::size_t N) { return validate_delta(ShiftOp(log_series(Series::one(N) + Series::variable(N)))); }

DeltaOp laguerre(std::size_t N) {
    Series s(N);
    for (std::size_t k = 1; k <= N; ++k) s[k] = Rat(1);
    return validate_delta(ShiftOp(s));
}

DeltaOp catalan(std::size_t N) {
    Series s(N);
    if (N >= 1) s[1] = Rat(1);
    if (N >= 2) s[2] = Rat(-1);
    return validate_delta(ShiftOp(s));
}

DeltaOp abel(const Rat& a, std::size_t N) {
    return validate_delta(ShiftOp(Series::variable(N) * exp_at(a, N)));
}

DeltaOp degenerate_laguerre(std::size_t p, std::size_t N) {
    if (p == 0) throw NotDelta("degenerate Laguerre operator needs p >= 1");
    Series base = Series::one(N) - Series::monomial(Rat(static_cast<long>(p)), p, N);
    Series pw = pow_rat(base, Rat(-1, static_cast<long>(p)));
    return validate_delta(ShiftOp(Series::variable(N) * pw));
}

}  // namespace named

}  // namespace umbra
