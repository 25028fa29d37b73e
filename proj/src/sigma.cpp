#include "umbra/sigma.hpp"

#include "umbra/errors.hpp"
#include "umbra/fps.hpp"

namespace umbra {

namespace {

std::size_t degree_of(const Poly& p) { return p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()); }

void check_depth(const SigmaOp& S, const Poly& p) {
    if (!p.is_zero() && degree_of(p) > S.depth())
        throw TruncationError("polynomial of degree " + std::to_string(p.degree()) +
                              " exceeds the summation depth " + std::to_string(S.depth()));
}

Poly reflect_about(const Poly& q, const Rat& a) { return q.compose(Poly(std::vector<Rat>{a, Rat(-1)})); }

}  // namespace

BernoulliTable::BernoulliTable(std::size_t order) {
    ShiftOp b = named::bernoulli(order);
    b_.resize(order + 1);
    for (std::size_t k = 0; k <= order; ++k) b_[k] = b.indicator()[k] * factorial(k);
}

const Rat& BernoulliTable::operator[](std::size_t k) const {
    if (k >= b_.size()) throw IndexError("Bernoulli number " + std::to_string(k) + " past the table");
    return b_[k];
}

SigmaOp::SigmaOp(DeltaOp Q, Rat a, std::size_t depth)
    : q_(std::move(Q)), a_(std::move(a)), depth_(depth), phi_(basic(q_, depth + 1, BasicRoute::transfer)) {
#ifndef NDEBUG
    for (std::size_t m = 0; m <= depth_; ++m) {
        Poly xm = Poly::monomial(Rat(1), m);
        Poly s = sigma_apply(*this, xm);
        if (apply(q_, s) != xm) throw ConsistencyError("Q Q^{-1} is not the identity");
        if (sigma_apply(*this, apply(q_, xm)) != xm - Poly::constant(xm(a_)))
            throw ConsistencyError("Q^{-1} Q is not 1 - Ev_a");
    }
#endif
}

Poly sigma_apply_series(const SigmaOp& S, const Poly& p) {
    check_depth(S, p);
    if (p.is_zero()) return p;
    std::size_t d = degree_of(p);
    Poly out;
    Poly qp = p;  // Q^{n-1} p
    for (std::size_t n = 1; n <= d + 1; ++n) {
        out -= (Rat(1) / factorial(n)) * (reflect_about(S.basic_set().poly(n), S.anchor()) * qp);
        qp = apply(S.delta(), qp);
    }
    return out;
}

Poly sigma_apply_basic(const SigmaOp& S, const Poly& p) {
    check_depth(S, p);
    if (p.is_zero()) return p;
    std::size_t d = degree_of(p);
    const Triangle& tri = S.basic_set().triangle();
    Triangle inv = tri_invert(tri.truncated(d));
    Poly shifted = p.shifted(S.anchor());
    Poly out;
    for (std::size_t k = 0; k <= d; ++k) {
        // c_k = sum_j [x^j] p(x+a) * inv(j,k)
        Rat c;
        for (std::size_t j = k; j <= d; ++j) c += shifted.coeff(j) * inv(j, k);
        if (c.is_zero()) continue;
        out += (c / Rat(static_cast<long>(k + 1))) * tri.row_poly(k + 1);
    }
    return out.shifted(-S.anchor());
}

Poly sigma_apply(const SigmaOp& S, const Poly& p) {
    Poly a = sigma_apply_series(S, p);
    if (a != sigma_apply_basic(S, p)) throw ConsistencyError("sigma routes disagree on " + p.to_string());
    return a;
}

Poly faulhaber(std::size_t n) {
    BernoulliTable B(n);
    Poly f;
    for (std::size_t k = 0; k <= n; ++k)
        f += (binom(static_cast<long>(n + 1), static_cast<long>(k)) * B[k]) * Poly::monomial(Rat(1), n + 1 - k);
    f = Rat(1, static_cast<long>(n + 1)) * f;
    SigmaOp S(named::forward_difference(n + 3), Rat(0), n);
    if (sigma_apply(S, Poly::monomial(Rat(1), n)) != f)
        throw ConsistencyError("Faulhaber formula disagrees with the difference sum at n = " + std::to_string(n));
    Poly bn = apply(named::bernoulli(n), Poly::monomial(Rat(1), n));
    if (bn.antiderivative() != f)
        throw ConsistencyError("Faulhaber formula disagrees with the Bernoulli integral at n = " + std::to_string(n));
    return f;
}

Poly euler_maclaurin_residual(const Poly& p, const Rat& a) {
    std::size_t d = degree_of(p);
    SigmaOp sum(named::forward_difference(d + 2), a, d);
    SigmaOp integral(named::derivative(d + 2), a, d);
    Poly via_sigma = sigma_apply(sum, p) - sigma_apply(integral, p);
    BernoulliTable B(d + 1);
    Poly via_bernoulli;
    Poly q = p;  // p^{(k-1)}
    for (std::size_t k = 1; k <= d + 1 && !q.is_zero(); ++k) {
        via_bernoulli += (B[k] / factorial(k)) * (q - Poly::constant(q(a)));
        q = q.derivative();
    }
    if (via_sigma != via_bernoulli) throw ConsistencyError("Euler-Maclaurin routes disagree on " + p.to_string());
    return via_sigma;
}

Rat frac_sum_eval(const Poly& p, const Rat& a, const Rat& x) {
    std::size_t d = degree_of(p);
    SigmaOp S(named::forward_difference(d + 2), a, d);
    return sigma_apply(S, p)(x);
}

Poly bernoulli2_poly(std::size_t n) {
    Poly falling = Poly::constant(Rat(1));
    for (std::size_t i = 0; i < n; ++i) falling = falling * Poly(std::vector<Rat>{Rat(-static_cast<long>(i)), Rat(1)});
    // (Delta/D) applied to (x)_n
    ShiftOp inv_b(shift_down(named::forward_difference(n + 1).indicator(), 1));
    Poly psi = apply(inv_b, falling);
    Poly P = falling.antiderivative();
    if (psi != P.shifted(Rat(1)) - P)
        throw ConsistencyError("second-kind Bernoulli routes disagree at n = " + std::to_string(n));
    return psi;
}

bool sigma_identities_check(const DeltaOp& Q, const DeltaOp& R, const Rat& a, std::size_t depth) {
    std::size_t T = depth + 2;
    SigmaOp Sq(Q, a, depth);
    SigmaOp Sr(R, a, depth);
    ShiftOp r_over_q = divide(R, Q);
    ShiftOp q_over_r = divide(Q, R);
    ShiftOp E = named::shift(Rat(1), T);
    DeltaOp EQ = validate_delta(E * Q.op());
    SigmaOp Seq(EQ, a, depth);
    ShiftOp Einv = inverse(E);
    for (std::size_t m = 0; m <= depth; ++m) {
        Poly xm = Poly::monomial(Rat(1), m);
        Poly sq = sigma_apply(Sq, xm);
        if (!sq(a).is_zero()) return false;
        if (sigma_apply(Seq, xm) != sigma_apply(Sq, apply(Einv, xm))) return false;
        if (sigma_apply(Sr, xm) != sigma_apply(Sq, apply(q_over_r, xm))) return false;
        if (sq != sigma_apply(Sr, apply(r_over_q, xm))) return false;
        if (apply(q_over_r, xm) != apply(Q, sigma_apply(Sr, xm))) return false;
    }
    return true;
}

}  // namespace umbra
