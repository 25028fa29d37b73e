#pragma once

#include <cstddef>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/poly.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

// Bernoulli numbers B_0..B_order from the reciprocal of (e^t - 1)/t, so B_1 = -1/2.
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t order);
    std::size_t order() const { return b_.size() - 1; }
    const Rat& operator[](std::size_t k) const;

private:
    std::vector<Rat> b_;
};

// Right inverse Q^{-1}_{(a)} of a delta operator, normalized so every result vanishes at a.
class SigmaOp {
public:
    // Polynomials up to degree `depth` can be summed; Q must be known to trunc depth + 2.
    SigmaOp(DeltaOp Q, Rat a, std::size_t depth);

    const DeltaOp& delta() const { return q_; }
    const Rat& anchor() const { return a_; }
    std::size_t depth() const { return depth_; }
    const UmbralOp& basic_set() const { return phi_; }

private:
    DeltaOp q_;
    Rat a_;
    std::size_t depth_;
    UmbralOp phi_;
};

// Q^{-1}_{(a)} p by both routes below; ConsistencyError if they differ.
Poly sigma_apply(const SigmaOp& S, const Poly& p);
// -sum_{n>=1} p_n(a - x)/n! Q^{n-1} p
Poly sigma_apply_series(const SigmaOp& S, const Poly& p);
// Expand p(x + a) in the basic set, raise each index by one, shift back by -a.
Poly sigma_apply_basic(const SigmaOp& S, const Poly& p);

// sum_{k=0}^{x-1} k^n, checked against the difference-operator sum and the Bernoulli-polynomial integral.
Poly faulhaber(std::size_t n);

// sum_a p - integral_a p, computed as a difference of sums and by the Bernoulli series; both must agree.
Poly euler_maclaurin_residual(const Poly& p, const Rat& a);

// Value of sum_a p at x.
Rat frac_sum_eval(const Poly& p, const Rat& a, const Rat& x);

// Bernoulli polynomial of the second kind: integral of the falling factorial (t)_n over [x, x+1].
Poly bernoulli2_poly(std::size_t n);

// For monomials up to degree depth:
//   Ev_a Q^{-1}_{(a)} = 0,
//   (A Q)^{-1}_{(a)} = Q^{-1}_{(a)} A^{-1} for the Appell operators A = E and A = R/Q,
//   Q^{-1}_{(a)} = R^{-1}_{(a)} (R/Q),
//   Q/R = Q R^{-1}_{(a)}.
bool sigma_identities_check(const DeltaOp& Q, const DeltaOp& R, const Rat& a, std::size_t depth);

}  // namespace umbra
