#pragma once

#include <cstddef>

#include "umbra/operators.hpp"
#include "umbra/series.hpp"
#include "umbra/triangle.hpp"

namespace umbra {

// m-fold compositional iterate; negative m iterates the inverse.
Series iterate_int(const Series& f, long m);

// Iterative logarithm f_* of a unitary series, computed by two routes that must agree.
Series itlog(const Series& f);
// sum_p (-1)^{p-1}/p (C_f - 1)^p x, with C_f the composition operator.
Series itlog_operator_route(const Series& f);
// sum_n x^n/n! sum_p (-1)^{p-1}/p [(phi - 1)^p](n, 1), phi the triangle of f.
Series itlog_coefficient_route(const Series& f);

// f^s(x)^k / k! to trunc N for unitary f, from sum_p binom(s,p) (phi - 1)^p and from
// sum_p binom(s,p) binom(n-k-s, n-k-p) phi^p; the two must agree.
Series frac_iterate(const Series& f, const Rat& s, std::size_t k, std::size_t N);

// Entry (n,k) of (phi - 1)^p as a sum over chains k = j_0 < j_1 < ... < j_p = n.
Rat minus_one_power_coeff(const Triangle& phi, std::size_t p, std::size_t n, std::size_t k);
// Whole triangle of (phi - 1)^p.
Triangle minus_one_power(const Triangle& phi, std::size_t p);
// Entry (n,k) of phi^s as a sum over chains k = j_0 <= j_1 <= ... <= j_s = n.
Rat integer_power_chain_coeff(const Triangle& phi, std::size_t s, std::size_t n, std::size_t k);

// Triangle of phi^s for the basic set of a unitary Q, via exp(-s X Q_*) and via sum_p binom(s,p) (phi - 1)^p.
Triangle phi_pow(const DeltaOp& Q, const Rat& s, std::size_t N);

// f^r o f^s = f^{r+s} and (f^r)^s = f^{rs}.
bool group_law_check(const Series& f, const Rat& r, const Rat& s, std::size_t N);

// Entries k!/n! phi(n,k).
Matrix jabotinsky(const Triangle& phi);

}  // namespace umbra
