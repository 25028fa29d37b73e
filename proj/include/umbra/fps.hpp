#pragma once

// Arithmetic on truncated power series. Results never claim more precision than their inputs.

#include <cstddef>

#include "umbra/rat.hpp"
#include "umbra/series.hpp"

namespace umbra {

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series operator*(const Series& f, const Series& g);
Series operator*(const Rat& s, const Series& f);
Series operator+(const Series& f, const Rat& c);
Series operator-(const Series& f, const Rat& c);

Series derive(const Series& f);  // trunc drops by one
Series integrate(const Series& f, const Rat& c0 = Rat(0));  // keeps trunc; top term of the integral dropped

// Multiply or divide by t^k. Dividing needs order(f) >= k and lowers trunc by k.
Series shift_up(const Series& f, std::size_t k);
Series shift_down(const Series& f, std::size_t k);

// f(g(t)); needs order(g) >= 1.
Series compose(const Series& f, const Series& g);
// Reciprocal; needs f(0) != 0.
Series mul_inv(const Series& f);
// Compositional inverse; needs order(f) == 1.
Series comp_inv(const Series& f);
// f^e for integer e; negative e needs f(0) != 0.
Series pow_int(const Series& f, long e);
// f^r for rational r; needs f(0) == 1.
Series pow_rat(const Series& f, const Rat& r);
Series exp_series(const Series& f);  // needs f(0) == 0
Series log_series(const Series& f);  // needs f(0) == 1

// [t^n] (f^{-1})^k = (k/n) [x^{n-k}] (x/f)^n for n >= k, with order(f) == 1. Result has trunc N.
Series lagrange_power(const Series& f, std::size_t k, std::size_t N);

}  // namespace umbra
