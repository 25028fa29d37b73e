#pragma once

#include <cstddef>
#include <variant>

#include "umbra/poly.hpp"
#include "umbra/rat.hpp"
#include "umbra/series.hpp"

namespace umbra {

// Shift-invariant operator T = sum_k a_k D^k, stored through its indicator sum_k a_k t^k.
class ShiftOp {
public:
    explicit ShiftOp(Series indicator) : ind_(std::move(indicator)) {}
    const Series& indicator() const { return ind_; }
    std::size_t trunc() const { return ind_.trunc(); }
    friend bool operator==(const ShiftOp&, const ShiftOp&) = default;

private:
    Series ind_;
};

// Shift-invariant operator with indicator of order exactly one; unit is the t coefficient.
class DeltaOp {
public:
    const ShiftOp& op() const { return op_; }
    const Series& indicator() const { return op_.indicator(); }
    const Rat& unit() const { return unit_; }
    bool unitary() const { return unit_ == Rat(1); }
    std::size_t trunc() const { return op_.trunc(); }
    operator const ShiftOp&() const { return op_; }
    friend bool operator==(const DeltaOp&, const DeltaOp&) = default;

private:
    DeltaOp(ShiftOp op, Rat unit) : op_(std::move(op)), unit_(std::move(unit)) {}
    friend DeltaOp validate_delta(const ShiftOp& T);
    ShiftOp op_;
    Rat unit_;
};

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b);  // composition
ShiftOp operator+(const ShiftOp& a, const ShiftOp& b);
ShiftOp operator-(const ShiftOp& a, const ShiftOp& b);
ShiftOp operator*(const Rat& s, const ShiftOp& a);
ShiftOp inverse(const ShiftOp& T);  // NotInvertible unless T is Appell
ShiftOp power(const ShiftOp& T, long e);

// T p; the indicator must be known at least to deg p.
Poly apply(const ShiftOp& T, const Poly& p);

ShiftOp pincherle(const ShiftOp& T);
// U/V: strip the common power of t, then multiply by the reciprocal.
ShiftOp divide(const ShiftOp& U, const ShiftOp& V);
// T diamond U: indicator composition T~(U~(t)).
ShiftOp diamond(const ShiftOp& T, const ShiftOp& U);
// Q^{[n]}; negative n iterates the compositional inverse.
DeltaOp bracket_iterate(const DeltaOp& Q, long n);

DeltaOp validate_delta(const ShiftOp& T);
bool is_appell(const ShiftOp& T);

enum class Elementary { identity, eval, scalar, mulx, shift, symmetry, derivative };
// eval yields a number; the rest yield polynomials. param is the point, scalar or shift amount.
std::variant<Poly, Rat> apply(Elementary op, const Rat& param, const Poly& p);

// Named operators, indicators truncated at N.
namespace named {
ShiftOp identity(std::size_t N);
ShiftOp shift(const Rat& a, std::size_t N);       // E^a
ShiftOp bernoulli(std::size_t N);                 // D / (E - 1)
DeltaOp derivative(std::size_t N);                // D
DeltaOp stretch(const Rat& lambda, std::size_t N);  // D / lambda
DeltaOp forward_difference(std::size_t N);        // E - 1
DeltaOp backward_difference(std::size_t N);      // 1 - E^{-1}
DeltaOp divided_difference(const Rat& h, std::size_t N);  // (E^h - 1)/h, D at h = 0
DeltaOp log1p(std::size_t N);                     // log(1 + D)
DeltaOp laguerre(std::size_t N);                  // D / (1 - D)
DeltaOp catalan(std::size_t N);                   // D (1 - D)
DeltaOp abel(const Rat& a, std::size_t N);        // D E^a
DeltaOp degenerate_laguerre(std::size_t p, std::size_t N);  // D (1 - p D^p)^{-1/p}
}  // namespace named

}  // namespace umbra
