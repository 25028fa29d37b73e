#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/triangle.hpp"

namespace umbra {

// Umbral operator x^n -> p_n(x), where (p_n) is the basic set of some delta operator.
class UmbralOp {
public:
    // Checks p_0 = 1, p_n(0) = 0 for n >= 1 and a nonzero diagonal.
    explicit UmbralOp(Triangle tri, std::optional<DeltaOp> delta = std::nullopt);

    const Triangle& triangle() const { return tri_; }
    std::size_t max_row() const { return tri_.max_row(); }
    Poly poly(std::size_t n) const { return tri_.row_poly(n); }
    const std::optional<DeltaOp>& cached_delta() const { return delta_; }
    DeltaOp delta() const;  // cached, or recovered from column 1

private:
    Triangle tri_;
    std::optional<DeltaOp> delta_;
};

// Sheffer set s_n = A p_n for an invertible shift-invariant A.
struct ShefferOp {
    Triangle tri;
    DeltaOp delta;
    ShiftOp appell;
};

enum class BasicRoute { transfer, steffensen, recurrence, genfunc, km };
inline constexpr BasicRoute kAllRoutes[] = {BasicRoute::transfer, BasicRoute::steffensen, BasicRoute::recurrence,
                                            BasicRoute::genfunc, BasicRoute::km};
const char* route_name(BasicRoute r);

// Basic set of Q up to degree N. The transfer route needs Q known to trunc N+1, the others to N.
UmbralOp basic(const DeltaOp& Q, std::size_t N, BasicRoute route);

// Triangle with entries n!/k! [t^n] g^k: the umbral operator whose delta has indicator g^{-1}.
Triangle power_triangle(const Series& g, std::size_t N);

DeltaOp delta_of(const Triangle& tri);

Triangle tri_compose(const Triangle& outer, const Triangle& inner);
Triangle tri_invert(const Triangle& t);
Triangle tri_power(const Triangle& t, long e);

enum class TransformMode { row, column };
// row:    out[n] = sum_{k=bound}^{n} t(n,k) a[k], for n >= bound (zero below).
// column: out[k] = sum_{n=k}^{bound} t(n,k) a[n], for k <= bound (zero above).
std::vector<Rat> transform_seq(const Triangle& t, std::span<const Rat> a, TransformMode mode, std::size_t bound);

bool is_binomial_type(const Triangle& t);

ShefferOp sheffer(const ShiftOp& A, const UmbralOp& phi);
// Sheffer set for C^u, with C(0) = 1.
ShefferOp cross(const ShiftOp& C, const Rat& u, const UmbralOp& phi);

// Coefficients c with phi_n = sum_k c(n,k) psi_k.
Triangle connection_constants(const UmbralOp& phi, const UmbralOp& psi);

// Entries binom(n,k) p_{n-k}(k).
UmbralOp niederhausen(const UmbralOp& phi);

// a^{(n)}_j for j = 0..n-1, where (t/Q(t))^n = sum_j a^{(n)}_j t^j / j!.
std::vector<Rat> power_coeffs(const DeltaOp& Q, std::size_t n);
Triangle coeff_via_ratio(const DeltaOp& Q, std::size_t N);

// phi X^n = sum_k c(n,k) X^k U^k V^n phi, tested on x^m for m <= N - n.
bool special_class_check(const UmbralOp& phi, const ShiftOp& U, const ShiftOp& V, std::size_t n);
// phi X^n = sum_k X^k B_{n,k}(a_1, ...) phi with a_i = (Q^{-1})^{(i)}(Q).
bool commutation_expansion_check(const UmbralOp& phi, std::size_t n);
// s_n(x+y) = sum_k binom(n,k) s_k(x) p_{n-k}(y) on a rational grid.
bool sheffer_identity_check(const ShefferOp& s, const UmbralOp& phi);
// (n - X Q/Q') p_n = 0 for every row.
bool differential_equation_check(const UmbralOp& phi);

// Distinct rationals used as evaluation grids.
std::vector<Rat> grid_points(std::size_t count);

}  // namespace umbra
