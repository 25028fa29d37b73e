#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "umbra/rat.hpp"

namespace umbra {

// Degree of the zero polynomial.
inline constexpr std::ptrdiff_t kDegreeNegInf = std::numeric_limits<std::ptrdiff_t>::min();

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
    static Poly monomial(const Rat& c, std::size_t k);
    static Poly x() { return monomial(Rat(1), 1); }

    bool is_zero() const { return c_.empty(); }
    std::ptrdiff_t degree() const;
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    std::span<const Rat> coeffs() const { return c_; }

    Rat operator()(const Rat& x) const;
    Poly compose(const Poly& inner) const;
    Poly shifted(const Rat& a) const;  // p(x + a)
    Poly derivative() const;
    Poly antiderivative() const;  // zero constant term
    Poly mulx() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace umbra
