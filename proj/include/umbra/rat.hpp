#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbra {

// Exact rational, always kept in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    template <std::integral I>
    Rat(I v) : v_(static_cast<long>(v)) {}
    Rat(long num, long den);
    explicit Rat(mpq_class v);

    // Accepts "p" or "p/q" with an optional leading sign.
    static Rat parse(std::string_view text);

    const mpq_class& mpq() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const;
    long to_long() const;  // requires is_integer() and fit in long
    std::string to_string() const;
    std::string to_decimal(int digits = 15) const;

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow(const Rat& base, long e);
Rat factorial(std::size_t n);
// Generalized binomial coefficient top*(top-1)*...*(top-k+1)/k!.
Rat binom(const Rat& top, std::size_t k);
// Integer binomial, zero outside 0 <= k <= n.
Rat binom(long n, long k);

}  // namespace umbra
