#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "umbra/rat.hpp"

namespace umbra {

// Order of the zero series.
inline constexpr std::size_t kOrderInf = std::numeric_limits<std::size_t>::max();

// Truncated formal power series: coefficients 0..trunc are exact, nothing beyond is known.
class Series {
public:
    explicit Series(std::size_t trunc) : c_(trunc + 1) {}
    explicit Series(std::vector<Rat> coeffs);

    static Series zero(std::size_t trunc) { return Series(trunc); }
    static Series constant(const Rat& c, std::size_t trunc);
    static Series one(std::size_t trunc) { return constant(Rat(1), trunc); }
    static Series monomial(const Rat& c, std::size_t k, std::size_t trunc);
    static Series variable(std::size_t trunc) { return monomial(Rat(1), 1, trunc); }

    std::size_t trunc() const { return c_.size() - 1; }
    const Rat& operator[](std::size_t k) const { return c_[k]; }
    Rat& operator[](std::size_t k) { return c_[k]; }
    const Rat& at(std::size_t k) const;  // TruncationError past trunc
    std::span<const Rat> coeffs() const { return c_; }

    std::size_t order() const;  // kOrderInf for the zero series
    bool is_zero() const { return order() == kOrderInf; }
    Series truncated(std::size_t n) const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rat> c_;
};

// Coefficient-wise agreement up to the smaller truncation.
bool agree(const Series& f, const Series& g);

}  // namespace umbra
