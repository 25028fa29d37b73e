#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/rat.hpp"
#include "umbra/series.hpp"

namespace umbra {

// Table B[m][j] = B_{m,j}(a_1, a_2, ...) for m <= n, j <= k, over any commutative ring T
// with T+T, T*T and Rat*T. a[0] holds a_1.
// Recurrence: B_{m,j} = sum_{i=1}^{m-j+1} binom(m-1, i-1) a_i B_{m-i,j-1}.
template <class T>
std::vector<std::vector<T>> partial_bell_table(std::size_t n, std::size_t k, std::span<const T> a, const T& zero,
                                               const T& one) {
    std::vector<std::vector<T>> B(n + 1, std::vector<T>(k + 1, zero));
    B[0][0] = one;
    for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t m = j; m <= n; ++m) {
            T acc = zero;
            for (std::size_t i = 1; i + j <= m + 1; ++i) {
                if (i > a.size()) break;
                acc = acc + binom(static_cast<long>(m - 1), static_cast<long>(i - 1)) * (a[i - 1] * B[m - i][j - 1]);
            }
            B[m][j] = acc;
        }
    return B;
}

// B_{n,k}(a_1..a_{n-k+1}); a[0] is a_1. IndexError if k > n or too few arguments.
Rat partial_bell(std::size_t n, std::size_t k, std::span<const Rat> a);
// B_n(a_1..a_n) = sum_k B_{n,k}; checked against n! [x^n] e^{f}.
Rat complete_bell(std::size_t n, std::span<const Rat> a);

// Series routes: f = sum a_i x^i / i!, B_{n,k} = n! [x^n] f^k / k!, B_n = n! [x^n] e^f.
Rat partial_bell_series(std::size_t n, std::size_t k, std::span<const Rat> a);
Rat complete_bell_series(std::size_t n, std::span<const Rat> a);

}  // namespace umbra
