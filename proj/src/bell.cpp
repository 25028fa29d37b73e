#include "umbra/bell.hpp"

#include "umbra/fps.hpp"

namespace umbra {

namespace {

void check_args(std::size_t n, std::size_t k, std::size_t have) {
    if (k > n) throw IndexError("B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs k <= n");
    std::size_t need = k == 0 ? 0 : n - k + 1;
    if (have < need)
        throw IndexError("B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " + std::to_string(need) +
                         " arguments, got " + std::to_string(have));
}

Series egf(std::size_t n, std::span<const Rat> a) {
    Series f(n);
    for (std::size_t i = 1; i <= n && i <= a.size(); ++i) f[i] = a[i - 1] / factorial(i);
    return f;
}

}  // namespace

Rat partial_bell(std::size_t n, std::size_t k, std::span<const Rat> a) {
    check_args(n, k, a.size());
    return partial_bell_table<Rat>(n, k, a, Rat(0), Rat(1))[n][k];
}

Rat complete_bell(std::size_t n, std::span<const Rat> a) {
    if (a.size() < n) throw IndexError("B_" + std::to_string(n) + " needs " + std::to_string(n) + " arguments");
    auto B = partial_bell_table<Rat>(n, n, a, Rat(0), Rat(1));
    Rat sum;
    for (std::size_t k = 0; k <= n; ++k) sum += B[n][k];
    if (sum != complete_bell_series(n, a))
        throw ConsistencyError("complete Bell polynomial routes disagree at n = " + std::to_string(n));
    return sum;
}

Rat partial_bell_series(std::size_t n, std::size_t k, std::span<const Rat> a) {
    check_args(n, k, a.size());
    Series fk = pow_int(egf(n, a), static_cast<long>(k));
    return factorial(n) * fk[n] / factorial(k);
}

Rat complete_bell_series(std::size_t n, std::span<const Rat> a) {
    if (a.size() < n) throw IndexError("B_" + std::to_string(n) + " needs " + std::to_string(n) + " arguments");
    return factorial(n) * exp_series(egf(n, a))[n];
}

}  // namespace umbra
