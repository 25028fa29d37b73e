#include "umbra/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbra/errors.hpp"

namespace umbra::kernels {

namespace {

// Below these sizes thread start-up costs more than the arithmetic.
constexpr long kSeriesParallelMin = 48;
constexpr long kTriangleParallelMin = 24;

void mul_coeff(const Series& f, const Series& g, Series& out, std::size_t n) {
    Rat acc;
    for (std::size_t k = 0; k <= n; ++k) {
        if (f[k].is_zero()) continue;
        acc += f[k] * g[n - k];
    }
    out[n] = std::move(acc);
}

void compose_entry(const Triangle& outer, const Triangle& inner, Triangle& out, std::size_t n, std::size_t k) {
    Rat acc;
    for (std::size_t j = k; j <= n; ++j) {
        if (inner(n, j).is_zero()) continue;
        acc += outer(j, k) * inner(n, j);
    }
    out(n, k) = std::move(acc);
}

void check_same_size(const Triangle& a, const Triangle& b) {
    if (a.max_row() != b.max_row())
        throw std::invalid_argument("triangles of different size: " + std::to_string(a.max_row()) + " vs " +
                                    std::to_string(b.max_row()));
}

void check_diagonal(const Triangle& t) {
    for (std::size_t n = 0; n <= t.max_row(); ++n)
        if (t(n, n).is_zero()) throw SingularTriangle("zero diagonal entry in row " + std::to_string(n));
}

// Column k of the inverse: forward substitution down rows k..N.
void invert_column(const Triangle& t, Triangle& inv, std::size_t k) {
    inv(k, k) = Rat(1) / t(k, k);
    for (std::size_t n = k + 1; n <= t.max_row(); ++n) {
        Rat acc;
        for (std::size_t j = k; j < n; ++j) {
            if (t(n, j).is_zero()) continue;
            acc += t(n, j) * inv(j, k);
        }
        inv(n, k) = -acc / t(n, n);
    }
}

}  // namespace

Series mul(const Series& f, const Series& g) {
    std::size_t n = std::min(f.trunc(), g.trunc());
    Series out(n);
    long len = static_cast<long>(n) + 1;
#pragma omp parallel for schedule(dynamic) if (len >= kSeriesParallelMin)
    for (long i = 0; i < len; ++i) mul_coeff(f, g, out, static_cast<std::size_t>(i));
    return out;
}

Triangle compose(const Triangle& outer, const Triangle& inner) {
    check_same_size(outer, inner);
    Triangle out(outer.max_row());
    long rows = static_cast<long>(outer.max_row()) + 1;
#pragma omp parallel for schedule(dynamic) if (rows >= kTriangleParallelMin)
    for (long n = rows - 1; n >= 0; --n)
        for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
            compose_entry(outer, inner, out, static_cast<std::size_t>(n), k);
    return out;
}

Triangle invert(const Triangle& t) {
    check_diagonal(t);
    Triangle inv(t.max_row());
    long cols = static_cast<long>(t.max_row()) + 1;
#pragma omp parallel for schedule(dynamic) if (cols >= kTriangleParallelMin)
    for (long k = 0; k < cols; ++k) invert_column(t, inv, static_cast<std::size_t>(k));
    return inv;
}

namespace serial {

Series mul(const Series& f, const Series& g) {
    std::size_t n = std::min(f.trunc(), g.trunc());
    Series out(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += f[i] * g[j];
    return out;
}

// Scatter form: row n of inner, pushed through the rows of outer.
Triangle compose(const Triangle& outer, const Triangle& inner) {
    check_same_size(outer, inner);
    Triangle out(outer.max_row());
    for (std::size_t n = 0; n <= outer.max_row(); ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t k = 0; k <= j; ++k) out(n, k) += inner(n, j) * outer(j, k);
    return out;
}

// Row-by-row forward substitution.
Triangle invert(const Triangle& t) {
    check_diagonal(t);
    std::size_t N = t.max_row();
    Triangle inv(N);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            Rat acc = n == k ? Rat(1) : Rat(0);
            for (std::size_t j = k; j < n; ++j) acc -= t(n, j) * inv(j, k);
            inv(n, k) = acc / t(n, n);
        }
    return inv;
}

}  // namespace serial

}  // namespace umbra::kernels
