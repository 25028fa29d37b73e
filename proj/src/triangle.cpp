#include "umbra/triangle.hpp"

#include <stdexcept>

#include "umbra/errors.hpp"

namespace umbra {

Triangle Triangle::identity(std::size_t max_row) {
    Triangle t(max_row);
    for (std::size_t n = 0; n <= max_row; ++n) t(n, n) = Rat(1);
    return t;
}

Poly Triangle::row_poly(std::size_t n) const {
    auto r = row(n);
    return Poly(std::vector<Rat>(r.begin(), r.end()));
}

void Triangle::set_row(std::size_t n, const Poly& p) {
    if (p.degree() > static_cast<std::ptrdiff_t>(n))
        throw IndexError("row " + std::to_string(n) + " cannot hold a polynomial of degree " +
                         std::to_string(p.degree()));
    auto r = row(n);
    for (std::size_t k = 0; k <= n; ++k) r[k] = p.coeff(k);
}

Triangle Triangle::truncated(std::size_t max_row) const {
    if (max_row > n_) throw IndexError("cannot extend triangle of size " + std::to_string(n_));
    Triangle t(max_row);
    for (std::size_t n = 0; n <= max_row; ++n)
        for (std::size_t k = 0; k <= n; ++k) t(n, k) = (*this)(n, k);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimensions differ");
    Matrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t l = 0; l < a.dim_; ++l) {
            if (a(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < a.dim_; ++j) r(i, j) += a(i, l) * b(l, j);
        }
    return r;
}

}  // namespace umbra
