#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "umbra/poly.hpp"
#include "umbra/rat.hpp"

namespace umbra {

// Lower-triangular coefficient array: row n holds the coefficients of x^0..x^n.
class Triangle {
public:
    explicit Triangle(std::size_t max_row) : n_(max_row), data_((max_row + 1) * (max_row + 2) / 2) {}
    static Triangle identity(std::size_t max_row);

    std::size_t max_row() const { return n_; }
    const Rat& operator()(std::size_t n, std::size_t k) const { return data_[offset(n) + k]; }
    Rat& operator()(std::size_t n, std::size_t k) { return data_[offset(n) + k]; }
    std::span<const Rat> row(std::size_t n) const { return {data_.data() + offset(n), n + 1}; }
    std::span<Rat> row(std::size_t n) { return {data_.data() + offset(n), n + 1}; }

    Poly row_poly(std::size_t n) const;
    void set_row(std::size_t n, const Poly& p);  // p must have degree <= n
    Triangle truncated(std::size_t max_row) const;

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    static std::size_t offset(std::size_t n) { return n * (n + 1) / 2; }
    std::size_t n_;
    std::vector<Rat> data_;
};

// Dense square matrix, row-major.
class Matrix {
public:
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    std::size_t dim() const { return dim_; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t dim_;
    std::vector<Rat> data_;
};

}  // namespace umbra
