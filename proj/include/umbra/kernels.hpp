#pragma once

// Data-parallel kernels. Each has a plain serial twin in umbra::kernels::serial that
// the tests and the benchmark compare against.

#include "umbra/series.hpp"
#include "umbra/triangle.hpp"

namespace umbra::kernels {

// Truncated Cauchy product to min(trunc f, trunc g).
Series mul(const Series& f, const Series& g);

// Triangle of the operator "outer after inner":
// out(n,k) = sum_j outer(j,k) * inner(n,j).
Triangle compose(const Triangle& outer, const Triangle& inner);

// Inverse of a lower-triangular array with nonzero diagonal. Columns are solved independently.
Triangle invert(const Triangle& t);

namespace serial {
Series mul(const Series& f, const Series& g);
Triangle compose(const Triangle& outer, const Triangle& inner);
Triangle invert(const Triangle& t);
}  // namespace serial

}  // namespace umbra::kernels
