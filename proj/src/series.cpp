#include "umbra/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbra/errors.hpp"

namespace umbra {

Series::Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::constant(const Rat& c, std::size_t trunc) {
    Series s(trunc);
    s.c_[0] = c;
    return s;
}

Series Series::monomial(const Rat& c, std::size_t k, std::size_t trunc) {
    Series s(trunc);
    if (k <= trunc) s.c_[k] = c;
    return s;
}

const Rat& Series::at(std::size_t k) const {
    if (k > trunc())
        throw TruncationError("coefficient " + std::to_string(k) + " requested from series truncated at " +
                              std::to_string(trunc()));
    return c_[k];
}

std::size_t Series::order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return k;
    return kOrderInf;
}

Series Series::truncated(std::size_t n) const {
    if (n > trunc())
        throw TruncationError("cannot extend series truncated at " + std::to_string(trunc()) + " to " +
                              std::to_string(n));
    return Series(std::vector<Rat>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

bool agree(const Series& f, const Series& g) {
    std::size_t n = std::min(f.trunc(), g.trunc());
    for (std::size_t k = 0; k <= n; ++k)
        if (f[k] != g[k]) return false;
    return true;
}

}  // namespace umbra
