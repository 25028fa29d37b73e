#include "umbra/poly.hpp"

#include <algorithm>

namespace umbra {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, std::size_t k) {
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

std::ptrdiff_t Poly::degree() const {
    return c_.empty() ? kDegreeNegInf : static_cast<std::ptrdiff_t>(c_.size()) - 1;
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::shifted(const Rat& a) const { return compose(Poly(std::vector<Rat>{a, Rat(1)})); }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rat> d(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / Rat(static_cast<long>(k + 1));
    return Poly(std::move(d));
}

Poly Poly::mulx() const {
    if (c_.empty()) return Poly();
    std::vector<Rat> d(c_.size() + 1);
    std::copy(c_.begin(), c_.end(), d.begin() + 1);
    return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> r(p.c_);
    for (auto& c : r) c *= s;
    return Poly(std::move(r));
}

Poly Poly::operator-() const { return Rat(-1) * *this; }

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Rat c = c_[k];
        if (!s.empty()) {
            s += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        if (k == 0) {
            s += c.to_string();
            continue;
        }
        if (c == Rat(-1)) s += "-";
        else if (c != Rat(1)) s += c.to_string() + "*";
        s += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return s;
}

}  // namespace umbra
