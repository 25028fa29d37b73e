#include "umbra/rat.hpp"

#include <stdexcept>

namespace umbra {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t slash = s.find('/');
    auto check_int = [&](std::string_view part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    std::string num = s.substr(0, slash);
    check_int(num, true);
    if (num[0] == '+') num.erase(0, 1);
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(num));
    } else {
        std::string den = s.substr(slash + 1);
        check_int(den, false);
        mpz_class d(den);
        if (sgn(d) == 0) throw std::domain_error("zero denominator in '" + s + "'");
        q = mpq_class(mpz_class(num), d);
    }
    return Rat(std::move(q));
}

bool Rat::is_integer() const { return v_.get_den() == 1; }

long Rat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("rational " + to_string() + " is not a machine integer");
    return v_.get_num().get_si();
}

std::string Rat::to_string() const { return v_.get_str(); }

std::string Rat::to_decimal(int digits) const {
    mpf_class f(v_, 256);
    mp_exp_t exp;
    std::string m = f.get_str(exp, 10, digits);
    if (m.empty()) return "0";
    bool neg = m[0] == '-';
    if (neg) m.erase(0, 1);
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + m;
    } else if (static_cast<std::size_t>(exp) >= m.size()) {
        out = m + std::string(static_cast<std::size_t>(exp) - m.size(), '0');
    } else {
        out = m.substr(0, exp) + "." + m.substr(exp);
    }
    return neg ? "-" + out : out;
}

Rat& Rat::operator+=(const Rat& o) { v_ += o.v_; return *this; }
Rat& Rat::operator-=(const Rat& o) { v_ -= o.v_; return *this; }
Rat& Rat::operator*=(const Rat& o) { v_ *= o.v_; return *this; }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat pow(const Rat& base, long e) {
    if (e < 0) return Rat(1) / pow(base, -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.mpq().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.mpq().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(mpq_class(n, d));
}

Rat factorial(std::size_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(mpq_class(f));
}

Rat binom(const Rat& top, std::size_t k) {
    Rat r(1);
    for (std::size_t i = 0; i < k; ++i) r *= (top - Rat(static_cast<long>(i))) / Rat(static_cast<long>(i + 1));
    return r;
}

Rat binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(mpq_class(b));
}

}  // namespace umbra
