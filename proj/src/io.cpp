#include "umbra/io.hpp"

#include <stdexcept>

namespace umbra::io {

namespace {

json rat_array(std::span<const Rat> v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(r.to_string());
    return a;
}

std::vector<Rat> rats(const json& a) {
    std::vector<Rat> v;
    for (const auto& e : a) v.push_back(Rat::parse(e.get<std::string>()));
    return v;
}

void need_kind(const json& j, const char* kind) {
    if (!j.is_object() || j.value("kind", "") != kind)
        throw std::invalid_argument(std::string("expected a JSON object of kind ") + kind);
}

}  // namespace

json to_json(const Series& s) { return {{"kind", "series"}, {"trunc", s.trunc()}, {"coeffs", rat_array(s.coeffs())}}; }

// The zero polynomial has degree null.
json to_json(const Poly& p) {
    json deg = p.degree() < 0 ? json(nullptr) : json(p.degree());
    return {{"kind", "poly"}, {"degree", deg}, {"coeffs", rat_array(p.coeffs())}};
}

json to_json(const ShiftOp& op) { return {{"kind", "shiftop"}, {"indicator", to_json(op.indicator())}}; }

json to_json(const DeltaOp& op) {
    json j = to_json(op.op());
    j["unit"] = op.unit().to_string();
    return j;
}

json to_json(const Triangle& t) {
    json rows = json::array();
    for (std::size_t n = 0; n <= t.max_row(); ++n) rows.push_back(rat_array(t.row(n)));
    return {{"kind", "triangle"}, {"n", t.max_row()}, {"rows", rows}};
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) r.push_back(m(i, j).to_string());
        rows.push_back(r);
    }
    return {{"kind", "matrix"}, {"n", m.dim()}, {"rows", rows}};
}

json to_json(const Report& r) {
    json a = json::array();
    for (const auto& e : r.results) {
        json o = {{"identity", e.identity}, {"family", e.family}, {"params", e.params},
                  {"status", e.passed ? "pass" : "fail"}};
        if (e.counterexample) o["counterexample"] = *e.counterexample;
        a.push_back(o);
    }
    return a;
}

Series series_from_json(const json& j) {
    need_kind(j, "series");
    Series s(rats(j.at("coeffs")));
    if (s.trunc() != j.at("trunc").get<std::size_t>())
        throw std::invalid_argument("series trunc does not match its coefficient count");
    return s;
}

Poly poly_from_json(const json& j) {
    need_kind(j, "poly");
    Poly p(rats(j.at("coeffs")));
    const json& deg = j.at("degree");
    if (deg.is_null() ? p.degree() >= 0 : p.degree() != deg.get<long>()) throw std::invalid_argument("poly degree does not match its coefficients");
    return p;
}

ShiftOp shiftop_from_json(const json& j) {
    need_kind(j, "shiftop");
    return ShiftOp(series_from_json(j.at("indicator")));
}

DeltaOp deltaop_from_json(const json& j) {
    DeltaOp d = validate_delta(shiftop_from_json(j));
    if (Rat::parse(j.at("unit").get<std::string>()) != d.unit())
        throw std::invalid_argument("unit does not match the indicator");
    return d;
}

Triangle triangle_from_json(const json& j) {
    need_kind(j, "triangle");
    auto n = j.at("n").get<std::size_t>();
    const json& rows = j.at("rows");
    if (rows.size() != n + 1) throw std::invalid_argument("triangle row count does not match n");
    Triangle t(n);
    for (std::size_t i = 0; i <= n; ++i) {
        auto r = rats(rows[i]);
        if (r.size() != i + 1) throw std::invalid_argument("triangle row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k <= i; ++k) t(i, k) = r[k];
    }
    return t;
}

Matrix matrix_from_json(const json& j) {
    need_kind(j, "matrix");
    auto n = j.at("n").get<std::size_t>();
    Matrix m(n);
    const json& rows = j.at("rows");
    if (rows.size() != n) throw std::invalid_argument("matrix row count does not match n");
    for (std::size_t i = 0; i < n; ++i) {
        auto r = rats(rows[i]);
        if (r.size() != n) throw std::invalid_argument("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = r[k];
    }
    return m;
}

Report report_from_json(const json& j) {
    Report r;
    for (const auto& e : j) {
        IdentityResult x;
        x.identity = e.at("identity").get<std::string>();
        x.family = e.at("family").get<std::string>();
        x.params = e.at("params").get<std::string>();
        x.passed = e.at("status").get<std::string>() == "pass";
        if (e.contains("counterexample")) x.counterexample = e.at("counterexample").get<std::string>();
        r.results.push_back(std::move(x));
    }
    return r;
}

std::string triangle_tsv(const Triangle& t) {
    std::string s;
    for (std::size_t n = 0; n <= t.max_row(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (k) s += '\t';
            s += t(n, k).to_string();
        }
        s += '\n';
    }
    return s;
}

}  // namespace umbra::io
