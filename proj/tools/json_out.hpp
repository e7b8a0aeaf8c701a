#pragma once

// JSON rendering for the CLI. Rationals are strings; --float adds decimal siblings
// that are for reading only.

#include <hilmod/hilmod.hpp>

#include <json.hpp>

namespace hilmod::cli {

using Json = nlohmann::ordered_json;

struct JsonStyle {
    bool with_float = false;
};

inline Json rational_json(const Rational& r) { return r.get_str(); }

inline Json scalar_json(const GaussRat& x, const JsonStyle& s)
{
    Json j = Json::object();
    j["re"] = x.re().get_str();
    j["im"] = x.im().get_str();
    if (s.with_float) {
        j["re_float"] = x.re().get_d();
        j["im_float"] = x.im().get_d();
    }
    return j;
}

inline Json exponents_json(const MultiIndex& a)
{
    Json e = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k)
        e.push_back(a[k]);
    return e;
}

/// Terms in increasing graded-colex order.
inline Json poly_json(const Poly& p, const JsonStyle& s)
{
    Json arr = Json::array();
    for (const auto& [a, c] : p.terms()) {
        Json t = Json::object();
        t["exponents"] = exponents_json(a);
        Json v = scalar_json(c, s);
        for (auto it = v.begin(); it != v.end(); ++it)
            t[it.key()] = it.value();
        arr.push_back(std::move(t));
    }
    return arr;
}

inline Json polys_json(const std::vector<Poly>& ps, const JsonStyle& s)
{
    Json arr = Json::array();
    for (const auto& p : ps)
        arr.push_back(poly_json(p, s));
    return arr;
}

inline Json poly_texts(const std::vector<Poly>& ps)
{
    Json arr = Json::array();
    for (const auto& p : ps)
        arr.push_back(to_string(p));
    return arr;
}

inline Json point_json(const Point& w, const JsonStyle& s)
{
    Json arr = Json::array();
    for (const auto& x : w)
        arr.push_back(scalar_json(x, s));
    return arr;
}

inline Json matrix_json(const CMatrix& m, const JsonStyle& s)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(scalar_json(m(i, j), s));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace hilmod::cli
