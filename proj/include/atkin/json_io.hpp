#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "atkin/moments.hpp"
#include "atkin/ode.hpp"
#include "atkin/poly.hpp"

namespace atkin {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("JSON parse error: ") + e.what());
    }
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

// ---- values ----------------------------------------------------------

inline Json rational_to_json(const Rational& r) { return Json(r.str()); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational((long long)j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw data_error("expected rational as string or integer, got " + j.dump());
}

/// {"a":"...","b":"...","D":17}, or {"alpha":["u","v"],"D":17}, or a bare
/// rational for elements of Q.
inline Json quad_to_json(const QuadElem& q) {
    if (q.is_rational()) return rational_to_json(q.a());
    Json j;
    j["a"] = q.a().str();
    j["b"] = q.b().str();
    j["D"] = q.D();
    return j;
}

inline QuadElem quad_from_json(const Json& j, unsigned default_D = 0) {
    if (j.is_string() || j.is_number_integer()) return QuadElem(rational_from_json(j));
    if (!j.is_object()) throw data_error("expected field element, got " + j.dump());
    unsigned D = j.contains("D") ? j.at("D").get<unsigned>() : default_D;
    if (j.contains("alpha")) {
        const Json& al = j.at("alpha");
        if (!al.is_array() || al.size() != 2) throw data_error("alpha basis needs [u, v]");
        if (D == 0) throw data_error("alpha basis requires D");
        return QuadElem::from_alpha(rational_from_json(al[0]), rational_from_json(al[1]), D);
    }
    Rational a = j.contains("a") ? rational_from_json(j.at("a")) : Rational(0);
    Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
    return b.is_zero() ? QuadElem(a) : QuadElem(a, b, D);
}

// ---- polynomials ------------------------------------------------------

/// {"var":"J","coeffs":[c0,...,cn]} ascending by degree.
template <class K, class EncodeFn>
Json poly_to_json(const Poly<K>& f, EncodeFn encode, const std::string& var = "J") {
    Json j;
    j["var"] = var;
    Json cs = Json::array();
    for (std::size_t i = 0; i < f.size(); ++i) cs.push_back(encode(f.coeff(i)));
    j["coeffs"] = std::move(cs);
    return j;
}

inline Json poly_to_json(const Poly<QuadElem>& f, const std::string& var = "J") {
    return poly_to_json(f, [](const QuadElem& c) { return quad_to_json(c); }, var);
}

inline Json poly_to_json(const Poly<FFElem>& f, const std::string& var = "J") {
    return poly_to_json(f, [](const FFElem& c) { return Json(c.str()); }, var);
}

inline Poly<QuadElem> quad_poly_from_json(const Json& j, unsigned default_D = 0) {
    if (!j.is_object() || !j.contains("coeffs")) throw data_error("polynomial JSON needs coeffs");
    std::vector<QuadElem> cs;
    for (const Json& c : j.at("coeffs")) cs.push_back(quad_from_json(c, default_D));
    return Poly<QuadElem>(QuadElem(Rational(1)), std::move(cs));
}

// ---- moment files -----------------------------------------------------

/// {"D": 17, "g": [g0, g1, ...]} with exact coefficient encodings.
inline MomentStream<QuadElem> moments_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("g")) throw data_error("moment JSON needs a \"g\" array");
    unsigned D = j.contains("D") ? j.at("D").get<unsigned>() : 0;
    std::vector<QuadElem> g;
    for (const Json& c : j.at("g")) g.push_back(quad_from_json(c, D));
    return MomentStream<QuadElem>(QuadElem(Rational(1)), std::move(g), "file");
}

inline Json moments_to_json(const std::vector<QuadElem>& g, unsigned D) {
    Json j;
    j["D"] = D;
    Json arr = Json::array();
    for (const auto& x : g) arr.push_back(quad_to_json(x));
    j["g"] = std::move(arr);
    return j;
}

// ---- ODE files --------------------------------------------------------

/// {"D":17,"S":[2,17],"p2":{...},"p1":{...},"p0":{...}}.
inline ODESpec ode_from_json(const Json& j) {
    if (!j.is_object()) throw data_error("ODE JSON must be an object");
    for (const char* k : {"p2", "p1", "p0"})
        if (!j.contains(k)) throw data_error(std::string("ODE JSON needs ") + k);
    unsigned D = j.contains("D") ? j.at("D").get<unsigned>() : 0;
    std::vector<std::uint64_t> S;
    if (j.contains("S"))
        for (const Json& s : j.at("S")) S.push_back(s.get<std::uint64_t>());
    try {
        return ODESpec(quad_poly_from_json(j.at("p2"), D), quad_poly_from_json(j.at("p1"), D),
                       quad_poly_from_json(j.at("p0"), D), D, std::move(S));
    } catch (const math_error& e) {
        throw data_error(std::string("ODE rejected at load: ") + e.what());
    }
}

} // namespace atkin
