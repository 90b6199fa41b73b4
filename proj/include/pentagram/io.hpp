#pragma once

#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "geometry.hpp"
#include "leapfrog.hpp"
#include "state.hpp"

namespace pentagram::io {

using json = nlohmann::json;

using AnyState =
    std::variant<XYState<Rational>, PQState<Rational>, CornerState<Rational>, LiftedPolygon, LeapfrogState>;

namespace detail {

inline void allow_only(const json& j, std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw InputError("state must be a JSON object");
    std::set<std::string> ok(keys.begin(), keys.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) throw InputError("unknown field \"" + it.key() + "\"");
}

inline const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline int integer(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

inline Rational rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw InputError(where + ": rationals are written as \"p/q\" strings");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

inline std::vector<Rational> rationals(const json& j, const char* key, int expect) {
    const json& v = field(j, key);
    if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
    if (expect >= 0 && static_cast<int>(v.size()) != expect)
        throw InputError(std::string("field \"") + key + "\" has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(expect));
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(rational(v[i], std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::vector<std::vector<Rational>> rational_rows(const json& j, const char* key, int rows, int cols) {
    const json& v = field(j, key);
    if (!v.is_array() || (rows >= 0 && static_cast<int>(v.size()) != rows))
        throw InputError(std::string("field \"") + key + "\" has the wrong number of rows");
    std::vector<std::vector<Rational>> out;
    for (std::size_t r = 0; r < v.size(); ++r) {
        if (!v[r].is_array() || static_cast<int>(v[r].size()) != cols)
            throw InputError(std::string(key) + "[" + std::to_string(r) + "] must have " + std::to_string(cols) + " entries");
        std::vector<Rational> row;
        for (std::size_t c = 0; c < v[r].size(); ++c)
            row.push_back(rational(v[r][c], std::string(key) + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        out.push_back(std::move(row));
    }
    return out;
}

inline json strings(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

inline json matrix(const Mat<Rational>& m) {
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        a.push_back(row);
    }
    return a;
}

inline Mat<Rational> matrix_from(const std::vector<std::vector<Rational>>& rows) {
    Mat<Rational> m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace detail

inline json to_json(const XYState<Rational>& s) {
    return {{"mode", "xy"}, {"k", s.shape.k}, {"n", s.shape.n}, {"x", detail::strings(s.x.v)}, {"y", detail::strings(s.y.v)}};
}
inline json to_json(const PQState<Rational>& s) {
    return {{"mode", "pq"}, {"k", s.shape.k}, {"n", s.shape.n}, {"p", detail::strings(s.p.v)}, {"q", detail::strings(s.q.v)}};
}
inline json to_json(const CornerState<Rational>& s) {
    return {{"mode", "corner"}, {"n", s.n}, {"X", detail::strings(s.X.v)}, {"Y", detail::strings(s.Y.v)}};
}
inline json to_json(const LiftedPolygon& p) {
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back(detail::strings(v));
    return {{"mode", "polygon"}, {"k", p.k}, {"n", p.n()}, {"vertices", verts}, {"monodromy", detail::matrix(p.monodromy)}};
}
inline json to_json(const LeapfrogState& st) {
    auto pts = [](const std::vector<RP1Point>& v) {
        json a = json::array();
        for (const auto& p : v) a.push_back(json::array({p.u.str(), p.v.str()}));
        return a;
    };
    return {{"mode", "leapfrog"}, {"n", st.n()}, {"S_minus", pts(st.S_minus)}, {"S", pts(st.S)},
            {"monodromy", detail::matrix(st.monodromy)}};
}
inline json to_json(const AnyState& s) {
    return std::visit([](const auto& v) { return to_json(v); }, s);
}

/// Parses any state; "mode" defaults to "polygon" when vertices are present.
inline AnyState from_json(const json& j) {
    if (!j.is_object()) throw InputError("state must be a JSON object");
    std::string mode;
    if (auto it = j.find("mode"); it != j.end()) {
        if (!it->is_string()) throw InputError("field \"mode\" must be a string");
        mode = it->get<std::string>();
    } else if (j.contains("vertices")) {
        mode = "polygon";
    } else {
        throw InputError("missing field \"mode\"");
    }
    if (mode == "xy") {
        detail::allow_only(j, {"mode", "k", "n", "x", "y"});
        auto sh = MapShape::make(detail::integer(j, "k"), detail::integer(j, "n"));
        return XYState<Rational>(sh, detail::rationals(j, "x", sh.n), detail::rationals(j, "y", sh.n));
    }
    if (mode == "pq") {
        detail::allow_only(j, {"mode", "k", "n", "p", "q"});
        auto sh = MapShape::make(detail::integer(j, "k"), detail::integer(j, "n"));
        return PQState<Rational>(sh, detail::rationals(j, "p", sh.n), detail::rationals(j, "q", sh.n));
    }
    if (mode == "corner") {
        detail::allow_only(j, {"mode", "n", "X", "Y"});
        int n = detail::integer(j, "n");
        return CornerState<Rational>(detail::rationals(j, "X", n), detail::rationals(j, "Y", n));
    }
    if (mode == "polygon") {
        detail::allow_only(j, {"mode", "k", "n", "vertices", "monodromy"});
        int k = detail::integer(j, "k"), n = detail::integer(j, "n");
        if (k < 2 || n < k) throw InputError("polygon requires 2 <= k <= n");
        LiftedPolygon p;
        p.k = k;
        p.vertices = detail::rational_rows(j, "vertices", n, k);
        p.monodromy = detail::matrix_from(detail::rational_rows(j, "monodromy", k, k));
        if (p.monodromy.det().is_zero()) throw InputError("monodromy is singular");
        return p;
    }
    if (mode == "leapfrog") {
        detail::allow_only(j, {"mode", "n", "S_minus", "S", "monodromy"});
        int n = detail::integer(j, "n");
        LeapfrogState st;
        for (auto& r : detail::rational_rows(j, "S_minus", n, 2)) st.S_minus.push_back({r[0], r[1]});
        for (auto& r : detail::rational_rows(j, "S", n, 2)) st.S.push_back({r[0], r[1]});
        for (const auto* seq : {&st.S_minus, &st.S})
            for (const auto& p : *seq)
                if (p.u.is_zero() && p.v.is_zero()) throw InputError("point (0 : 0) is not in RP^1");
        if (j.contains("monodromy")) st.monodromy = detail::matrix_from(detail::rational_rows(j, "monodromy", 2, 2));
        if (st.monodromy.det().is_zero()) throw InputError("monodromy is singular");
        return st;
    }
    throw InputError("unknown mode \"" + mode + "\"");
}

/// Parses text, reporting the byte offset of syntax errors.
inline AnyState parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return from_json(j);
}

inline std::string print(const AnyState& s) { return to_json(s).dump(2) + "\n"; }

/// Decimal rendering with 17 significant digits.
inline std::string decimal(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(17) << r.to_double();
    return os.str();
}

/// One CSV cell: decimal, plus the exact value in a second column when requested.
inline void csv_cells(std::ostream& os, const Rational& r, bool exact) {
    os << ',' << decimal(r);
    if (exact) os << ',' << r.str();
}

}  // namespace pentagram::io
