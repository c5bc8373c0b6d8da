#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "field.hpp"

namespace unigeo {

// A scene file is a JSON object describing a field, a symmetric bilinear
// form, named points, and the inputs of whatever task is run against it.
// Scalars stay as strings here; they are parsed under the chosen field
// when a task consumes them. All scene problems surface as SceneError
// naming the offending key.
struct Scene {
    FieldDescriptor field;
    std::size_t dimension{0};
    // Always dimension x dimension strings once loaded.
    std::vector<std::vector<std::string>> form_rows;
    std::map<std::string, std::vector<std::string>> affine_points;
    std::map<std::string, std::string> proj_points;  // "x:y:z" style
    std::vector<std::string> triangle;               // 3 point names
    std::string vertex;                              // apex for bisectors
    std::vector<std::string> hexagon;                // 6 point names
    std::vector<std::string> disk;                   // 3 point names
    std::map<std::string, std::string> knowns;       // right-triangle solver
    std::map<std::string, std::string> values;       // free scalar inputs
    std::vector<std::pair<std::string, std::string>> expect;  // report assertions

    bool has_point(const std::string& name) const {
        return affine_points.count(name) != 0 || proj_points.count(name) != 0;
    }
};

namespace detail {

using SceneJson = nlohmann::ordered_json;

[[noreturn]] inline void scene_fail(const std::string& key, const std::string& what) {
    throw Error(ErrorCode::SceneError, "scene key '" + key + "': " + what);
}

inline std::string require_string(const SceneJson& j, const std::string& key) {
    if (!j.is_string())
        scene_fail(key, "expected a string");
    return j.get<std::string>();
}

inline std::vector<std::string> require_string_array(const SceneJson& j, const std::string& key,
                                                     std::size_t want) {
    if (!j.is_array())
        scene_fail(key, "expected an array");
    if (want != 0 && j.size() != want)
        scene_fail(key, "expected " + std::to_string(want) + " entries, got " + std::to_string(j.size()));
    std::vector<std::string> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            scene_fail(key + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

inline void load_form(Scene& s, const SceneJson& j) {
    const std::size_t n = s.dimension;
    if (j.is_string()) {
        if (j.get<std::string>() != "identity")
            scene_fail("form", "the only named form is \"identity\"");
        s.form_rows.assign(n, std::vector<std::string>(n, "0"));
        for (std::size_t i = 0; i < n; ++i)
            s.form_rows[i][i] = "1";
        return;
    }
    if (j.is_object()) {
        if (!j.contains("diag") || j.size() != 1)
            scene_fail("form", "object form must be exactly {\"diag\": [...]}");
        auto d = require_string_array(j["diag"], "form.diag", n);
        s.form_rows.assign(n, std::vector<std::string>(n, "0"));
        for (std::size_t i = 0; i < n; ++i)
            s.form_rows[i][i] = d[i];
        return;
    }
    if (!j.is_array())
        scene_fail("form", "expected \"identity\", {\"diag\": [...]}, or an array of rows");
    if (j.size() != n)
        scene_fail("form", "expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        s.form_rows.push_back(require_string_array(j[i], "form[" + std::to_string(i) + "]", n));
}

inline void load_points(Scene& s, const SceneJson& j) {
    if (!j.is_object())
        scene_fail("points", "expected an object of name -> coordinates");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = "points." + it.key();
        if (it.key().empty())
            scene_fail("points", "point names must be nonempty");
        if (it.value().is_array()) {
            s.affine_points[it.key()] = require_string_array(it.value(), key, s.dimension);
        } else if (it.value().is_string()) {
            const std::string rep = it.value().get<std::string>();
            std::size_t parts = rep.empty() ? 0 : 1;
            for (char c : rep)
                if (c == ':')
                    ++parts;
            if (parts != s.dimension)
                scene_fail(key, "projective point needs " + std::to_string(s.dimension) +
                                    " colon-separated coordinates");
            s.proj_points[it.key()] = rep;
        } else {
            scene_fail(key, "expected an array (affine) or \"x:y:...\" string (projective)");
        }
    }
}

inline std::map<std::string, std::string> load_string_map(const SceneJson& j, const std::string& key) {
    if (!j.is_object())
        scene_fail(key, "expected an object of string values");
    std::map<std::string, std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = require_string(it.value(), key + "." + it.key());
    return out;
}

}  // namespace detail

inline Scene parse_scene_text(const std::string& text) {
    detail::SceneJson j;
    try {
        j = detail::SceneJson::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::SceneError, std::string("scene is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw Error(ErrorCode::SceneError, "scene root must be a JSON object");

    Scene s;
    if (!j.contains("field"))
        detail::scene_fail("field", "required");
    try {
        s.field = FieldDescriptor::parse(detail::require_string(j["field"], "field"));
    } catch (const Error& e) {
        detail::scene_fail("field", e.what());
    }

    if (!j.contains("dimension"))
        detail::scene_fail("dimension", "required");
    if (!j["dimension"].is_number_unsigned() || j["dimension"].get<std::uint64_t>() == 0 ||
        j["dimension"].get<std::uint64_t>() > 16)
        detail::scene_fail("dimension", "expected an integer in 1..16");
    s.dimension = j["dimension"].get<std::size_t>();

    if (!j.contains("form"))
        detail::scene_fail("form", "required");
    detail::load_form(s, j["form"]);

    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k == "field" || k == "dimension" || k == "form")
            continue;
        if (k == "points") {
            detail::load_points(s, it.value());
        } else if (k == "triangle") {
            s.triangle = detail::require_string_array(it.value(), "triangle", 3);
        } else if (k == "vertex") {
            s.vertex = detail::require_string(it.value(), "vertex");
        } else if (k == "hexagon") {
            s.hexagon = detail::require_string_array(it.value(), "hexagon", 6);
        } else if (k == "disk") {
            s.disk = detail::require_string_array(it.value(), "disk", 3);
        } else if (k == "knowns") {
            s.knowns = detail::load_string_map(it.value(), "knowns");
        } else if (k == "values") {
            s.values = detail::load_string_map(it.value(), "values");
        } else if (k == "expect") {
            if (!it.value().is_object())
                detail::scene_fail("expect", "expected an object of report-key -> value");
            for (auto e = it.value().begin(); e != it.value().end(); ++e)
                s.expect.emplace_back(e.key(), detail::require_string(e.value(), "expect." + e.key()));
        } else {
            detail::scene_fail(k, "unknown key");
        }
    }

    for (const auto& name : s.triangle)
        if (!s.has_point(name))
            detail::scene_fail("triangle", "references unknown point '" + name + "'");
    if (!s.vertex.empty() && !s.has_point(s.vertex))
        detail::scene_fail("vertex", "references unknown point '" + s.vertex + "'");
    for (const auto& name : s.hexagon)
        if (!s.has_point(name))
            detail::scene_fail("hexagon", "references unknown point '" + name + "'");
    for (const auto& name : s.disk)
        if (!s.has_point(name))
            detail::scene_fail("disk", "references unknown point '" + name + "'");
    return s;
}

inline Scene load_scene_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::SceneError, "cannot open scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene_text(buf.str());
}

}  // namespace unigeo
