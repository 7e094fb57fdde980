#pragma once

// The .cx2 file format: a JSON object with vertex names, faces as name lists and an optional
// rotation block keyed by "u->v".

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "whitney/complex.hpp"
#include "whitney/error.hpp"
#include "whitney/rotation.hpp"

namespace whitney {

using ojson = nlohmann::ordered_json;

inline constexpr int kCx2Version = 1;

class Cx2SyntaxError : public Error {
public:
    Cx2SyntaxError(std::size_t line, std::size_t column, const std::string& detail)
        : Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct Cx2Document {
    Complex2 complex;
    std::optional<RotationSystem> rotation;
};

/// Rotation block: one entry per edge a->b with a < b by vertex index, cycle as stored.
inline ojson rotation_to_json(const Complex2& x, const RotationSystem& sigma) {
    ojson block = ojson::object();
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        const auto [a, b] = x.edge(e);
        block[x.name(a) + "->" + x.name(b)] = sigma.canonical(e);
    }
    return block;
}

inline ojson complex_to_json(const Complex2& x, const std::optional<RotationSystem>& sigma = std::nullopt) {
    ojson doc;
    doc["format"] = "cx2";
    doc["version"] = kCx2Version;
    doc["vertices"] = x.vertex_names();
    ojson faces = ojson::array();
    for (const auto& f : x.faces()) {
        ojson row = ojson::array();
        for (VertexId v : f) row.push_back(x.name(v));
        faces.push_back(std::move(row));
    }
    doc["faces"] = std::move(faces);
    if (sigma) doc["rotation"] = rotation_to_json(x, *sigma);
    return doc;
}

inline std::string emit_cx2(const Complex2& x, const std::optional<RotationSystem>& sigma = std::nullopt) {
    return complex_to_json(x, sigma).dump(2) + "\n";
}

inline std::string emit_cx2(const Cx2Document& d) { return emit_cx2(d.complex, d.rotation); }

namespace detail {

[[noreturn]] inline void schema_error(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

inline std::pair<VertexId, VertexId> parse_directed_edge(const Complex2& x, const std::string& key) {
    std::optional<std::pair<VertexId, VertexId>> found;
    for (auto pos = key.find("->"); pos != std::string::npos; pos = key.find("->", pos + 1)) {
        const auto tail = x.find_vertex(key.substr(0, pos));
        const auto head = x.find_vertex(key.substr(pos + 2));
        if (!tail || !head) continue;
        if (found) schema_error("ambiguous rotation key '" + key + "'");
        found = {{*tail, *head}};
    }
    if (!found) schema_error("rotation key '" + key + "' does not name two vertices");
    return *found;
}

} // namespace detail

inline RotationSystem rotation_from_json(const Complex2& x, const ojson& block) {
    if (!block.is_object()) detail::schema_error("\"rotation\" must be an object");
    RawRotation raw;
    for (const auto& [key, value] : block.items()) {
        const auto edge = detail::parse_directed_edge(x, key);
        if (!value.is_array()) detail::schema_error("rotation entry '" + key + "' must be an array");
        std::vector<FaceId> cycle;
        for (const auto& f : value) {
            if (!f.is_number_integer()) detail::schema_error("rotation entry '" + key + "' must hold face indices");
            cycle.push_back(f.get<FaceId>());
        }
        if (!raw.emplace(edge, std::move(cycle)).second) detail::schema_error("duplicate rotation key '" + key + "'");
    }
    return validate_rotation(x, raw);
}

inline Cx2Document parse_cx2(const std::string& text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') ++line, column = 1;
            else ++column;
        }
        throw Cx2SyntaxError(line, column, "malformed JSON");
    }
    if (!doc.is_object()) detail::schema_error("top level must be an object");
    if (doc.value("format", "") != "cx2") detail::schema_error("\"format\" must be \"cx2\"");
    if (!doc.contains("version") || doc["version"] != kCx2Version) detail::schema_error("unsupported version");
    for (const auto& [key, _] : doc.items())
        if (key != "format" && key != "version" && key != "vertices" && key != "faces" && key != "rotation")
            detail::schema_error("unknown key \"" + key + "\"");

    if (!doc.contains("vertices") || !doc["vertices"].is_array()) detail::schema_error("\"vertices\" must be an array");
    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) detail::schema_error("vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    if (!doc.contains("faces") || !doc["faces"].is_array()) detail::schema_error("\"faces\" must be an array");
    std::vector<std::vector<std::string>> faces;
    for (const auto& f : doc["faces"]) {
        if (!f.is_array()) detail::schema_error("each face must be an array of vertex names");
        std::vector<std::string> row;
        for (const auto& v : f) {
            if (!v.is_string()) detail::schema_error("face entries must be vertex names");
            row.push_back(v.get<std::string>());
        }
        faces.push_back(std::move(row));
    }
    Cx2Document out{Complex2::build(std::move(names), faces), std::nullopt};
    if (doc.contains("rotation")) out.rotation = rotation_from_json(out.complex, doc["rotation"]);
    return out;
}

inline Cx2Document load_cx2(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cx2(buf.str());
}

} // namespace whitney
