#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <vector>

#include "minsurf/numeric.hpp"

namespace minsurf {

/// Polar-grid tessellation of a surface patch.  Vertices carry both the
/// parameter (r, s) and the embedded position (u, v, t); faces are triangles
/// with deterministic ordering (centre fan first, then ring bands).
struct MeshArtifact {
    struct Vertex {
        double r, s;
        double u, v, t;
    };
    std::vector<Vertex> vertices;
    std::vector<std::array<int, 3>> faces; // 0-based vertex indices
};

namespace detail {
inline void format_g12(std::string& out, double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    out += buf;
}
} // namespace detail

inline std::string obj_string(const MeshArtifact& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 48 + mesh.faces.size() * 16);
    for (const auto& v : mesh.vertices) {
        out += "v ";
        detail::format_g12(out, v.u);
        out += ' ';
        detail::format_g12(out, v.v);
        out += ' ';
        detail::format_g12(out, v.t);
        out += '\n';
    }
    for (const auto& f : mesh.faces) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
        out += buf;
    }
    return out;
}

inline std::string csv_string(const MeshArtifact& mesh) {
    std::string out = "r,s,u,v,t\n";
    for (const auto& v : mesh.vertices) {
        detail::format_g12(out, v.r);
        out += ',';
        detail::format_g12(out, v.s);
        out += ',';
        detail::format_g12(out, v.u);
        out += ',';
        detail::format_g12(out, v.v);
        out += ',';
        detail::format_g12(out, v.t);
        out += '\n';
    }
    return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace minsurf
