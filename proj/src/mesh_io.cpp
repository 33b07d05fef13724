#include "scherk/mesh_io.hpp"

#include <cstdio>
#include <fstream>

namespace scherk::io {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << body;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

std::string obj_string(const weier::Mesh& mesh) {
    std::string s;
    s += "# scherk family mesh t=" + fmt(mesh.t) + " n_r=" + std::to_string(mesh.n_r) +
         " n_theta=" + std::to_string(mesh.n_theta) + " r_max=" + fmt(mesh.r_max) +
         " t_cap=" + fmt(mesh.t_cap) + " clamped=" + std::to_string(mesh.clamp_count) +
         "\n";
    for (const auto& v : mesh.vertices)
        s += "v " + fmt(v[0]) + " " + fmt(v[1]) + " " + fmt(v[2]) + "\n";
    for (const auto& f : mesh.faces)
        s += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " +
             std::to_string(f[2] + 1) + "\n";
    return s;
}

std::string csv_string(const weier::Mesh& mesh) {
    std::string s = "u,v,T\n";
    for (const auto& v : mesh.vertices)
        s += fmt(v[0]) + "," + fmt(v[1]) + "," + fmt(v[2]) + "\n";
    return s;
}

void write_obj(const weier::Mesh& mesh, const std::string& path) {
    write_file(path, obj_string(mesh));
}

void write_csv(const weier::Mesh& mesh, const std::string& path) {
    write_file(path, csv_string(mesh));
}

}  // namespace scherk::io
