#pragma once

#include <string>

#include "scherk/weierstrass.hpp"

namespace scherk::io {

// Wavefront OBJ: metadata comments, "v u v T" lines, then 1-based
// "f i j k" triangles.  Byte output is deterministic for fixed inputs.
void write_obj(const weier::Mesh& mesh, const std::string& path);

// CSV: header "u,v,T" then one row per vertex in grid order.
void write_csv(const weier::Mesh& mesh, const std::string& path);

std::string obj_string(const weier::Mesh& mesh);
std::string csv_string(const weier::Mesh& mesh);

}  // namespace scherk::io
