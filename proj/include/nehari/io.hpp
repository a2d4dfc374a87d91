#pragma once

#include <string>

#include "nehari/mesh.hpp"
#include "nehari/problem.hpp"

namespace nehari {

/// Shortest lossless text form of a binary64 value (17 significant digits).
std::string fmt17(double v);

// Field CSV: header "node_index,value", one line per node.
void write_field_csv(const std::string& path, const Field& u);
Field read_field_csv(const std::string& path, const Mesh& mesh);

// Weights CSV: header "element_index,xi,a", one line per element.
void write_weights_csv(const std::string& path, const WeightField& w);
WeightField read_weights_csv(const std::string& path, const Mesh& mesh);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace nehari
