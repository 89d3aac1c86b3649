#pragma once

#include <string>
#include <string_view>

#include "kspan/digraph.hpp"
#include "kspan/tournament.hpp"

namespace kspan::io {

// Tournament JSON: {"n": N, "bits": "<hex>"}. Bit b of the upper triangle
// (pair (i, j), i < j, row-major) lives in hex digit b / 4, most significant
// bit first; trailing pad bits are zero. A set bit means i -> j.
std::string tournament_to_json(const Tournament& t);
Tournament tournament_from_json(std::string_view text);

std::string bits_to_hex(const Tournament& t);
Tournament tournament_from_hex(int n, std::string_view hex);

// Digraph JSON: {"n": N, "arcs": [[u, v], ...]} with arcs sorted.
std::string digraph_to_json(const Digraph& d);
Digraph digraph_from_json(std::string_view text);

std::string tournament_to_dot(const Tournament& t, std::string_view name = "T");
std::string digraph_to_dot(const Digraph& d, std::string_view name = "D");

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace kspan::io
