#include "kspan/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kspan/error.hpp"

namespace kspan::io {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

int read_order(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw Error(ErrorCode::kParse, "missing integer field \"n\"");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > (1 << 20)) throw Error(ErrorCode::kParse, "field \"n\" out of range");
  return static_cast<int>(n);
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string bits_to_hex(const Tournament& t) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t m = t.pair_count();
  std::string hex((m + 3) / 4, '0');
  for (std::size_t b = 0; b < m; ++b)
    if (t.pair_bit(b)) {
      auto& c = hex[b / 4];
      c = kDigits[hex_value(c) | (8 >> (b % 4))];
    }
  return hex;
}

Tournament tournament_from_hex(int n, std::string_view hex) {
  Tournament t(n);
  const std::size_t m = t.pair_count();
  if (hex.size() != (m + 3) / 4)
    throw Error(ErrorCode::kParse, "bits length " + std::to_string(hex.size()) + " does not match n");
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const int value = hex_value(hex[d]);
    if (value < 0) throw Error(ErrorCode::kParse, "non-hex character in bits");
    for (std::size_t r = 0; r < 4; ++r) {
      const std::size_t b = 4 * d + r;
      const bool set = (value & (8 >> r)) != 0;
      if (b < m)
        t.set_pair_bit(b, set);
      else if (set)
        throw Error(ErrorCode::kParse, "nonzero padding bit");
    }
  }
  return t;
}

std::string tournament_to_json(const Tournament& t) {
  json j;
  j["n"] = t.order();
  j["bits"] = bits_to_hex(t);
  return j.dump() + "\n";
}

Tournament tournament_from_json(std::string_view text) {
  const json j = parse(text);
  const int n = read_order(j);
  if (!j.contains("bits") || !j["bits"].is_string())
    throw Error(ErrorCode::kParse, "missing string field \"bits\"");
  return tournament_from_hex(n, j["bits"].get<std::string>());
}

std::string digraph_to_json(const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  json j;
  j["n"] = d.order();
  j["arcs"] = std::move(arcs);
  return j.dump() + "\n";
}

Digraph digraph_from_json(std::string_view text) {
  const json j = parse(text);
  const int n = read_order(j);
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw Error(ErrorCode::kParse, "missing array field \"arcs\"");
  Digraph d(n);
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw Error(ErrorCode::kParse, "arc must be a pair of integers");
    const auto u = a[0].get<long long>();
    const auto v = a[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw Error(ErrorCode::kParse, "arc endpoint out of range or loop");
    d.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return d;
}

std::string digraph_to_dot(const Digraph& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

std::string tournament_to_dot(const Tournament& t, std::string_view name) {
  return digraph_to_dot(t.to_digraph(), name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kNotFound, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace kspan::io
