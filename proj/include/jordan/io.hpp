#pragma once

// JSON algebra files:
//   {"kind": "jordan"|"lie", "dim": n, "basis_names": [...],
//    "table": [[[[k, "p/q"], ...], ...], ...]}
// table[i][j] lists the nonzero components of e_i e_j (or [e_i, e_j]) by
// increasing k. Coefficients are always strings; JSON numbers are rejected.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "jordan/algebra.hpp"
#include "jordan/lie_table.hpp"

namespace jordan {

using AnyAlgebra = std::variant<JordanAlgebra, LieTable>;

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json table_row_json(const StructureTable& t, std::size_t i) {
  ordered_json row = ordered_json::array();
  for (std::size_t j = 0; j < t.dim(); ++j) {
    ordered_json cell = ordered_json::array();
    for (const auto& [k, c] : t.product(i, j)) cell.push_back(ordered_json::array({k, to_string(c)}));
    row.push_back(std::move(cell));
  }
  return row;
}

// One table row per line keeps large files diffable.
inline std::string write_table(const std::string& kind, const StructureTable& t) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"kind\": " << ordered_json(kind).dump() << ",\n";
  out << "  \"dim\": " << t.dim() << ",\n";
  out << "  \"basis_names\": " << ordered_json(t.basis_names()).dump() << ",\n";
  out << "  \"table\": [";
  for (std::size_t i = 0; i < t.dim(); ++i) out << (i ? ",\n    " : "\n    ") << table_row_json(t, i).dump();
  out << (t.dim() ? "\n  ]\n" : "]\n");
  out << "}\n";
  return out.str();
}

inline const nlohmann::json& require(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::size_t require_index(const nlohmann::json& v, std::size_t bound, const char* what) {
  if (!v.is_number_unsigned()) throw ParseError(std::string(what) + " must be a nonnegative integer");
  auto k = v.get<std::size_t>();
  if (k >= bound) throw ParseError(std::string(what) + " " + std::to_string(k) + " out of range");
  return k;
}

inline std::pair<std::string, StructureTable> read_table(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  const auto& kind = require(doc, "kind");
  if (!kind.is_string() || (kind != "jordan" && kind != "lie")) throw ParseError("kind must be \"jordan\" or \"lie\"");
  const auto& dim_json = require(doc, "dim");
  if (!dim_json.is_number_unsigned()) throw ParseError("dim must be a nonnegative integer");
  const auto n = dim_json.get<std::size_t>();

  std::vector<std::string> names;
  if (auto it = doc.find("basis_names"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) throw ParseError("basis_names must be an array of length dim");
    for (const auto& name : *it) {
      if (!name.is_string()) throw ParseError("basis names must be strings");
      names.push_back(name.get<std::string>());
    }
  }
  StructureTable t(n, std::move(names));

  const auto& table = require(doc, "table");
  if (!table.is_array() || table.size() != n) throw ParseError("table must have dim rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (!table[i].is_array() || table[i].size() != n) throw ParseError("table row " + std::to_string(i) + " must have dim cells");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = table[i][j];
      if (!cell.is_array()) throw ParseError("table cell must be an array");
      Vector v = zero_vector(n);
      std::vector<char> seen(n, 0);
      for (const auto& term : cell) {
        if (!term.is_array() || term.size() != 2) throw ParseError("table term must be [index, \"p/q\"]");
        const auto k = require_index(term[0], n, "component index");
        if (seen[k]) throw ParseError("duplicate component index " + std::to_string(k));
        seen[k] = 1;
        if (!term[1].is_string()) throw ParseError("coefficients must be rational strings, not JSON numbers");
        v[k] = parse_scalar(term[1].get<std::string>());
      }
      t.set_product(i, j, v);
    }
  }
  return {kind.get<std::string>(), std::move(t)};
}

}  // namespace detail

inline std::string serialize(const JordanAlgebra& j) { return detail::write_table("jordan", j.table()); }
inline std::string serialize(const LieTable& l) { return detail::write_table("lie", l.table()); }
inline std::string serialize(const AnyAlgebra& a) {
  return std::visit([](const auto& x) { return serialize(x); }, a);
}

/// Parses and validates. Throws ParseError or ValidationError.
inline AnyAlgebra parse_algebra(const std::string& text) {
  auto [kind, table] = detail::read_table(text);
  if (kind == "jordan") return JordanAlgebra(std::move(table));
  return LieTable(std::move(table));
}

inline void save_algebra(const std::string& path, const AnyAlgebra& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << serialize(a);
  if (!out) throw ParseError("failed writing " + path);
}

inline AnyAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

}  // namespace jordan
