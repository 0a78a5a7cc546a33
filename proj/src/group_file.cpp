#include "tvg/group_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tvg/errors.hpp"

namespace tvg {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_name(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected an element name, got " + v.dump());
  return v.get<std::string>();
}

}  // namespace

TwoValuedGroup parse_group(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");

  const json& version = field(doc, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kGroupFormatVersion) {
    throw ParseError("format_version: unsupported value " + version.dump());
  }

  const json& elems = field(doc, "elements");
  if (!elems.is_array() || elems.empty()) throw ParseError("elements: expected a non-empty array");
  std::vector<std::string> listed;
  std::map<std::string, std::size_t> listed_index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::string name = as_name(elems[i], "elements[" + std::to_string(i) + "]");
    if (!listed_index.emplace(name, i).second) throw ParseError("elements: duplicate name '" + name + "'");
    listed.push_back(std::move(name));
  }
  const std::size_t n = listed.size();

  const std::string id_name = as_name(field(doc, "identity"), "identity");
  auto id_it = listed_index.find(id_name);
  if (id_it == listed_index.end()) throw ParseError("identity: '" + id_name + "' is not listed in elements");

  // Listed position -> ElementId with the identity moved to the front.
  std::vector<ElementId> id_of(n);
  std::vector<std::string> names{id_name};
  id_of[id_it->second] = kIdentity;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == id_it->second) continue;
    id_of[i] = static_cast<ElementId>(names.size());
    names.push_back(listed[i]);
  }

  const json& rows = field(doc, "table");
  if (!rows.is_array() || rows.size() != n) {
    throw NonSquareTable("table: expected " + std::to_string(n) + " rows, got " +
                         (rows.is_array() ? std::to_string(rows.size()) : std::string("a non-array")));
  }
  std::vector<Pair> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw NonSquareTable("table[" + std::to_string(i) + "]: expected " + std::to_string(n) + " cells");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = "table[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      const json& cell = row[j];
      if (!cell.is_array() || cell.size() != 2) {
        throw ParseError(where + ": a product must list exactly 2 elements, got " + cell.dump());
      }
      ElementId ab[2];
      for (int k = 0; k < 2; ++k) {
        const std::string name = as_name(cell[k], where);
        auto it = listed_index.find(name);
        if (it == listed_index.end()) throw ParseError(where + ": unknown element '" + name + "'");
        ab[k] = id_of[it->second];
      }
      table[id_of[i] * n + id_of[j]] = Pair(ab[0], ab[1]);
    }
  }
  return TwoValuedGroup(std::move(names), std::move(table));
}

std::string serialize_group(const TwoValuedGroup& X) {
  const std::size_t n = X.size();
  auto quoted = [&](ElementId x) { return json(X.name(x)).dump(); };
  std::ostringstream os;
  os << "{\n  \"format_version\": " << kGroupFormatVersion << ",\n";
  os << "  \"identity\": " << quoted(kIdentity) << ",\n";
  os << "  \"elements\": [";
  for (ElementId x = 0; x < n; ++x) os << (x ? ", " : "") << quoted(x);
  os << "],\n  \"table\": [\n";
  for (ElementId a = 0; a < n; ++a) {
    os << "    [";
    for (ElementId b = 0; b < n; ++b) {
      const Pair p = X.at(a, b);
      os << (b ? ", " : "") << "[" << quoted(p.lo) << ", " << quoted(p.hi) << "]";
    }
    os << "]" << (a + 1 < n ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

TwoValuedGroup read_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group(buf.str());
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

void write_group(const TwoValuedGroup& X, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_group(X);
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace tvg
