#include "posets/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "posets/levels.hpp"

namespace posets {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool valid_text_id(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c == '<' || c == '#' || c == ' ' || c == '\t') return false;
  }
  return true;
}

std::string escape_dot(const std::string& id) {
  std::string out;
  for (char c : id) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Poset parse_poset(std::string_view input) {
  for (char c : input) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? parse_poset_json(input) : parse_poset_text(input);
  }
  return Poset();  // blank input: the empty poset
}

Poset parse_poset_text(std::string_view input) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  auto declare = [&](std::string_view id) {
    for (const auto& known : elements) {
      if (known == id) return;
    }
    elements.emplace_back(id);
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    const std::size_t eol = input.find('\n', pos);
    std::string_view line = input.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? input.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    const std::size_t lt = line.find('<');
    if (lt == std::string_view::npos) {
      if (!valid_text_id(line)) {
        throw ParseError(ParseError::Kind::Syntax,
                         "line " + std::to_string(line_no) + ": expected \"x < y\" or a bare element");
      }
      declare(line);
      continue;
    }
    const std::string_view lhs = strip(line.substr(0, lt));
    const std::string_view rhs = strip(line.substr(lt + 1));
    if (!valid_text_id(lhs) || !valid_text_id(rhs)) {
      throw ParseError(ParseError::Kind::Syntax,
                       "line " + std::to_string(line_no) + ": malformed relation");
    }
    declare(lhs);
    declare(rhs);
    relations.emplace_back(lhs, rhs);
  }
  return Poset::from_relations(std::move(elements), relations);
}

Poset parse_poset_json(std::string_view input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseError::Kind::Syntax, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
    throw ParseError(ParseError::Kind::Syntax, "expected object with \"elements\" array");
  }
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string() || e.get<std::string>().empty()) {
      throw ParseError(ParseError::Kind::Syntax, "elements must be non-empty strings");
    }
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> relations;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) {
      throw ParseError(ParseError::Kind::Syntax, "\"relations\" must be an array of pairs");
    }
    for (const auto& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string()) {
        throw ParseError(ParseError::Kind::Syntax, "each relation must be a pair of ids");
      }
      relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  }
  return Poset::from_relations(std::move(elements), relations);
}

std::string to_text(const Poset& p) {
  // Elements are declared up front so reloading keeps their order.
  std::ostringstream out;
  for (int i = 0; i < p.size(); ++i) out << p.id(i) << "\n";
  for (const auto& [x, y] : covers(p)) out << x << " < " << y << "\n";
  return out.str();
}

std::string to_json(const Poset& p, bool pretty) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["elements"] = p.elements();
  auto rels = nlohmann::json::array();
  for (const auto& [x, y] : covers(p)) rels.push_back({x, y});
  doc["relations"] = std::move(rels);
  return pretty ? doc.dump(2) : doc.dump();
}

std::string to_dot(const Poset& p) {
  const LevelDecomposition ld = level_decomposition(p);
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int l = 0; l < ld.height(); ++l) {
    out << "  { rank=same;";
    for (int i : ld.levels()[static_cast<std::size_t>(l)]) {
      out << " \"" << escape_dot(p.id(i)) << "\";";
    }
    out << " }\n";
  }
  for (const auto& [x, y] : covers(p)) {
    out << "  \"" << escape_dot(x) << "\" -> \"" << escape_dot(y) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace posets
