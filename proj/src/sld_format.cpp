#include "glpair/sld_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace glpair {

LinkOrientation SldDocument::orientation() const {
  const int m = static_cast<int>(link_components(diagram).size());
  std::vector<bool> rev(m, false);
  for (const auto& [k, r] : orient) rev[k] = r;
  return LinkOrientation(diagram, std::move(rev));
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

int parse_int(const std::string& s, int line, const char* what) {
  if (s.empty() || s.size() > 9) throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  for (char ch : s)
    if (ch < '0' || ch > '9') throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  return std::stoi(s);
}

Port parse_port(const std::string& s, int line, int crossings) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) throw ParseError(line, "expected port A.p, got '" + s + "'");
  Port p{parse_int(s.substr(0, dot), line, "crossing index"), parse_int(s.substr(dot + 1), line, "slot")};
  if (p.crossing >= crossings) throw ParseError(line, "crossing index " + std::to_string(p.crossing) + " out of range");
  if (p.slot > 3) throw ParseError(line, "slot " + std::to_string(p.slot) + " out of range");
  return p;
}

}  // namespace

SldDocument parse_sld(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  int crossings = -1;
  std::vector<Dart> partner;
  std::vector<std::pair<int, int>> edge_lines;  // (first dart, line)
  std::vector<std::pair<int, std::pair<int, bool>>> orient_lines;
  int edges = 0;
  int last_line = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto words = split_words(raw);
    if (words.empty()) continue;
    last_line = lineno;
    const std::string& kw = words[0];
    if (crossings < 0) {
      if (kw != "crossings" || words.size() != 2) throw ParseError(lineno, "expected 'crossings N'");
      crossings = parse_int(words[1], lineno, "crossing count");
      if (crossings == 0) throw ParseError(lineno, "diagram needs at least one crossing");
      partner.assign(4 * static_cast<std::size_t>(crossings), -1);
      continue;
    }
    if (kw == "edge") {
      if (words.size() != 3) throw ParseError(lineno, "expected 'edge A.p B.q'");
      const Port a = parse_port(words[1], lineno, crossings);
      const Port b = parse_port(words[2], lineno, crossings);
      const Dart da = to_dart(a), db = to_dart(b);
      if (da == db) throw ParseError(lineno, "port " + words[1] + " joined to itself");
      if (partner[da] != -1) throw ParseError(lineno, "port " + words[1] + " used twice");
      if (partner[db] != -1) throw ParseError(lineno, "port " + words[2] + " used twice");
      partner[da] = db;
      partner[db] = da;
      ++edges;
    } else if (kw == "orient") {
      if (words.size() != 3 || (words[2] != "+" && words[2] != "-"))
        throw ParseError(lineno, "expected 'orient k +|-'");
      orient_lines.push_back({lineno, {parse_int(words[1], lineno, "component index"), words[2] == "-"}});
    } else if (kw == "crossings") {
      throw ParseError(lineno, "duplicate 'crossings' line");
    } else {
      throw ParseError(lineno, "unknown statement '" + kw + "'");
    }
  }
  if (crossings < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'crossings N' line");
  for (Dart d = 0; d < static_cast<Dart>(partner.size()); ++d)
    if (partner[d] == -1)
      throw ParseError(last_line, "dangling port " + std::to_string(d / 4) + "." + std::to_string(d % 4));
  if (edges != 2 * crossings)
    throw ParseError(last_line, "expected " + std::to_string(2 * crossings) + " edges");

  SldDocument doc{SurfaceDiagram(std::move(partner)), {}};
  const int m = static_cast<int>(link_components(doc.diagram).size());
  for (const auto& [line, entry] : orient_lines) {
    if (entry.first >= m)
      throw ParseError(line, "component " + std::to_string(entry.first) + " out of range (diagram has " +
                                 std::to_string(m) + ")");
    if (doc.orient.count(entry.first)) throw ParseError(line, "component oriented twice");
    doc.orient[entry.first] = entry.second;
  }
  return doc;
}

SldDocument read_sld_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sld(ss.str());
}

std::string serialize_sld(const SurfaceDiagram& d) {
  return serialize_sld(d, LinkOrientation::canonical(d));
}

std::string serialize_sld(const SurfaceDiagram& d, const LinkOrientation& o) {
  std::ostringstream out;
  out << "crossings " << d.crossing_count() << "\n";
  for (const auto& [a, b] : d.edges())
    out << "edge " << crossing_of(a) << "." << slot_of(a) << " " << crossing_of(b) << "." << slot_of(b) << "\n";
  for (int k = 0; k < o.component_count(); ++k)
    if (o.reversed(k)) out << "orient " << k << " -\n";
  return out.str();
}

}  // namespace glpair
