#include "glpair/gauss_code.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace glpair {

namespace {

struct Passage {
  int crossing;
  bool over;
  int sign;
};

struct Occurrences {
  int over = 0;
  int under = 0;
  int sign = 0;
};

}  // namespace

GaussImport from_virtual_gauss_code(std::string_view code) {
  std::vector<std::vector<Passage>> comps(1);
  std::map<std::string, int> index;
  std::vector<Occurrences> occ;

  std::size_t i = 0;
  const std::size_t n = code.size();
  while (i < n) {
    const char ch = code[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '/') {
      comps.emplace_back();
      ++i;
      continue;
    }
    if (ch != 'O' && ch != 'U')
      throw GaussCodeError("unexpected character '" + std::string(1, ch) + "' at position " + std::to_string(i));
    const bool over = ch == 'O';
    ++i;
    std::string label;
    while (i < n && std::isalnum(static_cast<unsigned char>(code[i]))) label.push_back(code[i++]);
    if (label.empty()) throw GaussCodeError("missing crossing label at position " + std::to_string(i));
    if (i >= n || (code[i] != '+' && code[i] != '-'))
      throw GaussCodeError("missing sign after " + std::string(over ? "O" : "U") + label);
    const int sign = code[i] == '+' ? 1 : -1;
    ++i;

    auto [it, fresh] = index.try_emplace(label, static_cast<int>(occ.size()));
    if (fresh) occ.emplace_back();
    Occurrences& o = occ[it->second];
    (over ? o.over : o.under) += 1;
    if (o.sign != 0 && o.sign != sign) throw GaussCodeError("crossing " + label + " has inconsistent signs");
    o.sign = sign;
    comps.back().push_back({it->second, over, sign});
  }

  if (occ.empty()) throw GaussCodeError("empty Gauss code");
  for (const auto& comp : comps)
    if (comp.empty()) throw GaussCodeError("empty link component");
  for (const auto& [label, x] : index)
    if (occ[x].over != 1 || occ[x].under != 1)
      throw GaussCodeError("crossing " + label + " must appear once as O and once as U");

  auto entry_slot = [](const Passage& p) { return p.over ? 3 : (p.sign > 0 ? 0 : 2); };
  auto exit_slot = [](const Passage& p) { return p.over ? 1 : (p.sign > 0 ? 2 : 0); };

  const int c = static_cast<int>(occ.size());
  std::vector<Dart> partner(4 * static_cast<std::size_t>(c), -1);
  std::vector<char> forward(partner.size(), 0);
  for (const auto& comp : comps)
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const Passage& a = comp[k];
      const Passage& b = comp[(k + 1) % comp.size()];
      const Dart from = 4 * a.crossing + exit_slot(a);
      const Dart to = 4 * b.crossing + entry_slot(b);
      partner[from] = to;
      partner[to] = from;
      forward[from] = 1;
    }
  SurfaceDiagram d(std::move(partner));

  const auto lc = link_components(d);
  std::vector<bool> rev(lc.size());
  for (std::size_t k = 0; k < lc.size(); ++k) rev[k] = !forward[lc[k].darts.front()];
  LinkOrientation o(d, std::move(rev));
  return {std::move(d), std::move(o)};
}

}  // namespace glpair
