#include "glpair/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace glpair {

SurfaceDiagram::SurfaceDiagram(std::vector<Dart> partner) : partner_(std::move(partner)) {
  if (partner_.empty()) throw DiagramError("diagram needs at least one crossing");
  if (partner_.size() % 4 != 0) throw DiagramError("dart count is not a multiple of 4");
  const int n = static_cast<int>(partner_.size());
  for (Dart d = 0; d < n; ++d) {
    const Dart e = partner_[d];
    if (e < 0 || e >= n) throw DiagramError("dangling port " + std::to_string(d / 4) + "." + std::to_string(d % 4));
    if (e == d) throw DiagramError("port joined to itself");
    if (partner_[e] != d) throw DiagramError("edge pairing is not symmetric");
  }
}

SurfaceDiagram SurfaceDiagram::from_edges(int crossings,
                                          std::span<const std::pair<Port, Port>> edges) {
  if (crossings < 1) throw DiagramError("diagram needs at least one crossing");
  std::vector<Dart> partner(4 * static_cast<std::size_t>(crossings), -1);
  auto check = [&](Port p) {
    if (p.crossing < 0 || p.crossing >= crossings || p.slot < 0 || p.slot > 3)
      throw DiagramError("port " + std::to_string(p.crossing) + "." + std::to_string(p.slot) +
                         " out of range");
    if (partner[to_dart(p)] != -1)
      throw DiagramError("port " + std::to_string(p.crossing) + "." + std::to_string(p.slot) +
                         " used twice");
  };
  for (const auto& [a, b] : edges) {
    check(a);
    partner[to_dart(a)] = -2;
    check(b);
    partner[to_dart(a)] = to_dart(b);
    partner[to_dart(b)] = to_dart(a);
  }
  for (Dart d = 0; d < static_cast<Dart>(partner.size()); ++d)
    if (partner[d] < 0)
      throw DiagramError("dangling port " + std::to_string(d / 4) + "." + std::to_string(d % 4));
  return SurfaceDiagram(std::move(partner));
}

std::vector<std::pair<Dart, Dart>> SurfaceDiagram::edges() const {
  std::vector<std::pair<Dart, Dart>> out;
  out.reserve(partner_.size() / 2);
  for (Dart d = 0; d < dart_count(); ++d)
    if (d < partner_[d]) out.emplace_back(d, partner_[d]);
  return out;
}

FaceStructure trace_faces(const SurfaceDiagram& d) {
  FaceStructure fs;
  fs.face_of_dart.assign(d.dart_count(), -1);
  for (Dart start = 0; start < d.dart_count(); ++start) {
    if (fs.face_of_dart[start] != -1) continue;
    const int id = fs.count();
    std::vector<Dart> boundary;
    Dart cur = start;
    do {
      fs.face_of_dart[cur] = id;
      boundary.push_back(cur);
      cur = d.face_successor(cur);
    } while (cur != start);
    fs.faces.push_back(std::move(boundary));
  }
  return fs;
}

std::vector<int> diagram_pieces(const SurfaceDiagram& d) {
  const int c = d.crossing_count();
  std::vector<int> piece(c, -1);
  int next = 0;
  for (int s = 0; s < c; ++s) {
    if (piece[s] != -1) continue;
    std::queue<int> todo;
    todo.push(s);
    piece[s] = next;
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop();
      for (int p = 0; p < 4; ++p) {
        const int y = crossing_of(d.partner(4 * x + p));
        if (piece[y] == -1) {
          piece[y] = next;
          todo.push(y);
        }
      }
    }
    ++next;
  }
  return piece;
}

int piece_count(const SurfaceDiagram& d) {
  const auto p = diagram_pieces(d);
  return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

bool is_split(const SurfaceDiagram& d) { return piece_count(d) > 1; }

std::vector<DiagramPiece> split_pieces(const SurfaceDiagram& d) {
  const auto piece = diagram_pieces(d);
  const int k = piece.empty() ? 0 : *std::max_element(piece.begin(), piece.end()) + 1;
  std::vector<DiagramPiece> out;
  std::vector<int> local(d.crossing_count(), -1);
  for (int i = 0; i < k; ++i) {
    std::vector<int> map;
    for (int x = 0; x < d.crossing_count(); ++x)
      if (piece[x] == i) {
        local[x] = static_cast<int>(map.size());
        map.push_back(x);
      }
    std::vector<Dart> partner(4 * map.size());
    for (std::size_t j = 0; j < map.size(); ++j)
      for (int p = 0; p < 4; ++p) {
        const Dart e = d.partner(4 * map[j] + p);
        partner[4 * j + p] = 4 * local[crossing_of(e)] + slot_of(e);
      }
    out.push_back({SurfaceDiagram(std::move(partner)), std::move(map)});
  }
  return out;
}

int genus(const SurfaceDiagram& d, const FaceStructure& faces) {
  const auto piece = diagram_pieces(d);
  const int k = *std::max_element(piece.begin(), piece.end()) + 1;
  // chi = V - E + F per piece with E = 2V, so chi = F - V.
  std::vector<int> chi(k, 0);
  for (int x = 0; x < d.crossing_count(); ++x) chi[piece[x]] -= 1;
  for (const auto& f : faces.faces) chi[piece[crossing_of(f.front())]] += 1;
  int g = 0;
  for (int e : chi) g += (2 - e) / 2;
  return g;
}

int genus(const SurfaceDiagram& d) { return genus(d, trace_faces(d)); }

std::vector<LinkComponent> link_components(const SurfaceDiagram& d) {
  std::vector<LinkComponent> out;
  std::vector<char> seen(d.dart_count(), 0);
  for (Dart start = 0; start < d.dart_count(); ++start) {
    if (seen[start]) continue;
    LinkComponent comp;
    Dart cur = start;
    do {
      seen[cur] = 1;
      seen[d.partner(cur)] = 1;
      comp.darts.push_back(cur);
      cur = d.strand_successor(cur);
    } while (cur != start);
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_alternating_scan(const SurfaceDiagram& d) {
  for (const auto& comp : link_components(d)) {
    const auto& ds = comp.darts;
    const std::size_t n = ds.size();
    for (std::size_t i = 0; i < n; ++i) {
      // Each dart leaves a crossing; its slot parity says over or under.
      if (is_over_slot(slot_of(ds[i])) == is_over_slot(slot_of(ds[(i + 1) % n]))) return false;
    }
  }
  return true;
}

LinkOrientation LinkOrientation::canonical(const SurfaceDiagram& d) {
  LinkOrientation o;
  o.assign(d, std::vector<bool>(link_components(d).size(), false));
  return o;
}

LinkOrientation::LinkOrientation(const SurfaceDiagram& d, std::vector<bool> reversed) {
  assign(d, std::move(reversed));
}

void LinkOrientation::assign(const SurfaceDiagram& d, std::vector<bool> reversed) {
  const auto comps = link_components(d);
  if (reversed.size() != comps.size())
    throw DiagramError("orientation names " + std::to_string(reversed.size()) +
                       " components, diagram has " + std::to_string(comps.size()));
  reversed_ = std::move(reversed);
  component_of_dart_.assign(d.dart_count(), -1);
  outgoing_.assign(d.dart_count(), 0);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (Dart a : comps[k].darts) {
      const Dart b = d.partner(a);
      component_of_dart_[a] = component_of_dart_[b] = static_cast<int>(k);
      outgoing_[reversed_[k] ? b : a] = 1;
    }
}

LinkOrientation LinkOrientation::with_reversed(int component) const {
  LinkOrientation o = *this;
  o.reversed_[component] = !o.reversed_[component];
  for (std::size_t dd = 0; dd < o.outgoing_.size(); ++dd)
    if (o.component_of_dart_[dd] == component) o.outgoing_[dd] = !o.outgoing_[dd];
  return o;
}

std::string LinkOrientation::to_string() const {
  std::string s;
  for (bool r : reversed_) s.push_back(r ? '-' : '+');
  return s;
}

LinkOrientation parse_orientation(const SurfaceDiagram& d, const std::string& spec) {
  std::vector<bool> rev;
  for (char ch : spec) {
    if (ch == '+') rev.push_back(false);
    else if (ch == '-') rev.push_back(true);
    else throw DiagramError(std::string("orientation character '") + ch + "' is not + or -");
  }
  return LinkOrientation(d, std::move(rev));
}

int over_exit_slot(const LinkOrientation& o, int crossing) {
  return o.is_outgoing(4 * crossing + 1) ? 1 : 3;
}

int under_exit_slot(const LinkOrientation& o, int crossing) {
  return o.is_outgoing(4 * crossing + 0) ? 0 : 2;
}

CrossingSigns crossing_signs(const SurfaceDiagram& d, const LinkOrientation& o) {
  CrossingSigns cs;
  cs.sign.resize(d.crossing_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int over = over_exit_slot(o, x);
    const int under = under_exit_slot(o, x);
    cs.sign[x] = (under == (over + 1) % 4) ? 1 : -1;
    (cs.sign[x] > 0 ? cs.positive : cs.negative) += 1;
  }
  return cs;
}

namespace {

SurfaceDiagram relabel_slots(const SurfaceDiagram& d, int crossing, int steps) {
  // old slot p of `crossing` becomes slot p + steps
  auto map = [&](Dart e) { return crossing_of(e) == crossing ? rotate(e, steps) : e; };
  std::vector<Dart> partner(d.dart_count());
  for (Dart e = 0; e < d.dart_count(); ++e) partner[map(e)] = map(d.partner(e));
  return SurfaceDiagram(std::move(partner));
}

}  // namespace

SurfaceDiagram with_crossing_switched(const SurfaceDiagram& d, int crossing) {
  return relabel_slots(d, crossing, 1);
}

SurfaceDiagram with_slots_rotated(const SurfaceDiagram& d, int crossing) {
  return relabel_slots(d, crossing, 2);
}

SurfaceDiagram with_crossings_relabeled(const SurfaceDiagram& d, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != d.crossing_count())
    throw DiagramError("relabeling has wrong size");
  auto map = [&](Dart e) { return 4 * perm[crossing_of(e)] + slot_of(e); };
  std::vector<Dart> partner(d.dart_count());
  for (Dart e = 0; e < d.dart_count(); ++e) partner[map(e)] = map(d.partner(e));
  return SurfaceDiagram(std::move(partner));
}

}  // namespace glpair
