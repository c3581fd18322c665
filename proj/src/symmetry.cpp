#include "fullerene/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace fullerene {

int AutomorphismGroup::rotation_order() const {
  return static_cast<int>(std::count_if(elements.begin(), elements.end(), [](const Automorphism& a) { return a.proper; }));
}

namespace {

// Extends root dart (0 -> rot[0][0]) |-> (v -> rot[v][slot]) to a full map,
// or returns an empty vector when the extension is inconsistent.
std::vector<int> extend(const PlaneGraph& g, int v, int slot, bool proper) {
  const int n = g.vertex_count();
  std::vector<int> phi(n, -1), inv(n, -1);
  // ref[x]: a neighbour of x whose image is known when x is queued.
  std::vector<int> ref(n, -1), queue;
  queue.reserve(n);
  auto assign = [&](int x, int y) {
    if (phi[x] >= 0) return phi[x] == y;
    if (inv[y] >= 0 || g.degree(x) != g.degree(y)) return false;
    phi[x] = y;
    inv[y] = x;
    queue.push_back(x);
    return true;
  };
  assign(0, v);
  if (!assign(g.neighbours(0)[0], g.neighbours(v)[slot])) return {};
  ref[0] = g.neighbours(0)[0];
  ref[g.neighbours(0)[0]] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    const int y = phi[x];
    const int d = g.degree(x);
    const int a = g.slot_of(x, ref[x]);
    const int b = g.slot_of(y, phi[ref[x]]);
    if (b < 0) return {};
    for (int k = 0; k < d; ++k) {
      const int nx = g.neighbours(x)[(a + k) % d];
      const int ny = g.neighbours(y)[((proper ? b + k : b - k) % d + d) % d];
      const bool fresh = phi[nx] < 0;
      if (!assign(nx, ny)) return {};
      if (fresh) ref[nx] = x;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (phi[x] < 0) return {};
  }
  return phi;
}

}  // namespace

AutomorphismGroup automorphisms(const FullereneGraph& f) {
  const PlaneGraph& g = f.graph();
  AutomorphismGroup group;
  for (int proper = 1; proper >= 0; --proper) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != g.degree(0)) continue;
      for (int s = 0; s < g.degree(v); ++s) {
        auto phi = extend(g, v, s, proper);
        if (phi.empty()) continue;
        Automorphism a{std::move(phi), proper != 0};
        const bool identity = a.proper && v == 0 && s == 0;
        if (identity) {
          group.elements.insert(group.elements.begin(), std::move(a));
        } else {
          group.elements.push_back(std::move(a));
        }
      }
    }
  }
  return group;
}

int element_order(const Automorphism& a) {
  const int n = static_cast<int>(a.vertex_map.size());
  std::vector<char> seen(n, 0);
  int order = 1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = s; !seen[x]; x = a.vertex_map[x]) {
      seen[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  // A reflection can fix every vertex of a graph only if the graph is a
  // cycle; for cubic graphs an improper map has order at least 2.
  if (!a.proper && order == 1) order = 2;
  return order;
}

namespace {

// Whether the map fixes a vertex, an edge or a face.
bool fixes_site(const FullereneGraph& f, const Automorphism& a) {
  const auto& phi = a.vertex_map;
  const PlaneGraph& g = f.graph();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (phi[v] == v) return true;
    for (int u : g.neighbours(v)) {
      if (phi[v] == u && phi[u] == v) return true;
    }
  }
  for (const auto& face : f.faces()) {
    const int u = face.boundary[0], w = face.boundary[1];
    const int image = a.proper ? f.face_of_edge(phi[u], phi[w]) : f.face_of_edge(phi[w], phi[u]);
    if (image == face.id) return true;
  }
  return false;
}

}  // namespace

std::string point_group(const FullereneGraph& f) { return point_group(f, automorphisms(f)); }

std::string point_group(const FullereneGraph& f, const AutomorphismGroup& g) {
  const int rot = g.rotation_order();
  bool has_order6_rotation = false, has_inversion = false, has_improper4 = false, has_improper6 = false;
  bool has_reflection = false, has_improper = false;
  for (const auto& a : g.elements) {
    const int k = element_order(a);
    if (a.proper) {
      has_order6_rotation |= k == 6;
      continue;
    }
    has_improper = true;
    has_improper4 |= k == 4;
    has_improper6 |= k == 6;
    if (k == 2) {
      if (fixes_site(f, a)) {
        has_reflection = true;
      } else {
        has_inversion = true;
      }
    }
  }
  std::string name;
  switch (rot) {
    case 1:
      if (!has_improper) return "C1";
      return has_reflection ? "Cs" : "Ci";
    case 2:
      if (!has_improper) return "C2";
      if (has_improper4) return "S4";
      return has_inversion ? "C2h" : "C2v";
    case 3:
      if (!has_improper) return "C3";
      if (has_inversion) return "S6";
      return has_improper6 ? "C3h" : "C3v";
    case 4: name = "D2"; break;
    case 6: name = "D3"; break;
    case 10: name = "D5"; break;
    case 12: name = has_order6_rotation ? "D6" : "T"; break;
    case 60: name = "I"; break;
    default: throw SymmetryError("rotation subgroup of order " + std::to_string(rot) + " is not a fullerene group");
  }
  if (!has_improper) return name;
  if (name == "I") return "Ih";
  if (name == "T") return has_inversion ? "Th" : "Td";
  if (name == "D2") return has_inversion ? "D2h" : "D2d";
  if (name == "D6") return has_inversion ? "D6h" : "D6d";
  return name + (has_inversion ? "d" : "h");
}

const std::vector<std::string>& fullerene_point_groups() {
  static const std::vector<std::string> names{"C1",  "C2",  "C3",  "Ci",  "Cs",  "S4",  "S6",  "C2v", "C2h", "C3v",
                                              "C3h", "D2",  "D3",  "D5",  "D6",  "D2h", "D2d", "D3h", "D3d", "D5h",
                                              "D5d", "D6h", "D6d", "T",   "Td",  "Th",  "I",   "Ih"};
  return names;
}

}  // namespace fullerene
