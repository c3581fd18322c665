#include "fullerene/goldberg.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fullerene/planar_code.hpp"
#include "fullerene/spiral.hpp"

namespace fullerene {

namespace {

constexpr int kScale = 5;

// Interior lattice points (i, j) with i, j >= 1 and i + j < 5.
int interior_index(int i, int j) {
  static const std::array<std::array<int, 5>, 5> index = [] {
    std::array<std::array<int, 5>, 5> t{};
    int k = 0;
    for (int a = 1; a < kScale; ++a) {
      for (int b = 1; a + b < kScale; ++b) t[a][b] = k++;
    }
    return t;
  }();
  return index[i][j];
}

}  // namespace

Inflation goldberg_5_0(const FullereneGraph& f) {
  const PlaneGraph& g = f.graph();
  const int nf = f.face_count();
  std::map<std::pair<int, int>, int> edge_index;
  for (int a = 0; a < nf; ++a) {
    for (int b : f.face_neighbours(a)) {
      if (a < b) edge_index.emplace(std::pair{a, b}, static_cast<int>(edge_index.size()));
    }
  }
  const int ne = static_cast<int>(edge_index.size());
  const int interior_per_triangle = (kScale - 1) * (kScale - 2) / 2;
  const int nodes = nf + (kScale - 1) * ne + interior_per_triangle * g.vertex_count();

  InflationMap map;
  map.parents.assign(nodes, {});
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(static_cast<std::size_t>(kScale * kScale) * g.vertex_count());

  auto edge_node = [&](int x, int y, int t) {
    if (x > y) {
      std::swap(x, y);
      t = kScale - t;
    }
    const int id = nf + (kScale - 1) * edge_index.at({x, y}) + (t - 1);
    map.parents[id] = {2 * t < kScale ? x : y};
    return id;
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& r = g.neighbours(v);
    const int a = f.face_of_edge(v, r[0]);
    const int b = f.face_of_edge(v, r[1]);
    const int c = f.face_of_edge(v, r[2]);
    auto node = [&](int i, int j) {
      if (i == 0 && j == 0) return a;
      if (i == kScale && j == 0) return b;
      if (i == 0 && j == kScale) return c;
      if (j == 0) return edge_node(a, b, i);
      if (i == 0) return edge_node(a, c, j);
      if (i + j == kScale) return edge_node(b, c, j);
      const int id = nf + (kScale - 1) * ne + interior_per_triangle * v + interior_index(i, j);
      // Lattice distances to the three corners.
      const int da = i + j, db = kScale - i, dc = kScale - j;
      const int m = std::min({da, db, dc});
      auto& p = map.parents[id];
      p.clear();
      if (da == m) p.push_back(a);
      if (db == m) p.push_back(b);
      if (dc == m) p.push_back(c);
      return id;
    };
    for (int i = 0; i < kScale; ++i) {
      for (int j = 0; i + j < kScale; ++j) {
        triangles.push_back({node(i, j), node(i + 1, j), node(i, j + 1)});
        if (i + j + 1 < kScale) triangles.push_back({node(i + 1, j), node(i + 1, j + 1), node(i, j + 1)});
      }
    }
  }
  for (int x = 0; x < nf; ++x) map.parents[x] = {x};

  // Around every node, chain the triangles (x, q, r) by q -> r.
  std::vector<std::vector<std::array<int, 3>>> around(nodes);  // {q, r, triangle}
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    const auto& tr = triangles[t];
    for (int k = 0; k < 3; ++k) around[tr[k]].push_back({tr[(k + 1) % 3], tr[(k + 2) % 3], t});
  }
  std::vector<Cycle> faces(nodes);
  for (int x = 0; x < nodes; ++x) {
    const auto& list = around[x];
    int q = list[0][0];
    for (std::size_t step = 0; step < list.size(); ++step) {
      auto it = std::find_if(list.begin(), list.end(), [&](const std::array<int, 3>& e) { return e[0] == q; });
      if (it == list.end()) throw ConstructionError("subdivided triangulation is not closed");
      faces[x].push_back((*it)[2]);
      q = (*it)[1];
    }
  }
  FullereneGraph inflated = fullerene_from_faces(faces, static_cast<int>(triangles.size()));
  // Face ids follow tracing order; translate node ids.
  InflationMap out;
  out.parents.assign(nodes, {});
  out.image.assign(nf, -1);
  for (int x = 0; x < nodes; ++x) {
    const int id = inflated.face_of_edge(faces[x][0], faces[x][1]);
    out.parents[id] = map.parents[x];
    if (x < nf) out.image[x] = id;
  }
  return {std::move(inflated), std::move(out)};
}

namespace {

std::vector<int> complement_component(const FullereneGraph& f, const std::vector<char>& blocked, int start) {
  std::vector<char> seen(blocked);
  std::vector<int> comp, stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    comp.push_back(x);
    for (int y : f.face_neighbours(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool share_edge(const FullereneGraph& f, int a, int b) {
  const auto& nb = f.face_neighbours(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

}  // namespace

void check_hexagon_cycle(const FullereneGraph& f, const HexagonCycle& c) {
  const int k = static_cast<int>(c.faces.size());
  if (k < 3) throw ConstructionError("hexagon cycle needs at least three faces");
  std::vector<char> in(f.face_count(), 0);
  for (int x : c.faces) {
    if (x < 0 || x >= f.face_count()) throw ConstructionError("hexagon cycle names a missing face");
    if (in[x]) throw ConstructionError("hexagon cycle repeats a face");
    if (f.is_pentagon(x)) throw ConstructionError("hexagon cycle contains a pentagon");
    in[x] = 1;
  }
  for (int t = 0; t < k; ++t) {
    if (!share_edge(f, c.faces[t], c.faces[(t + 1) % k])) {
      throw ConstructionError("consecutive faces of a hexagon cycle must share an edge");
    }
  }
  int rest = -1;
  for (int x = 0; x < f.face_count() && rest < 0; ++x) {
    if (!in[x]) rest = x;
  }
  if (rest < 0) throw ConstructionError("hexagon cycle covers every face");
  const auto side = complement_component(f, in, rest);
  if (static_cast<int>(side.size()) + k == f.face_count()) throw ConstructionError("hexagon cycle does not separate");
}

std::vector<int> side_of_cycle(const FullereneGraph& f, const HexagonCycle& c, int reference) {
  std::vector<char> in(f.face_count(), 0);
  for (int x : c.faces) in[x] = 1;
  if (in[reference]) throw ConstructionError("reference face lies on the cycle");
  return complement_component(f, in, reference);
}

std::optional<HexagonCycle> ring_around(const FullereneGraph& f, const std::vector<int>& region, int outside) {
  std::vector<char> in(f.face_count(), 0);
  for (int x : region) in[x] = 1;
  if (in[outside]) throw ConstructionError("outside reference lies in the region");
  std::vector<char> filled(f.face_count(), 1);
  for (int x : complement_component(f, in, outside)) filled[x] = 0;

  const PlaneGraph& g = f.graph();
  std::vector<std::pair<int, int>> start_of(g.vertex_count(), {-1, -1});
  int darts = 0, first = -1;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.neighbours(u)) {
      if (filled[f.face_of_edge(u, v)] && !filled[f.face_of_edge(v, u)]) {
        if (start_of[u].first >= 0) throw ConstructionError("region boundary touches itself");
        start_of[u] = {u, v};
        ++darts;
        if (first < 0) first = u;
      }
    }
  }
  if (first < 0) throw ConstructionError("region has no boundary");
  std::vector<int> sequence;
  int u = first, walked = 0;
  do {
    const int v = start_of[u].second;
    const int across = f.face_of_edge(v, u);
    if (sequence.empty() || sequence.back() != across) sequence.push_back(across);
    u = v;
    if (start_of[u].first < 0) throw ConstructionError("region boundary is broken");
    ++walked;
  } while (u != first);
  if (walked != darts) throw ConstructionError("region has several boundary cycles");
  while (sequence.size() > 1 && sequence.front() == sequence.back()) sequence.pop_back();

  // Loop erasure on the cyclic sequence: at a repeated face keep the longer loop.
  std::vector<int> chain = sequence;
  for (bool again = true; again;) {
    again = false;
    std::vector<int> position(f.face_count(), -1);
    for (int j = 0; j < static_cast<int>(chain.size()) && !again; ++j) {
      const int i = position[chain[j]];
      if (i < 0) {
        position[chain[j]] = j;
        continue;
      }
      const int inner = j - i, outer = static_cast<int>(chain.size()) - inner;
      if (inner <= outer) {
        chain.erase(chain.begin() + i, chain.begin() + j);
      } else {
        std::vector<int> kept(chain.begin() + i, chain.begin() + j);
        chain = std::move(kept);
      }
      again = true;
    }
  }
  for (int x : chain) {
    if (f.is_pentagon(x)) return std::nullopt;
  }
  HexagonCycle ring{chain};
  check_hexagon_cycle(f, ring);
  return ring;
}

std::vector<HexagonCycle> lift_hexagon_cycle(const FullereneGraph& f, const HexagonCycle& c, int inside,
                                             const Inflation& inflation) {
  check_hexagon_cycle(f, c);
  const auto side = side_of_cycle(f, c, inside);
  std::vector<char> in_side(f.face_count(), 0), on_cycle(f.face_count(), 0);
  for (int x : side) in_side[x] = 1;
  for (int x : c.faces) on_cycle[x] = 1;
  // The far side is the largest piece left; small pockets can hide behind the cycle.
  int outside = -1;
  std::size_t best = 0;
  std::vector<char> seen(f.face_count(), 0);
  for (int x = 0; x < f.face_count(); ++x) {
    if (in_side[x] || on_cycle[x] || seen[x]) continue;
    const auto comp = complement_component(f, on_cycle, x);
    for (int y : comp) seen[y] = 1;
    if (comp.size() > best) {
      best = comp.size();
      outside = x;
    }
  }
  if (outside < 0) throw ConstructionError("cycle has nothing outside");

  const FullereneGraph& h = inflation.graph;
  std::vector<int> descendants;
  for (int y = 0; y < h.face_count(); ++y) {
    const auto& p = inflation.map.parents[y];
    if (std::any_of(p.begin(), p.end(), [&](int x) { return in_side[x] != 0; })) descendants.push_back(y);
  }
  const auto dist = face_distances_from(h, descendants);
  std::vector<HexagonCycle> out;
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> region;
    for (int y = 0; y < h.face_count(); ++y) {
      if (dist[y] < k) region.push_back(y);
    }
    auto ring = ring_around(h, region, inflation.map.image[outside]);
    if (!ring) throw ConstructionError("lifted ring contains a pentagon");
    for (int y : ring->faces) {
      const auto& p = inflation.map.parents[y];
      if (!std::all_of(p.begin(), p.end(), [&](int x) { return on_cycle[x] != 0; })) {
        throw ConstructionError("lifted ring leaves the band of the original cycle");
      }
    }
    out.push_back(std::move(*ring));
  }
  return out;
}

std::vector<HexagonCycle> separating_cycle_witnesses(const FullereneGraph& f, const PentagonCluster& a,
                                                     const PentagonCluster& b) {
  const int d = cluster_distance(f, a, b);
  const auto dist = face_distances_from(f, a.faces);
  std::vector<HexagonCycle> out;
  for (int k = 1; k < d; ++k) {
    std::vector<int> region;
    for (int x = 0; x < f.face_count(); ++x) {
      if (dist[x] < k) region.push_back(x);
    }
    if (auto ring = ring_around(f, region, b.faces.front())) out.push_back(std::move(*ring));
  }
  return out;
}

std::vector<int> excised_region(const Inflation& inflation, const std::vector<int>& parent_faces) {
  std::set<int> parents(parent_faces.begin(), parent_faces.end());
  std::vector<int> out;
  for (int y = 0; y < inflation.graph.face_count(); ++y) {
    const auto& p = inflation.map.parents[y];
    if (std::all_of(p.begin(), p.end(), [&](int x) { return parents.count(x) > 0; })) out.push_back(y);
  }
  return out;
}

namespace {


// Grows `core` by hexagons, always filling the most concave boundary run
// first. Every hexagon is forced: the face outside a run "2 3^r 2" covers the
// run and has 4 - r new vertices.
Patch grow_cone(Patch p, int boundary_target) {
  while (p.boundary_length() < boundary_target) {
    const auto word = p.raw_code().word;
    const int b = static_cast<int>(word.size());
    int best = -1, best_run = -1;
    for (int i = 0; i < b; ++i) {
      if (word[i] != '2') continue;
      int run = 0;
      while (run < b && word[(i + 1 + run) % b] == '3') ++run;
      if (run > best_run) {
        best_run = run;
        best = i;
      }
    }
    if (best < 0 || best_run > 4) throw ConstructionError("core cannot be surrounded by hexagons");
    p.add_face(best, best_run, 6);
  }
  return p;
}

// Follows the boundary word from the dart u -> v of `g`: after a degree-2
// vertex the walk turns into the same face, after a degree-3 vertex it skips
// one edge. Returns the vertex sequence when the walk closes up simply.
std::optional<Cycle> follow_word(const PlaneGraph& g, const std::vector<char>& inner, int u, int v,
                                 const std::string& word) {
  const int n = static_cast<int>(word.size());
  Cycle walk{u};
  std::vector<char> used(g.vertex_count(), 0);
  used[u] = 1;
  int prev = u, cur = v;
  for (int t = 1; t < n; ++t) {
    if (used[cur] || !inner[cur]) return std::nullopt;
    used[cur] = 1;
    walk.push_back(cur);
    int next = g.next_around(cur, prev);
    if (word[t] == '3') next = g.next_around(cur, next);
    prev = cur;
    cur = next;
  }
  if (cur != u) return std::nullopt;
  // Closing turn at u must lead back to v.
  int next = g.next_around(u, prev);
  if (word[0] == '3') next = g.next_around(u, next);
  if (next != v) return std::nullopt;
  return walk;
}

// Faces of `p` enclosed by the walk, on the side its darts run along.
std::optional<Patch> enclosed_patch(const Patch& p, const PlaneGraph& g, const Cycle& walk) {
  std::set<std::pair<int, int>> wall;
  const int n = static_cast<int>(walk.size());
  for (int t = 0; t < n; ++t) {
    wall.emplace(walk[t], walk[(t + 1) % n]);
    wall.emplace(walk[(t + 1) % n], walk[t]);
  }
  // Faces of p by dart.
  std::map<std::pair<int, int>, int> face_of;
  for (int x = 0; x < static_cast<int>(p.faces().size()); ++x) {
    const auto& c = p.faces()[x];
    for (std::size_t t = 0; t < c.size(); ++t) face_of[{c[t], c[(t + 1) % c.size()]}] = x;
  }
  auto start = face_of.find({walk[0], walk[1]});
  if (start == face_of.end()) return std::nullopt;
  std::vector<char> in(p.faces().size(), 0);
  std::vector<int> stack{start->second};
  in[start->second] = 1;
  while (!stack.empty()) {
    const auto& c = p.faces()[stack.back()];
    stack.pop_back();
    for (std::size_t t = 0; t < c.size(); ++t) {
      const int a = c[t], b = c[(t + 1) % c.size()];
      if (wall.count({a, b})) continue;
      auto it = face_of.find({b, a});
      if (it == face_of.end()) return std::nullopt;  // leaked to the outer face
      if (!in[it->second]) {
        in[it->second] = 1;
        stack.push_back(it->second);
      }
    }
  }
  std::map<int, int> local;
  auto id = [&](int v) { return local.emplace(v, static_cast<int>(local.size())).first->second; };
  Cycle boundary;
  for (int v : walk) boundary.push_back(id(v));
  std::vector<Cycle> faces;
  for (std::size_t x = 0; x < in.size(); ++x) {
    if (!in[x]) continue;
    Cycle c;
    for (int v : p.faces()[x]) c.push_back(id(v));
    faces.push_back(std::move(c));
  }
  (void)g;
  Patch out(std::move(faces), std::move(boundary), static_cast<int>(local.size()));
  return out;
}

// Boundary of a face set of f in face order, with degrees inside the set.
std::pair<Cycle, std::string> region_boundary(const FullereneGraph& f, const std::vector<int>& region) {
  std::set<std::pair<int, int>> darts;
  for (int x : region) {
    const auto& c = f.face(x).boundary;
    for (std::size_t t = 0; t < c.size(); ++t) darts.emplace(c[t], c[(t + 1) % c.size()]);
  }
  std::map<int, int> next;
  for (const auto& [u, v] : darts) {
    if (darts.count({v, u})) continue;
    if (!next.emplace(u, v).second) throw ConstructionError("excised region is not a disk");
  }
  if (next.empty()) throw ConstructionError("excised region has no boundary");
  Cycle boundary;
  const int start = next.begin()->first;
  int u = start;
  do {
    boundary.push_back(u);
    u = next.at(u);
  } while (u != start && boundary.size() <= next.size());
  if (boundary.size() != next.size()) throw ConstructionError("excised region has several boundary cycles");
  std::string word;
  for (int v : boundary) {
    int degree = 0;
    for (int w : f.graph().neighbours(v)) degree += darts.count({v, w}) || darts.count({w, v});
    word.push_back(static_cast<char>('0' + degree));
  }
  return {boundary, word};
}

}  // namespace

Patch grow_to_boundary(const Patch& core, const std::string& word, int max_boundary) {
  const int pentagons = core.pentagons();
  for (int target = 2 * static_cast<int>(word.size()); target <= max_boundary; target *= 2) {
    std::optional<Patch> best;
    for (const Patch& seed : {core, core.mirrored()}) {
      const Patch cone = grow_cone(seed, target);
      const PlaneGraph g = cone.graph();
      std::vector<char> inner(g.vertex_count(), 0);
      for (int v = 0; v < g.vertex_count(); ++v) inner[v] = cone.degree(v) == 3;
      for (int u = 0; u < g.vertex_count(); ++u) {
        if (!inner[u]) continue;
        for (int v : g.neighbours(u)) {
          auto walk = follow_word(g, inner, u, v, word);
          if (!walk) continue;
          auto patch = enclosed_patch(cone, g, *walk);
          if (!patch || patch->pentagons() != pentagons) continue;
          try {
            patch->check();
          } catch (const PatchError&) {
            continue;
          }
          if (patch->raw_code().word != word) continue;
          if (!best || patch->faces().size() < best->faces().size()) best = std::move(patch);
        }
      }
    }
    if (best) return *best;
  }
  throw ConstructionError("no hexagon padding of the core matches boundary " + word);
}

FullereneGraph reinstate_clusters(const FullereneGraph& original, const Inflation& inflation,
                                  const std::vector<PentagonCluster>& clusters) {
  const FullereneGraph& h = inflation.graph;
  auto faces = h.face_cycles();
  std::vector<char> removed(faces.size(), 0);
  int next_vertex = h.vertex_count();
  std::vector<Cycle> added;
  for (const auto& c : clusters) {
    const auto closure = closed_cluster_faces(original, c);
    const auto region = excised_region(inflation, closure);
    for (int y : region) {
      if (removed[y]) throw ConstructionError("excised regions overlap");
      removed[y] = 1;
    }
    const auto [boundary, word] = region_boundary(h, region);
    std::vector<Cycle> core_faces;
    for (int x : closure) core_faces.push_back(original.face(x).boundary);
    const Patch core = Patch::from_faces(core_faces);
    const Patch replacement = grow_to_boundary(core, word);
    std::vector<int> id(replacement.vertex_count(), -1);
    for (int t = 0; t < replacement.boundary_length(); ++t) id[replacement.boundary()[t]] = boundary[t];
    for (auto& v : id) {
      if (v < 0) v = next_vertex++;
    }
    for (const auto& face : replacement.faces()) {
      Cycle mapped;
      for (int v : face) mapped.push_back(id[v]);
      added.push_back(std::move(mapped));
    }
  }
  std::vector<Cycle> result;
  for (std::size_t y = 0; y < faces.size(); ++y) {
    if (!removed[y]) result.push_back(std::move(faces[y]));
  }
  result.insert(result.end(), added.begin(), added.end());
  std::vector<int> compact(next_vertex, -1);
  int n = 0;
  for (auto& face : result) {
    for (auto& v : face) {
      if (compact[v] < 0) compact[v] = n++;
      v = compact[v];
    }
  }
  return fullerene_from_faces(result, n);
}

FullereneGraph reinstate_cluster(const FullereneGraph& original, const Inflation& inflation,
                                 const PentagonCluster& cluster) {
  return reinstate_clusters(original, inflation, {cluster});
}

FullereneGraph inflate_preserving_clusters(const FullereneGraph& f, int rounds, std::vector<RoundReport>* report) {
  if (rounds < 0) throw ConstructionError("round count must be non-negative");
  for (const auto& c : pentagon_clusters(f)) {
    if (c.size() > 5) throw ConstructionError("cluster-preserving inflation needs clusters of at most five pentagons");
  }
  FullereneGraph current = f;
  for (int r = 0; r < rounds; ++r) {
    const auto inflation = goldberg_5_0(current);
    std::vector<PentagonCluster> big;
    for (auto& c : pentagon_clusters(current)) {
      if (c.size() >= 2) big.push_back(std::move(c));
    }
    current = big.empty() ? inflation.graph : reinstate_clusters(current, inflation, big);
    if (report) {
      const auto s = separation_number(current);
      report->push_back({current.vertex_count(), pip(current).to_string(), s.value_or(0)});
    }
  }
  return current;
}

FullereneGraph tube_fullerene_6_6(int j) {
  if (j < 1) throw ConstructionError("a (6,6) tube needs at least one ring of hexagons");
  SpiralCode code;
  code.n = 20 + 10 * j;
  const int f = code.face_count();
  for (int k = 0; k < 6; ++k) {
    code.positions[k] = k + 1;
    code.positions[6 + k] = f - 5 + k;
  }
  FullereneGraph t = wind_from_spiral(code);
  if (pip(t).to_string() != "6,6") throw ConstructionError("tube construction lost its caps");
  return t;
}

std::string record_checksum(const PlaneGraph& g) {
  std::ostringstream record;
  write_planar_code_graph(record, g, true);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char ch : record.str()) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

std::vector<Seed> load_seed_table(const std::string& planar_code_path, const std::string& manifest_path) {
  std::ifstream code(planar_code_path, std::ios::binary);
  if (!code) throw ConstructionError("cannot open seed graphs " + planar_code_path);
  std::ifstream manifest(manifest_path);
  if (!manifest) throw ConstructionError("cannot open seed manifest " + manifest_path);
  PlanarCodeReader reader(code, true);
  std::vector<Seed> out;
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string pip_text, id, checksum;
    int n = 0;
    if (!(in >> pip_text >> n >> id >> checksum)) throw ConstructionError("bad manifest line: " + line);
    auto g = reader.next();
    if (!g) throw ConstructionError("seed graphs end before the manifest");
    if (record_checksum(*g) != checksum) throw ConstructionError("checksum mismatch for seed " + pip_text);
    Seed seed{Pip::parse(pip_text), id, validate_fullerene(std::move(*g))};
    if (seed.graph.vertex_count() != n) throw ConstructionError("vertex count mismatch for seed " + pip_text);
    if (pip(seed.graph) != seed.pip) throw ConstructionError("seed for " + pip_text + " has another partition");
    out.push_back(std::move(seed));
  }
  if (reader.next()) throw ConstructionError("seed graphs outnumber manifest lines");
  return out;
}

void save_seed_table(const std::vector<Seed>& seeds, const std::string& planar_code_path,
                     const std::string& manifest_path) {
  std::ofstream code(planar_code_path, std::ios::binary);
  std::ofstream manifest(manifest_path);
  if (!code || !manifest) throw ConstructionError("cannot write seed table");
  write_planar_code_header(code);
  manifest << "# pip n spiral_id checksum\n";
  for (const auto& s : seeds) {
    write_planar_code_graph(code, s.graph.graph(), true);
    manifest << s.pip.to_string() << ' ' << s.graph.vertex_count() << ' ' << s.spiral_id << ' '
             << record_checksum(s.graph.graph()) << '\n';
  }
}

const Seed& seed_fullerene_for_partition(const std::vector<Seed>& table, const Pip& p) {
  if (p.largest() > 5) throw ConstructionError("seeds exist only for partitions with parts of at most 5");
  for (const auto& s : table) {
    if (s.pip == p) return s;
  }
  throw ConstructionError("seed table has no fullerene with partition " + p.to_string());
}

}  // namespace fullerene
