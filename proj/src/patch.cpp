#include "fullerene/patch.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace fullerene {

int BoundaryCode::twos() const { return static_cast<int>(std::count(word.begin(), word.end(), '2')); }
int BoundaryCode::threes() const { return static_cast<int>(std::count(word.begin(), word.end(), '3')); }

namespace {

std::string min_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::string r = w.substr(i) + w.substr(0, i);
    if (r < best) best = std::move(r);
  }
  return best;
}

}  // namespace

BoundaryCode BoundaryCode::canonical() const { return {min_rotation(word)}; }

BoundaryCode BoundaryCode::canonical_with_reflection() const {
  std::string rev(word.rbegin(), word.rend());
  return {std::min(min_rotation(word), min_rotation(rev))};
}

Patch::Patch(std::vector<Cycle> faces, Cycle boundary, int vertex_count)
    : faces_(std::move(faces)), boundary_(std::move(boundary)), vertex_count_(vertex_count) {
  recompute_degrees();
}

void Patch::recompute_degrees() {
  std::vector<std::set<int>> nb(vertex_count_);
  for (const auto& f : faces_) {
    const std::size_t s = f.size();
    for (std::size_t t = 0; t < s; ++t) {
      nb[f[t]].insert(f[(t + 1) % s]);
      nb[f[(t + 1) % s]].insert(f[t]);
    }
  }
  degree_.assign(vertex_count_, 0);
  for (int v = 0; v < vertex_count_; ++v) degree_[v] = static_cast<int>(nb[v].size());
}

Patch Patch::polygon(int size) {
  Cycle face(size);
  for (int i = 0; i < size; ++i) face[i] = i;
  return Patch({face}, face, size);
}

Patch Patch::from_faces(const std::vector<Cycle>& faces) {
  std::map<int, int> relabel;
  std::vector<Cycle> local;
  for (const auto& f : faces) {
    Cycle c;
    for (int v : f) {
      auto [it, inserted] = relabel.emplace(v, static_cast<int>(relabel.size()));
      c.push_back(it->second);
    }
    local.push_back(std::move(c));
  }
  std::set<std::pair<int, int>> darts;
  for (const auto& f : local) {
    for (std::size_t t = 0; t < f.size(); ++t) darts.emplace(f[t], f[(t + 1) % f.size()]);
  }
  std::map<int, int> next;  // boundary dart u -> v keyed by u
  for (const auto& [u, v] : darts) {
    if (darts.count({v, u})) continue;
    if (!next.emplace(u, v).second) throw PatchError("boundary is not a simple cycle");
  }
  if (next.empty()) throw PatchError("face set has no boundary");
  Cycle boundary;
  int u = next.begin()->first;
  const int start = u;
  do {
    boundary.push_back(u);
    auto it = next.find(u);
    if (it == next.end()) throw PatchError("boundary walk is broken");
    u = it->second;
    if (boundary.size() > next.size()) throw PatchError("boundary walk does not close");
  } while (u != start);
  if (boundary.size() != next.size()) throw PatchError("complement has several boundary cycles");
  Patch p(std::move(local), std::move(boundary), static_cast<int>(relabel.size()));
  p.check();
  return p;
}

int Patch::pentagons() const {
  return static_cast<int>(std::count_if(faces_.begin(), faces_.end(), [](const Cycle& c) { return c.size() == 5; }));
}

int Patch::hexagons() const {
  return static_cast<int>(std::count_if(faces_.begin(), faces_.end(), [](const Cycle& c) { return c.size() == 6; }));
}

BoundaryCode Patch::raw_code() const {
  BoundaryCode code;
  for (int v : boundary_) code.word.push_back(static_cast<char>('0' + degree_[v]));
  return code;
}

void Patch::add_face(int start, int run, int size) {
  const int b = boundary_length();
  const int path_vertices = run + 2;
  const int fresh = size - path_vertices;
  if (fresh < 0) throw PatchError("face too small for boundary path");
  if (path_vertices > b || (path_vertices == b && fresh == 0)) throw PatchError("boundary path too long");
  std::vector<int> path(path_vertices);
  for (int i = 0; i < path_vertices; ++i) path[i] = boundary_[(start + i) % b];
  if (degree_[path.front()] != 2 || degree_[path.back()] != 2) throw PatchError("path endpoints must have degree 2");
  for (int i = 1; i + 1 < path_vertices; ++i) {
    if (degree_[path[i]] != 3) throw PatchError("path interior must have degree 3");
  }
  if (fresh == 0) {
    for (const auto& f : faces_) {
      const std::size_t s = f.size();
      for (std::size_t t = 0; t < s; ++t) {
        const int x = f[t], y = f[(t + 1) % s];
        if ((x == path.front() && y == path.back()) || (x == path.back() && y == path.front())) {
          throw PatchError("face would create a parallel edge");
        }
      }
    }
  }
  Cycle face(path.rbegin(), path.rend());
  std::vector<int> added;
  for (int i = 0; i < fresh; ++i) {
    added.push_back(vertex_count_++);
    face.push_back(added.back());
  }
  Cycle nb;
  nb.push_back(path.front());
  nb.insert(nb.end(), added.begin(), added.end());
  nb.push_back(path.back());
  for (int i = path_vertices; i < b; ++i) nb.push_back(boundary_[(start + i) % b]);
  faces_.push_back(std::move(face));
  boundary_ = std::move(nb);
  degree_.resize(vertex_count_, 0);
  for (int v : added) degree_[v] = 2;
  ++degree_[path.front()];
  ++degree_[path.back()];
}

Patch Patch::mirrored() const {
  auto faces = faces_;
  for (auto& f : faces) std::reverse(f.begin(), f.end());
  Cycle boundary(boundary_.rbegin(), boundary_.rend());
  return Patch(std::move(faces), std::move(boundary), vertex_count_);
}

void Patch::rotate_boundary(int start) {
  std::rotate(boundary_.begin(), boundary_.begin() + start, boundary_.end());
}

PlaneGraph Patch::graph() const {
  auto all = faces_;
  all.emplace_back(boundary_.rbegin(), boundary_.rend());
  return PlaneGraph::from_faces(all, vertex_count_);
}

void Patch::check() const {
  if (faces_.empty()) throw PatchError("patch has no faces");
  for (const auto& f : faces_) {
    if (f.size() != 5 && f.size() != 6) throw PatchError("inner face of size other than 5 or 6");
  }
  std::vector<char> on_boundary(vertex_count_, 0);
  for (int v : boundary_) {
    if (on_boundary[v]) throw PatchError("boundary cycle repeats a vertex");
    on_boundary[v] = 1;
  }
  PlaneGraph g;
  try {
    g = graph();
    check_plane_graph(g);
  } catch (const GraphError& e) {
    throw PatchError(std::string("patch is not a plane disk: ") + e.what());
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (degree_[v] != g.degree(v)) throw PatchError("degree bookkeeping out of sync");
    if (on_boundary[v] ? (g.degree(v) < 2 || g.degree(v) > 3) : g.degree(v) != 3) {
      throw PatchError("vertex degree violates patch definition");
    }
  }
  if (pentagons() < 6) {
    const auto code = raw_code();
    if (code.twos() <= code.threes()) throw PatchError("patch with p < 6 needs more degree-2 than degree-3 boundary vertices");
  }
}

BoundaryCode boundary_code(const Patch& p) { return p.raw_code().canonical(); }

namespace {

// BFS code of a plane graph from the dart u->v. Neighbours are listed in
// rotation order starting at the vertex the current one was reached from.
std::vector<int> bfs_code(const PlaneGraph& g, int u, int v, const std::vector<char>& marked,
                          const std::vector<int>& best) {
  const int n = g.vertex_count();
  std::vector<int> label(n, 0), parent(n, -1);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> code;
  code.reserve(2 * g.edge_count() + 2 * n);
  label[u] = 1;
  parent[u] = v;
  order.push_back(u);
  int next_label = 2;
  bool equal_so_far = !best.empty();
  auto emit = [&](int value) {
    code.push_back(value);
    if (equal_so_far) {
      const std::size_t i = code.size() - 1;
      if (code[i] > best[i]) return false;
      if (code[i] < best[i]) equal_so_far = false;
    }
    return true;
  };
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    const auto& r = g.neighbours(x);
    const int d = static_cast<int>(r.size());
    const int s = g.slot_of(x, parent[x]);
    if (!emit(marked[x] ? -1 : -2)) return {};
    for (int k = 0; k < d; ++k) {
      const int y = r[(s + k) % d];
      if (!label[y]) {
        label[y] = next_label++;
        parent[y] = x;
        order.push_back(y);
      }
      if (!emit(label[y])) return {};
    }
    if (!emit(0)) return {};
  }
  return code;
}

}  // namespace

std::string canonical_patch_form(const Patch& p) {
  std::vector<char> marked(p.vertex_count(), 0);
  for (int v : p.boundary()) marked[v] = 1;
  std::vector<int> best;
  for (const PlaneGraph& g : {p.graph(), p.graph().mirrored()}) {
    const int b = p.boundary_length();
    for (int t = 0; t < b; ++t) {
      const int u = p.boundary()[t];
      const int v = p.boundary()[(t + 1) % b];
      for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
        auto code = bfs_code(g, x, y, marked, best);
        if (!code.empty() && (best.empty() || code < best)) best = std::move(code);
      }
    }
  }
  std::ostringstream out;
  out << 'P' << p.pentagons() << 'H' << p.hexagons() << ':';
  for (int x : best) out << x << ',';
  return out.str();
}

namespace {

long long ceil_sqrt(long long a) {
  if (a <= 0) return 0;
  long long m = static_cast<long long>(__builtin_sqrt(static_cast<double>(a)));
  while (m * m < a) ++m;
  while (m > 0 && (m - 1) * (m - 1) >= a) --m;
  return m;
}

// Smallest odd value 2m-1 with (2m-1)^2 >= a, i.e. 2*ceil(sqrt(a/4) + 1/2) - 1.
long long odd_ceiling(long long a) {
  const long long c = ceil_sqrt(a);
  return c % 2 == 1 ? c : c + 1;
}

}  // namespace

int min_boundary_length(int pentagons, int hexagons) {
  if (pentagons < 0 || pentagons > 5) throw PatchError("boundary bound needs 0 <= p <= 5");
  if (hexagons < 0 || (pentagons == 0 && hexagons == 0)) throw PatchError("empty patch has no boundary");
  const long long h = hexagons;
  switch (pentagons) {
    case 0: return static_cast<int>(2 * ceil_sqrt(12 * h - 3));
    case 1: return static_cast<int>(odd_ceiling(40 * h + 25));
    case 2: return static_cast<int>(2 * ceil_sqrt(8 * h + 16));
    case 3: return static_cast<int>(odd_ceiling(24 * h + 81));
    case 4: return static_cast<int>(2 * ceil_sqrt(4 * h + 25));
    default: return static_cast<int>(odd_ceiling(8 * h + 113));
  }
}

int max_hexagons_in_patch(int pentagons, int boundary) {
  if (pentagons < 0 || pentagons > 5) throw PatchError("hexagon bound needs 0 <= p <= 5");
  int best = 0;
  for (int h = pentagons == 0 ? 1 : 0;; ++h) {
    if (min_boundary_length(pentagons, h) > boundary) break;
    best = h;
  }
  return best;
}

int max_hexagons_with_cluster(int k) {
  if (k < 7 || k > 12) throw PatchError("cluster size must be in 7..12");
  // k pentagons share at least k-1 edges, so the complement boundary is at
  // most 5k - 2(k-1). Several complement patches merge into one with more
  // hexagons and the same total boundary, so one patch bounds them all; the
  // bound is monotone in b, so b = 3k+2 is the optimum over all b <= 3k+2.
  return max_hexagons_in_patch(12 - k, 3 * k + 2);
}

int max_vertices_with_big_cluster() {
  int best = 0;
  for (int k = 7; k <= 12; ++k) {
    const int faces = 12 + max_hexagons_with_cluster(k);
    best = std::max(best, 2 * (faces - 2));
  }
  return best;
}

namespace {

int first_edge_with_degree_two_ends(const Patch& p) {
  const int b = p.boundary_length();
  for (int t = 0; t < b; ++t) {
    if (p.degree(p.boundary()[t]) == 2 && p.degree(p.boundary()[(t + 1) % b]) == 2) return t;
  }
  throw PatchError("no boundary edge with two degree-2 ends (impossible for p < 6)");
}

// Identifies edge a[s]-a[s+1] of `a` with edge b[r+1]-b[r] of `b`.
Patch glue(const Patch& a, const Patch& b) {
  const int sa = first_edge_with_degree_two_ends(a);
  const int sb = first_edge_with_degree_two_ends(b);
  const int la = a.boundary_length();
  const int lb = b.boundary_length();
  const int x = a.boundary()[sa];
  const int y = a.boundary()[(sa + 1) % la];
  const int u = b.boundary()[sb];
  const int v = b.boundary()[(sb + 1) % lb];
  std::vector<int> map_b(b.vertex_count(), -1);
  int n = a.vertex_count();
  map_b[u] = y;
  map_b[v] = x;
  for (int w = 0; w < b.vertex_count(); ++w) {
    if (map_b[w] < 0) map_b[w] = n++;
  }
  auto faces = a.faces();
  for (const auto& f : b.faces()) {
    Cycle c;
    for (int w : f) c.push_back(map_b[w]);
    faces.push_back(std::move(c));
  }
  Cycle boundary;
  for (int i = 1; i <= la; ++i) boundary.push_back(a.boundary()[(sa + i) % la]);  // y ... x
  for (int i = 2; i < lb; ++i) boundary.push_back(map_b[b.boundary()[(sb + i) % lb]]);
  return Patch(std::move(faces), std::move(boundary), n);
}

// Start index (the degree-2 vertex before the run) and length of the first
// shortest maximal run of 3's, scanning from the canonical rotation.
std::pair<int, int> shortest_three_run(const Patch& p) {
  const auto word = p.raw_code().word;
  const int b = static_cast<int>(word.size());
  const std::string canon = min_rotation(word);
  int offset = 0;
  for (int i = 0; i < b; ++i) {
    if (word.substr(i) + word.substr(0, i) == canon) {
      offset = i;
      break;
    }
  }
  int best_start = -1, best_len = b + 1;
  for (int k = 0; k < b; ++k) {
    const int i = (offset + k) % b;
    if (word[i] != '2' || word[(i + 1) % b] != '3') continue;
    int len = 0;
    while (word[(i + 1 + len) % b] == '3') ++len;
    if (len < best_len) {
      best_len = len;
      best_start = i;
    }
  }
  if (best_start < 0) throw PatchError("patch boundary has no run of 3's");
  return {best_start, best_len};
}

}  // namespace

Patch merge_patches(const std::vector<Patch>& patches, std::vector<int>* trace) {
  if (patches.size() < 2) throw PatchError("merge needs at least two patches");
  int pentagons = 0;
  for (const auto& p : patches) pentagons += p.pentagons();
  if (pentagons >= 6) throw PatchError("merge needs fewer than six pentagons in total");

  Patch acc = patches[0];
  int target = acc.boundary_length();
  for (std::size_t j = 1; j < patches.size(); ++j) {
    const int hex_before = acc.hexagons() + patches[j].hexagons();
    target += patches[j].boundary_length();
    acc = glue(acc, patches[j]);
    // Growth stays bounded because a patch with p < 6 and fixed boundary
    // holds finitely many hexagons; the guard only catches bugs.
    for (int guard = 0; acc.boundary_length() != target; ++guard) {
      if (guard > 100000) throw PatchError("hexagon growth did not return to the target boundary");
      const auto [start, run] = shortest_three_run(acc);
      const int before = acc.boundary_length();
      acc.add_face(start, run, 6);
      const int delta = acc.boundary_length() - before;
      if (delta != 4 - 2 * run) throw PatchError("hexagon growth changed boundary by an unexpected amount");
      if (trace) trace->push_back(delta);
    }
    if (acc.hexagons() <= hex_before) throw PatchError("merge did not add a hexagon");
  }
  acc.check();
  return acc;
}

void write_patch(std::ostream& out, const Patch& p) {
  out << "patch vertices=" << p.vertex_count() << " pentagons=" << p.pentagons() << " hexagons=" << p.hexagons()
      << " boundary_length=" << p.boundary_length() << '\n';
  out << "code " << p.raw_code().word << '\n';
  out << "boundary";
  for (int v : p.boundary()) out << ' ' << v + 1;
  out << '\n';
  const auto g = p.graph();
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << v + 1 << ':';
    for (int u : g.neighbours(v)) out << ' ' << u + 1;
    out << '\n';
  }
  out << "end\n";
}

Patch read_patch(std::istream& in) {
  std::string line, word;
  if (!std::getline(in, line)) throw PatchError("missing patch header");
  std::istringstream header(line);
  header >> word;
  if (word != "patch") throw PatchError("patch header must start with 'patch'");
  int n = -1;
  while (header >> word) {
    if (word.rfind("vertices=", 0) == 0) n = std::stoi(word.substr(9));
  }
  if (n <= 0) throw PatchError("patch header lacks vertices=");
  std::string code;
  if (!std::getline(in, line)) throw PatchError("missing code line");
  {
    std::istringstream s(line);
    s >> word >> code;
    if (word != "code") throw PatchError("expected code line");
  }
  Cycle boundary;
  if (!std::getline(in, line)) throw PatchError("missing boundary line");
  {
    std::istringstream s(line);
    s >> word;
    if (word != "boundary") throw PatchError("expected boundary line");
    int v;
    while (s >> v) boundary.push_back(v - 1);
  }
  std::vector<std::vector<int>> rotation(n);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw PatchError("truncated rotation system");
    std::istringstream s(line);
    int v;
    char colon;
    s >> v >> colon;
    if (v != i + 1 || colon != ':') throw PatchError("rotation lines must be numbered 1..n");
    int u;
    while (s >> u) rotation[i].push_back(u - 1);
  }
  if (!std::getline(in, line) || line != "end") throw PatchError("missing end marker");
  if (boundary.size() < 2) throw PatchError("boundary too short");
  const PlaneGraph g(std::move(rotation));
  std::vector<Cycle> inner;
  for (auto& face : trace_faces(g)) {
    // The outer face walks the boundary backwards: it contains b1 -> b0.
    bool outer = false;
    const std::size_t s = face.boundary.size();
    for (std::size_t t = 0; t < s; ++t) {
      if (face.boundary[t] == boundary[1] && face.boundary[(t + 1) % s] == boundary[0]) outer = true;
    }
    if (!outer) inner.push_back(std::move(face.boundary));
  }
  Patch p(std::move(inner), std::move(boundary), n);
  p.check();
  if (p.raw_code().word != code) throw PatchError("code line does not match the boundary");
  return p;
}

}  // namespace fullerene
