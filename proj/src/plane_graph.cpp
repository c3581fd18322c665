#include "fullerene/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

namespace fullerene {

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotation) : rotation_(std::move(rotation)) {
  int half_edges = 0;
  for (const auto& r : rotation_) half_edges += static_cast<int>(r.size());
  edge_count_ = half_edges / 2;
}

PlaneGraph PlaneGraph::from_faces(const std::vector<Cycle>& faces, int vertex_count) {
  // succ[v] holds pairs (u, w): in some face the walk goes u -> v -> w.
  std::vector<std::vector<std::pair<int, int>>> succ(vertex_count);
  for (const auto& face : faces) {
    const int s = static_cast<int>(face.size());
    if (s < 3) throw GraphError("face with fewer than 3 vertices");
    for (int t = 0; t < s; ++t) {
      const int u = face[(t + s - 1) % s];
      const int v = face[t];
      const int w = face[(t + 1) % s];
      if (v < 0 || v >= vertex_count) throw GraphError("face references unknown vertex");
      succ[v].emplace_back(u, w);
    }
  }
  std::vector<std::vector<int>> rotation(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    auto& pairs = succ[v];
    if (pairs.empty()) throw GraphError("isolated vertex");
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i].first == pairs[i - 1].first) throw GraphError("directed edge used by two faces");
    }
    auto lookup = [&](int u) -> int {
      auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(u, -1));
      if (it == pairs.end() || it->first != u) return -1;
      return it->second;
    };
    // Keep the first occurrence from the input as the starting neighbour so the
    // result does not depend on sort order.
    int start = -1;
    for (const auto& face : faces) {
      const int s = static_cast<int>(face.size());
      for (int t = 0; t < s && start < 0; ++t) {
        if (face[t] == v) start = face[(t + s - 1) % s];
      }
      if (start >= 0) break;
    }
    int u = start;
    do {
      rotation[v].push_back(u);
      u = lookup(u);
      if (u < 0) throw GraphError("faces do not close around a vertex");
      if (rotation[v].size() > pairs.size()) throw GraphError("faces do not close around a vertex");
    } while (u != start);
    if (rotation[v].size() != pairs.size()) throw GraphError("vertex neighbourhood is not a single disk");
  }
  return PlaneGraph(std::move(rotation));
}

int PlaneGraph::slot_of(int v, int u) const {
  const auto& r = rotation_[v];
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    if (r[i] == u) return i;
  }
  return -1;
}

int PlaneGraph::next_around(int v, int u) const {
  const auto& r = rotation_[v];
  const int i = slot_of(v, u);
  if (i < 0) throw GraphError("next_around: vertices not adjacent");
  return r[(i + 1) % r.size()];
}

int PlaneGraph::prev_around(int v, int u) const {
  const auto& r = rotation_[v];
  const int i = slot_of(v, u);
  if (i < 0) throw GraphError("prev_around: vertices not adjacent");
  return r[(i + r.size() - 1) % r.size()];
}

PlaneGraph PlaneGraph::mirrored() const {
  auto r = rotation_;
  for (auto& list : r) std::reverse(list.begin(), list.end());
  return PlaneGraph(std::move(r));
}

PlaneGraph PlaneGraph::relabeled(const std::vector<int>& perm) const {
  std::vector<std::vector<int>> r(rotation_.size());
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    auto& list = r[perm[v]];
    for (int u : rotation_[v]) list.push_back(perm[u]);
  }
  return PlaneGraph(std::move(r));
}

namespace {

std::vector<int> dart_offsets(const PlaneGraph& g) {
  std::vector<int> offset(g.vertex_count() + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + g.degree(v);
  return offset;
}

}  // namespace

std::vector<Face> trace_faces(const PlaneGraph& g) {
  const auto offset = dart_offsets(g);
  const int darts = offset.back();
  std::vector<char> used(darts, 0);
  std::vector<Face> faces;
  for (int u0 = 0; u0 < g.vertex_count(); ++u0) {
    for (int i0 = 0; i0 < g.degree(u0); ++i0) {
      if (used[offset[u0] + i0]) continue;
      Face face;
      face.id = static_cast<int>(faces.size());
      int u = u0;
      int i = i0;
      int steps = 0;
      do {
        if (used[offset[u] + i]) throw GraphError("rotation system inconsistent: face walk re-enters a used edge");
        used[offset[u] + i] = 1;
        face.boundary.push_back(u);
        const int v = g.neighbours(u)[i];
        const int j = g.slot_of(v, u);
        if (j < 0) throw GraphError("adjacency not symmetric");
        i = (j + 1) % g.degree(v);
        u = v;
        if (++steps > darts) throw GraphError("rotation system inconsistent: face walk does not terminate");
      } while (u != u0 || i != i0);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

void check_plane_graph(const PlaneGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw GraphError("empty graph");
  for (int v = 0; v < n; ++v) {
    const auto& r = g.neighbours(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const int u = r[i];
      if (u < 0 || u >= n) throw GraphError("neighbour out of range");
      if (u == v) throw GraphError("loop");
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        if (r[j] == u) throw GraphError("parallel edges");
      }
      if (g.slot_of(u, v) < 0) throw GraphError("adjacency not symmetric");
    }
  }
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbours(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        queue.push_back(u);
      }
    }
  }
  if (reached != n) throw GraphError("disconnected");
  const auto faces = trace_faces(g);
  if (n - g.edge_count() + static_cast<int>(faces.size()) != 2) {
    throw GraphError("Euler relation v - e + f = 2 fails (not a plane embedding)");
  }
}

int DualGraph::edge_count() const {
  int s = 0;
  for (const auto& a : adjacency) s += static_cast<int>(a.size());
  return s / 2;
}

FullereneGraph validate_fullerene(PlaneGraph g) {
  const int n = g.vertex_count();
  if (n > kMaxVertices) throw GraphError("too many vertices");
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 3) throw GraphError("non-cubic vertex " + std::to_string(v));
  }
  check_plane_graph(g);
  FullereneGraph f;
  f.faces_ = trace_faces(g);
  for (const auto& face : f.faces_) {
    if (face.size() != 5 && face.size() != 6) {
      throw GraphError("face of size " + std::to_string(face.size()) + " (only 5 and 6 allowed)");
    }
    if (face.size() == 5) f.pentagons_.push_back(face.id);
  }
  if (f.pentagons_.size() != 12) {
    throw GraphError("pentagon count " + std::to_string(f.pentagons_.size()) + " != 12");
  }
  if (n % 2 != 0 || n < 20 || n == 22) throw GraphError("vertex count not admissible for a fullerene");
  if (static_cast<int>(f.faces_.size()) != n / 2 + 2) throw GraphError("face count != n/2 + 2");

  f.dart_face_.assign(3 * n, -1);
  for (const auto& face : f.faces_) {
    const int s = face.size();
    for (int t = 0; t < s; ++t) {
      const int u = face.boundary[t];
      const int v = face.boundary[(t + 1) % s];
      f.dart_face_[3 * u + g.slot_of(u, v)] = face.id;
    }
  }
  f.face_adjacency_.resize(f.faces_.size());
  for (const auto& face : f.faces_) {
    const int s = face.size();
    auto& adj = f.face_adjacency_[face.id];
    for (int t = 0; t < s; ++t) {
      const int u = face.boundary[t];
      const int v = face.boundary[(t + 1) % s];
      adj.push_back(f.dart_face_[3 * v + g.slot_of(v, u)]);
    }
    for (int a : adj) {
      if (a == face.id) throw GraphError("face adjacent to itself");
    }
  }
  f.graph_ = std::move(g);
  return f;
}

FullereneGraph fullerene_from_faces(const std::vector<Cycle>& faces, int vertex_count) {
  return validate_fullerene(PlaneGraph::from_faces(faces, vertex_count));
}

int FullereneGraph::face_of_edge(int u, int v) const {
  const int slot = graph_.slot_of(u, v);
  if (slot < 0) throw GraphError("face_of_edge: vertices not adjacent");
  return dart_face_[3 * u + slot];
}

std::vector<Cycle> FullereneGraph::face_cycles() const {
  std::vector<Cycle> out;
  out.reserve(faces_.size());
  for (const auto& face : faces_) out.push_back(face.boundary);
  return out;
}

DualGraph dual(const FullereneGraph& f) {
  DualGraph d;
  d.adjacency.resize(f.face_count());
  d.labels.resize(f.face_count());
  for (int i = 0; i < f.face_count(); ++i) {
    d.adjacency[i] = f.face_neighbours(i);
    d.labels[i] = f.face(i).size();
  }
  return d;
}

std::vector<int> face_distances_from(const FullereneGraph& f, const std::vector<int>& sources) {
  std::vector<int> dist(f.face_count(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (s < 0 || s >= f.face_count()) throw GraphError("invalid face id");
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : f.face_neighbours(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int face_distance(const FullereneGraph& f, int a, int b) {
  if (b < 0 || b >= f.face_count()) throw GraphError("invalid face id");
  return face_distances_from(f, {a})[b];
}

}  // namespace fullerene
