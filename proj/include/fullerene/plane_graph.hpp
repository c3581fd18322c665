#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fullerene {

// Raised when a graph violates a structural requirement. `what()` names the
// violated invariant.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVertices = 65534;

// A cyclically ordered face: consecutive entries are joined by an edge and the
// last entry is joined to the first.
using Cycle = std::vector<int>;

// Plane graph given by a rotation system. rotation[v] lists the neighbours of
// v in clockwise order. Faces are traced with the rule u->v->w where w follows
// u in the rotation at v.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  explicit PlaneGraph(std::vector<std::vector<int>> rotation);

  // Rebuilds the rotation system from a complete set of consistently oriented
  // faces (every directed edge in exactly one face). Vertex ids are 0..n-1.
  static PlaneGraph from_faces(const std::vector<Cycle>& faces, int vertex_count);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  const std::vector<int>& neighbours(int v) const { return rotation_[v]; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }

  // Index of u in the rotation of v, or -1.
  int slot_of(int v, int u) const;
  // The neighbour following u in the rotation at v.
  int next_around(int v, int u) const;
  int prev_around(int v, int u) const;
  bool adjacent(int u, int v) const { return slot_of(u, v) >= 0; }

  // Same graph with every rotation reversed.
  PlaneGraph mirrored() const;
  // Relabels vertices: new id of v is perm[v].
  PlaneGraph relabeled(const std::vector<int>& perm) const;

  bool operator==(const PlaneGraph& other) const { return rotation_ == other.rotation_; }

 private:
  std::vector<std::vector<int>> rotation_;
  int edge_count_ = 0;
};

struct Face {
  int id = 0;
  Cycle boundary;
  int size() const { return static_cast<int>(boundary.size()); }
};

// Throws GraphError if the graph is not simple, not connected, or its
// rotation system does not close into faces satisfying Euler's relation.
void check_plane_graph(const PlaneGraph& g);

// Faces in tracing order, starting from the lowest directed edge not yet
// used. Throws GraphError when a walk fails to close within 2e steps.
std::vector<Face> trace_faces(const PlaneGraph& g);

class FullereneGraph;

// Dual graph of a fullerene: nodes are faces, node rotation lists the faces
// across each edge of the face in tracing order.
struct DualGraph {
  std::vector<std::vector<int>> adjacency;
  std::vector<int> labels;  // face sizes

  int node_count() const { return static_cast<int>(adjacency.size()); }
  int edge_count() const;
};

class FullereneGraph {
 public:
  const PlaneGraph& graph() const { return graph_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<int>& pentagons() const { return pentagons_; }
  const Face& face(int id) const { return faces_.at(id); }

  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  bool is_pentagon(int face) const { return faces_[face].size() == 5; }

  // Faces adjacent to `face` across its edges, in boundary order.
  const std::vector<int>& face_neighbours(int face) const { return face_adjacency_[face]; }
  // Face lying to the left of the directed edge u->v in tracing order, i.e.
  // the face whose boundary walk contains u followed by v.
  int face_of_edge(int u, int v) const;

  std::vector<Cycle> face_cycles() const;

 private:
  friend FullereneGraph validate_fullerene(PlaneGraph g);
  PlaneGraph graph_;
  std::vector<Face> faces_;
  std::vector<int> pentagons_;
  std::vector<std::vector<int>> face_adjacency_;
  std::vector<int> dart_face_;  // indexed by 3*u + slot
};

// Checks every fullerene invariant and returns the analysed graph. Throws
// GraphError naming the first violated invariant.
FullereneGraph validate_fullerene(PlaneGraph g);
FullereneGraph fullerene_from_faces(const std::vector<Cycle>& faces, int vertex_count);

DualGraph dual(const FullereneGraph& f);

// Number of edge-sharing steps between two faces.
int face_distance(const FullereneGraph& f, int a, int b);
// BFS distances over the dual from a set of source faces.
std::vector<int> face_distances_from(const FullereneGraph& f, const std::vector<int>& sources);

}  // namespace fullerene
