#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/plane_graph.hpp"

namespace fullerene {

class PatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cyclic word of boundary vertex degrees (2 or 3), stored as characters.
struct BoundaryCode {
  std::string word;

  int length() const { return static_cast<int>(word.size()); }
  int twos() const;
  int threes() const;
  // Pentagons implied by the boundary: 6 - (#2 - #3).
  int implied_pentagons() const { return 6 - (twos() - threes()); }
  // Lexicographically smallest rotation.
  BoundaryCode canonical() const;
  // Smallest rotation of the word or its reversal.
  BoundaryCode canonical_with_reflection() const;
  bool operator==(const BoundaryCode&) const = default;
};

// A 5-6 patch: a 2-connected plane disk of pentagons and hexagons.
//
// Inner faces are vertex cycles oriented so that every directed edge occurs in
// at most one face. `boundary` runs in the same sense as the faces: the darts
// boundary[t] -> boundary[t+1] are covered by inner faces. Vertex ids are
// 0..vertex_count-1.
class Patch {
 public:
  Patch() = default;
  Patch(std::vector<Cycle> faces, Cycle boundary, int vertex_count);

  // A single face of the given size.
  static Patch polygon(int size);
  // Patch formed by a set of faces of a fullerene. Throws PatchError if the
  // union is not a disk with a simple boundary cycle.
  static Patch from_faces(const std::vector<Cycle>& faces);

  const std::vector<Cycle>& faces() const { return faces_; }
  const Cycle& boundary() const { return boundary_; }
  int vertex_count() const { return vertex_count_; }
  int pentagons() const;
  int hexagons() const;
  int boundary_length() const { return static_cast<int>(boundary_.size()); }
  int degree(int v) const { return degree_[v]; }

  // Degrees along `boundary()`, starting at boundary()[0].
  BoundaryCode raw_code() const;

  // Adds a face of `size` on the outside along the boundary path that starts
  // at boundary index `start` and spans `run + 1` edges; interior path
  // vertices must have degree 3 and the endpoints degree 2. The new boundary
  // starts at the old start vertex.
  void add_face(int start, int run, int size);

  Patch mirrored() const;
  // Rotates the boundary list so that it starts at index `start`.
  void rotate_boundary(int start);

  // Plane graph with the outer face included.
  PlaneGraph graph() const;

  // Throws PatchError naming the violated patch invariant.
  void check() const;

 private:
  void recompute_degrees();

  std::vector<Cycle> faces_;
  Cycle boundary_;
  int vertex_count_ = 0;
  std::vector<int> degree_;
};

// Rotation-canonicalised degree word of the outer cycle.
BoundaryCode boundary_code(const Patch& p);

// Canonical string of the patch as a plane graph with its outer face marked,
// invariant under relabelling and reflection.
std::string canonical_patch_form(const Patch& p);

// Least boundary length of a patch with p <= 5 pentagons and h hexagons
// (the spiral-patch bound); exact integer arithmetic.
int min_boundary_length(int pentagons, int hexagons);

// Largest h with min_boundary_length(p, h) <= b, or 0.
int max_hexagons_in_patch(int pentagons, int boundary);

// Upper bound on the hexagon count of a fullerene with a pentagon cluster of
// size k (7..12): the complement's boundary is at most 3k+2 and carries 12-k
// pentagons.
int max_hexagons_with_cluster(int k);
// Largest vertex count over k = 7..12 of a fullerene meeting that bound.
int max_vertices_with_big_cluster();

// Combines at least two patches with fewer than six pentagons in total into
// one patch with the same pentagons, strictly more hexagons and boundary
// length equal to the sum. `trace` (optional) receives the boundary length
// change of every hexagon added.
Patch merge_patches(const std::vector<Patch>& patches, std::vector<int>* trace = nullptr);

// Text container: header line, boundary vertex list, code word and the
// rotation system (1-based, one vertex per line) of the plane graph.
void write_patch(std::ostream& out, const Patch& p);
Patch read_patch(std::istream& in);

}  // namespace fullerene
