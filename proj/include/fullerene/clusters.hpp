#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/patch.hpp"
#include "fullerene/plane_graph.hpp"

namespace fullerene {

class ClusterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximal edge-connected set of pentagons, face ids ascending.
struct PentagonCluster {
  std::vector<int> faces;
  int size() const { return static_cast<int>(faces.size()); }
  bool operator==(const PentagonCluster&) const = default;
};

// Pentagonal incidence partition: cluster sizes, non-increasing, summing to 12.
struct Pip {
  std::vector<int> parts;

  // "p1,p2,...". parse also accepts surrounding parentheses.
  std::string to_string() const;
  static Pip parse(const std::string& text);
  std::string hog_keyword() const;
  int largest() const { return parts.empty() ? 0 : parts.front(); }

  auto operator<=>(const Pip&) const = default;
};

// Every partition of 12 in reverse lexicographic order: (12), (11,1), ...
std::vector<Pip> partitions_of_12();

// Clusters ordered by size (largest first), ties by smallest face id.
std::vector<PentagonCluster> pentagon_clusters(const FullereneGraph& f);
Pip pip(const FullereneGraph& f);

// Minimum face distance between pentagons of two different clusters.
int cluster_distance(const FullereneGraph& f, const PentagonCluster& a, const PentagonCluster& b);
// Smallest cluster distance, or nothing for a single cluster.
std::optional<int> separation_number(const FullereneGraph& f);

// Components of the faces outside the cluster, each as a patch.
std::vector<Patch> complement(const FullereneGraph& f, const PentagonCluster& c);

// Faces of the cluster plus the holes it encloses: complement components
// without pentagons. When every component is pentagon-free the largest one is
// left out.
std::vector<int> closed_cluster_faces(const FullereneGraph& f, const PentagonCluster& c);

// Isomorphism-invariant code of a closed cluster (reflections identified).
std::string cluster_signature(const FullereneGraph& f, const PentagonCluster& c);
// The same code for a standalone patch, treating all its faces as the set.
std::string patch_signature(const Patch& p);

struct TubeParams {
  int l = 0;
  int m = 0;
  std::string to_string() const;
  auto operator<=>(const TubeParams&) const = default;
};

bool in_t6(const TubeParams& t);

// Tube vector of a patch boundary with six pentagons, read off by walking the
// boundary in the hexagonal lattice; normalised to l >= m >= 0.
TubeParams tube_parameters(const Patch& p);

struct CatalogEntry {
  Patch patch;  // the closed cluster
  std::string signature;
  TubeParams tube;
  bool two_boundaries = false;  // ring of pentagons around a hexagon
};

// The closed six-pentagon clusters, generated by growing all-pentagon patches
// and adding the ring around a hexagon. Sorted by tube parameters.
const std::vector<CatalogEntry>& six_cluster_catalog();

// Tube parameters of a six-pentagon cluster of f. Throws ClusterError if the
// cluster does not have six pentagons.
TubeParams tube_parameters_of_6_cluster(const FullereneGraph& f, const PentagonCluster& c);

enum class PartitionKind { impossible, finite, bounded, unbounded };

struct PartitionClass {
  PartitionKind kind = PartitionKind::unbounded;
  std::optional<int> count;  // only for finite
  std::string letter() const;
  std::string to_string() const;
};

PartitionClass classify_partition(const Pip& p);

}  // namespace fullerene
