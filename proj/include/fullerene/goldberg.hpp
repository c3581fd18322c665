#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/clusters.hpp"
#include "fullerene/patch.hpp"
#include "fullerene/plane_graph.hpp"

namespace fullerene {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parent faces of every face of an inflated fullerene. Faces at equal lattice
// distance from two original face centres have two parents.
struct InflationMap {
  std::vector<std::vector<int>> parents;  // indexed by new face id
  std::vector<int> image;                 // new face at the centre of each original face
};

struct Inflation {
  FullereneGraph graph;
  InflationMap map;
};

// Goldberg (5,0) inflation, done by cutting every triangle of the dual into
// 25 and dualising back.
Inflation goldberg_5_0(const FullereneGraph& f);

// Cyclic chain of distinct hexagons, consecutive ones sharing an edge.
struct HexagonCycle {
  std::vector<int> faces;
};

// Throws ConstructionError unless the chain is a hexagon cycle whose removal
// disconnects the remaining faces.
void check_hexagon_cycle(const FullereneGraph& f, const HexagonCycle& c);

// Faces on the side of the cycle that contains `reference`.
std::vector<int> side_of_cycle(const FullereneGraph& f, const HexagonCycle& c, int reference);

// Faces bordering `region` (after filling the holes not containing
// `outside`), walked around the region and shortcut to a simple chain.
// Nothing when that chain contains a pentagon.
std::optional<HexagonCycle> ring_around(const FullereneGraph& f, const std::vector<int>& region, int outside);

// Three nested, face-disjoint hexagon cycles of the inflation, all separating
// the descendants of the inside of `c` (the side holding `inside`) from the
// rest.
std::vector<HexagonCycle> lift_hexagon_cycle(const FullereneGraph& f, const HexagonCycle& c, int inside,
                                             const Inflation& inflation);

// Pairwise disjoint hexagon cycles separating two clusters: the rings at
// distance 1, 2, ... from `a` that contain no pentagon.
std::vector<HexagonCycle> separating_cycle_witnesses(const FullereneGraph& f, const PentagonCluster& a,
                                                     const PentagonCluster& b);

// Faces of the inflation whose parents all lie in `parent_faces`.
std::vector<int> excised_region(const Inflation& inflation, const std::vector<int>& parent_faces);

// A patch with boundary word `word` (read in face order, aligned to index 0)
// made of `core` and hexagons. Surrounding a core by hexagons is forced, so
// the patch is looked up inside a large hexagon-padded copy of the core by
// following the word from every dart. Throws ConstructionError when no walk
// closes up around the core.
Patch grow_to_boundary(const Patch& core, const std::string& word, int max_boundary = 4096);

// Replaces the descendants of each listed cluster of `original` in the
// inflation by the cluster itself padded with hexagons. Every other face is
// kept.
FullereneGraph reinstate_clusters(const FullereneGraph& original, const Inflation& inflation,
                                  const std::vector<PentagonCluster>& clusters);
FullereneGraph reinstate_cluster(const FullereneGraph& original, const Inflation& inflation,
                                 const PentagonCluster& cluster);

struct RoundReport {
  int vertices = 0;
  std::string pip;
  int separation = 0;
};

// `rounds` times: inflate, then reinstate every cluster of size at least 2.
// Needs every cluster to have at most five pentagons.
FullereneGraph inflate_preserving_clusters(const FullereneGraph& f, int rounds,
                                           std::vector<RoundReport>* report = nullptr);

// Two (5,0) caps of six pentagons joined by j rings of five hexagons.
FullereneGraph tube_fullerene_6_6(int j);

struct Seed {
  Pip pip;
  std::string spiral_id;
  FullereneGraph graph;
};

// Seed table: a planar_code file plus a manifest with one line per graph,
// "<pip> <n> <spiral id> <checksum>". Every seed is revalidated on load.
std::vector<Seed> load_seed_table(const std::string& planar_code_path, const std::string& manifest_path);
void save_seed_table(const std::vector<Seed>& seeds, const std::string& planar_code_path,
                     const std::string& manifest_path);
// FNV-1a 64 of a graph's planar_code record, as 16 hex digits.
std::string record_checksum(const PlaneGraph& g);

const Seed& seed_fullerene_for_partition(const std::vector<Seed>& table, const Pip& p);

}  // namespace fullerene
