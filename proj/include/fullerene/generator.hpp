#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/plane_graph.hpp"
#include "fullerene/spiral.hpp"

namespace fullerene {

// Largest vertex count the native generator accepts (spiral bitsets hold 64
// faces).
inline constexpr int kMaxNativeVertices = 124;

struct Isomer {
  SpiralCode spiral;
  int rank = 0;  // 1-based position in canonical spiral order for this n
  FullereneGraph graph;
};

struct EnumerationTask {
  int n = 0;
  int jobs = 1;
  // Applied after validation; only accepted isomers are emitted. Ranks are
  // always counted over the full, unfiltered sequence.
  std::function<bool(const FullereneGraph&)> filter;
};

// Calls `sink` once per isomorphism class in canonical spiral order. Output is
// identical for every value of `jobs`. Inadmissible n (odd, < 20, or 22)
// yields nothing and a warning on stderr.
void generate_isomers(const EnumerationTask& task, const std::function<void(const Isomer&)>& sink);

// Canonical spirals of every isomer, sorted.
std::vector<SpiralCode> canonical_spirals(int n, int jobs = 1);
std::int64_t count_isomers(int n, int jobs = 1);

// (n, rank) of a fullerene. Enumerates all isomers with n vertices on first
// use for that n and caches the result. Throws SpiralError above
// `enumeration_limit`.
std::pair<int, int> spiral_id(const FullereneGraph& f, int enumeration_limit = 84, int jobs = 1);
std::string spiral_id_string(const FullereneGraph& f, int enumeration_limit = 84, int jobs = 1);

}  // namespace fullerene
