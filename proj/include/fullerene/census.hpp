#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fullerene/clusters.hpp"
#include "fullerene/planar_code.hpp"
#include "fullerene/plane_graph.hpp"

namespace fullerene {

// Analysis record of one fullerene. The spiral id is looked up only when
// given (enumerating all isomers of that size is costly).
AnalysisRecord analyze(const FullereneGraph& f, std::optional<std::string> spiral_id = std::nullopt);

struct CensusOptions {
  int n_min = 20;
  int n_max = 48;
  int jobs = 1;
  // Keep only isomers whose partition passes; all isomers when empty.
  std::function<bool(const Pip&)> accept;
  // Called after each n with the number of isomers kept so far.
  std::function<void(int n, std::size_t kept)> progress;
};

// Records of the accepted isomers, ordered by n and then spiral order.
std::vector<AnalysisRecord> census(const CensusOptions& options);

// Census records grouped by partition string.
std::map<std::string, std::vector<AnalysisRecord>> group_by_pip(const std::vector<AnalysisRecord>& records);

}  // namespace fullerene
