#include "fullerene/census.hpp"

#include <algorithm>

#include "fullerene/generator.hpp"
#include "fullerene/symmetry.hpp"

namespace fullerene {

AnalysisRecord analyze(const FullereneGraph& f, std::optional<std::string> spiral_id) {
  const Pip p = pip(f);
  return AnalysisRecord{f.vertex_count(), std::move(spiral_id), p.to_string(), separation_number(f),
                        point_group(f), p.hog_keyword()};
}

std::vector<AnalysisRecord> census(const CensusOptions& options) {
  std::vector<AnalysisRecord> out;
  int start = std::max(options.n_min, 20);
  start += start % 2;
  for (int n = start; n <= options.n_max; n += 2) {
    if (n == 22) continue;
    EnumerationTask task{n, options.jobs, {}};
    if (options.accept) task.filter = [&](const FullereneGraph& f) { return options.accept(pip(f)); };
    generate_isomers(task, [&](const Isomer& iso) {
      out.push_back(analyze(iso.graph, std::to_string(n) + ":" + std::to_string(iso.rank)));
    });
    if (options.progress) options.progress(n, out.size());
  }
  return out;
}

std::map<std::string, std::vector<AnalysisRecord>> group_by_pip(const std::vector<AnalysisRecord>& records) {
  std::map<std::string, std::vector<AnalysisRecord>> out;
  for (const auto& r : records) out[r.pip].push_back(r);
  return out;
}

}  // namespace fullerene
