// Builds the seed table: the first isomer (smallest n, then spiral order) for
// every partition of 12 whose largest part is at most 5. Partitions (a,1,...,1)
// not met up to --n-max are derived from another seed.
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "fullerene/clusters.hpp"
#include "fullerene/generator.hpp"
#include "fullerene/goldberg.hpp"

using namespace fullerene;

namespace {

// A partition (a, 1, ..., 1) from a seed whose largest cluster has size a:
// inflate, which isolates every pentagon, then reinstate only that cluster.
std::optional<FullereneGraph> derive_from(const Pip& want, const std::map<Pip, Seed>& found) {
  if (std::count(want.parts.begin(), want.parts.end(), 1) != static_cast<long>(want.parts.size()) - 1) return std::nullopt;
  for (const auto& [p, seed] : found) {
    if (p.largest() != want.largest()) continue;
    const auto inf = goldberg_5_0(seed.graph);
    FullereneGraph g = reinstate_cluster(seed.graph, inf, pentagon_clusters(seed.graph).front());
    if (pip(g) == want) return g;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"build the seed table"};
  int n_min = 20, n_max = 64, jobs = 1;
  bool keep = false;
  std::string out = "data/seeds";
  app.add_option("--n-min", n_min, "smallest vertex count enumerated");
  app.add_option("--n-max", n_max, "largest vertex count enumerated");
  app.add_option("--jobs", jobs);
  app.add_flag("--keep", keep, "start from the existing table at --out");
  app.add_option("--out", out, "path prefix; writes PREFIX.pc and PREFIX.manifest");
  CLI11_PARSE(app, argc, argv);

  std::map<Pip, Seed> found;
  if (keep && std::filesystem::exists(out + ".pc")) {
    for (auto& s : load_seed_table(out + ".pc", out + ".manifest")) found.emplace(s.pip, std::move(s));
  }
  std::vector<Pip> wanted;
  for (const auto& p : partitions_of_12()) {
    if (p.largest() <= 5) wanted.push_back(p);
  }
  for (int n = n_min; n <= n_max && found.size() < wanted.size(); n += 2) {
    EnumerationTask task{n, jobs, [](const FullereneGraph& f) { return pip(f).largest() <= 5; }};
    generate_isomers(task, [&](const Isomer& iso) {
      const Pip p = pip(iso.graph);
      if (found.count(p)) return;
      found.emplace(p, Seed{p, std::to_string(n) + ":" + std::to_string(iso.rank), iso.graph});
      std::cerr << p.to_string() << " at " << n << ":" << iso.rank << '\n';
    });
    std::cerr << "n=" << n << " done, " << found.size() << "/" << wanted.size() << '\n';
  }
  for (const auto& p : wanted) {
    if (found.count(p)) continue;
    if (auto g = derive_from(p, found)) {
      std::cerr << p.to_string() << " derived by inflation, n=" << g->vertex_count() << '\n';
      found.emplace(p, Seed{p, "-", std::move(*g)});
    }
  }
  std::vector<Seed> seeds;
  for (auto& [p, s] : found) seeds.push_back(std::move(s));
  save_seed_table(seeds, out + ".pc", out + ".manifest");
  int missing = 0;
  for (const auto& p : wanted) {
    if (!found.count(p)) {
      std::cerr << "missing " << p.to_string() << '\n';
      ++missing;
    }
  }
  return missing == 0 ? 0 : 3;
}
