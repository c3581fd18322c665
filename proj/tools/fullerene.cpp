#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "fullerene/census.hpp"
#include "fullerene/clusters.hpp"
#include "fullerene/generator.hpp"
#include "fullerene/goldberg.hpp"
#include "fullerene/patch.hpp"
#include "fullerene/planar_code.hpp"
#include "fullerene/spiral.hpp"
#include "fullerene/symmetry.hpp"

using namespace fullerene;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int n_max = 0;
  std::string pip;
  std::string in = "-";
  std::string format = "tsv";
  std::string generate_format = "planar_code";
  int jobs = 1;
  std::string seed_table = "data/seeds";
  int rings = 1;
  int rounds = 1;
  int cluster = 0;
  int id_limit = 64;
  bool two_byte = false;
  std::string out;
  std::string partition;
  std::string spiral;
};

RecordFormat record_format(const std::string& s) {
  if (s == "tsv") return RecordFormat::tsv;
  if (s == "json") return RecordFormat::json;
  throw UsageError("--format must be tsv or json");
}

std::optional<Pip> pip_filter(const Options& o) {
  if (o.pip.empty()) return std::nullopt;
  try {
    return Pip::parse(o.pip);
  } catch (const ClusterError& e) {
    throw UsageError(e.what());
  }
}

std::optional<std::string> maybe_spiral_id(const FullereneGraph& f, const Options& o) {
  if (f.vertex_count() > o.id_limit) return std::nullopt;
  return spiral_id_string(f, o.id_limit, o.jobs);
}

// Calls `visit` for every graph of the input, one at a time.
template <class Visit>
void for_each_input(const Options& o, Visit visit) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (o.in != "-") {
    file.open(o.in, std::ios::binary);
    if (!file) throw PlanarCodeError("cannot open " + o.in);
    in = &file;
  }
  PlanarCodeReader reader(*in, o.two_byte);
  while (auto g = reader.next()) {
    try {
      visit(validate_fullerene(std::move(*g)));
    } catch (const GraphError& e) {
      throw GraphError("record " + std::to_string(reader.count()) + ": " + e.what());
    }
  }
}

// Graphs named on the command line: a spiral code if given, else the input.
template <class Visit>
void for_each_subject(const Options& o, Visit visit) {
  if (!o.spiral.empty()) {
    SpiralCode code;
    try {
      code = SpiralCode::parse(o.spiral);
    } catch (const SpiralError& e) {
      throw UsageError(e.what());
    }
    visit(wind_from_spiral(code));
    return;
  }
  for_each_input(o, visit);
}

void write_graph_out(const Options& o, const FullereneGraph& f) {
  if (o.out.empty()) return;
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw PlanarCodeError("cannot write " + o.out);
  write_planar_code(out, {f.graph()}, true);
}

int run_generate(const Options& o) {
  if (o.n <= 0) throw UsageError("generate needs --n");
  const auto filter = pip_filter(o);
  EnumerationTask task{o.n, o.jobs, {}};
  if (filter) task.filter = [&](const FullereneGraph& f) { return pip(f) == *filter; };
  const bool records = o.generate_format != "planar_code";
  const RecordFormat fmt = records ? record_format(o.generate_format) : RecordFormat::tsv;
  if (!records) write_planar_code_header(std::cout);
  generate_isomers(task, [&](const Isomer& iso) {
    if (records) {
      write_analysis_record(std::cout, analyze(iso.graph, std::to_string(o.n) + ":" + std::to_string(iso.rank)), fmt);
    } else {
      write_planar_code_graph(std::cout, iso.graph.graph());
    }
  });
  return 0;
}

int run_analyze(const Options& o) {
  const RecordFormat fmt = record_format(o.format);
  for_each_input(o, [&](const FullereneGraph& f) {
    write_analysis_record(std::cout, analyze(f, maybe_spiral_id(f, o)), fmt);
  });
  return 0;
}

int run_census(const Options& o) {
  const RecordFormat fmt = record_format(o.format);
  CensusOptions c;
  c.n_min = o.n > 0 ? o.n : 20;
  c.n_max = o.n_max > 0 ? o.n_max : (o.n > 0 ? o.n : 0);
  if (c.n_max <= 0) throw UsageError("census needs --n-max or --n");
  c.jobs = o.jobs;
  if (auto p = pip_filter(o)) c.accept = [p = *p](const Pip& q) { return q == p; };
  c.progress = [](int n, std::size_t kept) { std::cerr << "n=" << n << " kept " << kept << '\n'; };
  write_analysis_records(std::cout, census(c), fmt);
  return 0;
}

int run_classify(const Options& o) {
  Pip p;
  try {
    p = Pip::parse(o.partition);
  } catch (const ClusterError& e) {
    throw UsageError(e.what());
  }
  std::cout << classify_partition(p).to_string() << '\n';
  return 0;
}

int run_bounds(const Options& o) {
  if (o.cluster < 7 || o.cluster > 12) throw UsageError("--cluster must be between 7 and 12");
  std::cout << "max hexagons " << max_hexagons_with_cluster(o.cluster) << ", max vertices "
            << max_vertices_with_big_cluster() << '\n';
  return 0;
}

int run_inflate(const Options& o) {
  if (o.rounds < 1) throw UsageError("--rounds must be at least 1");
  std::optional<FullereneGraph> start;
  if (!o.pip.empty()) {
    const Pip p = *pip_filter(o);
    const auto table = load_seed_table(o.seed_table + ".pc", o.seed_table + ".manifest");
    const Seed& s = seed_fullerene_for_partition(table, p);
    std::cerr << "seed " << s.spiral_id << '\n';
    start = s.graph;
  } else {
    for_each_input(o, [&](const FullereneGraph& f) {
      if (!start) start = f;
    });
    if (!start) throw PlanarCodeError("no graph in input");
  }
  std::vector<RoundReport> report;
  const FullereneGraph result = inflate_preserving_clusters(*start, o.rounds, &report);
  std::cout << "round\tn\tpip\tseparation\n";
  std::cout << 0 << '\t' << start->vertex_count() << '\t' << pip(*start).to_string() << '\t';
  if (auto s = separation_number(*start)) {
    std::cout << *s << '\n';
  } else {
    std::cout << "-\n";
  }
  for (std::size_t k = 0; k < report.size(); ++k) {
    std::cout << k + 1 << '\t' << report[k].vertices << '\t' << report[k].pip << '\t' << report[k].separation << '\n';
  }
  write_graph_out(o, result);
  return 0;
}

int run_tube(const Options& o) {
  const RecordFormat fmt = record_format(o.format);
  if (o.rings < 1) throw UsageError("--rings must be at least 1");
  const FullereneGraph f = tube_fullerene_6_6(o.rings);
  write_analysis_record(std::cout, analyze(f, maybe_spiral_id(f, o)), fmt);
  write_graph_out(o, f);
  return 0;
}

int run_spiral_id(const Options& o) {
  for_each_subject(o, [&](const FullereneGraph& f) {
    std::cout << spiral_id_string(f, o.id_limit, o.jobs) << '\t' << canonical_spiral(f).to_string() << '\n';
  });
  return 0;
}

int run_point_group(const Options& o) {
  for_each_subject(o, [&](const FullereneGraph& f) {
    const auto group = automorphisms(f);
    std::cout << point_group(f, group) << '\t' << group.order() << '\n';
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fullerene pentagon-cluster toolkit"};
  app.require_subcommand(1);
  Options o;

  auto jobs = [&](CLI::App* c) { c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber); };
  auto format = [&](CLI::App* c) { c->add_option("--format", o.format, "tsv or json"); };
  auto input = [&](CLI::App* c) {
    c->add_option("--in", o.in, "planar_code file, - for stdin");
    c->add_flag("--two-byte", o.two_byte, "accept two-byte records for graphs above 255 vertices");
  };
  auto id_limit = [&](CLI::App* c) {
    c->add_option("--id-limit", o.id_limit, "largest n for which spiral ids are computed");
  };

  auto* gen = app.add_subcommand("generate", "all isomers with n vertices");
  gen->add_option("--n", o.n)->required();
  gen->add_option("--pip", o.pip, "keep only this partition");
  gen->add_option("--format", o.generate_format, "planar_code, tsv or json");
  jobs(gen);

  auto* ana = app.add_subcommand("analyze", "analysis records for a planar_code stream");
  input(ana);
  format(ana);
  id_limit(ana);
  jobs(ana);

  auto* cen = app.add_subcommand("census", "records of all isomers up to --n-max");
  cen->add_option("--n", o.n, "single vertex count");
  cen->add_option("--n-max", o.n_max);
  cen->add_option("--pip", o.pip, "keep only this partition");
  format(cen);
  jobs(cen);

  auto* cls = app.add_subcommand("classify", "class of a partition of 12");
  cls->add_option("partition", o.partition, "e.g. 9,2,1")->required();

  auto* bnd = app.add_subcommand("bounds", "hexagon and vertex bounds for a big cluster");
  bnd->add_option("--cluster", o.cluster, "cluster size 7..12")->required();

  auto* inf = app.add_subcommand("inflate", "cluster-preserving inflation");
  inf->add_option("--pip", o.pip, "take the seed for this partition");
  inf->add_option("--seed-table", o.seed_table, "path prefix of the seed table");
  inf->add_option("--rounds", o.rounds);
  inf->add_option("--out", o.out, "write the result as planar_code");
  input(inf);

  auto* tube = app.add_subcommand("tube", "(6,6) tube fullerene");
  tube->add_option("--rings", o.rings);
  tube->add_option("--out", o.out, "write the graph as planar_code");
  format(tube);
  id_limit(tube);
  jobs(tube);

  auto* sid = app.add_subcommand("spiral-id", "x:y id and canonical spiral");
  sid->add_option("spiral", o.spiral, "spiral code \"n: p1 ... p12\" instead of --in");
  input(sid);
  id_limit(sid);
  jobs(sid);

  auto* pg = app.add_subcommand("point-group", "point group and automorphism count");
  pg->add_option("spiral", o.spiral, "spiral code \"n: p1 ... p12\" instead of --in");
  input(pg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::cout.sync_with_stdio(false);
    if (*gen) return run_generate(o);
    if (*ana) return run_analyze(o);
    if (*cen) return run_census(o);
    if (*cls) return run_classify(o);
    if (*bnd) return run_bounds(o);
    if (*inf) return run_inflate(o);
    if (*tube) return run_tube(o);
    if (*sid) return run_spiral_id(o);
    if (*pg) return run_point_group(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
