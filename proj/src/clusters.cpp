#include "fullerene/clusters.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <set>
#include <sstream>

namespace fullerene {

std::string Pip::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

Pip Pip::parse(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Pip p;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ClusterError("not a partition: '" + text + "'");
    }
    if (used != item.size() || value <= 0) throw ClusterError("not a partition: '" + text + "'");
    p.parts.push_back(value);
  }
  int sum = 0;
  for (int x : p.parts) sum += x;
  if (sum != 12) throw ClusterError("parts of '" + text + "' do not sum to 12");
  std::sort(p.parts.begin(), p.parts.end(), std::greater<>());
  return p;
}

std::string Pip::hog_keyword() const {
  std::string out = "pentagon_cluster";
  for (int x : parts) out += "_" + std::to_string(x);
  return out;
}

namespace {

void partitions(int left, int max_part, std::vector<int>& cur, std::vector<Pip>& out) {
  if (left == 0) {
    out.push_back({cur});
    return;
  }
  for (int x = std::min(left, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions(left - x, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Pip> partitions_of_12() {
  std::vector<Pip> out;
  std::vector<int> cur;
  partitions(12, 12, cur, out);
  return out;
}

std::vector<PentagonCluster> pentagon_clusters(const FullereneGraph& f) {
  std::vector<int> comp(f.face_count(), -1);
  std::vector<PentagonCluster> out;
  for (int p : f.pentagons()) {
    if (comp[p] >= 0) continue;
    PentagonCluster c;
    std::vector<int> stack{p};
    comp[p] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      c.faces.push_back(x);
      for (int y : f.face_neighbours(x)) {
        if (f.is_pentagon(y) && comp[y] < 0) {
          comp[y] = comp[p];
          stack.push_back(y);
        }
      }
    }
    std::sort(c.faces.begin(), c.faces.end());
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const PentagonCluster& a, const PentagonCluster& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.faces.front() < b.faces.front();
  });
  return out;
}

Pip pip(const FullereneGraph& f) {
  Pip p;
  for (const auto& c : pentagon_clusters(f)) p.parts.push_back(c.size());
  return p;
}

int cluster_distance(const FullereneGraph& f, const PentagonCluster& a, const PentagonCluster& b) {
  if (a == b) throw ClusterError("cluster distance needs two different clusters");
  const auto dist = face_distances_from(f, a.faces);
  int best = f.face_count();
  for (int x : b.faces) best = std::min(best, dist[x]);
  return best;
}

std::optional<int> separation_number(const FullereneGraph& f) {
  const auto clusters = pentagon_clusters(f);
  if (clusters.size() < 2) return std::nullopt;
  std::vector<int> owner(f.face_count(), -1);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (int x : clusters[i].faces) owner[x] = static_cast<int>(i);
  }
  int best = f.face_count();
  for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
    const auto dist = face_distances_from(f, clusters[i].faces);
    for (int p : f.pentagons()) {
      if (owner[p] != static_cast<int>(i)) best = std::min(best, dist[p]);
    }
  }
  return best;
}

namespace {

// Edge-connected components of the faces not in `excluded`.
std::vector<std::vector<int>> face_components(const FullereneGraph& f, const std::vector<char>& excluded) {
  std::vector<char> seen(excluded);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < f.face_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : f.face_neighbours(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Cycle> cycles_of(const FullereneGraph& f, const std::vector<int>& faces) {
  std::vector<Cycle> out;
  for (int x : faces) out.push_back(f.face(x).boundary);
  return out;
}

}  // namespace

std::vector<Patch> complement(const FullereneGraph& f, const PentagonCluster& c) {
  std::vector<char> in(f.face_count(), 0);
  for (int x : c.faces) in[x] = 1;
  std::vector<Patch> out;
  for (const auto& comp : face_components(f, in)) out.push_back(Patch::from_faces(cycles_of(f, comp)));
  return out;
}

std::vector<int> closed_cluster_faces(const FullereneGraph& f, const PentagonCluster& c) {
  std::vector<char> in(f.face_count(), 0);
  for (int x : c.faces) in[x] = 1;
  auto comps = face_components(f, in);
  auto has_pentagon = [&](const std::vector<int>& comp) {
    return std::any_of(comp.begin(), comp.end(), [&](int x) { return f.is_pentagon(x); });
  };
  std::vector<int> out = c.faces;
  const bool any_pentagons = std::any_of(comps.begin(), comps.end(), has_pentagon);
  std::size_t keep_out = comps.size();
  if (!any_pentagons && !comps.empty()) {
    keep_out = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
      if (comps[i].size() > comps[keep_out].size()) keep_out = i;
    }
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i == keep_out || has_pentagon(comps[i])) continue;
    out.insert(out.end(), comps[i].begin(), comps[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Canonical code of the plane subgraph spanned by `faces`, with a flag on
// every dart telling whether it runs along one of those faces. Minimum over
// starts at face darts and both orientations.
std::string face_set_code(const PlaneGraph& g, const std::vector<Cycle>& faces) {
  std::map<int, int> local;
  std::set<std::pair<int, int>> darts;
  for (const auto& c : faces) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      const int u = c[t], v = c[(t + 1) % c.size()];
      darts.emplace(u, v);
      local.emplace(u, 0);
    }
  }
  std::vector<int> global;
  for (auto& [v, id] : local) {
    id = static_cast<int>(global.size());
    global.push_back(v);
  }
  const int n = static_cast<int>(global.size());
  std::vector<std::vector<int>> rot(n);
  std::vector<std::vector<char>> flag(n);
  for (int i = 0; i < n; ++i) {
    for (int u : g.neighbours(global[i])) {
      const bool fwd = darts.count({global[i], u}) > 0;
      const bool back = darts.count({u, global[i]}) > 0;
      if (!fwd && !back) continue;
      rot[i].push_back(local.at(u));
      flag[i].push_back(fwd);
    }
  }
  std::vector<int> best;
  for (int mirror = 0; mirror < 2; ++mirror) {
    // In the mirror image the face darts are the reversed ones.
    auto is_face_dart = [&](int x, int slot) {
      if (!mirror) return flag[x][slot] != 0;
      const int y = rot[x][slot];
      const auto& ry = rot[y];
      const int back = static_cast<int>(std::find(ry.begin(), ry.end(), x) - ry.begin());
      return flag[y][back] != 0;
    };
    for (int s = 0; s < n; ++s) {
      for (int slot = 0; slot < static_cast<int>(rot[s].size()); ++slot) {
        if (!is_face_dart(s, slot)) continue;
        std::vector<int> label(n, 0), from(n, -1), order{s}, code;
        label[s] = 1;
        from[s] = slot;
        int next = 2;
        bool tie = !best.empty(), worse = false;
        for (std::size_t h = 0; h < order.size() && !worse; ++h) {
          const int x = order[h];
          const int d = static_cast<int>(rot[x].size());
          for (int k = 0; k < d && !worse; ++k) {
            const int sl = mirror ? ((from[x] - k) % d + d) % d : (from[x] + k) % d;
            const int y = rot[x][sl];
            if (!label[y]) {
              label[y] = next++;
              const auto& ry = rot[y];
              from[y] = static_cast<int>(std::find(ry.begin(), ry.end(), x) - ry.begin());
              order.push_back(y);
            }
            code.push_back(2 * label[y] + (is_face_dart(x, sl) ? 1 : 0));
            if (tie) {
              const std::size_t i = code.size() - 1;
              if (code[i] > best[i]) worse = true;
              else if (code[i] < best[i]) tie = false;
            }
          }
          code.push_back(0);
          if (tie && !worse) {
            const std::size_t i = code.size() - 1;
            if (code[i] > best[i]) worse = true;
            else if (code[i] < best[i]) tie = false;
          }
        }
        if (!worse && (best.empty() || code < best)) best = std::move(code);
      }
    }
  }
  std::ostringstream out;
  out << faces.size() << ':';
  for (int x : best) out << x << '.';
  return out.str();
}

}  // namespace

std::string cluster_signature(const FullereneGraph& f, const PentagonCluster& c) {
  return face_set_code(f.graph(), cycles_of(f, closed_cluster_faces(f, c)));
}

std::string patch_signature(const Patch& p) { return face_set_code(p.graph(), p.faces()); }

std::string TubeParams::to_string() const { return "(" + std::to_string(l) + "," + std::to_string(m) + ")"; }

bool in_t6(const TubeParams& t) {
  static const std::set<TubeParams> t6{{5, 0}, {3, 3}, {4, 2}, {5, 1}, {6, 0}, {4, 3},
                                       {5, 2}, {6, 1}, {7, 0}, {4, 4}, {5, 3}, {6, 2}};
  return t6.count(t) > 0;
}

TubeParams tube_parameters(const Patch& p) {
  if (p.pentagons() != 6) throw ClusterError("tube parameters need a patch with six pentagons");
  // Eisenstein coordinates x + y*w with w = exp(i*pi/3), w^2 = w - 1.
  static const std::array<std::pair<int, int>, 6> step{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
  int x = 0, y = 0, dir = 0;
  const int b = p.boundary_length();
  for (int t = 1; t <= b; ++t) {
    x += step[dir].first;
    y += step[dir].second;
    dir = (dir + (p.degree(p.boundary()[t % b]) == 2 ? 1 : 5)) % 6;
  }
  if (dir != 0) throw ClusterError("boundary walk does not return to its start direction");
  for (int refl = 0; refl < 2; ++refl) {
    int a = refl ? x + y : x, c = refl ? -y : y;
    for (int r = 0; r < 6; ++r) {
      if ((c - a) % 3 != 0) throw ClusterError("boundary displacement is not a lattice vector");
      const int m = (c - a) / 3;
      const int l = a + m;
      if (l >= m && m >= 0) return {l, m};
      const int na = -c, nc = a + c;  // multiply by w
      a = na;
      c = nc;
    }
  }
  throw ClusterError("could not normalise tube vector");
}

namespace {

// All patches reachable by adding pentagons to `seed` `steps` times, up to
// isomorphism.
std::vector<Patch> grow_with_pentagons(const Patch& seed, int steps) {
  std::vector<Patch> level{seed};
  for (int s = 0; s < steps; ++s) {
    std::map<std::string, Patch> next;
    for (const auto& p : level) {
      const int b = p.boundary_length();
      for (int t = 0; t < b; ++t) {
        if (p.degree(p.boundary()[t]) != 2) continue;
        int run = 0;
        while (run < b && p.degree(p.boundary()[(t + 1 + run) % b]) == 3) ++run;
        if (run > 3) continue;
        Patch q = p;
        try {
          q.add_face(t, run, 5);
          q.check();
        } catch (const PatchError&) {
          continue;
        }
        next.emplace(patch_signature(q), std::move(q));
      }
    }
    level.clear();
    for (auto& [sig, p] : next) level.push_back(std::move(p));
  }
  return level;
}

// A hexagon bordering the patch covers one maximal run of degree-3 boundary
// vertices plus its two ends, so runs longer than four cannot occur.
bool fits_in_fullerene(const Patch& p) {
  const auto word = p.raw_code().word;
  const int b = static_cast<int>(word.size());
  for (int t = 0; t < b; ++t) {
    if (word[t] != '2') continue;
    int run = 0;
    while (run < b && word[(t + 1 + run) % b] == '3') ++run;
    if (run > 4) return false;
  }
  return true;
}

}  // namespace

const std::vector<CatalogEntry>& six_cluster_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (auto& p : grow_with_pentagons(Patch::polygon(5), 5)) {
      if (!fits_in_fullerene(p)) continue;
      auto sig = patch_signature(p);
      const auto tube = tube_parameters(p);
      out.push_back({std::move(p), std::move(sig), tube, false});
    }
    for (auto& p : grow_with_pentagons(Patch::polygon(6), 6)) {
      // The hexagon is face 0; keep the patch where it is fully surrounded.
      const auto& hex = p.faces()[0];
      const bool inner = std::none_of(hex.begin(), hex.end(), [&](int v) {
        return std::find(p.boundary().begin(), p.boundary().end(), v) != p.boundary().end();
      });
      if (!inner) continue;
      auto sig = patch_signature(p);
      const auto tube = tube_parameters(p);
      out.push_back({std::move(p), std::move(sig), tube, true});
    }
    std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
      if (a.tube.l + a.tube.m != b.tube.l + b.tube.m) return a.tube.l + a.tube.m < b.tube.l + b.tube.m;
      return a.tube.m > b.tube.m;
    });
    return out;
  }();
  return catalog;
}

TubeParams tube_parameters_of_6_cluster(const FullereneGraph& f, const PentagonCluster& c) {
  if (c.size() != 6) throw ClusterError("not a six-pentagon cluster");
  const auto sig = cluster_signature(f, c);
  for (const auto& e : six_cluster_catalog()) {
    if (e.signature == sig) return e.tube;
  }
  throw ClusterError("six-pentagon cluster missing from the catalog");
}

std::string PartitionClass::letter() const {
  switch (kind) {
    case PartitionKind::impossible: return "a";
    case PartitionKind::finite: return "b";
    case PartitionKind::bounded: return "c";
    default: return "d";
  }
}

std::string PartitionClass::to_string() const {
  switch (kind) {
    case PartitionKind::impossible: return "impossible (a)";
    case PartitionKind::finite: return "finite (b), " + std::to_string(*count) + " fullerenes";
    case PartitionKind::bounded: return "infinite with bounded separation (c)";
    default: return "infinite with unbounded separation (d)";
  }
}

PartitionClass classify_partition(const Pip& p) {
  int sum = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i] <= 0 || (i && p.parts[i] > p.parts[i - 1])) throw ClusterError("not a partition of 12");
    sum += p.parts[i];
  }
  if (sum != 12) throw ClusterError("not a partition of 12");

  using K = PartitionKind;
  // Partitions with a part of at least 6.
  static const std::map<std::string, PartitionClass> table{
      {"12", {K::finite, 41}},
      {"11,1", {K::finite, 2}},
      {"10,2", {K::finite, 1}},
      {"10,1,1", {K::finite, 1}},
      {"9,3", {K::finite, 2}},
      {"9,2,1", {K::impossible, {}}},
      {"9,1,1,1", {K::impossible, {}}},
      {"8,4", {K::finite, 16}},
      {"8,3,1", {K::impossible, {}}},
      {"8,2,2", {K::impossible, {}}},
      {"8,2,1,1", {K::impossible, {}}},
      {"8,1,1,1,1", {K::impossible, {}}},
      {"7,5", {K::finite, 69}},
      {"7,4,1", {K::finite, 12}},
      {"7,3,2", {K::finite, 1}},
      {"7,3,1,1", {K::impossible, {}}},
      {"7,2,2,1", {K::impossible, {}}},
      {"7,2,1,1,1", {K::impossible, {}}},
      {"7,1,1,1,1,1", {K::impossible, {}}},
      {"6,6", {K::unbounded, {}}},
      {"6,5,1", {K::bounded, {}}},
      {"6,4,2", {K::bounded, {}}},
      {"6,4,1,1", {K::bounded, {}}},
      {"6,3,3", {K::bounded, {}}},
      {"6,3,2,1", {K::bounded, {}}},
      {"6,3,1,1,1", {K::impossible, {}}},
      {"6,2,2,2", {K::impossible, {}}},
      {"6,2,2,1,1", {K::impossible, {}}},
      {"6,2,1,1,1,1", {K::impossible, {}}},
      {"6,1,1,1,1,1,1", {K::impossible, {}}},
  };
  if (p.largest() < 6) return {K::unbounded, {}};
  auto it = table.find(p.to_string());
  if (it == table.end()) throw ClusterError("partition " + p.to_string() + " missing from the class table");
  return it->second;
}

}  // namespace fullerene
