#pragma once
// Slow independent reference implementations used by the tests.

#include <algorithm>
#include <climits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fullerene/clusters.hpp"
#include "fullerene/patch.hpp"
#include "fullerene/spiral.hpp"

namespace oracle {

using namespace fullerene;

// All patches reachable by gluing faces one at a time onto the boundary, with
// at most `max_p` pentagons and `max_h` hexagons, deduplicated.
inline std::map<std::string, Patch> all_patches(int max_p, int max_h) {
  std::map<std::string, Patch> seen;
  std::vector<Patch> frontier;
  for (int size : {5, 6}) {
    if ((size == 5 && max_p == 0) || (size == 6 && max_h == 0)) continue;
    Patch p = Patch::polygon(size);
    seen.emplace(canonical_patch_form(p), p);
    frontier.push_back(p);
  }
  while (!frontier.empty()) {
    std::vector<Patch> next;
    for (const Patch& p : frontier) {
      for (int size : {5, 6}) {
        if (size == 5 ? p.pentagons() == max_p : p.hexagons() == max_h) continue;
        for (int start = 0; start < p.boundary_length(); ++start) {
          for (int run = 0; run <= size - 2 && run + 1 < p.boundary_length(); ++run) {
            Patch q = p;
            try {
              q.add_face(start, run, size);
              q.check();
            } catch (const PatchError&) {
              continue;
            }
            if (seen.emplace(canonical_patch_form(q), q).second) next.push_back(q);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Least boundary length over all enumerated patches with exactly p pentagons
// and h hexagons, indexed [p][h].
inline std::vector<std::vector<int>> brute_min_boundary(int max_p, int max_h) {
  std::vector<std::vector<int>> best(max_p + 1, std::vector<int>(max_h + 1, INT_MAX));
  for (const auto& [code, p] : all_patches(max_p, max_h)) {
    int& b = best[p.pentagons()][p.hexagons()];
    b = std::min(b, p.boundary_length());
  }
  return best;
}

// Canonical spirals of all C_n isomers by trying every 12-subset of spiral
// positions, without pruning.
inline std::set<SpiralCode> brute_canonical_spirals(int n) {
  const int f = n / 2 + 2;
  std::set<SpiralCode> out;
  if (f < 12) return out;
  std::vector<int> mask(f, 0);
  std::fill(mask.begin(), mask.begin() + 12, 1);
  do {
    std::vector<int> sizes(f);
    for (int i = 0; i < f; ++i) sizes[i] = mask[i] ? 5 : 6;
    auto t = wind_triangulation(sizes);
    if (!t) continue;
    try {
      out.insert(canonical_spiral(fullerene_from_triangulation(*t)));
    } catch (const std::exception&) {
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// Adds a face at the first boundary path "2 3^run 2".
inline void add_at_run(Patch& p, int run, int size) {
  const std::string w = p.raw_code().word;
  const int b = static_cast<int>(w.size());
  for (int i = 0; i < b; ++i) {
    bool ok = w[i] == '2' && w[(i + run + 1) % b] == '2';
    for (int k = 1; k <= run && ok; ++k) ok = w[(i + k) % b] == '3';
    if (ok) {
      p.add_face(i, run, size);
      return;
    }
  }
  throw PatchError("no boundary path for the face");
}

// Random patch grown face by face; every step keeps a valid patch.
inline Patch random_patch(std::mt19937& rng, int pentagons, int hexagons) {
  Patch p = Patch::polygon(pentagons > 0 ? 5 : 6);
  int p_left = pentagons - (pentagons > 0), h_left = hexagons - (pentagons == 0);
  int stuck = 0;
  while ((p_left > 0 || h_left > 0) && stuck < 1000) {
    const bool pent = p_left > 0 && (h_left == 0 || rng() % (p_left + h_left) < static_cast<unsigned>(p_left));
    const int size = pent ? 5 : 6;
    const int start = static_cast<int>(rng() % p.boundary_length());
    const int run = static_cast<int>(rng() % (size - 1));
    Patch q = p;
    try {
      q.add_face(start, run, size);
      q.check();
    } catch (const PatchError&) {
      ++stuck;
      continue;
    }
    p = std::move(q);
    (pent ? p_left : h_left) -= 1;
  }
  return p;
}

}  // namespace oracle
