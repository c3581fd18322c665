#include "fullerene/generator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <iostream>
#include <mutex>
#include <thread>

namespace fullerene {

namespace {

constexpr int kMaxFaces = kMaxNativeVertices / 2 + 2;

// Winding state for the search. Only the open valencies and the ring are
// needed: a new face can only be glued twice to the same face within one step.
struct WindState {
  std::array<std::int8_t, kMaxFaces> open{};
  std::array<std::int8_t, kMaxFaces + 1> ring{};
  std::int8_t head = 0;
  std::int8_t tail = 0;
};

class SpiralSearch {
 public:
  SpiralSearch(int face_count, std::vector<SpiralCode>& out) : f_(face_count), out_(out), sizes_(face_count) {}

  // Fixes sizes[0..prefix.size()) and explores every completion with the
  // remaining pentagons.
  void run(const std::vector<int>& prefix) {
    WindState s;
    int pentagons = 0;
    for (int k = 0; k < static_cast<int>(prefix.size()); ++k) {
      sizes_[k] = prefix[k];
      pentagons += prefix[k] == 5;
      if (!step(s, k, prefix[k])) return;
    }
    descend(s, static_cast<int>(prefix.size()), pentagons);
  }

  std::int64_t candidates() const { return candidates_; }

 private:
  bool glue(WindState& s, int k, int x, int* glued, int& count) {
    for (int i = 0; i < count; ++i) {
      if (glued[i] == x) return false;
    }
    glued[count++] = x;
    return --s.open[x] >= 0 && --s.open[k] >= 0;
  }

  bool step(WindState& s, int k, int size) {
    s.open[k] = static_cast<std::int8_t>(size);
    if (k == 0) {
      s.head = 0;
      s.tail = 0;
      s.ring[s.tail++] = 0;
      return true;
    }
    int glued[16];
    int count = 0;
    if (k == 1) {
      if (!glue(s, 1, 0, glued, count)) return false;
      s.ring[s.tail++] = 1;
      return true;
    }
    if (k == f_ - 1) {
      if (s.tail - s.head != size) return false;
      for (int i = s.head; i < s.tail; ++i) {
        if (s.open[s.ring[i]] != 1) return false;
      }
      return true;
    }
    if (s.tail - s.head < 2) return false;
    if (!glue(s, k, s.ring[s.tail - 1], glued, count)) return false;
    if (!glue(s, k, s.ring[s.head], glued, count)) return false;
    while (s.open[s.ring[s.head]] == 0) {
      if (++s.head >= s.tail || !glue(s, k, s.ring[s.head], glued, count)) return false;
    }
    while (s.open[s.ring[s.tail - 1]] == 0) {
      if (--s.tail <= s.head || !glue(s, k, s.ring[s.tail - 1], glued, count)) return false;
    }
    if (s.open[k] <= 0) return false;
    s.ring[s.tail++] = static_cast<std::int8_t>(k);
    return true;
  }

  void descend(const WindState& s, int k, int pentagons) {
    const int remaining = f_ - k;  // faces still to place, including k
    for (int size : {5, 6}) {
      const int p = pentagons + (size == 5);
      if (p > 12 || p + (remaining - 1) < 12) continue;
      WindState next = s;
      sizes_[k] = size;
      if (!step(next, k, size)) continue;
      if (k == f_ - 1) {
        accept();
      } else {
        descend(next, k + 1, p);
      }
    }
  }

  void accept() {
    ++candidates_;
    auto t = wind_triangulation(sizes_);
    if (!t) return;  // the search state is weaker than the full check
    if (!is_canonical_spiral(*t, sizes_)) return;
    out_.push_back(SpiralCode::from_face_sizes(sizes_));
  }

  int f_;
  std::vector<SpiralCode>& out_;
  std::vector<int> sizes_;
  std::int64_t candidates_ = 0;
};

bool admissible(int n) { return n >= 20 && n % 2 == 0 && n != 22; }

}  // namespace

std::vector<SpiralCode> canonical_spirals(int n, int jobs) {
  if (!admissible(n)) return {};
  if (n > kMaxNativeVertices) {
    throw SpiralError("native generation supports at most " + std::to_string(kMaxNativeVertices) + " vertices");
  }
  const int f = n / 2 + 2;
  // One task per position pair of the first two pentagons, in lexicographic
  // order of the face-size prefix.
  std::vector<std::vector<int>> prefixes;
  for (int p1 = 1; p1 <= f - 11; ++p1) {
    for (int p2 = p1 + 1; p2 <= f - 10; ++p2) {
      std::vector<int> prefix(p2, 6);
      prefix[p1 - 1] = 5;
      prefix[p2 - 1] = 5;
      prefixes.push_back(std::move(prefix));
    }
  }
  std::vector<std::vector<SpiralCode>> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      SpiralSearch search(f, results[i]);
      search.run(prefixes[i]);
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<SpiralCode> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return all;
}

void generate_isomers(const EnumerationTask& task, const std::function<void(const Isomer&)>& sink) {
  if (!admissible(task.n)) {
    std::cerr << "warning: no fullerene has " << task.n << " vertices\n";
    return;
  }
  const auto spirals = canonical_spirals(task.n, task.jobs);
  int rank = 0;
  for (const auto& code : spirals) {
    ++rank;
    Isomer iso{code, rank, wind_from_spiral(code)};
    if (task.filter && !task.filter(iso.graph)) continue;
    sink(iso);
  }
}

std::int64_t count_isomers(int n, int jobs) { return static_cast<std::int64_t>(canonical_spirals(n, jobs).size()); }

std::pair<int, int> spiral_id(const FullereneGraph& f, int enumeration_limit, int jobs) {
  static std::mutex mutex;
  static std::map<int, std::vector<SpiralCode>> cache;
  const int n = f.vertex_count();
  if (n > enumeration_limit) {
    throw SpiralError("spiral id needs all isomers of C" + std::to_string(n) + ", above the enumeration limit " +
                      std::to_string(enumeration_limit));
  }
  const auto code = canonical_spiral(f);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, canonical_spirals(n, jobs)).first;
  const auto& list = it->second;
  auto pos = std::lower_bound(list.begin(), list.end(), code);
  if (pos == list.end() || *pos != code) throw SpiralError("canonical spiral missing from enumeration");
  return {n, static_cast<int>(pos - list.begin()) + 1};
}

std::string spiral_id_string(const FullereneGraph& f, int enumeration_limit, int jobs) {
  const auto [n, rank] = spiral_id(f, enumeration_limit, jobs);
  return std::to_string(n) + ":" + std::to_string(rank);
}

}  // namespace fullerene
