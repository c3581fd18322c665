#include "fullerene/spiral.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace fullerene {

std::vector<int> SpiralCode::face_sizes() const {
  std::vector<int> sizes(face_count(), 6);
  for (int p : positions) sizes.at(p - 1) = 5;
  return sizes;
}

SpiralCode SpiralCode::from_face_sizes(const std::vector<int>& sizes) {
  SpiralCode code;
  code.n = 2 * (static_cast<int>(sizes.size()) - 2);
  int k = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 5) {
      if (k == 12) throw SpiralError("more than 12 pentagons in spiral");
      code.positions[k++] = static_cast<int>(i) + 1;
    }
  }
  if (k != 12) throw SpiralError("fewer than 12 pentagons in spiral");
  return code;
}

void SpiralCode::check() const {
  if (n < 20 || n % 2 != 0) throw SpiralError("spiral vertex count must be even and >= 20");
  for (int i = 0; i < 12; ++i) {
    if (positions[i] < 1 || positions[i] > face_count()) throw SpiralError("spiral position out of range");
    if (i > 0 && positions[i] <= positions[i - 1]) throw SpiralError("spiral positions not increasing");
  }
}

std::string SpiralCode::to_string() const {
  std::ostringstream out;
  out << n << ":";
  for (int p : positions) out << ' ' << p;
  return out.str();
}

SpiralCode SpiralCode::parse(const std::string& text) {
  std::istringstream in(text);
  SpiralCode code;
  char colon = 0;
  if (!(in >> code.n >> colon) || colon != ':') throw SpiralError("spiral text must start with 'n:'");
  for (int i = 0; i < 12; ++i) {
    if (!(in >> code.positions[i])) throw SpiralError("spiral text needs 12 positions");
  }
  std::string rest;
  if (in >> rest) throw SpiralError("trailing data after 12 spiral positions");
  code.check();
  return code;
}

// Winding keeps the open boundary as a ring front..back. A new face k is glued
// onto the boundary edge back-front; saturated faces are popped from either
// end and k is glued to the next one. Rotations are kept as deques so that
// every insertion happens at an end: ring faces gain later neighbours at the
// front side via push_back and at the back side via push_front.
std::optional<Triangulation> wind_triangulation(const std::vector<int>& sizes) {
  const int f = static_cast<int>(sizes.size());
  if (f < 3) return std::nullopt;
  std::vector<std::deque<int>> rot(f);
  std::vector<int> open(sizes);
  std::deque<int> ring;

  auto linked = [&](int a, int b) { return std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end(); };
  // k attaches on the front side of x (x gains k after its existing neighbours).
  auto glue_front = [&](int k, int x) {
    if (linked(k, x)) return false;
    rot[x].push_back(k);
    rot[k].push_front(x);
    return --open[x] >= 0 && --open[k] >= 0;
  };
  auto glue_back = [&](int k, int x) {
    if (linked(k, x)) return false;
    rot[x].push_front(k);
    rot[k].push_back(x);
    return --open[x] >= 0 && --open[k] >= 0;
  };

  ring.push_back(0);
  if (!glue_back(1, 0)) return std::nullopt;
  ring.push_back(1);
  for (int k = 2; k < f - 1; ++k) {
    if (ring.size() < 2) return std::nullopt;
    if (!glue_back(k, ring.back())) return std::nullopt;
    if (!glue_front(k, ring.front())) return std::nullopt;
    while (open[ring.front()] == 0) {
      ring.pop_front();
      if (ring.empty() || !glue_front(k, ring.front())) return std::nullopt;
    }
    while (open[ring.back()] == 0) {
      ring.pop_back();
      if (ring.empty() || !glue_back(k, ring.back())) return std::nullopt;
    }
    if (open[k] <= 0) return std::nullopt;
    ring.push_back(k);
  }
  const int last = f - 1;
  if (static_cast<int>(ring.size()) != sizes[last]) return std::nullopt;
  for (int x : ring) {
    if (open[x] != 1) return std::nullopt;
  }
  for (auto it = ring.rbegin(); it != ring.rend(); ++it) {
    rot[*it].push_back(last);
    rot[last].push_back(*it);
    --open[*it];
  }
  Triangulation t(f);
  for (int x = 0; x < f; ++x) {
    if (static_cast<int>(rot[x].size()) != sizes[x]) return std::nullopt;
    t[x].assign(rot[x].begin(), rot[x].end());
  }
  return t;
}

namespace {

int next_in(const std::vector<int>& r, int x) {
  const int s = static_cast<int>(r.size());
  for (int i = 0; i < s; ++i) {
    if (r[i] == x) return r[(i + 1) % s];
  }
  return -1;
}

int prev_in(const std::vector<int>& r, int x) {
  const int s = static_cast<int>(r.size());
  for (int i = 0; i < s; ++i) {
    if (r[i] == x) return r[(i + s - 1) % s];
  }
  return -1;
}

bool contains(const std::vector<int>& r, int x) { return std::find(r.begin(), r.end(), x) != r.end(); }

// Replays the winding rules on an existing triangulation. `visit(step, face)`
// may return false to abandon the walk early.
class SpiralWalker {
 public:
  enum class Result { Closes, Fails, Aborted };

  explicit SpiralWalker(const Triangulation& t)
      : t_(t), f_(static_cast<int>(t.size())), visited_(f_), open_(f_), ring_(f_ + 1) {}

  template <class Visit>
  Result walk(int first, int second, bool forward, Visit&& visit) {
    std::fill(visited_.begin(), visited_.end(), 0);
    for (int x = 0; x < f_; ++x) open_[x] = static_cast<int>(t_[x].size());
    if (!contains(t_[first], second)) return Result::Fails;
    if (!visit(0, first)) return Result::Aborted;
    if (!visit(1, second)) return Result::Aborted;
    visited_[first] = visited_[second] = 1;
    --open_[first];
    --open_[second];
    head_ = 0;
    tail_ = 0;
    ring_[tail_++] = first;
    ring_[tail_++] = second;

    for (int k = 2; k < f_ - 1; ++k) {
      if (tail_ - head_ < 2) return Result::Fails;
      const int front = ring_[head_];
      const int back = ring_[tail_ - 1];
      const int c = forward ? next_in(t_[front], back) : prev_in(t_[front], back);
      if (c < 0 || visited_[c]) return Result::Fails;
      if (!visit(k, c)) return Result::Aborted;
      visited_[c] = 1;
      open_[c] = static_cast<int>(t_[c].size());
      glued_count_ = 0;
      if (!glue(c, back) || !glue(c, front)) return Result::Fails;
      while (open_[ring_[head_]] == 0) {
        if (++head_ >= tail_ || !glue(c, ring_[head_])) return Result::Fails;
      }
      while (open_[ring_[tail_ - 1]] == 0) {
        if (--tail_ <= head_ || !glue(c, ring_[tail_ - 1])) return Result::Fails;
      }
      if (open_[c] <= 0) return Result::Fails;
      int seen = 0;
      for (int y : t_[c]) seen += visited_[y];
      if (seen != glued_count_) return Result::Fails;
      ring_[tail_++] = c;
    }
    const int front = ring_[head_];
    const int back = ring_[tail_ - 1];
    const int last = forward ? next_in(t_[front], back) : prev_in(t_[front], back);
    if (last < 0 || visited_[last]) return Result::Fails;
    if (tail_ - head_ != static_cast<int>(t_[last].size())) return Result::Fails;
    for (int i = head_; i < tail_; ++i) {
      if (open_[ring_[i]] != 1 || !contains(t_[last], ring_[i])) return Result::Fails;
    }
    if (!visit(f_ - 1, last)) return Result::Aborted;
    return Result::Closes;
  }

 private:
  bool glue(int c, int x) {
    for (int i = 0; i < glued_count_; ++i) {
      if (glued_[i] == x) return false;
    }
    if (!contains(t_[c], x)) return false;
    glued_[glued_count_++] = x;
    return --open_[x] >= 0 && --open_[c] >= 0;
  }

  const Triangulation& t_;
  int f_;
  std::vector<char> visited_;
  std::vector<int> open_;
  std::vector<int> ring_;
  int head_ = 0;
  int tail_ = 0;
  int glued_[16] = {};
  int glued_count_ = 0;
};

}  // namespace

FullereneGraph fullerene_from_triangulation(const Triangulation& t) {
  // Primal vertices are the triangles {x, r[i], r[i+1]}; primal face x is the
  // cycle of triangles around x.
  std::unordered_map<std::uint64_t, int> triangle_id;
  auto key = [](int a, int b, int c) {
    int v[3] = {a, b, c};
    std::sort(v, v + 3);
    return (static_cast<std::uint64_t>(v[0]) << 42) | (static_cast<std::uint64_t>(v[1]) << 21) |
           static_cast<std::uint64_t>(v[2]);
  };
  std::vector<Cycle> faces(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    const auto& r = t[x];
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto k = key(static_cast<int>(x), r[i], r[(i + 1) % r.size()]);
      auto [it, inserted] = triangle_id.emplace(k, static_cast<int>(triangle_id.size()));
      faces[x].push_back(it->second);
    }
  }
  return fullerene_from_faces(faces, static_cast<int>(triangle_id.size()));
}

FullereneGraph wind_from_spiral(const SpiralCode& code) {
  code.check();
  auto t = wind_triangulation(code.face_sizes());
  if (!t) throw SpiralError("spiral " + code.to_string() + " does not close");
  try {
    return fullerene_from_triangulation(*t);
  } catch (const GraphError& e) {
    throw SpiralError("spiral " + code.to_string() + " yields an invalid graph: " + e.what());
  }
}

Triangulation dual_triangulation(const FullereneGraph& f) {
  Triangulation t(f.face_count());
  for (int i = 0; i < f.face_count(); ++i) t[i] = f.face_neighbours(i);
  return t;
}

std::optional<std::vector<int>> spiral_from_start(const Triangulation& t, int first, int second, bool forward,
                                                  std::vector<int>* order) {
  SpiralWalker walker(t);
  std::vector<int> sizes(t.size());
  if (order) order->assign(t.size(), -1);
  auto result = walker.walk(first, second, forward, [&](int step, int face) {
    sizes[step] = static_cast<int>(t[face].size());
    if (order) (*order)[step] = face;
    return true;
  });
  if (result != SpiralWalker::Result::Closes) return std::nullopt;
  return sizes;
}

namespace {

// Smallest closing spiral below `bound` (exclusive unless `inclusive`); empty
// when none. With stop_on_first the search ends at the first improvement.
std::vector<int> smallest_spiral(const Triangulation& t, std::vector<int> bound, bool inclusive, bool stop_on_first) {
  const int f = static_cast<int>(t.size());
  SpiralWalker walker(t);
  std::vector<int> best;
  std::vector<int> current(f);
  for (int first = 0; first < f; ++first) {
    if (!bound.empty() && static_cast<int>(t[first].size()) > bound[0]) continue;
    for (int second : t[first]) {
      for (bool forward : {true, false}) {
        // cmp: 0 = equal so far, -1 already below bound.
        int cmp = 0;
        auto result = walker.walk(first, second, forward, [&](int step, int face) {
          const int s = static_cast<int>(t[face].size());
          current[step] = s;
          if (cmp == 0 && !bound.empty()) {
            if (s > bound[step]) return false;
            if (s < bound[step]) cmp = -1;
          }
          return true;
        });
        if (result != SpiralWalker::Result::Closes) continue;
        if (!bound.empty() && cmp == 0 && !inclusive) continue;
        best = current;
        bound = current;
        inclusive = false;
        if (stop_on_first) return best;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<int> canonical_face_sizes(const Triangulation& t) {
  auto best = smallest_spiral(t, {}, true, false);
  if (best.empty()) throw SpiralError("unspirallable: no face spiral closes");
  return best;
}

bool is_canonical_spiral(const Triangulation& t, const std::vector<int>& sizes) {
  return smallest_spiral(t, sizes, false, true).empty();
}

SpiralCode canonical_spiral(const FullereneGraph& f) {
  return SpiralCode::from_face_sizes(canonical_face_sizes(dual_triangulation(f)));
}

}  // namespace fullerene
