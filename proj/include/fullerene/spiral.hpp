#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/plane_graph.hpp"

namespace fullerene {

class SpiralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pentagon positions (1-based, strictly increasing) in the face spiral of a
// fullerene with n vertices. Ordered lexicographically by positions.
struct SpiralCode {
  int n = 0;
  std::array<int, 12> positions{};

  int face_count() const { return n / 2 + 2; }
  // Face sizes in spiral order (5 or 6).
  std::vector<int> face_sizes() const;
  static SpiralCode from_face_sizes(const std::vector<int>& sizes);
  // Throws SpiralError unless positions are strictly increasing within 1..f.
  void check() const;

  // "n: p1 p2 ... p12"
  std::string to_string() const;
  static SpiralCode parse(const std::string& text);

  auto operator<=>(const SpiralCode&) const = default;
};

// Rotation system of a triangulation of the sphere: rotation[x] lists the
// neighbours of x in cyclic order, all with the same orientation.
using Triangulation = std::vector<std::vector<int>>;

// Winds a face-size sequence into the dual triangulation. Returns nullopt when
// the spiral does not close.
std::optional<Triangulation> wind_triangulation(const std::vector<int>& sizes);

// Primal plane graph whose faces are the vertices of the triangulation.
// Face ids of the result follow tracing order, not triangulation order.
FullereneGraph fullerene_from_triangulation(const Triangulation& t);

// Throws SpiralError when the spiral does not close or yields an invalid
// fullerene.
FullereneGraph wind_from_spiral(const SpiralCode& code);

// Face sizes (vertex degrees) along the spiral starting at face `first`, then its neighbour
// `second`, winding in the given direction. Returns nullopt if that spiral
// does not close. `order` (optional) receives the face ids in spiral order.
std::optional<std::vector<int>> spiral_from_start(const Triangulation& t, int first, int second, bool forward,
                                                  std::vector<int>* order = nullptr);

// Lexicographically smallest pentagon-position list over every start face,
// neighbour and direction. Throws SpiralError if no spiral closes.
SpiralCode canonical_spiral(const FullereneGraph& f);
std::vector<int> canonical_face_sizes(const Triangulation& t);

// True iff no closing spiral of the triangulation is lexicographically
// smaller than `sizes` (which must itself be a closing spiral).
bool is_canonical_spiral(const Triangulation& t, const std::vector<int>& sizes);

// Dual rotation system of a fullerene; the degree of vertex i is the size of
// face i.
Triangulation dual_triangulation(const FullereneGraph& f);

}  // namespace fullerene
