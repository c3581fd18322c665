#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/plane_graph.hpp"

namespace fullerene {

class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Automorphism {
  std::vector<int> vertex_map;
  bool proper = true;  // preserves the rotation system rather than reversing it
};

struct AutomorphismGroup {
  std::vector<Automorphism> elements;  // identity first
  int order() const { return static_cast<int>(elements.size()); }
  int rotation_order() const;
};

// All automorphisms of the embedded graph, orientation reversing ones
// included. Works for any 3-connected cubic plane graph.
AutomorphismGroup automorphisms(const FullereneGraph& f);

// Order of an automorphism as a permutation.
int element_order(const Automorphism& a);

// ASCII point group name such as "C2v", "D5d" or "Ih".
std::string point_group(const FullereneGraph& f);
std::string point_group(const FullereneGraph& f, const AutomorphismGroup& g);

// The 28 names point_group can return.
const std::vector<std::string>& fullerene_point_groups();

}  // namespace fullerene
