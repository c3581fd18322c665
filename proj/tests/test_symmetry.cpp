#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fullerene/generator.hpp"
#include "fullerene/symmetry.hpp"

using namespace fullerene;

namespace {

FullereneGraph isomer(int n, int rank) { return wind_from_spiral(canonical_spirals(n).at(rank - 1)); }

}  // namespace

TEST_CASE("group orders") {
  const auto c20 = isomer(20, 1);
  const auto g = automorphisms(c20);
  CHECK(g.order() == 120);
  CHECK(g.rotation_order() == 60);
  CHECK(element_order(g.elements[0]) == 1);
  CHECK(g.elements[0].proper);
  CHECK(automorphisms(isomer(36, 7)).order() == 1);
}

TEST_CASE("point groups of known isomers") {
  CHECK(point_group(isomer(20, 1)) == "Ih");
  CHECK(point_group(isomer(24, 1)) == "D6d");
  CHECK(point_group(isomer(26, 1)) == "D3h");
  CHECK(point_group(isomer(28, 2)) == "Td");
  CHECK(point_group(isomer(30, 2)) == "C2v");
  CHECK(point_group(isomer(36, 7)) == "C1");
  CHECK(point_group(isomer(40, 39)) == "D5d");
  CHECK(point_group(isomer(60, 1812)) == "Ih");
}

TEST_CASE("group structure over all C40 isomers") {
  const auto& names = fullerene_point_groups();
  generate_isomers({40, 1, {}}, [&](const Isomer& iso) {
    const auto g = automorphisms(iso.graph);
    CHECK(g.order() % g.rotation_order() == 0);
    CHECK(g.order() / g.rotation_order() <= 2);
    // Only the identity fixes a dart among rotations.
    for (std::size_t k = 1; k < g.elements.size(); ++k) {
      const auto& a = g.elements[k];
      if (!a.proper) continue;
      const auto& r = iso.graph.graph().neighbours(0);
      CHECK_FALSE((a.vertex_map[0] == 0 && a.vertex_map[r[0]] == r[0]));
    }
    const std::string name = point_group(iso.graph, g);
    CHECK(std::find(names.begin(), names.end(), name) != names.end());

    std::vector<int> perm(40);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937(iso.rank));
    const auto h = validate_fullerene(iso.graph.graph().relabeled(perm));
    CHECK(point_group(h) == name);
    CHECK(automorphisms(h).order() == g.order());
  });
}
