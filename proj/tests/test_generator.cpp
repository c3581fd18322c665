#include <doctest.h>

#include "fullerene/clusters.hpp"
#include "fullerene/generator.hpp"
#include "oracles.hpp"

using namespace fullerene;

TEST_CASE("isomer counts") {
  CHECK(count_isomers(20) == 1);
  CHECK(count_isomers(22) == 0);
  CHECK(count_isomers(21) == 0);
  CHECK(count_isomers(18) == 0);
  CHECK(count_isomers(24) == 1);
  CHECK(count_isomers(28) == 2);
  CHECK(count_isomers(40) == 40);
  CHECK(count_isomers(44) == 89);
  CHECK(count_isomers(48) == 199);
}

TEST_CASE("generator matches unpruned spiral enumeration up to n = 30") {
  for (int n = 20; n <= 30; n += 2) {
    const auto brute = oracle::brute_canonical_spirals(n);
    const auto fast = canonical_spirals(n);
    CHECK(std::set<SpiralCode>(fast.begin(), fast.end()) == brute);
    CHECK(fast.size() == brute.size());
  }
}

TEST_CASE("output is strictly increasing, valid and independent of jobs") {
  std::vector<SpiralCode> one, three;
  generate_isomers({42, 1, {}}, [&](const Isomer& iso) {
    CHECK(iso.graph.pentagons().size() == 12);
    CHECK(canonical_spiral(iso.graph) == iso.spiral);
    one.push_back(iso.spiral);
  });
  generate_isomers({42, 3, {}}, [&](const Isomer& iso) { three.push_back(iso.spiral); });
  CHECK(one == three);
  for (std::size_t i = 1; i < one.size(); ++i) CHECK(one[i - 1] < one[i]);
}

TEST_CASE("filters keep ranks over the full sequence") {
  std::vector<int> ranks;
  generate_isomers({40, 1, [](const FullereneGraph& f) { return pip(f) == Pip::parse("10,1,1"); }},
                   [&](const Isomer& iso) { ranks.push_back(iso.rank); });
  CHECK(ranks == std::vector<int>{39});
}
