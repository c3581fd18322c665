#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fullerene/clusters.hpp"
#include "fullerene/generator.hpp"
#include "fullerene/goldberg.hpp"
#include "fullerene/spiral.hpp"

using namespace fullerene;

namespace {

FullereneGraph c20() { return wind_from_spiral(SpiralCode::parse("20: 1 2 3 4 5 6 7 8 9 10 11 12")); }
FullereneGraph c60() { return wind_from_spiral(SpiralCode::parse("60: 1 7 9 11 13 15 18 20 22 24 26 32")); }

FullereneGraph isomer(int n, int rank) {
  return wind_from_spiral(canonical_spirals(n).at(rank - 1));
}

}  // namespace

TEST_CASE("partition strings") {
  CHECK(Pip::parse("(9,3)").to_string() == "9,3");
  CHECK(Pip::parse("3,9").to_string() == "9,3");
  CHECK(Pip::parse("9,3").hog_keyword() == "pentagon_cluster_9_3");
  CHECK_THROWS_AS(Pip::parse("5,5"), ClusterError);
  CHECK_THROWS_AS(Pip::parse("a,b"), ClusterError);
  CHECK(partitions_of_12().size() == 77);
  CHECK(partitions_of_12().front().to_string() == "12");
}

TEST_CASE("clusters of C20 and C60") {
  const auto a = pentagon_clusters(c20());
  REQUIRE(a.size() == 1);
  CHECK(a[0].size() == 12);
  CHECK(pip(c20()).to_string() == "12");
  CHECK_FALSE(separation_number(c20()).has_value());
  CHECK(complement(c20(), a[0]).empty());

  const auto b = pentagon_clusters(c60());
  CHECK(b.size() == 12);
  CHECK(separation_number(c60()) == 2);
  const auto comp = complement(c60(), b[0]);
  REQUIRE(comp.size() == 1);
  CHECK(comp[0].pentagons() == 11);
  CHECK(comp[0].hexagons() == 20);
  CHECK_THROWS_AS(cluster_distance(c60(), b[0], b[0]), ClusterError);
}

TEST_CASE("partitions of known isomers") {
  CHECK(pip(isomer(40, 37)).to_string() == "10,2");
  CHECK(pip(isomer(48, 141)).to_string() == "7,3,2");
  CHECK(pip(isomer(36, 9)).to_string() == "8,4");
}

TEST_CASE("cluster invariants over all C44 isomers") {
  generate_isomers({44, 1, {}}, [](const Isomer& iso) {
    const auto& f = iso.graph;
    const auto cs = pentagon_clusters(f);
    int total = 0;
    for (const auto& c : cs) total += c.size();
    CHECK(total == 12);
    std::optional<int> best;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      int faces = 0;
      for (const auto& p : complement(f, cs[i])) faces += p.pentagons() + p.hexagons();
      CHECK(faces + cs[i].size() == f.face_count());
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const int d = cluster_distance(f, cs[i], cs[j]);
        CHECK(d >= 2);
        best = best ? std::min(*best, d) : d;
      }
    }
    CHECK(separation_number(f) == best);
  });
}

TEST_CASE("small cluster signatures are unique") {
  std::set<std::string> ones, twos;
  generate_isomers({50, 1, {}}, [&](const Isomer& iso) {
    for (const auto& c : pentagon_clusters(iso.graph)) {
      if (c.size() == 1) ones.insert(cluster_signature(iso.graph, c));
      if (c.size() == 2) twos.insert(cluster_signature(iso.graph, c));
    }
  });
  CHECK(ones.size() == 1);
  CHECK(twos.size() == 1);
}

TEST_CASE("six-cluster catalog") {
  const auto& cat = six_cluster_catalog();
  REQUIRE(cat.size() == 18);
  std::set<std::string> sigs;
  std::map<TubeParams, int> tubes;
  for (const auto& e : cat) {
    sigs.insert(e.signature);
    ++tubes[e.tube];
    CHECK(in_t6(e.tube));
    CHECK(e.patch.pentagons() == 6);
  }
  CHECK(sigs.size() == 18);
  CHECK(tubes.size() == 12);
  CHECK(tubes[{6, 0}] == 4);
  CHECK(tubes[{5, 0}] == 1);
  CHECK(tubes[{6, 2}] == 1);
  CHECK(std::count_if(cat.begin(), cat.end(), [](const CatalogEntry& e) { return e.two_boundaries; }) == 1);
}

TEST_CASE("tube parameters of clusters in fullerenes") {
  const auto f = tube_fullerene_6_6(3);
  for (const auto& c : pentagon_clusters(f)) {
    CHECK(tube_parameters_of_6_cluster(f, c) == TubeParams{5, 0});
    const auto comp = complement(f, c);
    REQUIRE(comp.size() == 1);
    CHECK(comp[0].pentagons() == 6);
  }
  const auto g = c60();
  CHECK_THROWS_AS(tube_parameters_of_6_cluster(g, pentagon_clusters(g)[0]), ClusterError);
}

TEST_CASE("partition classes") {
  CHECK(classify_partition(Pip::parse("9,2,1")).to_string() == "impossible (a)");
  const auto c = classify_partition(Pip::parse("7,5"));
  CHECK(c.kind == PartitionKind::finite);
  CHECK(c.count == 69);
  CHECK(classify_partition(Pip::parse("6,6")).letter() == "d");
  CHECK(classify_partition(Pip::parse("5,4,3")).letter() == "d");
  CHECK(classify_partition(Pip::parse("12")).count == 41);
  for (const auto& p : partitions_of_12()) {
    const auto k = classify_partition(p);
    CHECK(k.count.has_value() == (k.kind == PartitionKind::finite));
    if (p.largest() < 6) CHECK(k.kind == PartitionKind::unbounded);
  }
}
