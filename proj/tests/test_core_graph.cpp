#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fullerene/plane_graph.hpp"
#include "fullerene/spiral.hpp"

using namespace fullerene;

namespace {

PlaneGraph tetrahedron() { return PlaneGraph({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

// Two hexagons joined by six squares.
PlaneGraph hexagonal_prism() {
  std::vector<Cycle> faces;
  Cycle top, bottom;
  for (int i = 0; i < 6; ++i) {
    top.push_back(i);
    bottom.push_back(11 - i);
  }
  faces.push_back(top);
  faces.push_back({6, 7, 8, 9, 10, 11});
  faces.back() = {11, 10, 9, 8, 7, 6};
  for (int i = 0; i < 6; ++i) {
    const int j = (i + 1) % 6;
    faces.push_back({j, i, 6 + i, 6 + j});
  }
  return PlaneGraph::from_faces(faces, 12);
}

FullereneGraph c20() { return wind_from_spiral(SpiralCode::parse("20: 1 2 3 4 5 6 7 8 9 10 11 12")); }
FullereneGraph c60() { return wind_from_spiral(SpiralCode::parse("60: 1 7 9 11 13 15 18 20 22 24 26 32")); }

}  // namespace

TEST_CASE("tetrahedron has four triangles") {
  const auto faces = trace_faces(tetrahedron());
  CHECK(faces.size() == 4);
  for (const auto& f : faces) CHECK(f.size() == 3);
}

TEST_CASE("dodecahedron is a valid fullerene") {
  const auto f = c20();
  CHECK(f.vertex_count() == 20);
  CHECK(f.face_count() == 12);
  CHECK(f.pentagons().size() == 12);
  CHECK(f.edge_count() == 30);
}

TEST_CASE("C60 has 12 pentagons and 20 hexagons") {
  const auto f = c60();
  CHECK(f.vertex_count() == 60);
  CHECK(f.pentagons().size() == 12);
  CHECK(f.face_count() - 12 == 20);
  CHECK(f.vertex_count() - f.edge_count() + f.face_count() == 2);
}

TEST_CASE("validation rejects a hexagonal prism") {
  const PlaneGraph g = hexagonal_prism();
  CHECK_NOTHROW(check_plane_graph(g));
  CHECK_THROWS_WITH_AS(validate_fullerene(g), doctest::Contains("size"), GraphError);
}

TEST_CASE("validation rejects non-cubic graphs and wrong rotations") {
  CHECK_THROWS_AS(validate_fullerene(tetrahedron()), GraphError);
  PlaneGraph bad({{1, 2}, {0, 2}, {0, 1}});
  CHECK_THROWS_AS(validate_fullerene(bad), GraphError);
}

TEST_CASE("face ids are reproducible") {
  const auto a = c60(), b = c60();
  REQUIRE(a.face_count() == b.face_count());
  for (int x = 0; x < a.face_count(); ++x) CHECK(a.face(x).boundary == b.face(x).boundary);
}

TEST_CASE("dual of C20 is the icosahedron and C24 has two degree-6 nodes") {
  const auto d = dual(c20());
  CHECK(d.node_count() == 12);
  for (const auto& a : d.adjacency) CHECK(a.size() == 5);
  CHECK(d.edge_count() == 30);

  const auto d24 = dual(wind_from_spiral(SpiralCode::parse("24: 1 2 3 4 5 7 8 10 11 12 13 14")));
  CHECK(d24.node_count() == 14);
  CHECK(std::count(d24.labels.begin(), d24.labels.end(), 6) == 2);
  int degree_sum = 0;
  for (const auto& a : d24.adjacency) degree_sum += static_cast<int>(a.size());
  CHECK(degree_sum == 2 * d24.edge_count());
}

TEST_CASE("face distance is a metric") {
  const auto f = c60();
  std::mt19937 rng(7);
  const int nf = f.face_count();
  for (int trial = 0; trial < 200; ++trial) {
    const int a = rng() % nf, b = rng() % nf, c = rng() % nf;
    const int ab = face_distance(f, a, b);
    CHECK(ab == face_distance(f, b, a));
    CHECK((ab == 0) == (a == b));
    CHECK(face_distance(f, a, c) <= ab + face_distance(f, b, c));
  }
  for (int x = 0; x < nf; ++x) {
    for (int y : f.face_neighbours(x)) CHECK(face_distance(f, x, y) == 1);
  }
  CHECK_THROWS(face_distance(f, 0, nf));
}

TEST_CASE("relabelled graphs validate") {
  const auto f = c60();
  std::vector<int> perm(60);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(3));
  const auto g = validate_fullerene(f.graph().relabeled(perm));
  CHECK(g.face_count() == 32);
}
