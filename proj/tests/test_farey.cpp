#include <doctest.h>

#include <random>
#include <set>

#include "rigid/farey.hpp"
#include "rigid/util.hpp"

using namespace rigid;
using farey::FareySurfaceTag;
using farey::MoebiusClass;
using farey::Slope;

namespace {

// Independent mediant-tree BFS: counts vertices and triangles within `radius`
// flips of the base triangle, without going through the library ball code.
struct MediantCount {
  long long vertices = 0;
  long long triangles = 0;
};

MediantCount mediant_bfs(int radius) {
  using V = std::pair<long long, long long>;
  auto canon = [](long long p, long long q) {
    Slope s(p, q);
    return V{s.p, s.q};
  };
  using Tri = std::array<V, 3>;
  auto norm = [](Tri t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  std::set<V> verts;
  std::set<Tri> tris;
  Tri base = norm({canon(0, 1), canon(1, 1), canon(1, 0)});
  std::vector<std::pair<Tri, int>> queue{{base, 0}};
  tris.insert(base);
  for (auto& v : base) verts.insert(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [tri, d] = queue[head];
    if (d == radius) continue;
    for (int drop = 0; drop < 3; ++drop) {
      V w = tri[drop], u = tri[(drop + 1) % 3], v = tri[(drop + 2) % 3];
      V plus = canon(u.first + v.first, u.second + v.second);
      V minus = canon(u.first - v.first, u.second - v.second);
      V apex = (plus == w) ? minus : plus;
      Tri next = norm({u, v, apex});
      if (tris.insert(next).second) {
        verts.insert(apex);
        queue.emplace_back(next, d + 1);
      }
    }
  }
  return {static_cast<long long>(verts.size()),
          static_cast<long long>(tris.size())};
}

std::mt19937_64 rng(20240913ULL);

MoebiusClass random_class() {
  // random product of the two parabolic generators
  MoebiusClass m;
  std::uniform_int_distribution<int> len(1, 8), coin(0, 1), pw(1, 3);
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    int k = pw(rng) * (coin(rng) ? 1 : -1);
    MoebiusClass g = coin(rng) ? MoebiusClass(1, k, 0, 1) : MoebiusClass(1, 0, k, 1);
    m = farey::compose(m, g);
  }
  return m;
}

Slope random_slope() {
  std::uniform_int_distribution<long long> d(-20, 20);
  while (true) {
    long long p = d(rng), q = d(rng);
    if (p == 0 && q == 0) continue;
    return Slope(p, q);
  }
}

}  // namespace

TEST_CASE("slope canonical form") {
  CHECK(Slope(2, 4) == Slope(1, 2));
  CHECK(Slope(-1, -2) == Slope(1, 2));
  CHECK(Slope(3, 0) == Slope(1, 0));
  CHECK(Slope(-5, 0) == Slope(1, 0));
  CHECK_THROWS_AS(Slope(0, 0), Error);
}

TEST_CASE("slope intersection values") {
  CHECK(farey::slope_intersection(Slope(0, 1), Slope(1, 0),
                                  FareySurfaceTag::TorusLike) == 1);
  CHECK(farey::slope_intersection(Slope(1, 2), Slope(1, 3),
                                  FareySurfaceTag::TorusLike) == 1);
  CHECK(farey::slope_intersection(Slope(0, 1), Slope(1, 0),
                                  FareySurfaceTag::SphereLike) == 2);
}

TEST_CASE("slope intersection is symmetric and vanishes only on equality") {
  for (int t = 0; t < 500; ++t) {
    Slope a = random_slope(), b = random_slope();
    auto tag = (t % 2) ? FareySurfaceTag::TorusLike : FareySurfaceTag::SphereLike;
    CHECK(farey::slope_intersection(a, b, tag) ==
          farey::slope_intersection(b, a, tag));
    if (farey::slope_intersection(a, b, tag) == 0) CHECK(a == b);
    if (a == b) CHECK(farey::slope_intersection(a, b, tag) == 0);
  }
}

TEST_CASE("moebius action: identity and twist") {
  Slope s = random_slope();
  CHECK(farey::apply(MoebiusClass(), s) == s);
  CHECK(farey::apply(MoebiusClass(1, 1, 0, 1), Slope(0, 1)) == Slope(1, 1));
}

TEST_CASE("moebius action preserves intersections on random pairs") {
  for (int t = 0; t < 1000; ++t) {
    Slope a = random_slope(), b = random_slope();
    MoebiusClass m = random_class();
    auto tag = FareySurfaceTag::TorusLike;
    CHECK(farey::slope_intersection(farey::apply(m, a), farey::apply(m, b), tag) ==
          farey::slope_intersection(a, b, tag));
  }
}

TEST_CASE("base triangle pointwise stabilizer is trivial") {
  auto stab = farey::base_triangle_pointwise_stabilizer();
  REQUIRE(stab.size() == 1);
  CHECK(stab[0] == MoebiusClass());
}

TEST_CASE("extend_triangle on base order gives identity") {
  auto ext = farey::extend_triangle(farey::base_triangle());
  REQUIRE(ext.size() == 1);
  CHECK(ext[0] == MoebiusClass());
}

TEST_CASE("extend_triangle on a swapped base gives the unique reversing class") {
  auto base = farey::base_triangle();
  std::vector<Slope> swapped = {base[2], base[1], base[0]};  // 1/0, 1/1, 0/1
  auto ext = farey::extend_triangle(swapped);
  REQUIRE(ext.size() == 1);
  const auto& m = ext[0];
  CHECK(farey::apply(m, base[0]) == swapped[0]);
  CHECK(farey::apply(m, base[1]) == swapped[1]);
  CHECK(farey::apply(m, base[2]) == swapped[2]);
  CHECK(m.det() == -1);  // orientation-reversing
}

TEST_CASE("extend_triangle round trip on random classes") {
  auto base = farey::base_triangle();
  for (int t = 0; t < 100; ++t) {
    MoebiusClass m = random_class();
    std::vector<Slope> image;
    for (const auto& s : base) image.push_back(farey::apply(m, s));
    auto ext = farey::extend_triangle(image);
    REQUIRE(ext.size() == 1);
    CHECK(ext[0] == m);
  }
}

TEST_CASE("extend_triangle rejects non-triangles") {
  CHECK_THROWS_AS(
      farey::extend_triangle({Slope(0, 1), Slope(1, 0), Slope(1, 2)}), Error);
}

TEST_CASE("farey ball radius 0 is the base triangle") {
  auto ball = farey::farey_ball(farey::base_triangle(), 0);
  CHECK(ball.vertices.size() == 3);
  CHECK(ball.triangles.size() == 1);
}

TEST_CASE("farey ball counts match the mediant-tree oracle") {
  for (int r : {1, 2, 3, 4}) {
    auto ball = farey::farey_ball(farey::base_triangle(), r);
    auto mc = mediant_bfs(r);
    CHECK(static_cast<long long>(ball.vertices.size()) == mc.vertices);
    CHECK(static_cast<long long>(ball.triangles.size()) == mc.triangles);
  }
}

TEST_CASE("farey balls are nested flag complexes with edges in <= 2 triangles") {
  auto b2 = farey::farey_ball(farey::base_triangle(), 2);
  auto b3 = farey::farey_ball(farey::base_triangle(), 3);
  CHECK(b2.complex.is_flag());
  std::set<std::pair<long long, long long>> v3;
  for (const auto& s : b3.vertices) v3.insert({s.p, s.q});
  for (const auto& s : b2.vertices) CHECK(v3.count({s.p, s.q}) == 1);
  // every edge of the ball lies in at most 2 triangles
  for (const auto& e : b2.complex.simplices(1)) {
    int count = 0;
    for (const auto& t : b2.triangles) {
      int hits = 0;
      for (int v : t) hits += (v == e[0] || v == e[1]);
      if (hits == 2) ++count;
    }
    CHECK(count <= 2);
  }
}

TEST_CASE("nearly farey neighbors") {
  // 1/0 and 1/2 differ by the square of a twist, not a single twist
  CHECK_FALSE(farey::are_nearly_farey_neighbors(Slope(1, 0), Slope(1, 2),
                                                FareySurfaceTag::TorusLike));
  // 1/0 and T_{0/1}(1/0): on the torus side a single twist gives 1/1, which is
  // already a neighbor, so walk one step further: 2/1 vs 0/1 under gamma=1/1
  Slope g(1, 1);
  Slope b(0, 1);
  Slope a = farey::apply(farey::twist_matrix(g, FareySurfaceTag::TorusLike, 1), b);
  if (!farey::are_farey_neighbors(a, b, FareySurfaceTag::TorusLike))
    CHECK(farey::are_nearly_farey_neighbors(a, b, FareySurfaceTag::TorusLike));
  // sphere-like: twists move by two Farey steps, so twisting a neighbor of
  // gamma produces a nearly-Farey pair
  Slope bs(1, 0);
  Slope as = farey::apply(farey::twist_matrix(Slope(0, 1), FareySurfaceTag::SphereLike, 1), bs);
  CHECK_FALSE(farey::are_farey_neighbors(as, bs, FareySurfaceTag::SphereLike));
  CHECK(farey::are_nearly_farey_neighbors(as, bs, FareySurfaceTag::SphereLike));
}

TEST_CASE("nearly farey is symmetric on random twisted pairs") {
  int produced = 0;
  for (int t = 0; t < 1000 && produced < 200; ++t) {
    auto tag = (t % 2) ? FareySurfaceTag::TorusLike : FareySurfaceTag::SphereLike;
    Slope gamma = random_slope();
    // pick b a Farey neighbor of gamma via the extended-gcd particular solution
    Slope b = random_slope();
    if (!farey::are_farey_neighbors(gamma, b, tag)) continue;
    Slope a = farey::apply(farey::twist_matrix(gamma, tag, (t % 3) ? 1 : -1), b);
    if (a == b) continue;
    ++produced;
    CHECK(farey::are_nearly_farey_neighbors(a, b, tag) ==
          farey::are_nearly_farey_neighbors(b, a, tag));
  }
  CHECK(produced > 0);
}

TEST_CASE("brute force rigidity at radius 1") {
  auto rep = farey::brute_force_rigidity(1, FareySurfaceTag::TorusLike);
  auto mc = mediant_bfs(1);
  CHECK(rep.maps_checked == 6 * mc.triangles);
  CHECK(rep.all_extended);
}

TEST_CASE("brute force rigidity at radius 3 for both tags") {
  for (auto tag : {FareySurfaceTag::TorusLike, FareySurfaceTag::SphereLike}) {
    auto rep = farey::brute_force_rigidity(3, tag);
    CHECK(rep.all_extended);
    CHECK(rep.maps_checked == 6 * mediant_bfs(3).triangles);
  }
}
