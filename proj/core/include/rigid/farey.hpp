#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigid/simplicial.hpp"

namespace rigid::farey {

// Extended rational p/q in canonical form: gcd(|p|,q) = 1 and q > 0, except
// 1/0 for the slope at infinity.
struct Slope {
  long long p = 0;
  long long q = 1;

  Slope() = default;
  Slope(long long pp, long long qq);  // canonicalizes; rejects (0,0)

  bool operator==(const Slope&) const = default;
  bool operator<(const Slope& o) const {
    return p < o.p || (p == o.p && q < o.q);
  }
  std::string str() const;
};

enum class FareySurfaceTag { TorusLike, SphereLike };

inline int minimal_intersection(FareySurfaceTag tag) {
  return tag == FareySurfaceTag::TorusLike ? 1 : 2;
}

long long wedge(const Slope& a, const Slope& b);  // p_a q_b - p_b q_a

// scale * |wedge|; adjacency in the Farey complex iff this equals the tag's
// minimal value.
long long slope_intersection(const Slope& a, const Slope& b, FareySurfaceTag tag);

bool are_farey_neighbors(const Slope& a, const Slope& b, FareySurfaceTag tag);

// Not neighbors, but a = T_gamma^{±1}(b) for a common Farey neighbor gamma.
bool are_nearly_farey_neighbors(const Slope& a, const Slope& b, FareySurfaceTag tag);

// 2x2 integer matrix of determinant ±1 modulo ±I. Canonical representative
// has its first nonzero entry (row-major) positive.
struct MoebiusClass {
  long long a = 1, b = 0, c = 0, d = 1;

  MoebiusClass() = default;
  MoebiusClass(long long a_, long long b_, long long c_, long long d_);

  long long det() const { return a * d - b * c; }
  bool operator==(const MoebiusClass&) const = default;
};

Slope apply(const MoebiusClass& m, const Slope& s);
MoebiusClass compose(const MoebiusClass& m1, const MoebiusClass& m2);

// Dehn twist along gamma as a Moebius class: v -> v + sign*scale*(v^gamma)gamma,
// where scale is the tag's minimal intersection value.
MoebiusClass twist_matrix(const Slope& gamma, FareySurfaceTag tag, int sign);

inline std::vector<Slope> base_triangle() {
  return {Slope(0, 1), Slope(1, 1), Slope(1, 0)};
}

// All classes fixing every base-triangle vertex (computed, not assumed).
std::vector<MoebiusClass> base_triangle_pointwise_stabilizer();

// All classes taking the ordered base triangle to the ordered image triangle.
// Exactly one for a genuine Farey triangle; rejects non-triangles.
std::vector<MoebiusClass> extend_triangle(const std::vector<Slope>& image);

// Finite window on the Farey complex: full subcomplex on the vertices of all
// tessellation triangles within `radius` flips of the base triangle,
// discovered in deterministic BFS order.
struct FareyBall {
  std::vector<Slope> vertices;            // BFS discovery order
  simp::SimplicialComplex complex;        // flag complex on the vertices
  std::vector<std::array<int, 3>> triangles;  // 2-simplices, sorted ids
};

FareyBall farey_ball(const std::vector<Slope>& base, int radius);

struct RigidityReport {
  int radius = 0;
  long long vertices = 0;
  long long triangles = 0;
  long long maps_checked = 0;
  bool all_extended = false;
};

// Enumerates every locally injective simplicial map of the base triangle into
// the radius ball and verifies a unique Moebius extension (modulo the
// pointwise stabilizer of the base triangle).
RigidityReport brute_force_rigidity(int radius, FareySurfaceTag tag);

}  // namespace rigid::farey
