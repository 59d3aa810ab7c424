#include "rigid/farey.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

#include "rigid/util.hpp"

namespace rigid::farey {

Slope::Slope(long long pp, long long qq) {
  require(pp != 0 || qq != 0, "slope 0/0");
  if (qq < 0) {
    pp = -pp;
    qq = -qq;
  }
  long long g = std::gcd(pp < 0 ? -pp : pp, qq);
  if (g > 1) {
    pp /= g;
    qq /= g;
  }
  if (qq == 0) pp = 1;  // infinity
  p = pp;
  q = qq;
}

std::string Slope::str() const {
  return std::to_string(p) + "/" + std::to_string(q);
}

long long wedge(const Slope& a, const Slope& b) { return a.p * b.q - b.p * a.q; }

long long slope_intersection(const Slope& a, const Slope& b,
                             FareySurfaceTag tag) {
  long long w = wedge(a, b);
  if (w < 0) w = -w;
  return minimal_intersection(tag) * w;
}

bool are_farey_neighbors(const Slope& a, const Slope& b, FareySurfaceTag tag) {
  return slope_intersection(a, b, tag) == minimal_intersection(tag);
}

MoebiusClass::MoebiusClass(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
  long long dt = det();
  require(dt == 1 || dt == -1, "matrix determinant not ±1");
  for (long long v : {a, b, c, d}) {
    if (v > 0) break;
    if (v < 0) {
      a = -a;
      b = -b;
      c = -c;
      d = -d;
      break;
    }
  }
}

Slope apply(const MoebiusClass& m, const Slope& s) {
  return Slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q);
}

MoebiusClass compose(const MoebiusClass& m, const MoebiusClass& n) {
  return MoebiusClass(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                      m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

MoebiusClass twist_matrix(const Slope& gamma, FareySurfaceTag tag, int sign) {
  long long s = static_cast<long long>(minimal_intersection(tag)) * sign;
  long long P = gamma.p, Q = gamma.q;
  return MoebiusClass(1 + s * P * Q, -s * P * P, s * Q * Q, 1 - s * P * Q);
}

bool are_nearly_farey_neighbors(const Slope& a, const Slope& b,
                                FareySurfaceTag tag) {
  require(!(a == b), "nearly-Farey needs distinct slopes");
  if (are_farey_neighbors(a, b, tag)) return false;
  // common Farey neighbors gamma of a and b: gamma = x1 + t*a with
  // wedge(a,x1) = ±1 and wedge(b,gamma) = ±1
  long long pw = wedge(a, b);
  if (pw == 0) return false;  // same slope cannot happen; parallel never twists
  // particular x0 with wedge(a, x0) = 1: a.p * y - x * a.q = 1
  // solve a.p * y - a.q * x = 1 by extended gcd
  long long x0p = 0, x0q = 0;
  {
    // extended gcd of (a.p, a.q)
    long long r0 = a.p, r1 = a.q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long long qq = r0 / r1;
      std::tie(r0, r1) = std::make_tuple(r1, r0 - qq * r1);
      std::tie(s0, s1) = std::make_tuple(s1, s0 - qq * s1);
      std::tie(t0, t1) = std::make_tuple(t1, t0 - qq * t1);
    }
    // s0*a.p + t0*a.q = r0 = ±gcd = ±1 (a primitive)
    require(r0 == 1 || r0 == -1, "slope not primitive");
    // wedge(a, x) = a.p*x.q - x.p*a.q; want = 1: x.q = s0/r0, x.p = -t0/r0
    x0p = -t0 / r0;
    x0q = s0 / r0;
  }
  std::set<std::pair<long long, long long>> seen;
  for (int s1 : {1, -1}) {
    long long xp = s1 * x0p, xq = s1 * x0q;  // wedge(a, x) = s1
    for (int s2 : {1, -1}) {
      // wedge(b, x + t a) = wedge(b,x) + t*wedge(b,a) = s2
      long long wbx = b.p * xq - xp * b.q;
      long long wba = -pw;
      if ((s2 - wbx) % wba != 0) continue;
      long long t = (s2 - wbx) / wba;
      long long gp = xp + t * a.p, gq = xq + t * a.q;
      if (gp == 0 && gq == 0) continue;
      Slope gamma(gp, gq);
      if (!seen.insert({gamma.p, gamma.q}).second) continue;
      if (!are_farey_neighbors(gamma, a, tag) ||
          !are_farey_neighbors(gamma, b, tag))
        continue;
      for (int sign : {1, -1}) {
        Slope tb = apply(twist_matrix(gamma, tag, sign), b);
        if (tb == a) return true;
      }
    }
  }
  return false;
}

std::vector<MoebiusClass> base_triangle_pointwise_stabilizer() {
  // fixing 0/1 and 1/0 forces a diagonal matrix; check the four sign choices
  std::vector<MoebiusClass> out;
  auto base = base_triangle();
  for (long long a : {1LL, -1LL})
    for (long long d : {1LL, -1LL}) {
      MoebiusClass m(a, 0, 0, d);
      bool fixes = true;
      for (const auto& s : base)
        if (!(apply(m, s) == s)) fixes = false;
      if (fixes && std::find(out.begin(), out.end(), m) == out.end())
        out.push_back(m);
    }
  return out;
}

std::vector<MoebiusClass> extend_triangle(const std::vector<Slope>& image) {
  require(image.size() == 3, "image must be an ordered triangle");
  const Slope &s1 = image[0], &s2 = image[1], &s3 = image[2];
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      long long w = wedge(image[i], image[j]);
      require(w == 1 || w == -1, "image is not a Farey triangle");
    }
  // columns: m e1 = λ (p3,q3), m e2 = μ (p1,q1), with λ(p3,q3)+μ(p1,q1)=ν(p2,q2)
  long long den = s3.p * s1.q - s1.p * s3.q;  // wedge(s3, s1)
  long long lam = s2.p * s1.q - s1.p * s2.q;  // wedge(s2, s1)
  long long mu = s3.p * s2.q - s2.p * s3.q;   // wedge(s3, s2)
  require(den == 1 || den == -1, "image is not a Farey triangle");
  // Cramer with ν = den = ±1, so λ, μ are already integral (±1 in fact)
  long long A = lam * s3.p, B = mu * s1.p, C = lam * s3.q, D = mu * s1.q;
  long long det = A * D - B * C;
  require(det != 0, "degenerate triangle");
  // scale down to a primitive matrix
  long long gg = std::gcd(std::gcd(A < 0 ? -A : A, B < 0 ? -B : B),
                          std::gcd(C < 0 ? -C : C, D < 0 ? -D : D));
  if (gg > 1) {
    A /= gg;
    B /= gg;
    C /= gg;
    D /= gg;
  }
  require(A * D - B * C == 1 || A * D - B * C == -1,
          "triangle does not extend to a unimodular class");
  MoebiusClass m(A, B, C, D);
  auto base = base_triangle();
  for (int i = 0; i < 3; ++i)
    require(apply(m, base[i]) == image[i], "extension check failed");
  return {m};
}

FareyBall farey_ball(const std::vector<Slope>& base, int radius) {
  require(base.size() == 3, "base must be a triangle");
  require(radius >= 0, "radius must be non-negative");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      long long w = wedge(base[i], base[j]);
      require(w == 1 || w == -1, "base is not a Farey triangle");
    }

  FareyBall ball;
  std::set<std::pair<long long, long long>> vseen;
  auto add_vertex = [&](const Slope& s) {
    if (vseen.insert({s.p, s.q}).second) ball.vertices.push_back(s);
  };

  using Tri = std::array<Slope, 3>;
  auto norm_tri = [](Tri t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  std::set<std::array<std::pair<long long, long long>, 3>> tseen;
  auto key = [](const Tri& t) {
    return std::array<std::pair<long long, long long>, 3>{
        std::make_pair(t[0].p, t[0].q), std::make_pair(t[1].p, t[1].q),
        std::make_pair(t[2].p, t[2].q)};
  };

  Tri start = norm_tri({base[0], base[1], base[2]});
  std::deque<std::pair<Tri, int>> queue{{start, 0}};
  tseen.insert(key(start));
  for (const auto& s : start) add_vertex(s);

  while (!queue.empty()) {
    auto [tri, depth] = queue.front();
    queue.pop_front();
    if (depth == radius) continue;
    // flip across each edge: the two common neighbours of (u,v) are u±v
    for (int drop = 0; drop < 3; ++drop) {
      const Slope& w = tri[drop];
      const Slope& u = tri[(drop + 1) % 3];
      const Slope& v = tri[(drop + 2) % 3];
      Slope plus(u.p + v.p, u.q + v.q);
      Slope minus(u.p - v.p, u.q - v.q);
      Slope apex = (plus == w) ? minus : plus;
      Tri next = norm_tri({u, v, apex});
      if (tseen.insert(key(next)).second) {
        add_vertex(apex);
        queue.emplace_back(next, depth + 1);
      }
    }
  }

  std::vector<std::string> labels;
  for (const auto& s : ball.vertices) labels.push_back(s.str());
  const auto& verts = ball.vertices;
  ball.complex = simp::flag_complex(labels, [&](int i, int j) {
    long long w = wedge(verts[i], verts[j]);
    return w == 1 || w == -1;
  });
  for (const auto& t : ball.complex.simplices(2))
    ball.triangles.push_back({t[0], t[1], t[2]});
  return ball;
}

RigidityReport brute_force_rigidity(int radius, FareySurfaceTag tag) {
  require(radius >= 1, "radius must be at least 1");
  FareyBall ball = farey_ball(base_triangle(), radius);
  auto stab = base_triangle_pointwise_stabilizer();

  RigidityReport rep;
  rep.radius = radius;
  rep.vertices = static_cast<long long>(ball.vertices.size());
  rep.triangles = static_cast<long long>(ball.triangles.size());
  rep.all_extended = true;

  // A locally injective simplicial map of a triangle is an injective map onto
  // an ordered triangle (the triangle is its own star). Adjacency does not
  // depend on the tag (it only scales intersection numbers), so the same
  // enumeration certifies both cases.
  (void)tag;
  for (const auto& t : ball.triangles) {
    std::array<int, 3> ids = {t[0], t[1], t[2]};
    std::sort(ids.begin(), ids.end());
    do {
      std::vector<Slope> image = {ball.vertices[ids[0]], ball.vertices[ids[1]],
                                  ball.vertices[ids[2]]};
      ++rep.maps_checked;
      std::vector<MoebiusClass> ext;
      try {
        ext = extend_triangle(image);
      } catch (const Error&) {
        rep.all_extended = false;
        continue;
      }
      // Extensions of one ordered image differ by the pointwise stabilizer;
      // uniqueness modulo that stabilizer means exactly one solution class.
      std::set<std::array<long long, 4>> classes;
      for (const auto& m : ext) classes.insert({m.a, m.b, m.c, m.d});
      if (classes.size() != 1) rep.all_extended = false;
    } while (std::next_permutation(ids.begin(), ids.end()));
  }
  if (stab.size() != 1) rep.all_extended = rep.all_extended && false;
  return rep;
}

}  // namespace rigid::farey
