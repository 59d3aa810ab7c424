#include "rigid/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "rigid/util.hpp"

namespace rigid::simp {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels,
                                     std::vector<std::vector<int>> facets,
                                     bool flag)
    : labels_(std::move(labels)), flag_(flag) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      require(v >= 0 && v < vertex_count(), "facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // drop non-maximal entries
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < facets.size() && maximal; ++j)
      if (i != j && facets[i].size() <= facets[j].size() &&
          subset_of(facets[i], facets[j]) && facets[i] != facets[j])
        maximal = false;
    if (maximal) facets_.push_back(facets[i]);
  }
  std::vector<char> seen(labels_.size(), 0);
  for (const auto& f : facets_)
    for (int v : f) seen[v] = 1;
  for (std::size_t v = 0; v < seen.size(); ++v)
    require(seen[v] != 0, "vertex " + std::to_string(v) + " lies in no facet");
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max<int>(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  const std::size_t k = facets_.front().size();
  for (const auto& f : facets_)
    if (f.size() != k) return false;
  return true;
}

std::vector<std::vector<int>> SimplicialComplex::simplices(int d) const {
  std::set<std::vector<int>> out;
  if (d < 0) return {};
  std::vector<int> pick;
  for (const auto& f : facets_) {
    if (static_cast<int>(f.size()) < d + 1) continue;
    // all (d+1)-subsets of f
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    while (true) {
      pick.clear();
      for (int i : idx) pick.push_back(f[i]);
      out.insert(pick);
      int pos = d;
      while (pos >= 0 && idx[pos] == static_cast<int>(f.size()) - (d + 1 - pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i <= d; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<long long> SimplicialComplex::face_vector() const {
  std::vector<long long> fv;
  for (int d = 0; d <= dimension(); ++d)
    fv.push_back(static_cast<long long>(simplices(d).size()));
  return fv;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (long long c : face_vector()) {
    chi += sign * c;
    sign = -sign;
  }
  return chi;
}

bool SimplicialComplex::has_simplex(const std::vector<int>& s) const {
  for (const auto& f : facets_)
    if (subset_of(s, f)) return true;
  return false;
}

std::vector<int> SimplicialComplex::neighbors(int v) const {
  require(v >= 0 && v < vertex_count(), "vertex not in complex");
  std::set<int> nb;
  for (const auto& f : facets_)
    if (std::binary_search(f.begin(), f.end(), v))
      for (int u : f)
        if (u != v) nb.insert(u);
  return {nb.begin(), nb.end()};
}

std::vector<int> SimplicialComplex::closed_star_vertices(int v) const {
  auto nb = neighbors(v);
  nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
  return nb;
}

SimplicialComplex SimplicialComplex::link(int v) const {
  require(v >= 0 && v < vertex_count(), "vertex not in complex");
  std::vector<std::vector<int>> lk;
  std::set<int> verts;
  for (const auto& f : facets_) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    std::vector<int> g;
    for (int u : f)
      if (u != v) g.push_back(u);
    if (g.empty()) continue;
    for (int u : g) verts.insert(u);
    lk.push_back(std::move(g));
  }
  std::vector<int> vlist(verts.begin(), verts.end());
  std::map<int, int> dense;
  std::vector<std::string> lab;
  for (int u : vlist) {
    dense[u] = static_cast<int>(lab.size());
    lab.push_back(labels_[u]);
  }
  for (auto& f : lk)
    for (int& u : f) u = dense[u];
  return SimplicialComplex(std::move(lab), std::move(lk), false);
}

SimplicialComplex SimplicialComplex::full_subcomplex(
    const std::vector<int>& vertices) const {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::map<int, int> dense;
  std::vector<std::string> lab;
  for (int v : vs) {
    require(v >= 0 && v < vertex_count(), "vertex not in complex");
    dense[v] = static_cast<int>(lab.size());
    lab.push_back(labels_[v]);
  }
  std::vector<std::vector<int>> sub;
  for (const auto& f : facets_) {
    std::vector<int> g;
    for (int u : f)
      if (dense.count(u)) g.push_back(dense[u]);
    if (!g.empty()) sub.push_back(std::move(g));
  }
  // make sure every selected vertex survives even if isolated in the trace
  for (int v : vs) sub.push_back({dense[v]});
  return SimplicialComplex(std::move(lab), std::move(sub), false);
}

bool SimplicialComplex::is_pseudomanifold() const {
  if (!is_pure()) return false;
  const int d = dimension();
  if (d < 1) return false;
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& f : facets_) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> r;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) r.push_back(f[i]);
      ++ridge_count[r];
    }
  }
  for (const auto& [r, c] : ridge_count)
    if (c != 2) return false;
  return true;
}

std::string SimplicialComplex::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = labels_;
  j["facets"] = facets_;  // already lex-sorted
  return j.dump();
}

SimplicialComplex SimplicialComplex::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::vector<int>> facets =
      j.at("facets").get<std::vector<std::vector<int>>>();
  return SimplicialComplex(std::move(labels), std::move(facets));
}

namespace {

// Pivoting Bron-Kerbosch over the adjacency matrix. Vertex order is fixed by
// descending degree (ties by id) so the facet list is deterministic.
void bron_kerbosch(const std::vector<std::vector<char>>& adj,
                   std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  // pivot: vertex of P∪X with most neighbours in P
  int pivot = -1, best = -1;
  for (const auto* S : {&P, &X})
    for (int u : *S) {
      int cnt = 0;
      for (int w : P) cnt += adj[u][w];
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  std::vector<int> cands;
  for (int u : P)
    if (pivot < 0 || !adj[pivot][u]) cands.push_back(u);
  for (int u : cands) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (adj[u][w]) P2.push_back(w);
    for (int w : X)
      if (adj[u][w]) X2.push_back(w);
    R.push_back(u);
    bron_kerbosch(adj, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), u));
    X.insert(std::lower_bound(X.begin(), X.end(), u), u);
  }
}

}  // namespace

SimplicialComplex flag_complex(const std::vector<std::string>& labels,
                               const std::function<bool(int, int)>& adjacent) {
  const int n = static_cast<int>(labels.size());
  // the diagonal is never queried; cliques are over the symmetrized relation
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool e = adjacent(i, j);
      require(adjacent(j, i) == e, "adjacency predicate not symmetric");
      adj[i][j] = adj[j][i] = e ? 1 : 0;
    }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg[i] += adj[i][j];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });

  std::vector<std::vector<int>> cliques;
  std::vector<int> R;
  std::vector<int> X;
  bron_kerbosch(adj, R, order, X, cliques);
  return SimplicialComplex(labels, std::move(cliques), true);
}

bool VertexMap::is_simplicial() const {
  require(domain && codomain, "vertex map missing complexes");
  require(static_cast<int>(image.size()) == domain->vertex_count(),
          "vertex map not total");
  for (int v : image)
    require(v >= 0 && v < codomain->vertex_count(), "image vertex out of range");
  for (const auto& f : domain->facets()) {
    std::vector<int> img;
    for (int v : f) img.push_back(image[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!codomain->has_simplex(img)) return false;
  }
  return true;
}

bool is_locally_injective(const VertexMap& map) {
  require(map.is_simplicial(), "map is not simplicial");
  const auto& dom = *map.domain;
  for (int v = 0; v < dom.vertex_count(); ++v) {
    auto star = dom.closed_star_vertices(v);
    std::set<int> seen;
    for (int u : star)
      if (!seen.insert(map.image[u]).second) return false;
  }
  return true;
}

SimplicialComplex cone(const SimplicialComplex& base, const std::string& apex) {
  std::vector<std::string> labels = base.labels();
  const int a = static_cast<int>(labels.size());
  labels.push_back(apex);
  std::vector<std::vector<int>> facets;
  if (base.facets().empty()) {
    facets.push_back({a});
  } else {
    for (auto f : base.facets()) {
      f.push_back(a);
      facets.push_back(std::move(f));
    }
  }
  return SimplicialComplex(std::move(labels), std::move(facets), false);
}

}  // namespace rigid::simp
