#include "rigid/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rigid/util.hpp"

namespace rigid::simp {

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Quotient minimizing |a - q*b|.
Int rounded_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * abs_int(r) > abs_int(b)) q += ((a < 0) == (b < 0)) ? Int(1) : Int(-1);
  return q;
}

// Sparse integer matrix with row-major storage and a per-column row index.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::map<int, Int>> row;
  std::vector<std::set<int>> colidx;

  SparseMat(int r, int c) : rows(r), cols(c), row(r), colidx(c) {}

  void set(int r, int c, Int v) {
    if (v == 0) return;
    row[r][c] = std::move(v);
    colidx[c].insert(r);
  }

  void put(int r, int c, const Int& v) {
    if (v == 0) {
      row[r].erase(c);
      colidx[c].erase(r);
    } else {
      row[r][c] = v;
      colidx[c].insert(r);
    }
  }

  // row[dst] -= q * row[src]
  void add_row(int dst, int src, const Int& q) {
    for (const auto& [c, v] : row[src]) {
      Int nv = (row[dst].count(c) ? row[dst][c] : Int(0)) - q * v;
      put(dst, c, nv);
    }
  }

  // col[dst] -= q * col[src]
  void add_col(int dst, int src, const Int& q) {
    std::vector<int> rs(colidx[src].begin(), colidx[src].end());
    for (int r : rs) {
      Int nv = (row[r].count(dst) ? row[r][dst] : Int(0)) - q * row[r][src];
      put(r, dst, nv);
    }
  }
};

}  // namespace

std::vector<Int> smith_invariants(
    int rows, int cols,
    const std::vector<std::vector<std::pair<int, Int>>>& columns) {
  SparseMat m(rows, cols);
  for (int c = 0; c < static_cast<int>(columns.size()); ++c)
    for (const auto& [r, v] : columns[c]) m.set(r, c, v);

  std::vector<char> row_done(rows, 0), col_done(cols, 0);
  std::vector<Int> diag;

  while (true) {
    // pivot selection: unit entries with minimal Markowitz cost first,
    // otherwise the entry of smallest magnitude
    int pr = -1, pc = -1;
    long long best_cost = -1;
    Int best_abs = 0;
    bool have_unit = false;
    for (int r = 0; r < rows; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : m.row[r]) {
        Int a = abs_int(v);
        if (a == 1) {
          long long cost = static_cast<long long>(m.row[r].size() - 1) *
                           static_cast<long long>(m.colidx[c].size() - 1);
          if (!have_unit || cost < best_cost) {
            have_unit = true;
            best_cost = cost;
            pr = r;
            pc = c;
          }
        } else if (!have_unit) {
          if (best_abs == 0 || a < best_abs) {
            best_abs = a;
            pr = r;
            pc = c;
          }
        }
      }
    }
    if (pr < 0) break;

    // reduce until the pivot is alone in its row and column
    while (true) {
      Int v = m.row[pr][pc];
      bool moved = false;
      std::vector<int> rs(m.colidx[pc].begin(), m.colidx[pc].end());
      for (int r2 : rs) {
        if (r2 == pr) continue;
        Int q = rounded_div(m.row[r2][pc], v);
        if (q != 0) m.add_row(r2, pr, q);
        if (m.row[r2].count(pc)) {  // nonzero remainder, strictly smaller
          pr = r2;
          moved = true;
          break;
        }
      }
      if (moved) continue;
      std::vector<int> cs;
      for (const auto& [c2, _] : m.row[pr])
        if (c2 != pc) cs.push_back(c2);
      for (int c2 : cs) {
        Int q = rounded_div(m.row[pr][c2], v);
        if (q != 0) m.add_col(c2, pc, q);
        if (m.row[pr].count(c2)) {
          pc = c2;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }

    diag.push_back(abs_int(m.row[pr][pc]));
    m.put(pr, pc, Int(0));
    row_done[pr] = 1;
    col_done[pc] = 1;
  }

  // normalize to invariant factors: d_i | d_{i+1}
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        Int g = boost::multiprecision::gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
        changed = true;
      }
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

bool HomologyProfile::is_sphere(int d) const {
  if (d < 0 || d >= static_cast<int>(groups.size())) return false;
  for (int k = 0; k < static_cast<int>(groups.size()); ++k) {
    if (!groups[k].torsion.empty()) return false;
    if (groups[k].betti != (k == d ? 1 : 0)) return false;
  }
  return true;
}

std::string HomologyProfile::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    os << "H~" << k << " = Z^" << groups[k].betti;
    for (const auto& t : groups[k].torsion) os << " + Z/" << t;
    if (k + 1 < groups.size()) os << ", ";
  }
  return os.str();
}

HomologyProfile homology(const SimplicialComplex& complex) {
  HomologyProfile profile;
  const int dim = complex.dimension();
  if (dim < 0) return profile;

  std::vector<std::vector<std::vector<int>>> faces(dim + 1);
  std::vector<std::map<std::vector<int>, int>> index(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    faces[d] = complex.simplices(d);
    for (int i = 0; i < static_cast<int>(faces[d].size()); ++i)
      index[d][faces[d][i]] = i;
  }

  // boundary ranks and torsion via SNF; d = 0 is the augmentation map
  std::vector<std::vector<Int>> inv(dim + 2);
  {
    std::vector<std::vector<std::pair<int, Int>>> columns(faces[0].size());
    for (std::size_t c = 0; c < faces[0].size(); ++c)
      columns[c].emplace_back(0, Int(1));
    inv[0] = smith_invariants(1, static_cast<int>(faces[0].size()), columns);
  }
  for (int d = 1; d <= dim; ++d) {
    std::vector<std::vector<std::pair<int, Int>>> columns(faces[d].size());
    for (std::size_t c = 0; c < faces[d].size(); ++c) {
      const auto& s = faces[d][c];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        int r = index[d - 1].at(f);
        columns[c].emplace_back(r, (drop % 2 == 0) ? Int(1) : Int(-1));
      }
    }
    inv[d] = smith_invariants(static_cast<int>(faces[d - 1].size()),
                              static_cast<int>(faces[d].size()), columns);
  }

  profile.groups.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    long long rank_d = static_cast<long long>(inv[d].size());
    long long rank_d1 =
        d + 1 <= dim ? static_cast<long long>(inv[d + 1].size()) : 0;
    profile.groups[d].betti =
        static_cast<long long>(faces[d].size()) - rank_d - rank_d1;
    if (d + 1 <= dim)
      for (const auto& t : inv[d + 1])
        if (t > 1) profile.groups[d].torsion.push_back(t);
  }
  return profile;
}

}  // namespace rigid::simp
