#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "rigid/simplicial.hpp"

namespace rigid::simp {

using Int = boost::multiprecision::cpp_int;

// Reduced integral homology, one entry per dimension 0..dim.
// Torsion coefficients are > 1 and each divides the next.
struct HomologyProfile {
  struct Group {
    long long betti = 0;
    std::vector<Int> torsion;
    bool operator==(const Group&) const = default;
  };
  std::vector<Group> groups;

  bool trivial() const {
    for (const auto& g : groups)
      if (g.betti != 0 || !g.torsion.empty()) return false;
    return true;
  }
  // Reduced homology of a d-sphere: one Z in dimension d, nothing else.
  bool is_sphere(int d) const;
  bool operator==(const HomologyProfile&) const = default;
  std::string to_string() const;
};

// Invariant factors (Smith normal form diagonal, each dividing the next)
// of a sparse integer matrix given by columns of (row, value) entries.
std::vector<Int> smith_invariants(int rows, int cols,
                                  const std::vector<std::vector<std::pair<int, Int>>>& columns);

// Reduced integral homology via exact integer Smith normal form of the
// boundary matrices (augmented chain complex).
HomologyProfile homology(const SimplicialComplex& complex);

}  // namespace rigid::simp
