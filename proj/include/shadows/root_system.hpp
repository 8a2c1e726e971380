#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shadows/numeric.hpp"

namespace shadows {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A positive root, stored both over the simple-root basis and (its coroot)
/// over the simple-coroot basis. The pairing of a root with a point in coroot
/// coordinates is root^T * cartan * point.
struct PositiveRoot {
  IntVector root;    // coefficients over simple roots
  IntVector coroot;  // coefficients of the coroot over simple coroots
};

/// Wall H_{gamma,k} = { v : <gamma, v> = k }, with gamma one of the positive
/// roots. The sign normalization H_{-gamma,-k} = H_{gamma,k} is built in.
struct Hyperplane {
  int root_index = 0;
  Int level = 0;

  bool operator==(const Hyperplane& o) const {
    return root_index == o.root_index && level == o.level;
  }
  bool operator!=(const Hyperplane& o) const { return !(*this == o); }
  bool operator<(const Hyperplane& o) const {
    if (root_index != o.root_index) return root_index < o.root_index;
    return level < o.level;
  }
};

/// Irreducible crystallographic root system together with the derived data
/// every other component consumes: positive roots closed under the simple
/// reflections, the highest root, the rational vertices and barycenter of the
/// base alcove, and the coroot-coordinate matrices of the simple reflections.
///
/// Conventions. cartan(i, j) = <alpha_i, alpha_j^vee>. Points live in
/// simple-coroot coordinates and roots in simple-root coordinates; no
/// Euclidean embedding is used. Positive roots are ordered with the simple
/// roots first (in index order), then by height with lexicographic
/// tie-breaking. At rank 2 the families B and C name the same system, with
/// cartan = [[2,-2],[-1,2]] (the coroot of alpha_1 is the short coroot).
class RootSystem {
 public:
  Family family;
  int rank = 0;
  IntMatrix cartan;
  std::vector<PositiveRoot> positive_roots;
  int highest_root_index = -1;

  RatMatrix cartan_inverse;
  std::vector<RatVector> alcove_vertices;  // origin first, then coweights/marks
  RatVector barycenter;
  std::vector<IntMatrix> simple_reflections;  // coroot action of s_1..s_n

  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }

  /// Index of the positive root with the given root coordinates, if any.
  std::optional<int> root_index_of(const IntVector& root_coords) const;
  /// Finds (index, sign) with coroot_coords = sign * positive coroot.
  std::optional<std::pair<int, int>> signed_coroot_index(const IntVector& coroot_coords) const;

  std::string name() const;

 private:
  friend RootSystem build_root_system(Family, int);
  std::map<std::vector<Int>, int> index_by_root_;
  std::map<std::vector<Int>, int> index_by_coroot_;
};

/// Builds the root system of the given irreducible type. Supported types:
/// A1..A4, B2..B4, C2..C4, D4, F4, G2. Anything else is rejected.
RootSystem build_root_system(Family family, int rank);

/// Accepts names like "A2", "C2", "G2".
RootSystem build_root_system(const std::string& name);

/// <gamma, v> for a root given by simple-root coefficients and a point in
/// simple-coroot coordinates; exact and bilinear.
Int pairing(const RootSystem& rs, const IntVector& root_coords, const IntVector& point);
Rational pairing(const RootSystem& rs, const IntVector& root_coords, const RatVector& point);

Int pairing(const RootSystem& rs, int root_index, const IntVector& point);
Rational pairing(const RootSystem& rs, int root_index, const RatVector& point);

/// Affine reflection across H: v - (<gamma,v> - k) * gamma^vee.
IntVector affine_reflect(const RootSystem& rs, const Hyperplane& h, const IntVector& point);
RatVector affine_reflect(const RootSystem& rs, const Hyperplane& h, const RatVector& point);

}  // namespace shadows
