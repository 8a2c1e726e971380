#include <doctest.h>

#include "oracle_helpers.hpp"
#include "shadows/root_system.hpp"

using namespace shadows;

namespace {

IntVector vec(std::vector<Int> entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v[static_cast<Eigen::Index>(i)] = entries[i];
  return v;
}

}  // namespace

TEST_CASE("positive root counts in rank 2") {
  CHECK(build_root_system("A2").num_positive_roots() == 3);
  CHECK(build_root_system("C2").num_positive_roots() == 4);
  CHECK(build_root_system("B2").num_positive_roots() == 4);
  CHECK(build_root_system("G2").num_positive_roots() == 6);
}

TEST_CASE("positive roots match the classical Euclidean tables") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "C2", "B3", "C3", "B4", "C4", "D4",
                           "F4", "G2"}) {
    RootSystem rs = build_root_system(name);
    auto expected = oracle::classical_positive_roots(rs.family, rs.rank);
    CHECK_MESSAGE(static_cast<std::size_t>(rs.num_positive_roots()) == expected.size(), name);
    for (const auto& pr : rs.positive_roots) {
      std::vector<Int> key(pr.root.data(), pr.root.data() + pr.root.size());
      CHECK_MESSAGE(expected.count(key) == 1, name);
    }
  }
}

TEST_CASE("type invariants") {
  for (const char* name : {"A2", "C2", "G2", "A3"}) {
    RootSystem rs = build_root_system(name);
    INFO(name);
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (int j = 0; j < rs.rank; ++j)
        if (i != j) CHECK(rs.cartan(i, j) <= 0);
    }
    // Simple roots occupy the first n slots, in index order.
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.positive_roots[i].root.sum() == 1);
      CHECK(rs.positive_roots[i].root[i] == 1);
    }
    // pairing(gamma, gamma^vee) = 2 for every listed pair.
    for (const auto& pr : rs.positive_roots)
      CHECK(pairing(rs, pr.root, pr.coroot) == 2);
    // No duplicates.
    std::set<std::vector<Int>> seen;
    for (const auto& pr : rs.positive_roots)
      CHECK(seen.insert({pr.root.data(), pr.root.data() + pr.root.size()}).second);
    // Additive closure against the classical tables: gamma + delta a root
    // implies it is listed.
    auto classical = oracle::classical_positive_roots(rs.family, rs.rank);
    for (const auto& a : rs.positive_roots)
      for (const auto& b : rs.positive_roots) {
        IntVector s = a.root + b.root;
        std::vector<Int> key(s.data(), s.data() + s.size());
        if (classical.count(key)) CHECK(rs.root_index_of(s).has_value());
      }
    // Highest root dominates every positive root.
    const IntVector& hi = rs.positive_roots[rs.highest_root_index].root;
    for (const auto& pr : rs.positive_roots) {
      IntVector diff = hi - pr.root;
      for (Eigen::Index i = 0; i < diff.size(); ++i) CHECK(diff[i] >= 0);
    }
  }
}

TEST_CASE("unsupported types are rejected") {
  CHECK_THROWS_AS(build_root_system("A9"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("E6"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("B1"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(""), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("Z2"), std::invalid_argument);
}

TEST_CASE("pairing examples in A2") {
  RootSystem rs = build_root_system("A2");
  IntVector alpha = vec({1, 0}), beta = vec({0, 1}), ab = vec({1, 1});
  CHECK(pairing(rs, alpha, vec({1, 0})) == 2);
  CHECK(pairing(rs, ab, vec({2, 2})) == 4);
  CHECK(pairing(rs, alpha, vec({0, 1})) == -1);
  // Bilinearity spot check.
  CHECK(pairing(rs, ab, vec({2, 2})) ==
        pairing(rs, alpha, vec({2, 2})) + pairing(rs, beta, vec({2, 2})));
  CHECK_THROWS_AS(pairing(rs, vec({1, 0, 0}), vec({1, 0})), std::invalid_argument);
}

TEST_CASE("affine reflections") {
  RootSystem rs = build_root_system("A2");
  int beta_idx = *rs.root_index_of(vec({0, 1}));
  Hyperplane h{beta_idx, -1};
  CHECK(affine_reflect(rs, h, vec({2, 0})) == vec({2, 1}));
  CHECK(affine_reflect(rs, h, vec({0, -2})) == vec({0, 1}));

  int alpha_idx = *rs.root_index_of(vec({1, 0}));
  Hyperplane h0{alpha_idx, 0};
  // A point fixed by s_{alpha,0} must satisfy <alpha, v> = 0.
  IntVector fixed = vec({1, 2});
  CHECK(pairing(rs, alpha_idx, fixed) == 0);
  CHECK(affine_reflect(rs, h0, fixed) == fixed);

  // Involution on a sample of lattice points for every wall of level <= 2.
  for (int g = 0; g < rs.num_positive_roots(); ++g)
    for (Int k = -2; k <= 2; ++k)
      for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= 2; ++b) {
          Hyperplane w{g, k};
          IntVector p = vec({a, b});
          CHECK(affine_reflect(rs, w, affine_reflect(rs, w, p)) == p);
        }
}

TEST_CASE("rational points reflect exactly") {
  RootSystem rs = build_root_system("C2");
  RatVector b = rs.barycenter;
  for (int g = 0; g < rs.num_positive_roots(); ++g) {
    Hyperplane h{g, 1};
    RatVector r = affine_reflect(rs, h, b);
    CHECK(pairing(rs, g, r) == Rational(2) - pairing(rs, g, b));
    RatVector rr = affine_reflect(rs, h, r);
    for (int i = 0; i < rs.rank; ++i) CHECK(rr[i] == b[i]);
  }
}

TEST_CASE("barycenter is interior to the base alcove") {
  for (const char* name : {"A1", "A2", "C2", "G2", "A3", "A4", "B3", "C4", "D4", "F4"}) {
    RootSystem rs = build_root_system(name);
    INFO(name);
    for (int g = 0; g < rs.num_positive_roots(); ++g) {
      Rational v = pairing(rs, g, rs.barycenter);
      CHECK(v > Rational(0));
      CHECK(v < Rational(1));
    }
  }
}
