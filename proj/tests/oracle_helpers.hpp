// Independent oracles used by the test suites. Everything here recomputes
// expected values by a different route than the library implementation:
// classical Euclidean root data, separating-hyperplane counting directly from
// side comparisons, dominance-order polytope membership, and exhaustive
// reduced-word enumeration.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "shadows/weyl.hpp"

namespace oracle {

using shadows::Int;
using shadows::IntVector;
using shadows::Rational;
using shadows::RootSystem;

using RVec = std::vector<Rational>;

inline RVec rv(std::vector<double> entries) {
  RVec out;
  for (double e : entries) {
    // entries are integers or half-integers in the classical tables
    out.push_back(Rational(static_cast<Int>(e * 2), 2));
  }
  return out;
}

struct ClassicalData {
  std::vector<RVec> simples;
  std::vector<RVec> roots;  // all roots, both signs
};

inline void add_with_signs(std::vector<RVec>& roots, RVec v) {
  roots.push_back(v);
  for (auto& e : v) e = -e;
  roots.push_back(v);
}

inline ClassicalData classical_data(shadows::Family family, int n) {
  ClassicalData d;
  auto unit = [&](int dim, int i, double scale = 1.0) {
    std::vector<double> v(dim, 0.0);
    v[i] = scale;
    return rv(v);
  };
  auto diff = [&](int dim, int i, int j) {
    std::vector<double> v(dim, 0.0);
    v[i] = 1.0;
    v[j] = -1.0;
    return rv(v);
  };
  auto sum2 = [&](int dim, int i, int j) {
    std::vector<double> v(dim, 0.0);
    v[i] = 1.0;
    v[j] = 1.0;
    return rv(v);
  };
  switch (family) {
    case shadows::Family::A: {
      int dim = n + 1;
      for (int i = 0; i < n; ++i) d.simples.push_back(diff(dim, i, i + 1));
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j) d.roots.push_back(diff(dim, i, j));
      return d;
    }
    case shadows::Family::B:
    case shadows::Family::C: {
      if (n == 2) {
        // Shared rank-2 convention: alpha_1 = e1 - e2, alpha_2 = e2.
        d.simples = {diff(2, 0, 1), unit(2, 1)};
        for (int i = 0; i < 2; ++i) {
          add_with_signs(d.roots, unit(2, i));
          for (int j = i + 1; j < 2; ++j) {
            add_with_signs(d.roots, diff(2, i, j));
            add_with_signs(d.roots, sum2(2, i, j));
          }
        }
        return d;
      }
      for (int i = 0; i + 1 < n; ++i) d.simples.push_back(diff(n, i, i + 1));
      if (family == shadows::Family::B)
        d.simples.push_back(unit(n, n - 1));
      else
        d.simples.push_back(unit(n, n - 1, 2.0));
      for (int i = 0; i < n; ++i) {
        add_with_signs(d.roots, unit(n, i, family == shadows::Family::B ? 1.0 : 2.0));
        for (int j = i + 1; j < n; ++j) {
          add_with_signs(d.roots, diff(n, i, j));
          add_with_signs(d.roots, sum2(n, i, j));
        }
      }
      return d;
    }
    case shadows::Family::D: {
      d.simples = {diff(4, 0, 1), diff(4, 1, 2), diff(4, 2, 3), sum2(4, 2, 3)};
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          add_with_signs(d.roots, diff(4, i, j));
          add_with_signs(d.roots, sum2(4, i, j));
        }
      return d;
    }
    case shadows::Family::F: {
      d.simples = {diff(4, 1, 2), diff(4, 2, 3), unit(4, 3), rv({0.5, -0.5, -0.5, -0.5})};
      for (int i = 0; i < 4; ++i) {
        add_with_signs(d.roots, unit(4, i));
        for (int j = i + 1; j < 4; ++j) {
          add_with_signs(d.roots, diff(4, i, j));
          add_with_signs(d.roots, sum2(4, i, j));
        }
      }
      for (int mask = 0; mask < 8; ++mask) {
        std::vector<double> v = {0.5, 0.5, 0.5, 0.5};
        for (int b = 0; b < 3; ++b)
          if (mask & (1 << b)) v[b + 1] = -0.5;
        add_with_signs(d.roots, rv(v));
      }
      return d;
    }
    case shadows::Family::G: {
      d.simples = {diff(3, 0, 1), rv({-2, 1, 1})};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          d.roots.push_back(diff(3, i, j));
        }
      for (int i = 0; i < 3; ++i) {
        std::vector<double> v(3, -1.0);
        v[i] = 2.0;
        add_with_signs(d.roots, rv(v));
      }
      return d;
    }
    default:
      throw std::invalid_argument("no classical data for this family");
  }
}

/// Coefficients of `target` over `basis` (consistent overdetermined system),
/// or nullopt if not expressible.
inline std::optional<RVec> solve_coefficients(const std::vector<RVec>& basis, const RVec& target) {
  const int dim = static_cast<int>(target.size());
  const int n = static_cast<int>(basis.size());
  std::vector<RVec> m(dim, RVec(n + 1, Rational(0)));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = basis[c][r];
    m[r][n] = target[r];
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && row < dim; ++col) {
    int p = row;
    while (p < dim && m[p][col] == Rational(0)) ++p;
    if (p == dim) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (int c = col; c <= n; ++c) m[row][c] *= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == row || m[r][col] == Rational(0)) continue;
      Rational f = m[r][col];
      for (int c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < dim; ++r)
    if (m[r][n] != Rational(0)) return std::nullopt;
  RVec out(n, Rational(0));
  for (int r = 0; r < row; ++r) out[pivot_col[r]] = m[r][n];
  return out;
}

/// Positive roots of the type as simple-root coefficient vectors, from the
/// classical Euclidean tables.
inline std::set<std::vector<Int>> classical_positive_roots(shadows::Family family, int rank) {
  ClassicalData d = classical_data(family, rank);
  std::set<std::vector<Int>> out;
  for (const auto& root : d.roots) {
    auto coeffs = solve_coefficients(d.simples, root);
    if (!coeffs) throw std::logic_error("classical root outside the simple-root span");
    bool integral = true, nonneg = true, nonzero = false;
    std::vector<Int> c;
    for (const auto& x : *coeffs) {
      if (!x.is_integer()) integral = false;
      if (x.sign() < 0) nonneg = false;
      if (x.sign() != 0) nonzero = true;
      c.push_back(x.num());
    }
    if (!integral) throw std::logic_error("classical root with non-integer coefficients");
    if (nonneg && nonzero) out.insert(c);
  }
  return out;
}

/// Separating-hyperplane count between the base alcove and x*base, from raw
/// side comparisons over an explicit window of levels.
inline Int separating_walls(const RootSystem& rs, const shadows::AffineWeylElement& x,
                            Int level_bound) {
  Int count = 0;
  for (int g = 0; g < rs.num_positive_roots(); ++g) {
    for (Int k = -level_bound; k <= level_bound; ++k) {
      shadows::Hyperplane h{g, k};
      if (shadows::alcove_side(rs, shadows::identity(rs), h) != shadows::alcove_side(rs, x, h))
        ++count;
    }
  }
  return count;
}

/// Lattice points of the lambda-Weyl polytope via dominance order: nu is in
/// the polytope iff lambda+ - nu+ is a nonnegative integer combination of
/// simple coroots.
inline std::vector<IntVector> polytope_by_dominance(const RootSystem& rs, const IntVector& lambda) {
  IntVector lam_dom = shadows::dominant_representative(rs, lambda);
  // Scan a box; the polytope is contained in the orbit's coordinate box.
  Int bound = 0;
  for (const auto& v : shadows::weyl_orbit(rs, lambda))
    for (Eigen::Index i = 0; i < v.size(); ++i) bound = std::max(bound, v[i] < 0 ? -v[i] : v[i]);
  bound += 1;
  std::vector<IntVector> out;
  IntVector nu = IntVector::Zero(rs.rank);
  std::vector<Int> stack(rs.rank, -bound);
  auto in_polytope = [&](const IntVector& cand) {
    IntVector diff = lam_dom - shadows::dominant_representative(rs, cand);
    // diff must be a nonnegative integer combination of simple coroots; in
    // coroot coordinates that is componentwise nonnegativity.
    for (Eigen::Index i = 0; i < diff.size(); ++i)
      if (diff[i] < 0) return false;
    return true;
  };
  std::function<void(int)> scan = [&](int i) {
    if (i == rs.rank) {
      if (in_polytope(nu)) out.push_back(nu);
      return;
    }
    for (Int v = -bound; v <= bound; ++v) {
      nu[i] = v;
      scan(i + 1);
    }
  };
  scan(0);
  std::sort(out.begin(), out.end(),
            [](const IntVector& a, const IntVector& b) { return shadows::lex_less(a, b); });
  return out;
}

/// Every reduced word of x, by peeling each right descent recursively.
inline std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs,
                                                       const shadows::AffineWeylElement& x) {
  if (x == shadows::identity(rs)) return {{}};
  std::vector<std::vector<int>> out;
  for (int s = 0; s <= rs.rank; ++s) {
    if (!shadows::is_right_descent(rs, x, s)) continue;
    for (auto word : all_reduced_words(rs, compose(x, shadows::generator(rs, s)))) {
      word.push_back(s);
      out.push_back(std::move(word));
    }
  }
  return out;
}

}  // namespace oracle
