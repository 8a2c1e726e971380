#include "shadows/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace shadows {

namespace {

std::vector<Int> key_of(const IntVector& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

IntMatrix cartan_matrix(Family family, int n) {
  auto chain = [&](IntMatrix& c) {
    for (int i = 0; i + 1 < n; ++i) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
  };
  IntMatrix c = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  switch (family) {
    case Family::A:
      if (n < 1 || n > 4) break;
      chain(c);
      return c;
    case Family::B:
    case Family::C:
      if (n < 2 || n > 4) break;
      chain(c);
      if (n == 2) {
        // Rank-2 convention shared by B2 and C2: alpha_1's coroot is short.
        c(0, 1) = -2;
        c(1, 0) = -1;
      } else if (family == Family::B) {
        c(n - 2, n - 1) = -2;  // <alpha_{n-1}, alpha_n^vee>, alpha_n short
      } else {
        c(n - 1, n - 2) = -2;  // <alpha_n, alpha_{n-1}^vee>, alpha_n long
      }
      return c;
    case Family::D:
      if (n != 4) break;
      c(0, 1) = c(1, 0) = -1;
      c(1, 2) = c(2, 1) = -1;
      c(1, 3) = c(3, 1) = -1;
      return c;
    case Family::F:
      if (n != 4) break;
      chain(c);
      c(1, 2) = -2;
      c(2, 1) = -1;
      return c;
    case Family::G:
      if (n != 2) break;
      c(0, 1) = -1;
      c(1, 0) = -3;
      return c;
    case Family::E:
      break;
  }
  throw std::invalid_argument("unsupported root system type " +
                              std::string(1, static_cast<char>(family)) + std::to_string(n));
}

RatMatrix invert_rational(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  RatMatrix a(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = Rational(m(i, j));
      a(i, n + j) = Rational(i == j ? 1 : 0);
    }
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Rational(0)) ++pivot;
    if (pivot == n) throw std::logic_error("cartan matrix is singular");
    if (pivot != col) a.row(pivot).swap(a.row(col));
    Rational inv = Rational(1) / a(col, col);
    for (Eigen::Index j = 0; j < 2 * n; ++j) a(col, j) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == Rational(0)) continue;
      Rational f = a(i, col);
      for (Eigen::Index j = 0; j < 2 * n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return a.rightCols(n);
}

}  // namespace

std::optional<int> RootSystem::root_index_of(const IntVector& root_coords) const {
  auto it = index_by_root_.find(key_of(root_coords));
  if (it == index_by_root_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<int, int>> RootSystem::signed_coroot_index(
    const IntVector& coroot_coords) const {
  auto it = index_by_coroot_.find(key_of(coroot_coords));
  if (it != index_by_coroot_.end()) return std::make_pair(it->second, 1);
  it = index_by_coroot_.find(key_of(IntVector(-coroot_coords)));
  if (it != index_by_coroot_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = cartan_matrix(family, rank);
  const int n = rank;

  // Orbit of the simple roots under the simple reflections, tracking root and
  // coroot coordinates in parallel.
  std::map<std::vector<Int>, IntVector> seen;  // root coords -> coroot coords
  std::deque<std::pair<IntVector, IntVector>> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e[i] = 1;
    seen.emplace(key_of(e), e);
    queue.emplace_back(e, e);
  }
  while (!queue.empty()) {
    auto [c, d] = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVector c2 = c;
      c2[i] -= rs.cartan.col(i).dot(c);  // <gamma, alpha_i^vee>
      IntVector d2 = d;
      d2[i] -= rs.cartan.row(i).dot(d);  // <alpha_i, gamma^vee>
      if (seen.emplace(key_of(c2), d2).second) queue.emplace_back(c2, d2);
    }
  }

  for (const auto& [ck, d] : seen) {
    bool positive = false, negative = false;
    for (Int x : ck) {
      if (x > 0) positive = true;
      if (x < 0) negative = true;
    }
    if (negative || !positive) continue;
    IntVector c(n);
    for (int i = 0; i < n; ++i) c[i] = ck[i];
    rs.positive_roots.push_back(PositiveRoot{c, d});
  }

  auto height = [](const IntVector& v) { return v.sum(); };
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [&](const PositiveRoot& a, const PositiveRoot& b) {
              if (height(a.root) != height(b.root)) return height(a.root) < height(b.root);
              return lex_less(a.root, b.root);
            });
  // Simple roots land first automatically (height 1); force index order.
  std::sort(rs.positive_roots.begin(), rs.positive_roots.begin() + n,
            [](const PositiveRoot& a, const PositiveRoot& b) {
              int ia = 0, ib = 0;
              for (int i = 0; i < a.root.size(); ++i) {
                if (a.root[i] == 1) ia = i;
                if (b.root[i] == 1) ib = i;
              }
              return ia < ib;
            });

  for (int i = 0; i < rs.num_positive_roots(); ++i) {
    rs.index_by_root_.emplace(key_of(rs.positive_roots[i].root), i);
    rs.index_by_coroot_.emplace(key_of(rs.positive_roots[i].coroot), i);
  }

  rs.highest_root_index = rs.num_positive_roots() - 1;
  // The dominance property singles out the last root in height order; check it.
  const IntVector& hi = rs.positive_roots[rs.highest_root_index].root;
  for (const auto& pr : rs.positive_roots) {
    IntVector diff = hi - pr.root;
    for (Eigen::Index i = 0; i < diff.size(); ++i) {
      if (diff[i] < 0)
        throw std::logic_error("no unique highest root in " + rs.name());
    }
  }

  rs.cartan_inverse = invert_rational(rs.cartan);

  rs.alcove_vertices.clear();
  RatVector origin(n);
  for (int i = 0; i < n; ++i) origin[i] = Rational(0);
  rs.alcove_vertices.push_back(origin);
  for (int i = 0; i < n; ++i) {
    Int mark = hi[i];
    RatVector v(n);
    for (int j = 0; j < n; ++j) v[j] = rs.cartan_inverse(j, i) / Rational(mark);
    rs.alcove_vertices.push_back(v);
  }
  RatVector b(n);
  for (int j = 0; j < n; ++j) b[j] = Rational(0);
  for (const auto& v : rs.alcove_vertices) b += v;
  for (int j = 0; j < n; ++j) b[j] /= Rational(n + 1);
  rs.barycenter = b;

  for (int i = 0; i < n; ++i) {
    IntMatrix m = IntMatrix::Identity(n, n);
    // s_i on coroot coordinates: v -> v - <alpha_i, v> alpha_i^vee.
    for (int j = 0; j < n; ++j) m(i, j) -= rs.cartan(i, j);
    rs.simple_reflections.push_back(m);
  }

  return rs;
}

RootSystem build_root_system(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad root system name '" + name + "'");
  char f = name[0];
  if (f < 'A' || f > 'G' || f == 'E')
    if (f != 'A' && f != 'B' && f != 'C' && f != 'D' && f != 'F' && f != 'G')
      throw std::invalid_argument("bad root system family in '" + name + "'");
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad root system rank in '" + name + "'");
  }
  return build_root_system(static_cast<Family>(f), rank);
}

Int pairing(const RootSystem& rs, const IntVector& root_coords, const IntVector& point) {
  if (root_coords.size() != rs.rank || point.size() != rs.rank)
    throw std::invalid_argument("pairing: dimension mismatch");
  return root_coords.dot(rs.cartan * point);
}

Rational pairing(const RootSystem& rs, const IntVector& root_coords, const RatVector& point) {
  if (root_coords.size() != rs.rank || point.size() != rs.rank)
    throw std::invalid_argument("pairing: dimension mismatch");
  Rational acc(0);
  for (int i = 0; i < rs.rank; ++i) {
    Int row = 0;
    for (int j = 0; j < rs.rank; ++j) row += root_coords[j] * rs.cartan(j, i);
    // acc += (root^T cartan)_i * point_i
    acc += Rational(row) * point[i];
  }
  return acc;
}

Int pairing(const RootSystem& rs, int root_index, const IntVector& point) {
  return pairing(rs, rs.positive_roots.at(root_index).root, point);
}

Rational pairing(const RootSystem& rs, int root_index, const RatVector& point) {
  return pairing(rs, rs.positive_roots.at(root_index).root, point);
}

IntVector affine_reflect(const RootSystem& rs, const Hyperplane& h, const IntVector& point) {
  Int excess = pairing(rs, h.root_index, point) - h.level;
  return point - excess * rs.positive_roots.at(h.root_index).coroot;
}

RatVector affine_reflect(const RootSystem& rs, const Hyperplane& h, const RatVector& point) {
  Rational excess = pairing(rs, h.root_index, point) - Rational(h.level);
  RatVector out = point;
  const IntVector& cor = rs.positive_roots.at(h.root_index).coroot;
  for (int i = 0; i < rs.rank; ++i) out[i] -= excess * Rational(cor[i]);
  return out;
}

}  // namespace shadows
