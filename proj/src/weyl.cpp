#include "shadows/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace shadows {

FaceType vertex_face(const RootSystem& rs) {
  FaceType f;
  for (int i = 1; i <= rs.rank; ++i) f.generators.push_back(i);
  return f;
}

AffineWeylElement identity(const RootSystem& rs) {
  return AffineWeylElement{IntVector::Zero(rs.rank),
                           FiniteWeylElement{IntMatrix::Identity(rs.rank, rs.rank)}};
}

AffineWeylElement generator(const RootSystem& rs, int letter) {
  if (letter < 0 || letter > rs.rank)
    throw std::invalid_argument("generator letter " + std::to_string(letter) +
                                " out of range for rank " + std::to_string(rs.rank));
  if (letter >= 1)
    return AffineWeylElement{IntVector::Zero(rs.rank),
                             FiniteWeylElement{rs.simple_reflections[letter - 1]}};
  // s_0 = s_{hightroot,1} = t^{hightroot^vee} s_{hightroot}.
  const PositiveRoot& hi = rs.positive_roots[rs.highest_root_index];
  IntMatrix m = IntMatrix::Identity(rs.rank, rs.rank);
  // v -> v - <hightroot, v> hightroot^vee
  IntVector row = rs.cartan.transpose() * hi.root;  // row_i = <hightroot, e_i>
  m -= hi.coroot * row.transpose();
  return AffineWeylElement{hi.coroot, FiniteWeylElement{m}};
}

AffineWeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  AffineWeylElement x = identity(rs);
  for (int s : word) x = compose(x, generator(rs, s));
  return x;
}

AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) {
  // (t^l u)(t^m v) = t^{l + u m}(u v)
  return AffineWeylElement{a.translation + a.finite.matrix * b.translation,
                           FiniteWeylElement{IntMatrix(a.finite.matrix * b.finite.matrix)}};
}

AffineWeylElement inverse(const AffineWeylElement& a) {
  // Finite matrices have determinant +-1 and integer inverses; solve by
  // repeated squaring is overkill, use the adjugate-free route via Eigen on
  // small sizes: the inverse is again integral, so round through Rational.
  const Eigen::Index n = a.finite.matrix.rows();
  RatMatrix m(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = Rational(a.finite.matrix(i, j));
      m(i, n + j) = Rational(i == j ? 1 : 0);
    }
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == Rational(0)) ++pivot;
    if (pivot != col) m.row(pivot).swap(m.row(col));
    Rational inv = Rational(1) / m(col, col);
    for (Eigen::Index j = 0; j < 2 * n; ++j) m(col, j) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || m(i, col) == Rational(0)) continue;
      Rational f = m(i, col);
      for (Eigen::Index j = 0; j < 2 * n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  IntMatrix winv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Rational r = m(i, n + j);
      if (!r.is_integer()) throw std::logic_error("finite Weyl matrix inverse not integral");
      winv(i, j) = r.num();
    }
  // (t^l w)^{-1} = t^{-w^{-1} l} w^{-1}
  return AffineWeylElement{IntVector(-(winv * a.translation)), FiniteWeylElement{winv}};
}

IntVector apply(const AffineWeylElement& x, const IntVector& point) {
  return x.finite.matrix * point + x.translation;
}

RatVector apply(const AffineWeylElement& x, const RatVector& point) {
  RatVector out = x.finite.matrix.cast<Rational>() * point;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] += Rational(x.translation[i]);
  return out;
}

Hyperplane act(const RootSystem& rs, const AffineWeylElement& x, const Hyperplane& h) {
  const PositiveRoot& pr = rs.positive_roots.at(h.root_index);
  IntVector image_coroot = x.finite.matrix * pr.coroot;
  auto found = rs.signed_coroot_index(image_coroot);
  if (!found) throw std::logic_error("image of a coroot is not a coroot");
  auto [idx, sign] = *found;
  // u gamma = sign * delta; level k + <u gamma, mu>, then flip if sign < 0.
  Int klevel = h.level + sign * pairing(rs, idx, x.translation);
  return Hyperplane{idx, sign * klevel};
}

HalfApartment act(const RootSystem& rs, const AffineWeylElement& x, const HalfApartment& h) {
  const PositiveRoot& pr = rs.positive_roots.at(h.wall.root_index);
  IntVector image_coroot = x.finite.matrix * pr.coroot;
  auto found = rs.signed_coroot_index(image_coroot);
  if (!found) throw std::logic_error("image of a coroot is not a coroot");
  auto [idx, sign] = *found;
  Int klevel = h.wall.level + sign * pairing(rs, idx, x.translation);
  return HalfApartment{Hyperplane{idx, sign * klevel}, h.side * sign};
}

int alcove_side(const RootSystem& rs, const AffineWeylElement& x, const Hyperplane& h) {
  Rational v = pairing(rs, h.root_index, apply(x, rs.barycenter)) - Rational(h.level);
  int s = v.sign();
  if (s == 0) throw std::logic_error("alcove barycenter on a wall");
  return s;
}

Int length(const RootSystem& rs, const AffineWeylElement& x) {
  // Number of walls separating the base alcove from x*base. The barycenter of
  // the base alcove has 0 < <gamma,b> < 1 for every positive gamma, so the
  // count per root direction is |floor(<gamma, x b>)|.
  RatVector xb = apply(x, rs.barycenter);
  Int total = 0;
  for (int g = 0; g < rs.num_positive_roots(); ++g) {
    Int f = pairing(rs, g, xb).floor();
    total += f < 0 ? -f : f;
  }
  return total;
}

Hyperplane wall(const RootSystem& rs, const AffineWeylElement& y, int letter) {
  Hyperplane base = letter >= 1 ? Hyperplane{letter - 1, 0}
                                : Hyperplane{rs.highest_root_index, 1};
  return act(rs, y, base);
}

bool is_right_descent(const RootSystem& rs, const AffineWeylElement& x, int letter) {
  Hyperplane h = wall(rs, x, letter);
  return alcove_side(rs, x, h) != alcove_side(rs, identity(rs), h);
}

std::vector<int> canonical_word(const RootSystem& rs, const AffineWeylElement& x) {
  std::vector<int> word;
  AffineWeylElement cur = x;
  AffineWeylElement id = identity(rs);
  while (!(cur == id)) {
    int s = -1;
    for (int letter = 0; letter <= rs.rank; ++letter) {
      if (is_right_descent(rs, cur, letter)) {
        s = letter;
        break;
      }
    }
    if (s < 0) throw std::logic_error("non-identity element with no descent");
    word.push_back(s);
    cur = compose(cur, generator(rs, s));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

AffineWeylElement min_coset_rep(const RootSystem& rs, const AffineWeylElement& x,
                                const FaceType& left, const FaceType& right) {
  AffineWeylElement cur = x;
  Int len = length(rs, cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : left.generators) {
      AffineWeylElement cand = compose(generator(rs, s), cur);
      Int l = length(rs, cand);
      if (l < len) {
        cur = cand;
        len = l;
        changed = true;
      }
    }
    for (int s : right.generators) {
      if (is_right_descent(rs, cur, s)) {
        cur = compose(cur, generator(rs, s));
        --len;
        changed = true;
      }
    }
  }
  return cur;
}

bool is_reduced(const RootSystem& rs, const AffineWeylElement& x, const FaceType& left,
                const FaceType& right) {
  Int len = length(rs, x);
  for (int s : left.generators)
    if (length(rs, compose(generator(rs, s), x)) < len) return false;
  for (int s : right.generators)
    if (is_right_descent(rs, x, s)) return false;
  return true;
}

std::vector<AffineWeylElement> parabolic_elements(const RootSystem& rs, const FaceType& face) {
  std::set<AffineWeylElement, ElementLess> seen;
  std::deque<AffineWeylElement> queue;
  AffineWeylElement id = identity(rs);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    AffineWeylElement w = queue.front();
    queue.pop_front();
    for (int s : face.generators) {
      AffineWeylElement next = compose(w, generator(rs, s));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<AffineWeylElement> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [&](const AffineWeylElement& a, const AffineWeylElement& b) {
                     Int la = length(rs, a), lb = length(rs, b);
                     if (la != lb) return la < lb;
                     return ElementLess{}(a, b);
                   });
  return out;
}

Int longest_parabolic_length(const RootSystem& rs, const FaceType& face) {
  Int best = 0;
  for (const auto& w : parabolic_elements(rs, face)) best = std::max(best, length(rs, w));
  return best;
}

std::vector<AffineWeylElement> star_alcoves(const RootSystem& rs, const IntVector& mu) {
  std::vector<AffineWeylElement> out;
  AffineWeylElement t{mu, FiniteWeylElement{IntMatrix::Identity(rs.rank, rs.rank)}};
  for (const auto& w : parabolic_elements(rs, vertex_face(rs))) out.push_back(compose(t, w));
  return out;
}

std::vector<IntVector> weyl_orbit(const RootSystem& rs, const IntVector& lambda) {
  std::set<std::vector<Int>> seen;
  std::vector<IntVector> out;
  for (const auto& w : parabolic_elements(rs, vertex_face(rs))) {
    IntVector v = w.finite.matrix * lambda;
    if (seen.emplace(v.data(), v.data() + v.size()).second) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    return lex_less(a, b);
  });
  return out;
}

std::vector<IntVector> polytope_points(const RootSystem& rs, const IntVector& lambda) {
  const int n = rs.rank;
  auto orbit = weyl_orbit(rs, lambda);
  std::vector<Int> lo(rs.num_positive_roots()), hi(rs.num_positive_roots());
  for (int g = 0; g < rs.num_positive_roots(); ++g) {
    Int mn = 0, mx = 0;
    bool first = true;
    for (const auto& v : orbit) {
      Int p = pairing(rs, g, v);
      if (first || p < mn) mn = p;
      if (first || p > mx) mx = p;
      first = false;
    }
    lo[g] = mn;
    hi[g] = mx;
  }
  // Bounding box in coroot coordinates: nu = C^{-1} u with u_i = <alpha_i,nu>
  // ranged by the simple-root constraints.
  std::vector<Int> bound(n, 0);
  for (int i = 0; i < n; ++i) {
    Rational acc(0);
    for (int j = 0; j < n; ++j) {
      Int m = std::max(hi[j] < 0 ? -hi[j] : hi[j], lo[j] < 0 ? -lo[j] : lo[j]);
      Rational a = rs.cartan_inverse(i, j);
      if (a.sign() < 0) a = -a;
      acc += a * Rational(m);
    }
    bound[i] = acc.floor() + 1;
  }
  std::vector<IntVector> out;
  IntVector nu = IntVector::Zero(n);
  std::function<void(int)> scan = [&](int i) {
    if (i == n) {
      for (int g = 0; g < rs.num_positive_roots(); ++g) {
        Int p = pairing(rs, g, nu);
        if (p < lo[g] || p > hi[g]) return;
      }
      out.push_back(nu);
      return;
    }
    for (Int v = -bound[i]; v <= bound[i]; ++v) {
      nu[i] = v;
      scan(i + 1);
    }
  };
  scan(0);
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    return lex_less(a, b);
  });
  return out;
}

bool is_dominant(const RootSystem& rs, const IntVector& lambda) {
  for (int i = 0; i < rs.rank; ++i)
    if (rs.cartan.row(i).dot(lambda) < 0) return false;
  return true;
}

IntVector dominant_representative(const RootSystem& rs, const IntVector& lambda) {
  IntVector v = lambda;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rs.rank; ++i) {
      Int p = rs.cartan.row(i).dot(v);
      if (p < 0) {
        v -= p * rs.positive_roots[i].coroot;
        changed = true;
      }
    }
  }
  return v;
}

std::vector<RatVector> face_vertices(const RootSystem& rs, const FaceType& face) {
  std::vector<RatVector> out;
  out.push_back(rs.alcove_vertices[0]);  // the origin is in every face here
  for (int i = 1; i <= rs.rank; ++i) {
    bool fixed_out = std::find(face.generators.begin(), face.generators.end(), i) !=
                     face.generators.end();
    if (!fixed_out) out.push_back(rs.alcove_vertices[i]);
  }
  return out;
}

bool face_in_hyperplane(const RootSystem& rs, const AffineWeylElement& x, const FaceType& face,
                        const Hyperplane& h) {
  for (const auto& v : face_vertices(rs, face)) {
    if (pairing(rs, h.root_index, apply(x, v)) != Rational(h.level)) return false;
  }
  return true;
}

bool face_in_half_apartment(const RootSystem& rs, const AffineWeylElement& x,
                            const FaceType& face, const HalfApartment& half) {
  for (const auto& v : face_vertices(rs, face)) {
    Rational d = pairing(rs, half.wall.root_index, apply(x, v)) - Rational(half.wall.level);
    if (half.side > 0 ? d.sign() < 0 : d.sign() > 0) return false;
  }
  return true;
}

EndSimplex normalize_end_simplex(const RootSystem& rs, const AffineWeylElement& z,
                                 const FaceType& face) {
  AffineWeylElement cur = z;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : face.generators) {
      if (is_right_descent(rs, cur, s)) {
        cur = compose(cur, generator(rs, s));
        changed = true;
      }
    }
  }
  return EndSimplex{cur, face};
}

}  // namespace shadows
