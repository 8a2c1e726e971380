#pragma once

#include <vector>

#include "shadows/root_system.hpp"

namespace shadows {

/// Element of the spherical Weyl group, as its action on simple-coroot
/// coordinates. Determinant is +-1 and the matrix permutes the coroot set.
struct FiniteWeylElement {
  IntMatrix matrix;

  bool operator==(const FiniteWeylElement& o) const { return matrix == o.matrix; }
};

/// Element x = t^lambda * w of the affine Weyl group, acting on points by
/// v -> w v + lambda. The decomposition is unique, so equality is
/// componentwise.
struct AffineWeylElement {
  IntVector translation;
  FiniteWeylElement finite;

  bool operator==(const AffineWeylElement& o) const {
    return translation == o.translation && finite == o.finite;
  }
  bool operator!=(const AffineWeylElement& o) const { return !(*this == o); }
};

struct ElementLess {
  bool operator()(const AffineWeylElement& a, const AffineWeylElement& b) const {
    if (a.translation != b.translation) return lex_less(a.translation, b.translation);
    return lex_less(a.finite.matrix, b.finite.matrix);
  }
};

/// Closed half-apartment { v : side * (<gamma,v> - k) >= 0 }.
/// side = +1 is the half containing a subsector of the dominant chamber
/// (the paper-style gamma^{k,id}); side = -1 the antidominant one.
struct HalfApartment {
  Hyperplane wall;
  int side = +1;

  bool operator==(const HalfApartment& o) const { return wall == o.wall && side == o.side; }
};

/// Face of the base alcove containing the origin, encoded by the set T of
/// spherical generators fixing it pointwise: T = {1..n} is the origin vertex,
/// T = {} the full alcove. The stabilizer of the face is the parabolic W_T.
struct FaceType {
  std::vector<int> generators;  // strictly increasing, values in 1..n

  bool operator==(const FaceType& o) const { return generators == o.generators; }
  bool operator<(const FaceType& o) const { return generators < o.generators; }
};

FaceType vertex_face(const RootSystem& rs);
inline FaceType alcove_face() { return FaceType{}; }

/// Simplex z * tau-face, normalized so rep is the minimal-length element of
/// the coset z W_tau.
struct EndSimplex {
  AffineWeylElement rep;
  FaceType face;
};

struct EndSimplexLess {
  bool operator()(const EndSimplex& a, const EndSimplex& b) const {
    if (!(a.face == b.face)) return a.face < b.face;
    return ElementLess{}(a.rep, b.rep);
  }
};

inline bool operator==(const EndSimplex& a, const EndSimplex& b) {
  return a.face == b.face && a.rep == b.rep;
}

AffineWeylElement identity(const RootSystem& rs);
/// Generator s_letter; letter 0 is the reflection in H_{hightroot,1}.
AffineWeylElement generator(const RootSystem& rs, int letter);
AffineWeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeylElement inverse(const AffineWeylElement& a);

IntVector apply(const AffineWeylElement& x, const IntVector& point);
RatVector apply(const AffineWeylElement& x, const RatVector& point);

/// t^mu u . H_{gamma,k} = H_{u gamma, k + <u gamma, mu>}, renormalized to a
/// positive-root representative.
Hyperplane act(const RootSystem& rs, const AffineWeylElement& x, const Hyperplane& h);
HalfApartment act(const RootSystem& rs, const AffineWeylElement& x, const HalfApartment& h);

/// Side of the alcove x*base w.r.t. H, via the exact barycenter; never 0.
int alcove_side(const RootSystem& rs, const AffineWeylElement& x, const Hyperplane& h);

Int length(const RootSystem& rs, const AffineWeylElement& x);
/// ell(x s_letter) < ell(x)?
bool is_right_descent(const RootSystem& rs, const AffineWeylElement& x, int letter);
/// Reduced word, deterministic: the lexicographically least right descent is
/// peeled at each step. from_word(canonical_word(x)) == x.
std::vector<int> canonical_word(const RootSystem& rs, const AffineWeylElement& x);

/// The wall y . H_s of the alcove y*base of type s; the unique hyperplane
/// separating y*base from ys*base.
Hyperplane wall(const RootSystem& rs, const AffineWeylElement& y, int letter);

/// Minimal-length element of W_left x W_right.
AffineWeylElement min_coset_rep(const RootSystem& rs, const AffineWeylElement& x,
                                const FaceType& left, const FaceType& right);
bool is_reduced(const RootSystem& rs, const AffineWeylElement& x, const FaceType& left,
                const FaceType& right);

/// Elements of the finite parabolic W_T, sorted by (length, matrix).
std::vector<AffineWeylElement> parabolic_elements(const RootSystem& rs, const FaceType& face);
Int longest_parabolic_length(const RootSystem& rs, const FaceType& face);

/// Alcoves containing the vertex mu: { t^mu w : w in W_0 }.
std::vector<AffineWeylElement> star_alcoves(const RootSystem& rs, const IntVector& mu);
/// W_0-orbit of lambda, sorted.
std::vector<IntVector> weyl_orbit(const RootSystem& rs, const IntVector& lambda);
/// Coroot lattice points of the lambda-Weyl polytope:
/// { nu : min_w <gamma,w lambda> <= <gamma,nu> <= max_w <gamma,w lambda> },
/// over all positive roots gamma. Sorted.
std::vector<IntVector> polytope_points(const RootSystem& rs, const IntVector& lambda);

bool is_dominant(const RootSystem& rs, const IntVector& lambda);
IntVector dominant_representative(const RootSystem& rs, const IntVector& lambda);

/// Vertices of the tau-face of the base alcove: the origin plus the scaled
/// coweights not fixed by the generators of tau.
std::vector<RatVector> face_vertices(const RootSystem& rs, const FaceType& face);
/// Is the simplex x * face contained in H?
bool face_in_hyperplane(const RootSystem& rs, const AffineWeylElement& x, const FaceType& face,
                        const Hyperplane& h);
/// Is the simplex x * face contained in the closed half-apartment?
bool face_in_half_apartment(const RootSystem& rs, const AffineWeylElement& x,
                            const FaceType& face, const HalfApartment& half);

EndSimplex normalize_end_simplex(const RootSystem& rs, const AffineWeylElement& z,
                                 const FaceType& face);

}  // namespace shadows
