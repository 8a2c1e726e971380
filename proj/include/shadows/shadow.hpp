#pragma once

#include <optional>
#include <vector>

#include "shadows/gallery.hpp"

namespace shadows {

/// Set of end simplices, sorted canonically. Multiplicities (number of
/// distinct positively folded galleries per end simplex) are present only on
/// oracle-computed shadows; the recursion computes sets.
struct ShadowResult {
  std::vector<EndSimplex> simplices;
  std::optional<std::vector<Int>> multiplicities;  // parallel to simplices

  bool contains(const EndSimplex& s) const;
  bool same_set(const ShadowResult& o) const;
};

ShadowResult make_shadow_set(std::vector<EndSimplex> simplices);

/// End simplices of the minimal galleries of the type: the W_sigma-orbit of
/// x*tau. For vertex-to-vertex this is the W_0-orbit of the end vertex; for
/// alcove-to-alcove it is {x*base}.
ShadowResult shadow_base(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                         const FaceType& tau);

/// One recursion step: s |-> s union r_H(far half intersect s). A simplex is
/// on the far side iff its minimal representative's alcove is; simplices in H
/// are fixed by r_H either way.
ShadowResult shadow_step(const RootSystem& rs, const ShadowResult& s, const Hyperplane& h,
                         int far_side);

/// Folds a shadow set through the walls of a reduced-word path from the base
/// alcove, one shadow_step per letter. Asserts the steps only grow the set.
ShadowResult fold_through(const RootSystem& rs, ShadowResult s, const std::vector<int>& letters);

/// Shadow of x*tau starting at sigma with respect to the alcove chimney of y:
/// folds the base set through the walls of y's canonical reduced word.
ShadowResult shadow(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                    const FaceType& tau, const AffineWeylElement& y);

/// Shadow with respect to an arbitrary (J,y)-chimney, via a deep alcove whose
/// wall levels exceed every gallery of the relevant length.
ShadowResult shadow(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                    const FaceType& tau, const Chimney& c);

/// All positively folded galleries of the given type: first alcove ranges
/// over W_sigma * base, the move mask over all masks whose folds are positive.
/// Deterministic order (first alcoves sorted, cross explored before fold).
std::vector<Gallery> enumerate_pf_galleries(const RootSystem& rs, const GalleryTypeSpec& spec,
                                            const Chimney& c,
                                            const std::optional<EndSimplex>& end_filter,
                                            Int cap = 14);

/// Brute-force shadow with multiplicities, by exhaustive enumeration.
/// Rejects runs whose longest gallery would exceed the cap.
ShadowResult shadow_oracle(const RootSystem& rs, const AffineWeylElement& x,
                           const FaceType& sigma, const FaceType& tau, const Chimney& c,
                           Int cap = 14);

}  // namespace shadows
