#pragma once

#include <optional>
#include <vector>

#include "shadows/chimney.hpp"

namespace shadows {

/// Type of a gallery: (type of first face, word of panel types, type of last
/// face).
struct GalleryTypeSpec {
  FaceType start;
  std::vector<int> word;
  FaceType end;

  bool operator==(const GalleryTypeSpec& o) const {
    return start == o.start && word == o.word && end == o.end;
  }
};

enum class Move : unsigned char { cross, fold };

/// Combinatorial gallery stored as (type, first alcove, move mask). The
/// alcove and panel sequences are derived: at letter i the gallery either
/// crosses the type-s_i wall of the current alcove or stays (fold at it).
/// The first alcove must contain the start face, i.e. lie in W_sigma * base.
struct Gallery {
  GalleryTypeSpec spec;
  AffineWeylElement first_alcove;
  std::vector<Move> moves;
};

/// Fold-free gallery of the canonical reduced word of x from the sigma-face
/// of the base alcove to x*tau. Requires x (W_sigma, W_tau)-reduced.
Gallery minimal_gallery(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                        const FaceType& tau);

/// Derived alcoves c_0..c_l.
std::vector<AffineWeylElement> gallery_alcoves(const RootSystem& rs, const Gallery& g);
/// Supporting hyperplanes of the panels p_1..p_l.
std::vector<Hyperplane> gallery_panels(const RootSystem& rs, const Gallery& g);
/// Normalized end simplex (last alcove) * (end face).
EndSimplex end_simplex(const RootSystem& rs, const Gallery& g);

/// Disjoint index intervals [j,k] (alcoves j..k-1 are affected); k = kUnbounded
/// extends through the end of the gallery.
inline constexpr int kUnbounded = -1;

struct OutcropSpec {
  Hyperplane wall;
  std::vector<std::pair<int, int>> intervals;

  bool empty() const { return intervals.empty(); }
};

struct Outcrops {
  OutcropSpec maximal;
  std::optional<OutcropSpec> near_maximal;  // absent when the final simplex is in H^id
  OutcropSpec max_ingrowth;
};

/// H-protrusions are runs of alcoves strictly off the base-alcove side of H
/// delimited by panels in H; indentations are the dual runs on the base side.
/// Returns the maximal outcrop, the near-maximal outcrop (maximal with the
/// tail beyond the last panel in H left in place), and the maximal ingrowth.
Outcrops find_outcrops(const RootSystem& rs, const Gallery& g, const Hyperplane& h);

/// e-operator: reflects the designated subgalleries onto the base-alcove side
/// of the wall. The intervals must form an outcrop of g.
Gallery fold_onto_base(const RootSystem& rs, const Gallery& g, const OutcropSpec& outcrop);
/// f-operator, inverse of fold_onto_base: reflects ingrowth subgalleries off
/// the base-alcove side. The intervals must form an ingrowth of g.
Gallery unfold_from_base(const RootSystem& rs, const Gallery& g, const OutcropSpec& ingrowth);

/// True iff every fold happens on the positive side of its wall for the
/// chimney-induced orientation.
bool is_positively_folded(const RootSystem& rs, const Gallery& g, const Chimney& c);

}  // namespace shadows
