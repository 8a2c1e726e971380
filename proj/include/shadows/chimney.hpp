#pragma once

#include <optional>
#include <vector>

#include "shadows/weyl.hpp"

namespace shadows {

/// (J, y)-chimney, kept intensionally as the pair; membership of a
/// half-apartment is a predicate (the full collection is infinite).
/// J = {1..n} degenerates to the alcove chimney of y*base.
struct Chimney {
  std::vector<int> J;  // strictly increasing, values in 1..n
  AffineWeylElement y;
};

Chimney alcove_chimney(const RootSystem& rs, const AffineWeylElement& y);

bool is_full_J(const RootSystem& rs, const Chimney& c);

/// Is the given positive root in Phi_J^+ (supported on the J simple roots)?
bool root_in_sub_system(const RootSystem& rs, const std::vector<int>& J, int root_index);

/// Membership of a half-apartment in the chimney collection. Transports by
/// y^{-1} and tests: for roots in Phi_J^+ the dominant side iff k <= 0 and the
/// antidominant side iff k >= 1; for the remaining positive roots the
/// antidominant side at every level and the dominant side never.
bool contains_half_apartment(const RootSystem& rs, const Chimney& c, const HalfApartment& h);

/// The side of H whose closed half-apartment is NOT in the chimney; alcoves on
/// that side are on the positive side of every panel in H.
int positive_side(const RootSystem& rs, const Chimney& c, const Hyperplane& h);

/// Chimney-induced orientation at (alcove, panel of the given type): + iff the
/// half-apartment of the panel's wall containing the alcove is not in the
/// chimney.
int orientation_sign(const RootSystem& rs, const Chimney& c, const AffineWeylElement& alcove,
                     int panel_letter);

/// Finite intersection cutting out the sector S_{J,y}(0).
std::vector<HalfApartment> sector_half_apartments(const RootSystem& rs, const Chimney& c);

struct DeepAlcove {
  AffineWeylElement element;        // y * t^{N nu}
  std::vector<int> letters;         // reduced word of element, step letters
  std::vector<Hyperplane> crossed;  // walls crossed by the word, in order
  Int periods = 0;                  // N
};

/// An alcove deep enough in a (J,y)-sector that folding a shadow of diameter
/// <= radius along its wall sequence computes the chimney shadow: every wall
/// crossed beyond it has |level| > radius + 1. For J = {1..n} returns y*base
/// with the walls of y's canonical reduced word.
DeepAlcove deep_alcove(const RootSystem& rs, const Chimney& c, Int radius);

}  // namespace shadows
