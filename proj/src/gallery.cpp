#include "shadows/gallery.hpp"

#include <algorithm>
#include <stdexcept>

namespace shadows {

namespace {

// Reflection element of the apartment in the wall H.
AffineWeylElement reflection_in(const RootSystem& rs, const Hyperplane& h) {
  const PositiveRoot& pr = rs.positive_roots.at(h.root_index);
  IntMatrix m = IntMatrix::Identity(rs.rank, rs.rank);
  IntVector row = rs.cartan.transpose() * pr.root;
  m -= pr.coroot * row.transpose();
  return AffineWeylElement{IntVector(h.level * pr.coroot), FiniteWeylElement{m}};
}

bool panel_on(const RootSystem& rs, const Gallery& g,
              const std::vector<AffineWeylElement>& alcoves, int index, const Hyperplane& h) {
  const int l = static_cast<int>(g.spec.word.size());
  if (index == 0) return face_in_hyperplane(rs, g.first_alcove, g.spec.start, h);
  if (index == l + 1) return face_in_hyperplane(rs, alcoves.back(), g.spec.end, h);
  return wall(rs, alcoves[index - 1], g.spec.word[index - 1]) == h;
}

}  // namespace

Gallery minimal_gallery(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                        const FaceType& tau) {
  if (!is_reduced(rs, x, sigma, tau))
    throw std::invalid_argument("minimal_gallery: x is not (W_sigma, W_tau)-reduced");
  Gallery g;
  g.spec = GalleryTypeSpec{sigma, canonical_word(rs, x), tau};
  g.first_alcove = identity(rs);
  g.moves.assign(g.spec.word.size(), Move::cross);
  return g;
}

std::vector<AffineWeylElement> gallery_alcoves(const RootSystem& rs, const Gallery& g) {
  if (g.moves.size() != g.spec.word.size())
    throw std::invalid_argument("gallery: move mask and word length differ");
  std::vector<AffineWeylElement> alcoves;
  alcoves.reserve(g.moves.size() + 1);
  alcoves.push_back(g.first_alcove);
  for (std::size_t i = 0; i < g.moves.size(); ++i) {
    if (g.moves[i] == Move::cross)
      alcoves.push_back(compose(alcoves.back(), generator(rs, g.spec.word[i])));
    else
      alcoves.push_back(alcoves.back());
  }
  return alcoves;
}

std::vector<Hyperplane> gallery_panels(const RootSystem& rs, const Gallery& g) {
  std::vector<Hyperplane> panels;
  AffineWeylElement cur = g.first_alcove;
  for (std::size_t i = 0; i < g.moves.size(); ++i) {
    panels.push_back(wall(rs, cur, g.spec.word[i]));
    if (g.moves[i] == Move::cross) cur = compose(cur, generator(rs, g.spec.word[i]));
  }
  return panels;
}

EndSimplex end_simplex(const RootSystem& rs, const Gallery& g) {
  auto alcoves = gallery_alcoves(rs, g);
  return normalize_end_simplex(rs, alcoves.back(), g.spec.end);
}

Outcrops find_outcrops(const RootSystem& rs, const Gallery& g, const Hyperplane& h) {
  const int l = static_cast<int>(g.spec.word.size());
  auto alcoves = gallery_alcoves(rs, g);
  const int near = alcove_side(rs, identity(rs), h);

  std::vector<bool> far(l + 1);
  for (int i = 0; i <= l; ++i) far[i] = alcove_side(rs, alcoves[i], h) != near;

  Outcrops out;
  out.maximal.wall = h;
  out.max_ingrowth.wall = h;

  // Far-side runs delimited by panels in H give the protrusions.
  int i = 0;
  while (i <= l) {
    if (!far[i]) {
      ++i;
      continue;
    }
    int a = i;
    while (i <= l && far[i]) ++i;
    int b = i - 1;
    if (!panel_on(rs, g, alcoves, a, h)) continue;  // initial far run without a panel in H
    out.maximal.intervals.emplace_back(a, b == l ? kUnbounded : b + 1);
  }

  // Base-side runs strictly between panels in H give the indentations.
  i = 0;
  while (i <= l) {
    if (far[i]) {
      ++i;
      continue;
    }
    int a = i;
    while (i <= l && !far[i]) ++i;
    int b = i - 1;
    if (a == 0 || !panel_on(rs, g, alcoves, a, h)) continue;
    out.max_ingrowth.intervals.emplace_back(a, b == l ? kUnbounded : b + 1);
  }

  bool final_in_base = face_in_half_apartment(rs, alcoves.back(), g.spec.end,
                                              HalfApartment{h, near});
  if (!final_in_base) {
    int last_panel = -1;
    for (int p = l; p >= 0; --p) {
      if (panel_on(rs, g, alcoves, p, h)) {
        last_panel = p;
        break;
      }
    }
    OutcropSpec near_max;
    near_max.wall = h;
    for (auto [a, b] : out.maximal.intervals) {
      if (b != kUnbounded && b <= last_panel) {
        near_max.intervals.emplace_back(a, b);
      } else if (a < last_panel) {
        near_max.intervals.emplace_back(a, last_panel);
      }
    }
    out.near_maximal = near_max;
  }
  return out;
}

namespace {

bool is_protrusion(const RootSystem& rs, const Gallery& g,
                   const std::vector<AffineWeylElement>& alcoves, const Hyperplane& h,
                   int a, int b, bool want_far) {
  const int l = static_cast<int>(g.spec.word.size());
  if (a < 0 || a > l + 1) return false;
  if (b != kUnbounded && (b <= a || b > l + 1)) return false;
  if (!panel_on(rs, g, alcoves, a, h)) return false;
  if (b != kUnbounded && !panel_on(rs, g, alcoves, b, h)) return false;
  if (want_far && a == 0) {
    // fine: protrusions may begin at the first face
  } else if (!want_far && a == 0) {
    return false;  // the initial interval is never an indentation
  }
  const int near = alcove_side(rs, identity(rs), h);
  int last = (b == kUnbounded ? l : b - 1);
  for (int i = a; i <= last; ++i) {
    bool far = alcove_side(rs, alcoves[i], h) != near;
    if (far != want_far) return false;
  }
  return true;
}

Gallery reflect_intervals(const RootSystem& rs, const Gallery& g, const OutcropSpec& spec,
                          bool want_far, const char* opname) {
  auto alcoves = gallery_alcoves(rs, g);
  const int l = static_cast<int>(g.spec.word.size());
  for (std::size_t i = 0; i < spec.intervals.size(); ++i) {
    auto [a, b] = spec.intervals[i];
    if (!is_protrusion(rs, g, alcoves, spec.wall, a, b, want_far))
      throw std::invalid_argument(std::string(opname) + ": interval is not valid for this wall");
    for (std::size_t jj = i + 1; jj < spec.intervals.size(); ++jj) {
      auto [a2, b2] = spec.intervals[jj];
      int e1 = b == kUnbounded ? l + 1 : b;
      int e2 = b2 == kUnbounded ? l + 1 : b2;
      if (std::max(a, a2) < std::min(e1, e2))
        throw std::invalid_argument(std::string(opname) + ": intervals overlap");
    }
  }

  AffineWeylElement r = reflection_in(rs, spec.wall);
  std::vector<AffineWeylElement> reflected = alcoves;
  for (auto [a, b] : spec.intervals) {
    int last = (b == kUnbounded ? l : b - 1);
    for (int i = a; i <= last; ++i) reflected[i] = compose(r, reflected[i]);
  }

  Gallery out;
  out.spec = g.spec;
  out.first_alcove = reflected[0];
  out.moves.reserve(l);
  for (int i = 0; i < l; ++i) {
    if (reflected[i] == reflected[i + 1]) {
      out.moves.push_back(Move::fold);
    } else {
      if (!(compose(reflected[i], generator(rs, g.spec.word[i])) == reflected[i + 1]))
        throw std::logic_error(std::string(opname) + ": reflected sequence is not a gallery");
      out.moves.push_back(Move::cross);
    }
  }
  return out;
}

}  // namespace

Gallery fold_onto_base(const RootSystem& rs, const Gallery& g, const OutcropSpec& outcrop) {
  if (outcrop.empty()) return g;
  return reflect_intervals(rs, g, outcrop, /*want_far=*/true, "fold_onto_base");
}

Gallery unfold_from_base(const RootSystem& rs, const Gallery& g, const OutcropSpec& ingrowth) {
  if (ingrowth.empty()) return g;
  return reflect_intervals(rs, g, ingrowth, /*want_far=*/false, "unfold_from_base");
}

bool is_positively_folded(const RootSystem& rs, const Gallery& g, const Chimney& c) {
  AffineWeylElement cur = g.first_alcove;
  for (std::size_t i = 0; i < g.moves.size(); ++i) {
    if (g.moves[i] == Move::fold) {
      if (orientation_sign(rs, c, cur, g.spec.word[i]) != +1) return false;
    } else {
      cur = compose(cur, generator(rs, g.spec.word[i]));
    }
  }
  return true;
}

}  // namespace shadows
