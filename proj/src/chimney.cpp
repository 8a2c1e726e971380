#include "shadows/chimney.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace shadows {

Chimney alcove_chimney(const RootSystem& rs, const AffineWeylElement& y) {
  Chimney c;
  for (int i = 1; i <= rs.rank; ++i) c.J.push_back(i);
  c.y = y;
  return c;
}

bool is_full_J(const RootSystem& rs, const Chimney& c) {
  return static_cast<int>(c.J.size()) == rs.rank;
}

bool root_in_sub_system(const RootSystem& rs, const std::vector<int>& J, int root_index) {
  const IntVector& coords = rs.positive_roots.at(root_index).root;
  for (int i = 0; i < rs.rank; ++i) {
    if (coords[i] == 0) continue;
    if (std::find(J.begin(), J.end(), i + 1) == J.end()) return false;
  }
  return true;
}

bool contains_half_apartment(const RootSystem& rs, const Chimney& c, const HalfApartment& h) {
  HalfApartment local = act(rs, inverse(c.y), h);
  Int k = local.wall.level;
  if (root_in_sub_system(rs, c.J, local.wall.root_index))
    return local.side > 0 ? k <= 0 : k >= 1;
  return local.side < 0;
}

int positive_side(const RootSystem& rs, const Chimney& c, const Hyperplane& h) {
  // Exactly one of the two sides belongs to the chimney; positive is the other.
  bool plus_in = contains_half_apartment(rs, c, HalfApartment{h, +1});
  return plus_in ? -1 : +1;
}

int orientation_sign(const RootSystem& rs, const Chimney& c, const AffineWeylElement& alcove,
                     int panel_letter) {
  Hyperplane h = wall(rs, alcove, panel_letter);
  return alcove_side(rs, alcove, h) == positive_side(rs, c, h) ? +1 : -1;
}

std::vector<HalfApartment> sector_half_apartments(const RootSystem& rs, const Chimney& c) {
  std::vector<HalfApartment> out;
  for (int g = 0; g < rs.num_positive_roots(); ++g) {
    if (root_in_sub_system(rs, c.J, g)) {
      out.push_back(act(rs, c.y, HalfApartment{Hyperplane{g, 0}, +1}));
      out.push_back(act(rs, c.y, HalfApartment{Hyperplane{g, 1}, -1}));
    } else {
      out.push_back(act(rs, c.y, HalfApartment{Hyperplane{g, 0}, -1}));
    }
  }
  return out;
}

namespace {

// Direction nu in the coroot lattice with <alpha_j, nu> = 0 for j in J and
// < 0 otherwise, with minimal positive scaling.
IntVector sector_direction(const RootSystem& rs, const std::vector<int>& J) {
  RatVector r(rs.rank);
  for (int i = 0; i < rs.rank; ++i) r[i] = Rational(0);
  for (int j = 1; j <= rs.rank; ++j) {
    if (std::find(J.begin(), J.end(), j) != J.end()) continue;
    for (int i = 0; i < rs.rank; ++i) r[i] -= rs.cartan_inverse(i, j - 1);
  }
  Int scale = 1;
  for (int i = 0; i < rs.rank; ++i) scale = std::lcm(scale, r[i].den());
  IntVector nu(rs.rank);
  for (int i = 0; i < rs.rank; ++i) nu[i] = r[i].num() * (scale / r[i].den());
  return nu;
}

struct RayEvent {
  Rational t;
  int root_index;
  Int level;
};

// Crossing events of the ray p0 + t*d for t in (from, to], sorted by t.
std::vector<RayEvent> ray_events(const RootSystem& rs, const RatVector& p0, const IntVector& d,
                                 Int from, Int to) {
  std::vector<RayEvent> events;
  for (int g = 0; g < rs.num_positive_roots(); ++g) {
    Int slope = pairing(rs, g, d);
    if (slope == 0) continue;
    Rational a = pairing(rs, g, p0);
    // Levels m with (m - a)/slope in (from, to]. The endpoints a + k*slope are
    // never integers (a is a barycenter pairing), so both bounds are open.
    Rational low = a + Rational(from * slope);
    Rational high = a + Rational(to * slope);
    if (slope < 0) std::swap(low, high);
    for (Int m = low.floor() + 1; m <= high.floor(); ++m) {
      Rational t = (Rational(m) - a) / Rational(slope);
      if (t.is_integer()) throw std::logic_error("ray crossing at a period boundary");
      events.push_back(RayEvent{t, g, m});
    }
  }
  std::sort(events.begin(), events.end(), [](const RayEvent& x, const RayEvent& y) {
    if (x.t != y.t) return x.t < y.t;
    if (x.root_index != y.root_index) return x.root_index < y.root_index;
    return x.level < y.level;
  });
  return events;
}

std::vector<Hyperplane> walls_of_word(const RootSystem& rs, const std::vector<int>& word) {
  std::vector<Hyperplane> out;
  AffineWeylElement z = identity(rs);
  for (int s : word) {
    out.push_back(wall(rs, z, s));
    z = compose(z, generator(rs, s));
  }
  return out;
}

}  // namespace

DeepAlcove deep_alcove(const RootSystem& rs, const Chimney& c, Int radius) {
  if (radius < 0) throw std::invalid_argument("deep_alcove: radius must be >= 0");
  DeepAlcove out;
  if (is_full_J(rs, c)) {
    out.element = c.y;
    out.letters = canonical_word(rs, c.y);
    out.crossed = walls_of_word(rs, out.letters);
    out.periods = 0;
    return out;
  }

  IntVector nu = sector_direction(rs, c.J);
  RatVector p0 = apply(c.y, rs.barycenter);
  IntVector d = c.y.finite.matrix * nu;

  std::vector<int> ray_letters;
  std::vector<Hyperplane> ray_walls;
  AffineWeylElement z = c.y;
  Int period = 0;
  const Int period_cap = radius + length(rs, c.y) + 8;
  while (true) {
    if (period > period_cap) throw std::logic_error("deep_alcove: did not stabilize");
    auto events = ray_events(rs, p0, d, period, period + 1);
    bool all_deep = true;
    for (const auto& e : events) {
      Int abs_level = e.level < 0 ? -e.level : e.level;
      if (abs_level <= radius + 1) {
        all_deep = false;
        break;
      }
    }
    if (all_deep) break;
    // Process tie groups: walls crossing at equal t form a pencil; cross them
    // one panel at a time, smallest letter first.
    std::size_t i = 0;
    while (i < events.size()) {
      std::size_t j = i;
      while (j < events.size() && events[j].t == events[i].t) ++j;
      std::vector<Hyperplane> remaining;
      for (std::size_t k = i; k < j; ++k)
        remaining.push_back(Hyperplane{events[k].root_index, events[k].level});
      while (!remaining.empty()) {
        bool stepped = false;
        for (int s = 0; s <= rs.rank && !stepped; ++s) {
          Hyperplane w = wall(rs, z, s);
          auto it = std::find(remaining.begin(), remaining.end(), w);
          if (it == remaining.end()) continue;
          ray_letters.push_back(s);
          ray_walls.push_back(w);
          z = compose(z, generator(rs, s));
          remaining.erase(it);
          stepped = true;
        }
        if (!stepped) throw std::logic_error("deep_alcove: stuck crossing a wall pencil");
      }
      i = j;
    }
    ++period;
  }

  AffineWeylElement shift{IntVector(period * nu),
                          FiniteWeylElement{IntMatrix::Identity(rs.rank, rs.rank)}};
  out.element = compose(c.y, shift);
  out.periods = period;
  if (!(z == out.element)) throw std::logic_error("deep_alcove: ray walk mismatch");

  std::vector<int> prefix = canonical_word(rs, c.y);
  if (length(rs, out.element) ==
      static_cast<Int>(prefix.size()) + static_cast<Int>(ray_letters.size())) {
    out.letters = prefix;
    out.letters.insert(out.letters.end(), ray_letters.begin(), ray_letters.end());
  } else {
    // Prefixing y's word is not reduced for this y; any reduced word of the
    // deep element folds to the same shadow.
    out.letters = canonical_word(rs, out.element);
  }
  out.crossed = walls_of_word(rs, out.letters);
  return out;
}

}  // namespace shadows
