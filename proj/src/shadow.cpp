#include "shadows/shadow.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace shadows {

namespace {

AffineWeylElement reflection_in(const RootSystem& rs, const Hyperplane& h) {
  const PositiveRoot& pr = rs.positive_roots.at(h.root_index);
  IntMatrix m = IntMatrix::Identity(rs.rank, rs.rank);
  IntVector row = rs.cartan.transpose() * pr.root;
  m -= pr.coroot * row.transpose();
  return AffineWeylElement{IntVector(h.level * pr.coroot), FiniteWeylElement{m}};
}

void require_reduced(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                     const FaceType& tau) {
  if (!is_reduced(rs, x, sigma, tau)) {
    auto rep = min_coset_rep(rs, x, sigma, tau);
    auto word = canonical_word(rs, rep);
    std::string w;
    for (int s : word) w += (w.empty() ? "" : ",") + std::to_string(s);
    throw std::invalid_argument(
        "x is not (W_sigma, W_tau)-reduced; use the double coset representative [" + w + "]");
  }
}

}  // namespace

bool ShadowResult::contains(const EndSimplex& s) const {
  return std::binary_search(simplices.begin(), simplices.end(), s, EndSimplexLess{});
}

bool ShadowResult::same_set(const ShadowResult& o) const {
  if (simplices.size() != o.simplices.size()) return false;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    if (!(simplices[i] == o.simplices[i])) return false;
  return true;
}

ShadowResult make_shadow_set(std::vector<EndSimplex> simplices) {
  std::sort(simplices.begin(), simplices.end(), EndSimplexLess{});
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  ShadowResult r;
  r.simplices = std::move(simplices);
  return r;
}

ShadowResult shadow_base(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                         const FaceType& tau) {
  require_reduced(rs, x, sigma, tau);
  std::vector<EndSimplex> out;
  for (const auto& w : parabolic_elements(rs, sigma))
    out.push_back(normalize_end_simplex(rs, compose(w, x), tau));
  return make_shadow_set(std::move(out));
}

ShadowResult shadow_step(const RootSystem& rs, const ShadowResult& s, const Hyperplane& h,
                         int far_side) {
  AffineWeylElement r = reflection_in(rs, h);
  std::vector<EndSimplex> out = s.simplices;
  for (const auto& simplex : s.simplices) {
    if (alcove_side(rs, simplex.rep, h) != far_side) continue;
    out.push_back(normalize_end_simplex(rs, compose(r, simplex.rep), simplex.face));
  }
  return make_shadow_set(std::move(out));
}

ShadowResult fold_through(const RootSystem& rs, ShadowResult s, const std::vector<int>& letters) {
  AffineWeylElement z = identity(rs);
  for (int letter : letters) {
    Hyperplane h = wall(rs, z, letter);
    z = compose(z, generator(rs, letter));
    std::size_t before = s.simplices.size();
    s = shadow_step(rs, s, h, alcove_side(rs, z, h));
    if (s.simplices.size() < before) throw std::logic_error("shadow recursion lost simplices");
  }
  return s;
}

ShadowResult shadow(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                    const FaceType& tau, const AffineWeylElement& y) {
  return fold_through(rs, shadow_base(rs, x, sigma, tau), canonical_word(rs, y));
}

ShadowResult shadow(const RootSystem& rs, const AffineWeylElement& x, const FaceType& sigma,
                    const FaceType& tau, const Chimney& c) {
  ShadowResult base = shadow_base(rs, x, sigma, tau);
  Int radius = longest_parabolic_length(rs, sigma) + length(rs, x);
  DeepAlcove deep = deep_alcove(rs, c, radius);
  return fold_through(rs, std::move(base), deep.letters);
}

std::vector<Gallery> enumerate_pf_galleries(const RootSystem& rs, const GalleryTypeSpec& spec,
                                            const Chimney& c,
                                            const std::optional<EndSimplex>& end_filter,
                                            Int cap) {
  Int worst = longest_parabolic_length(rs, spec.start) + static_cast<Int>(spec.word.size());
  if (worst > cap)
    throw std::invalid_argument("enumeration would exceed the cap of " + std::to_string(cap) +
                                " letters (need " + std::to_string(worst) + ")");

  std::vector<Gallery> out;
  std::vector<Move> moves(spec.word.size());

  struct Dfs {
    const RootSystem& rs;
    const GalleryTypeSpec& spec;
    const Chimney& c;
    const std::optional<EndSimplex>& end_filter;
    std::vector<Gallery>& out;
    std::vector<Move>& moves;
    AffineWeylElement start;

    void run(const AffineWeylElement& z, std::size_t i) {
      if (i == spec.word.size()) {
        if (end_filter && !(normalize_end_simplex(rs, z, spec.end) == *end_filter)) return;
        out.push_back(Gallery{spec, start, moves});
        return;
      }
      int letter = spec.word[i];
      moves[i] = Move::cross;
      run(compose(z, generator(rs, letter)), i + 1);
      if (orientation_sign(rs, c, z, letter) == +1) {
        moves[i] = Move::fold;
        run(z, i + 1);
      }
    }
  };

  for (const auto& w : parabolic_elements(rs, spec.start)) {
    Dfs dfs{rs, spec, c, end_filter, out, moves, w};
    dfs.run(w, 0);
  }
  return out;
}

ShadowResult shadow_oracle(const RootSystem& rs, const AffineWeylElement& x,
                           const FaceType& sigma, const FaceType& tau, const Chimney& c,
                           Int cap) {
  require_reduced(rs, x, sigma, tau);
  GalleryTypeSpec spec{sigma, canonical_word(rs, x), tau};
  std::map<EndSimplex, Int, EndSimplexLess> counts;
  for (const auto& g : enumerate_pf_galleries(rs, spec, c, std::nullopt, cap))
    counts[end_simplex(rs, g)] += 1;
  ShadowResult r;
  r.multiplicities.emplace();
  for (const auto& [simplex, count] : counts) {
    r.simplices.push_back(simplex);
    r.multiplicities->push_back(count);
  }
  return r;
}

}  // namespace shadows
