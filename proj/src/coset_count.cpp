#include "shadows/coset_count.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shadows {

QPolynomial QPolynomial::monomial(Int q_power, Int q_minus_one_power) {
  std::vector<Int> base(q_power + 1, 0);
  base[q_power] = 1;
  QPolynomial p(std::move(base));
  QPolynomial qm1({-1, 1});
  for (Int i = 0; i < q_minus_one_power; ++i) p = p * qm1;
  return p;
}

Int QPolynomial::evaluate(Int q) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return QPolynomial();
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return QPolynomial(std::move(c));
}

namespace {

std::string expanded_string(const std::vector<Int>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string s;
  for (Int i = static_cast<Int>(coeffs.size()) - 1; i >= 0; --i) {
    Int c = coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) {
      s += c > 0 ? " + " : " - ";
      c = c > 0 ? c : -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    std::string term;
    if (i == 0) {
      term = std::to_string(c);
    } else {
      if (c != 1) term = std::to_string(c) + "*";
      term += i == 1 ? "q" : "q^" + std::to_string(i);
    }
    s += term;
  }
  return s.empty() ? "0" : s;
}

// Divides p by q^a (q-1)^b as far as it goes; returns {a, b, rest}.
struct Factored {
  Int q_power = 0;
  Int qm1_power = 0;
  std::vector<Int> rest;
};

Factored factor_out(std::vector<Int> coeffs) {
  Factored f;
  while (!coeffs.empty() && coeffs.front() == 0) {
    coeffs.erase(coeffs.begin());
    ++f.q_power;
  }
  // Synthetic division by (q - 1) while the remainder (= value at 1) is zero.
  while (!coeffs.empty()) {
    Int at_one = 0;
    for (Int c : coeffs) at_one += c;
    if (at_one != 0 || coeffs.size() < 2) break;
    std::vector<Int> quo(coeffs.size() - 1, 0);
    Int carry = 0;
    for (Int i = static_cast<Int>(coeffs.size()) - 1; i >= 1; --i) {
      quo[i - 1] = coeffs[i] + carry;
      carry = quo[i - 1];
    }
    coeffs = quo;
    ++f.qm1_power;
  }
  f.rest = coeffs;
  return f;
}

}  // namespace

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  Factored f = factor_out(coeffs_);
  bool rest_is_one = f.rest.size() == 1 && f.rest[0] == 1;
  if (f.q_power == 0 && f.qm1_power == 1 && rest_is_one) return "q-1";
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += "*";
    s += part;
  };
  if (f.q_power == 1) append("q");
  if (f.q_power > 1) append("q^" + std::to_string(f.q_power));
  if (f.qm1_power == 1) append("(q-1)");
  if (f.qm1_power > 1) append("(q-1)^" + std::to_string(f.qm1_power));
  if (!rest_is_one) {
    std::string inner = expanded_string(f.rest);
    append(s.empty() ? inner : "(" + inner + ")");
  }
  return s.empty() ? "1" : s;
}

WalkStats walk_stats(const RootSystem& rs, const Gallery& g, const Chimney& c) {
  if (!is_positively_folded(rs, g, c))
    throw std::invalid_argument("walk_stats: gallery is not positively folded");
  WalkStats stats;
  AffineWeylElement cur = g.first_alcove;
  for (std::size_t i = 0; i < g.moves.size(); ++i) {
    int letter = g.spec.word[i];
    if (g.moves[i] == Move::fold) {
      ++stats.folds;
      continue;
    }
    Hyperplane h = wall(rs, cur, letter);
    int from_side = alcove_side(rs, cur, h);
    cur = compose(cur, generator(rs, letter));
    if (from_side == positive_side(rs, c, h))
      ++stats.neg_crossings;  // leaving the positive side
    else
      ++stats.pos_crossings;
  }
  return stats;
}

QPolynomial walk_monomial(const WalkStats& stats) {
  return QPolynomial::monomial(stats.pos_crossings, stats.folds);
}

QPolynomial count_iwahori_word(const RootSystem& rs, const std::vector<int>& word,
                               const AffineWeylElement& z, const Chimney& c, Int cap) {
  GalleryTypeSpec spec{alcove_face(), word, alcove_face()};
  EndSimplex target = normalize_end_simplex(rs, z, alcove_face());
  QPolynomial total;
  for (const auto& g : enumerate_pf_galleries(rs, spec, c, target, cap))
    total += walk_monomial(walk_stats(rs, g, c));
  return total;
}

QPolynomial count_iwahori(const RootSystem& rs, const AffineWeylElement& x,
                          const AffineWeylElement& z, const Chimney& c, Int cap) {
  return count_iwahori_word(rs, canonical_word(rs, x), z, c, cap);
}

QPolynomial count_parahoric(const RootSystem& rs, const FaceType& sigma, const FaceType& tau,
                            const AffineWeylElement& x, const AffineWeylElement& z,
                            const Chimney& c, Int cap) {
  if (!is_reduced(rs, x, sigma, tau)) {
    auto rep = min_coset_rep(rs, x, sigma, tau);
    auto word = canonical_word(rs, rep);
    std::string w;
    for (int s : word) w += (w.empty() ? "" : ",") + std::to_string(s);
    throw std::invalid_argument(
        "count_parahoric: x is not (W_sigma, W_tau)-reduced; use the representative [" + w + "]");
  }
  std::vector<int> xword = canonical_word(rs, x);
  QPolynomial total;
  for (const auto& w : parabolic_elements(rs, sigma)) {
    std::vector<int> word = canonical_word(rs, w);
    word.insert(word.end(), xword.begin(), xword.end());
    total += count_iwahori_word(rs, word, z, c, cap);
  }
  return total;
}

QPolynomial count_grassmannian(const RootSystem& rs, const IntVector& lambda, const IntVector& mu,
                               const Chimney& c, Int cap) {
  if (!is_dominant(rs, lambda)) {
    IntVector dom = dominant_representative(rs, lambda);
    std::string d;
    for (Eigen::Index i = 0; i < dom.size(); ++i)
      d += (d.empty() ? "" : ",") + std::to_string(dom[i]);
    throw std::invalid_argument("count_grassmannian: lambda must be dominant; its dominant "
                                "representative is [" + d + "]");
  }
  AffineWeylElement t_lambda{lambda, FiniteWeylElement{IntMatrix::Identity(rs.rank, rs.rank)}};
  AffineWeylElement x_lambda = min_coset_rep(rs, t_lambda, alcove_face(), vertex_face(rs));
  std::vector<int> xword = canonical_word(rs, x_lambda);
  std::set<AffineWeylElement, ElementLess> star;
  for (const auto& z : star_alcoves(rs, mu)) star.insert(z);
  QPolynomial total;
  for (const auto& w : parabolic_elements(rs, vertex_face(rs))) {
    std::vector<int> word = canonical_word(rs, w);
    word.insert(word.end(), xword.begin(), xword.end());
    GalleryTypeSpec spec{alcove_face(), word, alcove_face()};
    for (const auto& g : enumerate_pf_galleries(rs, spec, c, std::nullopt, cap)) {
      if (star.count(end_simplex(rs, g).rep) == 0) continue;
      total += walk_monomial(walk_stats(rs, g, c));
    }
  }
  return total;
}

bool intersection_nonempty(const RootSystem& rs, const FaceType& sigma, const FaceType& tau,
                           const AffineWeylElement& x, const AffineWeylElement& z,
                           const Chimney& c) {
  ShadowResult sh = shadow(rs, x, sigma, tau, c);
  return sh.contains(normalize_end_simplex(rs, z, tau));
}

}  // namespace shadows
