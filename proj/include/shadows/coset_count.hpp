#pragma once

#include <string>
#include <vector>

#include "shadows/shadow.hpp"

namespace shadows {

/// Integer-coefficient polynomial in the formal variable q (the residue-field
/// cardinality). Invariant: no trailing zero coefficients; zero is the empty
/// list.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one() { return QPolynomial({1}); }
  /// q^a * (q-1)^b, expanded.
  static QPolynomial monomial(Int q_power, Int q_minus_one_power);

  const std::vector<Int>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Int degree() const { return static_cast<Int>(coeffs_.size()) - 1; }

  Int evaluate(Int q) const;
  /// Human form such as "q^2*(q-1)" when the polynomial factors that way,
  /// otherwise the expanded form like "q^2 - q + 1".
  std::string to_string() const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }

  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Int> coeffs_;
};

/// Per-panel classification of a positively folded gallery: crossings into
/// the positive side carry q labels, crossings out of it one label, folds q-1
/// labels.
struct WalkStats {
  Int pos_crossings = 0;  // negative-to-positive
  Int neg_crossings = 0;  // positive-to-negative
  Int folds = 0;
};

WalkStats walk_stats(const RootSystem& rs, const Gallery& g, const Chimney& c);
QPolynomial walk_monomial(const WalkStats& stats);

/// |IxI intersect (I_P)^y z I| as a polynomial in the residue-field
/// cardinality: sum of labeled-walk monomials over positively folded galleries
/// of type x from the base alcove to z*base.
QPolynomial count_iwahori(const RootSystem& rs, const AffineWeylElement& x,
                          const AffineWeylElement& z, const Chimney& c, Int cap = 14);

/// Same, with the gallery type given by an explicit word.
QPolynomial count_iwahori_word(const RootSystem& rs, const std::vector<int>& word,
                               const AffineWeylElement& z, const Chimney& c, Int cap = 14);

/// |K(sigma) x K(tau) intersect (I_P)^y z K(tau)|: the union over w in W_sigma
/// of walks of type (word of w)(word of x) from the base alcove to z*base.
/// Requires x (W_sigma, W_tau)-reduced.
QPolynomial count_parahoric(const RootSystem& rs, const FaceType& sigma, const FaceType& tau,
                            const AffineWeylElement& x, const AffineWeylElement& z,
                            const Chimney& c, Int cap = 14);

/// |K t^lambda K intersect (I_P)^y t^mu K| for dominant lambda: walks of the
/// types w * x_lambda ending at any alcove containing mu.
QPolynomial count_grassmannian(const RootSystem& rs, const IntVector& lambda, const IntVector& mu,
                               const Chimney& c, Int cap = 14);

/// Nonemptiness of the parahoric double coset intersection: membership of
/// z*tau in the shadow of x*tau from sigma.
bool intersection_nonempty(const RootSystem& rs, const FaceType& sigma, const FaceType& tau,
                           const AffineWeylElement& x, const AffineWeylElement& z,
                           const Chimney& c);

}  // namespace shadows
