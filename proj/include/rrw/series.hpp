#pragma once

// Exact arithmetic for weight polynomials in t, w, v, x and for power series
// in q truncated at a fixed order, whose coefficients are weight polynomials.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rrw/checked.hpp"

namespace rrw {

enum class Weight : int { t = 0, w = 1, v = 2, x = 3 };

inline constexpr int kWeightCount = 4;
inline constexpr std::array<Weight, kWeightCount> kWeights{Weight::t, Weight::w, Weight::v, Weight::x};
inline constexpr std::array<char, kWeightCount> kWeightNames{'t', 'w', 'v', 'x'};

/// Product t^a w^b v^c x^d; the all-zero exponent vector is the constant 1.
class WeightMonomial {
 public:
  using Exponents = std::array<int, kWeightCount>;

  constexpr WeightMonomial() = default;
  explicit WeightMonomial(Exponents exponents);

  static WeightMonomial of(Weight var, int power = 1);

  const Exponents& exponents() const { return exps_; }
  int exponent(Weight var) const { return exps_[static_cast<int>(var)]; }
  int degree() const;
  bool is_one() const { return degree() == 0; }

  friend WeightMonomial operator*(const WeightMonomial& a, const WeightMonomial& b);
  friend auto operator<=>(const WeightMonomial&, const WeightMonomial&) = default;

 private:
  Exponents exps_{};
};

/// Sparse polynomial in the weights with exact 64-bit coefficients. Zero
/// coefficients are never stored; overflow throws ArithmeticOverflow.
class WeightPolynomial {
 public:
  using Terms = std::map<WeightMonomial, Coeff>;

  WeightPolynomial() = default;
  WeightPolynomial(Coeff constant);  // NOLINT(google-explicit-constructor)
  WeightPolynomial(const WeightMonomial& monomial, Coeff coeff = 1);

  static WeightPolynomial variable(Weight var, int power = 1) { return {WeightMonomial::of(var, power)}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Coeff coefficient(const WeightMonomial& m) const;

  void add_term(const WeightMonomial& m, Coeff c);
  /// *this += m * p; the hot path of series division.
  void add_scaled(const WeightMonomial& m, const WeightPolynomial& p);
  WeightPolynomial times(const WeightMonomial& m) const;

  WeightPolynomial& operator+=(const WeightPolynomial& other);
  WeightPolynomial& operator-=(const WeightPolynomial& other);
  WeightPolynomial& operator*=(const WeightPolynomial& other);

  friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
  friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) { return a -= b; }
  friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);
  friend WeightPolynomial operator-(const WeightPolynomial& a);
  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

 private:
  Terms terms_;
};

/// Polynomial in q whose coefficients are weight polynomials. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(WeightPolynomial constant);  // NOLINT(google-explicit-constructor)
  QPolynomial(Coeff constant) : QPolynomial(WeightPolynomial(constant)) {}  // NOLINT
  explicit QPolynomial(std::vector<WeightPolynomial> coeffs);

  static QPolynomial monomial(int q_degree, WeightPolynomial coeff = 1);

  /// Highest q-degree with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest q-degree with a nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const WeightPolynomial> coefficients() const { return coeffs_; }
  const WeightPolynomial& operator[](int d) const;

  void add(int d, const WeightPolynomial& c);
  QPolynomial shifted(int by) const;
  /// Divide by q^by; every dropped coefficient must be zero.
  QPolynomial unshifted(int by) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();
  std::vector<WeightPolynomial> coeffs_;
};

/// The factor (1 - weight * q^q_exp) of a denominator; q_exp >= 1.
class DenominatorFactor {
 public:
  DenominatorFactor(WeightMonomial weight, int q_exp);
  explicit DenominatorFactor(int q_exp) : DenominatorFactor(WeightMonomial{}, q_exp) {}

  const WeightMonomial& weight() const { return weight_; }
  int q_exp() const { return q_exp_; }

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;

 private:
  WeightMonomial weight_;
  int q_exp_;
};

/// q^q_shift * numerator / prod (1 - mu_i q^e_i).
struct RationalTerm {
  int q_shift = 0;
  QPolynomial numerator = 1;
  std::vector<DenominatorFactor> denominator;

  RationalTerm() = default;
  RationalTerm(int q_shift, QPolynomial numerator, std::vector<DenominatorFactor> denominator = {});

  /// Moves the lowest power of q out of the numerator into q_shift.
  RationalTerm normalized() const;

  friend bool operator==(const RationalTerm&, const RationalTerm&) = default;
};

/// Power series in q known exactly up to and including q^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<WeightPolynomial> coeffs);

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  static TruncatedSeries one(int order);
  static TruncatedSeries from_polynomial(const QPolynomial& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const WeightPolynomial> coefficients() const { return coeffs_; }
  const WeightPolynomial& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  WeightPolynomial& at(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  TruncatedSeries truncated(int order) const;
  /// Multiplies in place by 1 / (1 - mu q^e).
  TruncatedSeries& divide_by(const DenominatorFactor& f);
  /// Multiplies in place by a polynomial, dropping degrees beyond the order.
  TruncatedSeries& multiply_by(const QPolynomial& p);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<WeightPolynomial> coeffs_;
};

TruncatedSeries expand_inverse_factor(const DenominatorFactor& f, int order);
TruncatedSeries expand(const RationalTerm& term, int order);
TruncatedSeries expand(std::span<const RationalTerm> terms, int order);

struct SeriesMismatch {
  int degree;
  WeightPolynomial lhs;
  WeightPolynomial rhs;
};

struct SeriesComparison {
  int order;
  std::optional<SeriesMismatch> mismatch;
  bool equal() const { return !mismatch.has_value(); }
};

/// Compares two series up to the smaller of their orders and reports the
/// lowest differing q-degree.
SeriesComparison compare(const TruncatedSeries& a, const TruncatedSeries& b);

/// What a weight variable is replaced by: zero, or a monomial weight * q^q_exp.
struct WeightImage {
  bool zero = false;
  WeightMonomial monomial;
  int q_exp = 0;

  static WeightImage vanish() { return {true, {}, 0}; }
  static WeightImage unit() { return {}; }
  static WeightImage q_power(int e) { return {false, {}, e}; }
  static WeightImage of(WeightMonomial m, int q_exp = 0) { return {false, m, q_exp}; }
  friend bool operator==(const WeightImage&, const WeightImage&) = default;
};

/// Simultaneous replacement of weight variables. Unset variables map to
/// themselves.
class Substitution {
 public:
  Substitution() = default;

  Substitution& set(Weight var, WeightImage image);
  const std::optional<WeightImage>& image(Weight var) const { return images_[static_cast<int>(var)]; }
  bool is_identity() const;

  /// nullopt when the monomial vanishes; otherwise (monomial, extra q-degree).
  std::optional<std::pair<WeightMonomial, int>> apply(const WeightMonomial& m) const;
  QPolynomial apply(const WeightPolynomial& p) const;
  QPolynomial apply(const QPolynomial& p) const;
  /// nullopt when the factor collapses to 1.
  std::optional<DenominatorFactor> apply(const DenominatorFactor& f) const;
  RationalTerm apply(const RationalTerm& term) const;
  TruncatedSeries apply(const TruncatedSeries& s) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::array<std::optional<WeightImage>, kWeightCount> images_{};
};

/// Every weight variable set to 1.
Substitution erase_weights();

}  // namespace rrw
