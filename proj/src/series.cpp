#include "rrw/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rrw {

// ---------------------------------------------------------------------------
// WeightMonomial

WeightMonomial::WeightMonomial(Exponents exponents) : exps_(exponents) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("weight exponents must be non-negative");
  }
}

WeightMonomial WeightMonomial::of(Weight var, int power) {
  Exponents e{};
  e[static_cast<int>(var)] = power;
  return WeightMonomial(e);
}

int WeightMonomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

WeightMonomial operator*(const WeightMonomial& a, const WeightMonomial& b) {
  WeightMonomial r;
  for (int i = 0; i < kWeightCount; ++i) r.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
  return r;
}

// ---------------------------------------------------------------------------
// WeightPolynomial

WeightPolynomial::WeightPolynomial(Coeff constant) {
  if (constant != 0) terms_.emplace(WeightMonomial{}, constant);
}

WeightPolynomial::WeightPolynomial(const WeightMonomial& monomial, Coeff coeff) {
  if (coeff != 0) terms_.emplace(monomial, coeff);
}

Coeff WeightPolynomial::coefficient(const WeightMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void WeightPolynomial::add_term(const WeightMonomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void WeightPolynomial::add_scaled(const WeightMonomial& m, const WeightPolynomial& p) {
  if (m.is_one()) {
    *this += p;
    return;
  }
  for (const auto& [mono, c] : p.terms_) add_term(m * mono, c);
}

WeightPolynomial WeightPolynomial::times(const WeightMonomial& m) const {
  if (m.is_one()) return *this;
  WeightPolynomial r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
  return r;
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, checked_mul(c, -1));
  return *this;
}

WeightPolynomial& WeightPolynomial::operator*=(const WeightPolynomial& other) {
  *this = *this * other;
  return *this;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
  WeightPolynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, checked_mul(ca, cb));
  }
  return r;
}

WeightPolynomial operator-(const WeightPolynomial& a) {
  WeightPolynomial r;
  for (const auto& [mono, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), mono, checked_mul(c, -1));
  return r;
}

// ---------------------------------------------------------------------------
// QPolynomial

namespace {
const WeightPolynomial& zero_poly() {
  static const WeightPolynomial z;
  return z;
}
}  // namespace

QPolynomial::QPolynomial(WeightPolynomial constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<WeightPolynomial> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(int q_degree, WeightPolynomial coeff) {
  if (q_degree < 0) throw std::invalid_argument("negative q-degree");
  QPolynomial p;
  p.add(q_degree, coeff);
  return p;
}

int QPolynomial::low_degree() const {
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (!coeffs_[d].is_zero()) return static_cast<int>(d);
  }
  return -1;
}

const WeightPolynomial& QPolynomial::operator[](int d) const {
  if (d < 0 || d > degree()) return zero_poly();
  return coeffs_[static_cast<std::size_t>(d)];
}

void QPolynomial::add(int d, const WeightPolynomial& c) {
  if (d < 0) throw std::invalid_argument("negative q-degree");
  if (c.is_zero()) return;
  if (static_cast<std::size_t>(d) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(d) + 1);
  coeffs_[static_cast<std::size_t>(d)] += c;
  trim();
}

QPolynomial QPolynomial::shifted(int by) const {
  if (by < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<WeightPolynomial> c(static_cast<std::size_t>(by));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::unshifted(int by) const {
  if (by < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  if (low_degree() < by) throw std::invalid_argument("cannot divide by q^" + std::to_string(by));
  return QPolynomial(std::vector<WeightPolynomial>(coeffs_.begin() + by, coeffs_.end()));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<WeightPolynomial> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

QPolynomial operator-(const QPolynomial& a) {
  QPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

// ---------------------------------------------------------------------------
// DenominatorFactor / RationalTerm

DenominatorFactor::DenominatorFactor(WeightMonomial weight, int q_exp) : weight_(weight), q_exp_(q_exp) {
  if (q_exp < 1) {
    throw InvalidFactor("denominator factor (1 - mu*q^" + std::to_string(q_exp) +
                        ") has no invertible constant term");
  }
}

RationalTerm::RationalTerm(int q_shift, QPolynomial numerator, std::vector<DenominatorFactor> denominator)
    : q_shift(q_shift), numerator(std::move(numerator)), denominator(std::move(denominator)) {
  if (q_shift < 0) throw std::invalid_argument("negative q_shift");
}

RationalTerm RationalTerm::normalized() const {
  RationalTerm r = *this;
  const int low = numerator.low_degree();
  if (low > 0) {
    r.q_shift = checked_add(q_shift, low);
    r.numerator = numerator.unshifted(low);
  }
  return r;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<WeightPolynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("coefficient count must be order + 1");
  }
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const QPolynomial& p, int order) {
  TruncatedSeries s(order);
  const int top = std::min(order, p.degree());
  for (int d = 0; d <= top; ++d) s.coeffs_[static_cast<std::size_t>(d)] = p[d];
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(order, std::vector<WeightPolynomial>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries& TruncatedSeries::divide_by(const DenominatorFactor& f) {
  // s / (1 - mu q^e) = r with r[n] = s[n] + mu r[n - e]; ascending n reuses r.
  const int e = f.q_exp();
  for (int n = e; n <= order(); ++n) {
    const auto& prev = coeffs_[static_cast<std::size_t>(n - e)];
    if (prev.is_zero()) continue;
    coeffs_[static_cast<std::size_t>(n)].add_scaled(f.weight(), prev);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::multiply_by(const QPolynomial& p) {
  std::vector<WeightPolynomial> r(coeffs_.size());
  for (int i = 0; i <= order(); ++i) {
    const auto& a = coeffs_[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    for (int j = 0; j <= p.degree() && i + j <= order(); ++j) {
      if (p[j].is_zero()) continue;
      r[static_cast<std::size_t>(i + j)] += a * p[j];
    }
  }
  coeffs_ = std::move(r);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  return r += b;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  return r -= b;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries r(order);
  for (int i = 0; i <= order; ++i) {
    const auto& ai = a[i];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j].is_zero()) continue;
      r.at(i + j) += ai * b[j];
    }
  }
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries expand_inverse_factor(const DenominatorFactor& f, int order) {
  return TruncatedSeries::one(order).divide_by(f);
}

TruncatedSeries expand(const RationalTerm& term, int order) {
  TruncatedSeries out(order);
  if (term.q_shift > order) return out;
  const int inner = order - term.q_shift;
  TruncatedSeries s = TruncatedSeries::from_polynomial(term.numerator, inner);
  for (const auto& f : term.denominator) s.divide_by(f);
  for (int n = 0; n <= inner; ++n) out.at(n + term.q_shift) = s[n];
  return out;
}

TruncatedSeries expand(std::span<const RationalTerm> terms, int order) {
  TruncatedSeries sum(order);
  for (const auto& t : terms) sum += expand(t, order);
  return sum;
}

SeriesComparison compare(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int n = 0; n <= order; ++n) {
    if (a[n] != b[n]) return {order, SeriesMismatch{n, a[n], b[n]}};
  }
  return {order, std::nullopt};
}

// ---------------------------------------------------------------------------
// Substitution

Substitution& Substitution::set(Weight var, WeightImage image) {
  if (image.q_exp < 0) throw std::invalid_argument("weight image must have a non-negative q-degree");
  images_[static_cast<int>(var)] = image;
  return *this;
}

bool Substitution::is_identity() const {
  return std::all_of(images_.begin(), images_.end(), [](const auto& i) { return !i.has_value(); });
}

std::optional<std::pair<WeightMonomial, int>> Substitution::apply(const WeightMonomial& m) const {
  WeightMonomial::Exponents kept{};
  WeightMonomial result;
  int q = 0;
  for (int i = 0; i < kWeightCount; ++i) {
    const int e = m.exponents()[i];
    if (e == 0) continue;
    const auto& img = images_[i];
    if (!img) {
      kept[i] = e;
      continue;
    }
    if (img->zero) return std::nullopt;
    for (int k = 0; k < e; ++k) result = result * img->monomial;
    q = checked_add(q, static_cast<int>(checked_mul(static_cast<Coeff>(img->q_exp), e)));
  }
  return std::pair{result * WeightMonomial(kept), q};
}

QPolynomial Substitution::apply(const WeightPolynomial& p) const {
  QPolynomial r;
  for (const auto& [mono, c] : p.terms()) {
    if (auto img = apply(mono)) r.add(img->second, WeightPolynomial(img->first, c));
  }
  return r;
}

QPolynomial Substitution::apply(const QPolynomial& p) const {
  QPolynomial r;
  for (int d = 0; d <= p.degree(); ++d) {
    if (p[d].is_zero()) continue;
    r += apply(p[d]).shifted(d);
  }
  return r;
}

std::optional<DenominatorFactor> Substitution::apply(const DenominatorFactor& f) const {
  auto img = apply(f.weight());
  if (!img) return std::nullopt;
  return DenominatorFactor(img->first, checked_add(f.q_exp(), img->second));
}

RationalTerm Substitution::apply(const RationalTerm& term) const {
  if (is_identity()) return term;
  RationalTerm r;
  r.q_shift = term.q_shift;
  r.numerator = apply(term.numerator);
  for (const auto& f : term.denominator) {
    if (auto g = apply(f)) r.denominator.push_back(*g);
  }
  return r.normalized();
}

TruncatedSeries Substitution::apply(const TruncatedSeries& s) const {
  if (is_identity()) return s;
  TruncatedSeries r(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    const QPolynomial img = apply(s[n]);
    for (int d = 0; d <= img.degree() && n + d <= s.order(); ++d) r.at(n + d) += img[d];
  }
  return r;
}

Substitution erase_weights() {
  Substitution s;
  for (Weight w : kWeights) s.set(w, WeightImage::unit());
  return s;
}

}  // namespace rrw
