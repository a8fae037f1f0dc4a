// Catalog of weighted Rogers-Ramanujan identities. Each entry records its
// terms exactly as displayed; verification decides correctness.

#include <string>

#include "rrw/identities.hpp"
#include "rrw/polynomial_io.hpp"

namespace rrw {

namespace {

const WeightMonomial kT = WeightMonomial::of(Weight::t);
const WeightMonomial kW = WeightMonomial::of(Weight::w);
const WeightMonomial kV = WeightMonomial::of(Weight::v);
const WeightMonomial kX = WeightMonomial::of(Weight::x);

using Weighting = std::map<int, WeightMonomial>;
using Factors = std::vector<DenominatorFactor>;

QPolynomial poly(std::string_view text) { return parse_qpolynomial(text); }

DenominatorFactor fac(int e, WeightMonomial mu = {}) { return DenominatorFactor(mu, e); }

/// (1 - mu_from q^from) ... (1 - mu_to q^to), mu_e = 1 unless weighted.
Factors run(int from, int to, const Weighting& weighting = {}) {
  Factors out;
  for (int e = from; e <= to; ++e) {
    auto it = weighting.find(e);
    out.push_back(fac(e, it == weighting.end() ? WeightMonomial{} : it->second));
  }
  return out;
}

Factors cat(Factors a, const Factors& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// 1 + q^step + ... + q^{step (n - 1)}.
QPolynomial q_integer(int n, int step = 1) {
  QPolynomial p;
  for (int i = 0; i < n; ++i) p.add(step * i, 1);
  return p;
}

enum class Shift { triangular, square };

int shift_of(Shift s, int m) { return s == Shift::triangular ? m * (m + 1) : m * m; }

/// q^{shift(m)} / (q; q)_m with weighted factors.
TailFamily standard_tail(Shift s, int start, Weighting weighting) {
  return {start, [s, weighting](int m) { return RationalTerm(shift_of(s, m), 1, run(1, m, weighting)); }};
}

ProductSide product(std::set<int> residues, Weighting weighting = {}, std::vector<RationalTerm> prefactor = {}) {
  ProductSide p;
  p.residues = std::move(residues);
  p.weighted = std::move(weighting);
  p.prefactor = std::move(prefactor);
  p.validate();
  return p;
}

const std::set<int> kFirstResidues{1, 4};
const std::set<int> kSecondResidues{2, 3};

IdentitySpec spec(std::string id, std::string title, IdentityKind kind, std::optional<int> m) {
  IdentitySpec s;
  s.id = std::move(id);
  s.title = std::move(title);
  s.kind = kind;
  if (m) s.params["M"] = *m;
  return s;
}

CatalogEntry entry(std::string id, std::string title, IdentityKind kind,
                   std::function<IdentitySpec(std::optional<int>)> build) {
  CatalogEntry e;
  e.id = std::move(id);
  e.title = std::move(title);
  e.kind = kind;
  e.build = std::move(build);
  e.helper = kind == IdentityKind::rational;
  return e;
}

bool second_residue(int n) { return n % 5 == 2 || n % 5 == 3; }
bool first_residue(int n) { return n % 5 == 1 || n % 5 == 4; }

// --- Numerators shared between entries -------------------------------------

/// 1 + q + ... + q^{M-2} + t q^{M-1} + q^M.
QPolynomial weighted_run_second(int m) {
  QPolynomial p;
  for (int i = 0; i <= m; ++i) p.add(i, i == m - 1 ? WeightPolynomial(kT) : WeightPolynomial(1));
  return p;
}

/// 1 + q + ... + q^{M-1} + t q^M.
QPolynomial weighted_run_first(int m) {
  QPolynomial p;
  for (int i = 0; i <= m; ++i) p.add(i, i == m ? WeightPolynomial(kT) : WeightPolynomial(1));
  return p;
}

/// q^6 ([M]_q + (w - 1)(q^{M-3} + q^{M-6})) over (1 - t q^2)(1 - w q^M),
/// normalized so that small M (negative degrees) stays a polynomial.
RationalTerm two_part_second_term(int m) {
  const QPolynomial wm1 = poly("w - 1");
  QPolynomial num = q_integer(m).shifted(6) + wm1 * (QPolynomial::monomial(m + 3) + QPolynomial::monomial(m));
  return RationalTerm(0, num, {fac(2, kT), fac(m, kW)}).normalized();
}

/// q^4 ([M/2]_{q^2} + (w - 1) q^{M-4}) over (1 - t q)(1 - w q^M).
RationalTerm two_part_first_term(int m) {
  QPolynomial num = q_integer(m / 2, 2).shifted(4) + poly("w - 1") * QPolynomial::monomial(m);
  return RationalTerm(0, num, {fac(1, kT), fac(m, kW)}).normalized();
}

const QPolynomial& seven_run() {
  static const QPolynomial p = q_integer(7);
  return p;
}

const QPolynomial& nine_numerator() {
  static const QPolynomial p = poly("1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^7 + q^8 + q^10");
  return p;
}

// --- Entries ----------------------------------------------------------------

CatalogEntry classical(Classical which) {
  const bool first = which == Classical::first;
  auto e = entry(first ? "RR1" : "RR2",
                 first ? "first Rogers-Ramanujan identity" : "second Rogers-Ramanujan identity",
                 IdentityKind::product, [which](std::optional<int>) { return classical_identity(which); });
  e.baseline = which;
  return e;
}

CatalogEntry miniprop() {
  auto e = entry("miniprop", "t-refinement of the second identity, t marking parts 2", IdentityKind::product,
                 [](std::optional<int>) {
                   auto s = spec("miniprop", "", IdentityKind::product, std::nullopt);
                   s.sum_terms = {RationalTerm(0, 1), RationalTerm(2, poly("t + q"), {fac(2, kT)})};
                   s.tail = standard_tail(Shift::triangular, 2, {{2, kT}});
                   s.product = product(kSecondResidues, {{2, kT}});
                   return s;
                 });
  e.baseline = Classical::second;
  return e;
}

CatalogEntry weirdeq() {
  return entry("weirdeq", "(1-q^2)/(1-tq^2) (1 + q^2/(1-q)) = 1 + q^2(t+q)/(1-tq^2)", IdentityKind::rational,
               [](std::optional<int>) {
                 auto s = spec("weirdeq", "", IdentityKind::rational, std::nullopt);
                 s.sum_terms = {RationalTerm(0, poly("1 - q^2"), {fac(2, kT)}),
                                RationalTerm(2, poly("1 - q^2"), {fac(2, kT), fac(1)})};
                 s.rhs_terms = {RationalTerm(0, 1), RationalTerm(2, poly("t + q"), {fac(2, kT)})};
                 return s;
               });
}

ParameterDomain positive_m(int sweep_max) {
  return {"M", "M >= 1", [](int m) { return m >= 1; }, sweep_max};
}

CatalogEntry part_m_lemma() {
  auto e = entry("partM_lemma", "prefactor (1-q^{M+1})/(1-tq^{M+1}) applied to the partial second sum",
                 IdentityKind::rational, [](std::optional<int> m_opt) {
                   const int m = *m_opt, p = m + 1;
                   auto s = spec("partM_lemma", "", IdentityKind::rational, m);
                   const QPolynomial pre = poly("1") - QPolynomial::monomial(p);
                   auto lhs_term = [&](int k) { return RationalTerm(k * (k + 1), pre, cat({fac(p, kT)}, run(1, k))); };
                   for (int k = 0; k <= m; ++k) s.sum_terms.push_back(lhs_term(k));
                   s.rhs_terms = {RationalTerm(0, 1), RationalTerm(2, weighted_run_second(m), {fac(p, kT)})};
                   for (int k = 2; k <= m; ++k) s.rhs_terms.push_back(lhs_term(k));
                   return s;
                 });
  e.parameter = positive_m(39);
  return e;
}

CatalogEntry part_m() {
  auto e = entry("partM", "second identity with the single part M+1 weighted by t", IdentityKind::product,
                 [](std::optional<int> m_opt) {
                   const int m = *m_opt, p = m + 1;
                   auto s = spec("partM", "", IdentityKind::product, m);
                   s.sum_terms = {RationalTerm(0, 1), RationalTerm(2, weighted_run_second(m), {fac(p, kT)})};
                   for (int k = 2; k <= m; ++k) {
                     s.sum_terms.emplace_back(k * (k + 1), q_integer(p), cat({fac(p, kT)}, run(2, k)));
                   }
                   s.tail = standard_tail(Shift::triangular, m + 1, {{p, kT}});
                   s.product = product(kSecondResidues, {},
                                       {RationalTerm(0, poly("1") - QPolynomial::monomial(p), {fac(p, kT)})});
                   return s;
                 });
  e.parameter = {"M", "M+1 congruent to 2 or 3 mod 5", [](int m) { return m >= 1 && second_residue(m + 1); }, 39};
  e.baseline = Classical::second;
  return e;
}

CatalogEntry part_m_eq_lemma() {
  auto e = entry("partMeq_lemma", "prefactor (1-q^{M+1})/(1-tq^{M+1}) applied to the partial first sum",
                 IdentityKind::rational, [](std::optional<int> m_opt) {
                   const int m = *m_opt, p = m + 1;
                   auto s = spec("partMeq_lemma", "", IdentityKind::rational, m);
                   const QPolynomial pre = poly("1") - QPolynomial::monomial(p);
                   auto lhs_term = [&](int k) { return RationalTerm(k * k, pre, cat({fac(p, kT)}, run(1, k))); };
                   for (int k = 0; k <= m; ++k) s.sum_terms.push_back(lhs_term(k));
                   s.rhs_terms = {RationalTerm(0, 1), RationalTerm(1, weighted_run_first(m), {fac(p, kT)})};
                   for (int k = 2; k <= m; ++k) s.rhs_terms.push_back(lhs_term(k));
                   return s;
                 });
  e.parameter = positive_m(39);
  return e;
}

CatalogEntry part_m_eq() {
  auto e = entry("partMeq", "first identity with the single part M+1 weighted by t", IdentityKind::product,
                 [](std::optional<int> m_opt) {
                   const int m = *m_opt, p = m + 1;
                   auto s = spec("partMeq", "", IdentityKind::product, m);
                   s.sum_terms = {RationalTerm(0, 1), RationalTerm(1, weighted_run_first(m), {fac(p, kT)})};
                   for (int k = 2; k <= m; ++k) {
                     s.sum_terms.emplace_back(k * k, q_integer(p), cat({fac(p, kT)}, run(2, k)));
                   }
                   s.tail = standard_tail(Shift::square, m + 1, {{p, kT}});
                   s.product = product(kFirstResidues, {},
                                       {RationalTerm(0, poly("1") - QPolynomial::monomial(p), {fac(p, kT)})});
                   return s;
                 });
  e.parameter = {"M", "M+1 >= 2 congruent to 1 or 4 mod 5", [](int m) { return m >= 1 && first_residue(m + 1); },
                 39};
  e.baseline = Classical::first;
  return e;
}

CatalogEntry parts_2m_eq() {
  auto e = entry("parts2Meq", "prefactor for parts 2 and M applied to the first three second-sum terms",
                 IdentityKind::rational, [](std::optional<int> m_opt) {
                   const int m = *m_opt;
                   auto s = spec("parts2Meq", "", IdentityKind::rational, m);
                   const QPolynomial pre = poly("1 - q^2") * (poly("1") - QPolynomial::monomial(m));
                   for (int k = 0; k <= 2; ++k) {
                     s.sum_terms.emplace_back(k * (k + 1), pre, cat({fac(2, kT), fac(m, kW)}, run(1, k)));
                   }
                   s.rhs_terms = {RationalTerm(0, 1), RationalTerm(2, poly("t + q"), {fac(2, kT)}),
                                  two_part_second_term(m)};
                   return s;
                 });
  e.parameter = positive_m(40);
  e.note = "the q^6 numerator is nonnegative exactly when M >= 6";
  return e;
}

CatalogEntry two_part_m() {
  auto e = entry("twopartM", "second identity with parts 2 (t) and M (w) weighted", IdentityKind::product,
                 [](std::optional<int> m_opt) {
                   const int m = *m_opt;
                   auto s = spec("twopartM", "", IdentityKind::product, m);
                   s.sum_terms = {RationalTerm(0, 1), RationalTerm(2, poly("t + q"), {fac(2, kT)}),
                                  two_part_second_term(m)};
                   for (int k = 3; k <= m - 1; ++k) {
                     s.sum_terms.emplace_back(k * (k + 1), q_integer(m), cat(cat({fac(2, kT)}, run(3, k)), {fac(m, kW)}));
                   }
                   s.tail = standard_tail(Shift::triangular, m, {{2, kT}, {m, kW}});
                   s.product = product(kSecondResidues, {{2, kT}},
                                       {RationalTerm(0, poly("1") - QPolynomial::monomial(m), {fac(m, kW)})});
                   return s;
                 });
  e.parameter = {"M", "M >= 7 congruent to 2 or 3 mod 5", [](int m) { return m >= 7 && second_residue(m); }, 40};
  e.baseline = Classical::second;
  return e;
}

CatalogEntry two_part_14_lemma() {
  auto e = entry("twopart14_lemma", "prefactor for parts 1 and even M applied to the first three first-sum terms",
                 IdentityKind::rational, [](std::optional<int> m_opt) {
                   const int m = *m_opt;
                   auto s = spec("twopart14_lemma", "", IdentityKind::rational, m);
                   const QPolynomial pre = poly("1 - q") * (poly("1") - QPolynomial::monomial(m));
                   for (int k = 0; k <= 2; ++k) {
                     s.sum_terms.emplace_back(k * k, pre, cat({fac(1, kT), fac(m, kW)}, run(1, k)));
                   }
                   s.rhs_terms = {RationalTerm(0, 1), RationalTerm(1, poly("t"), {fac(1, kT)}), two_part_first_term(m)};
                   return s;
                 });
  e.parameter = {"M", "even M >= 4", [](int m) { return m >= 4 && m % 2 == 0; }, 40};
  return e;
}

CatalogEntry two_part_14() {
  auto e = entry("twopart14", "first identity with parts 1 (t) and even M (w) weighted", IdentityKind::product,
                 [](std::optional<int> m_opt) {
                   const int m = *m_opt;
                   auto s = spec("twopart14", "", IdentityKind::product, m);
                   s.sum_terms = {RationalTerm(0, 1), RationalTerm(1, poly("t"), {fac(1, kT)}), two_part_first_term(m)};
                   for (int k = 3; k <= m - 1; ++k) {
                     s.sum_terms.emplace_back(k * k, q_integer(m / 2, 2), cat(cat({fac(1, kT)}, run(3, k)), {fac(m, kW)}));
                   }
                   s.tail = standard_tail(Shift::square, m, {{1, kT}, {m, kW}});
                   s.product = product(kFirstResidues, {{1, kT}},
                                       {RationalTerm(0, poly("1") - QPolynomial::monomial(m), {fac(m, kW)})});
                   return s;
                 });
  e.parameter = {"M", "even M >= 4 congruent to 1 or 4 mod 5",
                 [](int m) { return m >= 4 && m % 2 == 0 && first_residue(m); }, 40};
  e.baseline = Classical::first;
  e.note = "stated under a proposition label; product side generated from residues 1, 4 mod 5";
  return e;
}

IdentitySpec tw_spec(const std::string& id, std::vector<RationalTerm> head) {
  auto s = spec(id, "", IdentityKind::product, std::nullopt);
  s.sum_terms = std::move(head);
  s.tail = standard_tail(Shift::triangular, 3, {{2, kT}, {3, kW}});
  s.product = product(kSecondResidues, {{2, kT}, {3, kW}});
  return s;
}

CatalogEntry first_tw() {
  auto e = entry("firsttw", "t,w-refinement of the second identity for parts 2 and 3", IdentityKind::product,
                 [](std::optional<int>) {
                   return tw_spec("firsttw", {RationalTerm(0, 1), RationalTerm(2, poly("t + w*q"), {fac(2, kT)}),
                                              RationalTerm(6, poly("w^2 + q + q^2"), {fac(2, kT), fac(3, kW)})});
                 });
  e.baseline = Classical::second;
  return e;
}

CatalogEntry second_tw() {
  auto e = entry("secondtw", "second t,w-refinement for parts 2 and 3", IdentityKind::product,
                 [](std::optional<int>) {
                   return tw_spec("secondtw",
                                  {RationalTerm(0, 1), RationalTerm(2, poly("t + w*q + t^2*q^2"), {fac(3, kW)}),
                                   RationalTerm(6, poly("q + q^2 + t^3"), {fac(2, kT), fac(3, kW)})});
                 });
  e.baseline = Classical::second;
  return e;
}

std::vector<RationalTerm> twv_head() {
  return {RationalTerm(2, poly("t + w*q"), {fac(2, kT)}),
          RationalTerm(6, poly("w^2 + v*q + q^2"), {fac(2, kT), fac(3, kW)}),
          RationalTerm(12, poly("1 + q + v^2*q^2 + v*q^3 + q^4 + q^5 + q^6"), {fac(2, kT), fac(3, kW), fac(7, kV)})};
}

CatalogEntry twv() {
  auto e = entry("twvthm", "t,w,v-refinement of the second identity for parts 2, 3 and 7", IdentityKind::product,
                 [](std::optional<int>) {
                   auto s = spec("twvthm", "", IdentityKind::product, std::nullopt);
                   s.sum_terms.emplace_back(0, 1);
                   for (auto& t : twv_head()) s.sum_terms.push_back(t);
                   s.sum_terms.emplace_back(20, seven_run(), Factors{fac(2, kT), fac(3, kW), fac(4), fac(7, kV)});
                   s.sum_terms.emplace_back(30, seven_run(), Factors{fac(2, kT), fac(3, kW), fac(4), fac(5), fac(7, kV)});
                   s.sum_terms.emplace_back(42, seven_run(),
                                            Factors{fac(2, kT), fac(3, kW), fac(4), fac(5), fac(6), fac(7, kV)});
                   s.tail = standard_tail(Shift::triangular, 7, {{2, kT}, {3, kW}, {7, kV}});
                   s.product = product(kSecondResidues, {{2, kT}, {3, kW}, {7, kV}});
                   return s;
                 });
  e.baseline = Classical::second;
  return e;
}

CatalogEntry reorder_a() {
  return entry("reorder_a", "reordering of the q^2 and q^6 terms: insert (1-wq^3) before (1-tq^2)",
               IdentityKind::rational, [](std::optional<int>) {
                 auto s = spec("reorder_a", "", IdentityKind::rational, std::nullopt);
                 auto head = twv_head();
                 s.sum_terms = {head[0], head[1]};
                 s.rhs_terms = {RationalTerm(2, poly("t + w*q + t^2*q^2"), {fac(3, kW)}),
                                RationalTerm(6, poly("v*q + q^2 + t^3"), {fac(2, kT), fac(3, kW)})};
                 return s;
               });
}

CatalogEntry reorder_b() {
  return entry(
      "reorder_b", "reordering of the q^2, q^6, q^12 terms: insert (1-vq^7), (1-tq^2), (1-wq^3)",
      IdentityKind::rational, [](std::optional<int>) {
        auto s = spec("reorder_b", "", IdentityKind::rational, std::nullopt);
        s.sum_terms = twv_head();
        s.rhs_terms = {
            RationalTerm(2, poly("t + q*w + q^2*t^2 + q^3*t*w + q^4*t^3 + q^5*v + q^6"), {fac(7, kV)}),
            RationalTerm(6, poly("w^2 + q*t^2*w + q^2*t^4 + w^3*q^3 + t*q^4 + w*q^5 + w^4*q^6"), {fac(2, kT), fac(7, kV)}),
            RationalTerm(12, poly("1 + q + q^2*w^2 + q^3*w^5 + q^4 + q^5 + q^6"), {fac(2, kT), fac(3, kW), fac(7, kV)})};
        return s;
      });
}

IdentitySpec twvx23_spec() {
  auto s = spec("twvx23theorem", "", IdentityKind::product, std::nullopt);
  const Factors base{fac(2, kT), fac(3, kW)};
  const QPolynomial long_run = seven_run() * poly("1 + q^4");
  s.sum_terms = {
      RationalTerm(0, 1),
      RationalTerm(2, poly("t + w*q"), {fac(2, kT)}),
      RationalTerm(6, poly("w^2 + v*q + x*q^2"), base),
      RationalTerm(12, poly("1 + q + v^2*q^2 + x*v*q^3 + x^2*q^4 + q^5 + q^6"), cat(base, {fac(7, kV)})),
      RationalTerm(20,
                   poly("x + x*q + q^2 + q^3 + (1 + x^3)*q^4 + (1 + x)*q^5 + (1 + x)*q^6 + q^7 + q^8 + q^9 + q^10"),
                   cat(base, {fac(8, kX), fac(7, kV)})),
      RationalTerm(30, long_run, cat(base, {fac(8, kX), fac(5), fac(7, kV)})),
      RationalTerm(42, long_run, cat(base, {fac(8, kX), fac(5), fac(6), fac(7, kV)})),
      RationalTerm(56, poly("1 + q^4"), {fac(1), fac(2, kT), fac(3, kW), fac(8, kX), fac(5), fac(6), fac(7, kV)}),
  };
  s.tail = standard_tail(Shift::triangular, 8, {{2, kT}, {3, kW}, {7, kV}, {8, kX}});
  s.product = product(kSecondResidues, {{2, kT}, {3, kW}, {7, kV}, {8, kX}});
  return s;
}

CatalogEntry twvx23() {
  auto e = entry("twvx23theorem", "t,w,v,x-refinement of the second identity for parts 2, 3, 7 and 8",
                 IdentityKind::product, [](std::optional<int>) { return twvx23_spec(); });
  e.baseline = Classical::second;
  return e;
}

IdentitySpec twvx14_spec() {
  auto s = spec("twvx14thm", "", IdentityKind::product, std::nullopt);
  const Factors base{fac(1, kT), fac(4, kW), fac(6, kV), fac(9, kX)};
  s.sum_terms = {
      RationalTerm(0, 1),
      RationalTerm(1, poly("t"), {fac(1, kT)}),
      RationalTerm(4, poly("w + v*q^2"), {fac(1, kT), fac(4, kW)}),
      RationalTerm(9, poly("x + q^2 + v^2*q^3 + q^5"), {fac(1, kT), fac(4, kW), fac(6, kV)}),
      RationalTerm(16, poly("1 + x^2*q^2 + q^3 + x*q^4 + q^5 + q^6 + x*q^7 + q^8 + q^10"), base),
      RationalTerm(25, nine_numerator(), cat(base, {fac(5)})),
      RationalTerm(36, nine_numerator(), cat(base, {fac(5), fac(6)})),
      RationalTerm(49, nine_numerator(), cat(base, {fac(5), fac(6), fac(7)})),
      RationalTerm(64, nine_numerator(), cat(base, {fac(5), fac(6), fac(7), fac(8)})),
  };
  s.tail = standard_tail(Shift::square, 9, {{1, kT}, {4, kW}, {6, kV}, {9, kX}});
  s.product = product(kFirstResidues, {{1, kT}, {4, kW}, {6, kV}, {9, kX}});
  return s;
}

CatalogEntry twvx14() {
  auto e = entry("twvx14thm", "t,w,v,x-refinement of the first identity for parts 1, 4, 6 and 9",
                 IdentityKind::product, [](std::optional<int>) { return twvx14_spec(); });
  e.baseline = Classical::first;
  e.min_order = 80;
  return e;
}

CatalogEntry x1_reduction() {
  return entry("bigcomb_x1_reduction", "(1+q^2+...+q^8+q^10)/(1-q^9) = (1-q^6)/((1-q^2)(1-q^3))",
               IdentityKind::rational, [](std::optional<int>) {
                 auto s = spec("bigcomb_x1_reduction", "", IdentityKind::rational, std::nullopt);
                 s.sum_terms = {RationalTerm(0, nine_numerator(), {fac(9)})};
                 s.rhs_terms = {RationalTerm(0, poly("1 - q^6"), {fac(2), fac(3)})};
                 return s;
               });
}

CatalogEntry spec3_sum() {
  auto e = entry("spec3_sum", "sum side for parts 2, 3 mod 5 plus 5's and no 3's, (1-q^3) replaced by (1-q^5)",
                 IdentityKind::product, [](std::optional<int>) {
                   auto s = spec("spec3_sum", "", IdentityKind::product, std::nullopt);
                   s.sum_terms = {RationalTerm(0, 1), RationalTerm(2, 1, {fac(1)}), RationalTerm(3, -1),
                                  RationalTerm(6, poly("q + q^2 + q^4"), {fac(2), fac(5)})};
                   s.tail = {3, [](int m) {
                               Factors f = run(1, m);
                               f[2] = fac(5);
                               return RationalTerm(m * (m + 1), 1, f);
                             }};
                   ProductSide p = product(kSecondResidues);
                   p.removed = {3};
                   p.added = {5};
                   s.product = p;
                   return s;
                 });
  e.helper = true;
  e.note = "q^2 (1/(1-q) - q) is stored as q^2/(1-q) - q^3";
  return e;
}

CatalogEntry specialization(std::string id, std::string title, const std::string& base, Substitution sub,
                            int min_order = 0) {
  auto e = entry(id, std::move(title), IdentityKind::product, [id, base, sub](std::optional<int>) {
    IdentitySpec s = catalog_entry(base).instantiate();
    s.id = id;
    s.substitution = sub;
    return s;
  });
  e.min_order = min_order;
  e.note = "specialization of " + base;
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(classical(Classical::first));
  c.push_back(classical(Classical::second));
  c.push_back(miniprop());
  c.push_back(weirdeq());
  c.push_back(part_m_lemma());
  c.push_back(part_m());
  c.push_back(part_m_eq_lemma());
  c.push_back(part_m_eq());
  c.push_back(parts_2m_eq());
  c.push_back(two_part_m());
  c.push_back(two_part_14_lemma());
  c.push_back(two_part_14());
  c.push_back(first_tw());
  c.push_back(second_tw());
  c.push_back(twv());
  c.push_back(reorder_a());
  c.push_back(reorder_b());
  c.push_back(twvx23());
  c.push_back(twvx14());
  c.push_back(x1_reduction());
  c.push_back(spec3_sum());

  Substitution spec1;
  spec1.set(Weight::t, WeightImage::unit())
      .set(Weight::v, WeightImage::unit())
      .set(Weight::w, WeightImage::vanish())
      .set(Weight::x, WeightImage::vanish());
  c.push_back(specialization("spec1", "parts 2, 3 mod 5 without 3's and 8's", "twvx23theorem", spec1));

  Substitution all_zero;
  for (Weight w : kWeights) all_zero.set(w, WeightImage::vanish());
  c.push_back(specialization("spec2", "parts 1, 4 mod 5 of size at least 11", "twvx14thm", all_zero, 80));

  Substitution meld;
  meld.set(Weight::t, WeightImage::unit()).set(Weight::w, WeightImage::q_power(2));
  c.push_back(specialization("spec3", "parts 2, 3 mod 5 or 5, no 3's (from firsttw)", "firsttw", meld));
  c.push_back(specialization("spec3_secondtw", "parts 2, 3 mod 5 or 5, no 3's (from secondtw)", "secondtw", meld));

  Substitution x_one;
  x_one.set(Weight::x, WeightImage::unit());
  auto x1 = specialization("twvx14thm_x1", "parts 1, 4 and 6 weighted by t, w, v", "twvx14thm", x_one, 80);
  x1.baseline = Classical::first;
  c.push_back(std::move(x1));
  return c;
}

}  // namespace

IdentitySpec classical_identity(Classical which) {
  if (which == Classical::none) throw std::invalid_argument("no classical identity selected");
  const bool first = which == Classical::first;
  auto s = spec(first ? "RR1" : "RR2", "", IdentityKind::product, std::nullopt);
  s.tail = standard_tail(first ? Shift::square : Shift::triangular, 0, {});
  s.product = product(first ? kFirstResidues : kSecondResidues);
  return s;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace rrw
