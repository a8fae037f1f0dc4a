#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "rrw/combinatorics.hpp"
#include "rrw/errors.hpp"
#include "rrw/polynomial_io.hpp"

using namespace rrw;

namespace {

RefinementStatement stmt(const char* id, std::optional<int> m = std::nullopt) { return statement_entry(id).instantiate(m); }

long long total(const SignatureCounts& c) {
  long long s = 0;
  for (const auto& [sig, k] : c) s += k;
  return s;
}

template <class S>
auto& rule_named(S& s, std::string_view label) {
  for (auto& r : s.rules) {
    if (r.label == label) return r;
  }
  throw std::runtime_error("no such rule");
}

}  // namespace

TEST_CASE("statement lookup") {
  CHECK_THROWS_AS(statement_entry("nope"), UnknownId);
  CHECK_THROWS_AS(stmt("generalminithm"), ParameterDomainError);
  CHECK_THROWS_AS(stmt("firstbigcomb", 3), ParameterDomainError);
  for (const auto& e : statements()) {
    for (int m : e.sweep()) CHECK_NOTHROW(e.instantiate(m).validate());
  }
}

TEST_CASE("product-side refined counts") {
  const auto fb = stmt("firstbigcomb");
  const auto counts = count_product_refined(fb, 22);
  // 26 classes: the independent diff-side count settles the size
  CHECK(counts.size() == 26);
  CHECK(std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 1; }));
  CHECK(counts.contains(WeightSignature(fb.watched, {11, 0, 0})));
  CHECK(total(counts) == oracle::count_if(22, [](const auto& p) { return oracle::parts_mod5(p, {2, 3}); }));

  const auto zero = count_product_refined(fb, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.begin()->first.is_zero());
  CHECK(zero.begin()->second == 1);

  const auto gm = stmt("generalminithm", 2);
  CHECK(count_product_refined(gm, 22).at(parse_signature(gm, "(2)")) == 5);
}

TEST_CASE("diff-side refined counts") {
  const auto big = stmt("bigcomb");
  const auto counts = count_diff_refined(big, 19);
  CHECK(counts.size() == 26);
  CHECK(std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 1; }));
  CHECK(big.image(Partition{9, 6, 4}) == parse_partition("(3^3,1)"));
  const auto rows = build_table(big, 19);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.lambda == Partition{9, 6, 4}; });
  REQUIRE(it != rows.end());
  CHECK(to_string(it->signature) == "(1,0,3)");
  CHECK(it->mu == parse_partition("(6^3,1)"));

  const auto zero = count_diff_refined(big, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.begin()->first.is_zero());

  const auto g14 = stmt("generalmini14thm", 3);
  const auto k3 = parse_signature(g14, "(3)");
  CHECK(count_diff_refined(g14, 23).at(k3) == 4);
  std::set<Partition> lambdas;
  for (const auto& r : build_table(g14, 23, k3)) lambdas.insert(r.lambda);
  CHECK(lambdas == std::set<Partition>{{20, 3}, {19, 4}, {19, 3, 1}, {18, 4, 1}});
}

TEST_CASE("triple agreement for every statement up to n = 30") {
  for (const auto& e : statements()) {
    std::vector<std::optional<int>> params;
    if (e.parameter) {
      for (int m : e.sweep()) params.push_back(m);
    } else {
      params.push_back(std::nullopt);
    }
    for (auto m : params) {
      const auto r = check_refinement(e.instantiate(m), 30);
      CAPTURE(to_line(r));
      CHECK(r.passed);
      CHECK(r.error.empty());
    }
  }
  CHECK(to_line(check_refinement(stmt("spec3"), 40)) == "PASS spec3 n=0..40");
  CHECK(check_refinement(stmt("firstbigcomb"), 40).passed);
}

TEST_CASE("an altered case rule breaks agreement at small n") {
  auto fb = stmt("firstbigcomb");
  auto& three = rule_named(fb, "three parts");
  const std::vector<int> w = fb.watched;
  // 7l+4 ones credited to l+1 seven's instead of l
  three.classify = [w](const Partition&, const Partition& c) {
    const int o = c.multiplicity(1);
    std::vector<WeightSignature> out;
    for (int l = 0; 7 * l - 12 <= o; ++l) {
      for (int offset : {0, 1, -12, -4, 4, 5, 6}) {
        const int credited = offset == 4 ? l + 1 : l;
        if (o == 7 * l + offset) out.push_back(WeightSignature(w, {c.multiplicity(2), c.multiplicity(3), credited}));
      }
    }
    return out;
  };
  const auto r = check_refinement(fb, 40);
  CHECK_FALSE(r.passed);
  REQUIRE(r.mismatch);
  CHECK(r.mismatch->n <= 20);

  // and a product class with the wrong residues
  auto bad = stmt("bigcomb");
  bad.product_class = PartitionClass::congruence(5, {1, 3});
  CHECK_FALSE(check_refinement(bad, 15).passed);
}

TEST_CASE("gaps and overlaps are reported, not absorbed") {
  auto fb = stmt("firstbigcomb");
  auto& one = rule_named(fb, "one part");
  one.classify = [](const Partition&, const Partition&) { return std::vector<WeightSignature>{}; };
  const auto r = check_refinement(fb, 10);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.error.empty());
  CHECK_THROWS_AS(count_diff_refined(fb, 5), ClassificationGap);

  auto gm = stmt("generalminithm", 2);
  gm.rules.push_back(gm.rules.back());
  CHECK_THROWS_AS(gm.validate(), std::logic_error);
}

TEST_CASE("three-part rule agrees with the q^12 numerator of twvthm") {
  // lambda with three parts in Diff2* <-> col* = (3^a, 2^b, 1^o); the rule's
  // signature count must equal the coefficient of t^b w^a v^l q^|c| in
  // (1+q+v^2q^2+vq^3+q^4+q^5+q^6) / ((1-tq^2)(1-wq^3)(1-vq^7)).
  const auto fb = stmt("firstbigcomb");
  const auto& three = rule_named(fb, "three parts");
  const int order = 45;
  const RationalTerm term(0, parse_qpolynomial("1 + q + v^2*q^2 + v*q^3 + q^4 + q^5 + q^6"),
                          {parse_factor("t*q^2"), parse_factor("w*q^3"), parse_factor("v*q^7")});
  const auto series = expand(term, order);
  int checked = 0;
  for (int a = 0; 3 * a <= order; ++a) {
    for (int b = 0; 3 * a + 2 * b <= order; ++b) {
      for (int o = 0; 3 * a + 2 * b + o <= order; ++o) {
        std::vector<int> cp(static_cast<std::size_t>(a), 3);
        cp.insert(cp.end(), static_cast<std::size_t>(b), 2);
        cp.insert(cp.end(), static_cast<std::size_t>(o), 1);
        const Partition c(cp);
        const auto cols = conjugate(c);
        std::vector<int> lam;
        for (int i = 0; i < 3; ++i) lam.push_back(6 - 2 * i + (i < cols.length() ? cols.parts()[static_cast<std::size_t>(i)] : 0));
        const Partition lambda(lam);
        REQUIRE(fb.image(lambda) == c);
        std::map<int, long long> by_l;
        for (const auto& s : three.classify(lambda, c)) {
          REQUIRE(s.count(2) == b);
          REQUIRE(s.count(3) == a);
          ++by_l[s.count(7)];
        }
        for (int l = 0; 7 * l <= order + 14; ++l) {
          const auto coeff = series[c.size()].coefficient(WeightMonomial({b, a, l, 0}));
          const long long have = by_l.contains(l) ? by_l[l] : 0;
          if (coeff != have) {
            CAPTURE(to_string(c));
            CAPTURE(l);
            CHECK(coeff == have);
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("melded parts: spec3 diff side counts parts 2, 3 mod 5 plus 5's minus 3's") {
  const auto s3 = stmt("spec3");
  const auto keep = [](const oracle::Parts& p) {
    return std::all_of(p.begin(), p.end(), [](int x) { return x != 3 && (x % 5 == 2 || x % 5 == 3 || x == 5); });
  };
  for (int n = 0; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(total(count_diff_refined(s3, n)) == oracle::count_if(n, keep));
  }
}

TEST_CASE("tables") {
  const auto gm = stmt("generalminithm", 2);
  CHECK_THROWS_AS(build_table(gm, 22), NonsingletonClass);
  const auto rows = build_table(gm, 22, parse_signature(gm, "(2)"));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].mu == Partition{12, 3, 3, 2, 2});
  CHECK(rows[0].lambda == Partition{16, 6});
  CHECK(rows[0].image == parse_partition("(2^4,1^{8})"));
  for (const auto& r : rows) {
    CHECK(r.mu.size() == 22);
    CHECK(r.lambda.size() == 22);
    CHECK(gm.signature_of(r.mu) == r.signature);
    CHECK(gm.image(r.lambda) == r.image);
  }
  CHECK(std::is_sorted(rows.rbegin(), rows.rend(), [](const auto& x, const auto& y) { return x.mu < y.mu; }));

  const auto text = format_table_text(gm, rows);
  CHECK(text.rfind("mu ", 0) == 0);
  CHECK(text.find("| (2^4,1^8) ") != std::string::npos);
  const auto csv = format_table_csv(gm, rows);
  CHECK(csv.rfind("mu,lambda,image,signature\n", 0) == 0);
  CHECK(csv.find("\"12,3^2,2^2\",\"16,6\",\"2^4,1^8\",(2)") != std::string::npos);

  CHECK(build_table(stmt("firstbigcomb"), 22).size() == 26);
  CHECK(build_table(stmt("bigcomb"), 19).size() == 26);
  CHECK_THROWS(parse_signature(gm, "(1,2)"));
}
