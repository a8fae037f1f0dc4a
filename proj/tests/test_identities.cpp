#include <doctest.h>

#include <json.hpp>

#include "oracle.hpp"
#include "rrw/errors.hpp"
#include "rrw/identities.hpp"
#include "rrw/polynomial_io.hpp"
#include "rrw/report_json.hpp"

using namespace rrw;

namespace {

WeightPolynomial from_exps(const std::map<oracle::Exps, long long>& counts) {
  WeightPolynomial p;
  for (const auto& [e, c] : counts) p.add_term(WeightMonomial(e), c);
  return p;
}

std::vector<std::optional<int>> some_params(const CatalogEntry& e) {
  if (!e.parameter) return {std::nullopt};
  std::vector<std::optional<int>> out;
  const auto all = e.sweep();
  for (std::size_t i = 0; i < all.size(); i += 3) out.push_back(all[i]);
  return out;
}

}  // namespace

TEST_CASE("catalog lookup and parameter domains") {
  CHECK_NOTHROW(instantiate("twopartM", 7));
  CHECK_THROWS_AS(instantiate("twopartM", 3), ParameterDomainError);
  CHECK_THROWS_AS(instantiate("twopartM"), ParameterDomainError);
  CHECK_THROWS_AS(instantiate("RR1", 4), ParameterDomainError);
  CHECK_THROWS_AS(instantiate("no_such_identity"), UnknownId);
  CHECK(catalog_entry("twopart14").note.find("proposition") != std::string::npos);

  std::set<std::string> ids;
  for (const auto& e : catalog()) CHECK(ids.insert(e.id).second);
}

TEST_CASE("every product identity has constant term 1") {
  for (const auto& e : catalog()) {
    if (e.kind != IdentityKind::product) continue;
    for (auto m : some_params(e)) {
      CAPTURE(e.id);
      const auto spec = e.instantiate(m);
      CHECK(expand_sum_side(spec, 0) == TruncatedSeries::one(0));
      CHECK(expand_product_side(spec, 0) == TruncatedSeries::one(0));
    }
  }
}

TEST_CASE("second classical product at order 7") {
  const auto rr2 = instantiate("RR2");
  CHECK(to_string(expand_product_side(rr2, 7)) == "1 + q^2 + q^3 + q^4 + q^5 + 2*q^6 + 2*q^7 + O(q^8)");
}

TEST_CASE("classical identities against the oracle up to order 60") {
  const auto s1 = expand_sum_side(classical_identity(Classical::first), 60);
  const auto s2 = expand_sum_side(classical_identity(Classical::second), 60);
  const auto p1 = expand_product_side(instantiate("RR1"), 60);
  const auto p2 = expand_product_side(instantiate("RR2"), 60);
  const auto o1 = oracle::classical_sum(0, 60), o2 = oracle::classical_sum(1, 60);
  for (int n = 0; n <= 60; ++n) {
    CAPTURE(n);
    const auto u = static_cast<std::size_t>(n);
    CHECK(s1[n] == WeightPolynomial(o1[u]));
    CHECK(s2[n] == WeightPolynomial(o2[u]));
    CHECK(p1[n] == WeightPolynomial(oracle::count_if(n, [](const auto& p) { return oracle::parts_mod5(p, {1, 4}); })));
    CHECK(p2[n] == WeightPolynomial(oracle::count_if(n, [](const auto& p) { return oracle::parts_mod5(p, {2, 3}); })));
  }
}

TEST_CASE("miniprop sum side against weighted brute force") {
  const auto mini = instantiate("miniprop");
  const auto sum = expand_sum_side(mini, 30);
  CHECK(to_string(sum.truncated(5)) == "1 + t*q^2 + q^3 + t^2*q^4 + t*q^5 + O(q^6)");
  const auto allowed = [](int x) { return x % 5 == 2 || x % 5 == 3; };
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(sum[n] == from_exps(oracle::weighted_count(n, allowed, {{2, 0}})));
  }
}

TEST_CASE("weighted product sides against brute force") {
  struct Case {
    const char* id;
    std::optional<int> m;
    std::initializer_list<int> residues;
    std::map<int, int> marks;
  };
  const std::vector<Case> cases{
      {"firsttw", std::nullopt, {2, 3}, {{2, 0}, {3, 1}}},
      {"twvthm", std::nullopt, {2, 3}, {{2, 0}, {3, 1}, {7, 2}}},
      {"twvx23theorem", std::nullopt, {2, 3}, {{2, 0}, {3, 1}, {7, 2}, {8, 3}}},
      {"twvx14thm", std::nullopt, {1, 4}, {{1, 0}, {4, 1}, {6, 2}, {9, 3}}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.id);
    const auto prod = expand_product_side(instantiate(c.id, c.m), 26);
    const auto allowed = [&](int x) {
      for (int r : c.residues) {
        if (x % 5 == r) return true;
      }
      return false;
    };
    for (int n = 0; n <= 26; ++n) {
      CAPTURE(n);
      CHECK(prod[n] == from_exps(oracle::weighted_count(n, allowed, c.marks)));
    }
  }
}

TEST_CASE("verify examples") {
  CHECK(verify(instantiate("firsttw"), 60).passed);
  const auto r = verify(instantiate("partM", 12), 80);
  CHECK(r.passed);
  CHECK(to_line(r) == "PASS partM M=12 order=80");
}

TEST_CASE("a perturbed numerator fails at the perturbed degree") {
  for (const char* id : {"miniprop", "firsttw", "twvthm", "weirdeq"}) {
    CAPTURE(id);
    auto spec = instantiate(id);
    REQUIRE(!spec.sum_terms.empty());
    auto& term = spec.sum_terms.back();
    term.numerator += QPolynomial::monomial(1);
    const auto r = verify(spec, 60);
    CHECK_FALSE(r.passed);
    REQUIRE(r.discrepancy);
    CHECK(r.discrepancy->degree == term.q_shift + 1);
    CHECK(to_line(r).rfind("FAIL ", 0) == 0);
  }
}

TEST_CASE("setting every weight to 1 recovers the classical sides") {
  const auto c1 = classical_identity(Classical::first), c2 = classical_identity(Classical::second);
  const auto one1 = expand_sum_side(c1, 60), one2 = expand_sum_side(c2, 60);
  int checked = 0;
  for (const auto& e : catalog()) {
    if (e.baseline == Classical::none) continue;
    for (auto m : some_params(e)) {
      CAPTURE(e.id);
      CAPTURE(m.value_or(-1));
      auto spec = e.instantiate(m);
      spec.substitution = erase_weights();
      const auto& expected = e.baseline == Classical::first ? one1 : one2;
      CHECK(compare(expand_sum_side(spec, 60), expected).equal());
      CHECK(compare(expand_right_side(spec, 60), expected).equal());
      ++checked;
    }
  }
  CHECK(checked > 15);
}

TEST_CASE("firsttw and secondtw: same series, different term lists") {
  const auto a = instantiate("firsttw"), b = instantiate("secondtw");
  CHECK(expand_product_side(a, 60) == expand_product_side(b, 60));
  CHECK(expand_sum_side(a, 60) == expand_sum_side(b, 60));
  CHECK(a.sum_terms != b.sum_terms);
}

TEST_CASE("reordering identities are rational identities that hold") {
  for (const char* id : {"reorder_a", "reorder_b"}) {
    const auto spec = instantiate(id);
    CHECK(spec.kind == IdentityKind::rational);
    CHECK_FALSE(spec.product.has_value());
    CHECK(verify(spec, 60).passed);
    CHECK(catalog_entry(id).helper);
  }
}

TEST_CASE("all-zero weights leave low-degree explicit terms before q^27") {
  // The first five explicit terms of twvx14thm collapse to polynomials of
  // degree at most 26 once every weight is 0.
  const auto spec = instantiate("spec2");
  REQUIRE(spec.sum_terms.size() >= 5);
  int top = -1;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto term = spec.substitution.apply(spec.sum_terms[i]);
    const auto s = expand(term, 80);
    for (int d = 0; d <= 80; ++d) {
      if (!s[d].is_zero()) top = std::max(top, d);
    }
  }
  CHECK(top >= 0);
  CHECK(top <= 26);
}

TEST_CASE("verification report JSON round trip") {
  const auto pass = verify(instantiate("partM", 7), 40);
  auto spec = instantiate("miniprop");
  spec.sum_terms.back().numerator += parse_qpolynomial("t*w*q^2");
  const auto fail = verify(spec, 40);
  REQUIRE(fail.discrepancy);
  for (const auto& r : {pass, fail}) {
    const nlohmann::json j = r;
    CHECK(j.at("status") == (r.passed ? "pass" : "fail"));
    const auto back = nlohmann::json::parse(j.dump()).get<VerificationReport>();
    CHECK(back == r);
  }
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"id":"x","params":{},"order":3,"status":"maybe"})").get<VerificationReport>(),
                  ParseError);
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"id":"x"})").get<VerificationReport>(), ParseError);
}
