// Case lists of the refinement statements, transcribed item by item. Each
// rule enumerates candidate signatures literally; overlaps show up as
// ambiguity errors and misprints as count mismatches.

#include <string>

#include "rrw/combinatorics.hpp"
#include "rrw/errors.hpp"

namespace rrw {

namespace {

using Candidates = std::vector<WeightSignature>;

int ones(const Partition& p) { return p.multiplicity(1); }

/// Every k in [0, bound] accepted by pred, as a one-entry signature.
template <class Pred>
Candidates scan(const std::vector<int>& watched, int bound, Pred pred) {
  Candidates out;
  for (int k = 0; k <= bound; ++k) {
    if (pred(k)) out.emplace_back(watched, std::vector<int>{k});
  }
  return out;
}

CaseRule rule(std::string label, int lo, int hi,
              std::function<Candidates(const Partition&, const Partition&)> classify) {
  return {std::move(label), lo, hi, std::move(classify)};
}

CaseRule empty_rule(const std::vector<int>& watched) {
  return rule("empty partition", 0, 0, [watched](const Partition&, const Partition&) {
    return Candidates{WeightSignature(watched, std::vector<int>(watched.size(), 0))};
  });
}

Candidates accept_if(bool ok) { return ok ? Candidates{WeightSignature()} : Candidates{}; }

bool second_residue(int n) { return n % 5 == 2 || n % 5 == 3; }
bool first_residue(int n) { return n % 5 == 1 || n % 5 == 4; }

// --- one weighted part -------------------------------------------------------

RefinementStatement general_mini(int m) {
  const int p = m + 1;
  RefinementStatement s;
  s.id = "generalminithm";
  s.title = "parts 2, 3 mod 5 with exactly k parts equal to M+1";
  s.params = {{"M", m}};
  s.product_class = PartitionClass::congruence(5, {2, 3});
  s.watched = {p};
  s.diff_kind = ClassKind::diff2_star;
  s.linked_id = "partM";
  s.linked_param = m;
  s.signature_label = "(k)";
  const auto w = s.watched;
  s.rules.push_back(empty_rule(w));
  s.rules.push_back(rule("one part N=(M+1)k+i, i=0, 2<=i<=M or i=M+2", 1, 1, [w, p, m](const Partition& l, const Partition&) {
    const int n = l.size();
    return scan(w, n / p, [&](int k) {
      const int i = n - p * k;
      return i == 0 || (i >= 2 && i <= m) || i == m + 2;
    });
  }));
  if (m >= 2) {
    s.rules.push_back(rule("2..M parts, (M+1)k..(M+1)k+M ones", 2, m, [w, p, m](const Partition&, const Partition& c) {
      const int o = ones(c);
      return scan(w, o / p, [&](int k) { return p * k <= o && o <= p * k + m; });
    }));
  }
  s.rules.push_back(rule("at least M+1 parts, k parts M+1", m + 1, -1, [w, p](const Partition&, const Partition& c) {
    return Candidates{WeightSignature(w, {c.multiplicity(p)})};
  }));
  return s;
}

RefinementStatement general_mini_14(int m) {
  const int p = m + 1;
  RefinementStatement s;
  s.id = "generalmini14thm";
  s.title = "parts 1, 4 mod 5 with exactly k parts equal to M+1";
  s.params = {{"M", m}};
  s.product_class = PartitionClass::congruence(5, {1, 4});
  s.watched = {p};
  s.diff_kind = ClassKind::diff2;
  s.linked_id = "partMeq";
  s.linked_param = m;
  s.signature_label = "(k)";
  const auto w = s.watched;
  s.rules.push_back(empty_rule(w));
  s.rules.push_back(rule("one part N=(M+1)k+i, 0<=i<=M", 1, 1, [w, p, m](const Partition& l, const Partition&) {
    const int n = l.size();
    return scan(w, n / p, [&](int k) {
      const int i = n - p * k;
      return i >= 0 && i <= m;
    });
  }));
  if (m >= 2) {
    s.rules.push_back(rule("2..M parts, (M+1)k..(M+1)k+M ones", 2, m, [w, p, m](const Partition&, const Partition& c) {
      const int o = ones(c);
      return scan(w, o / p, [&](int k) { return p * k <= o && o <= p * k + m; });
    }));
  }
  s.rules.push_back(rule("at least M+1 parts, k parts M+1", m + 1, -1, [w, p](const Partition&, const Partition& c) {
    return Candidates{WeightSignature(w, {c.multiplicity(p)})};
  }));
  return s;
}

// --- two weighted parts ------------------------------------------------------

RefinementStatement general_two_part(int m) {
  RefinementStatement s;
  s.id = "general2partcor";
  s.title = "parts 2, 3 mod 5 with j 2's and k M's";
  s.params = {{"M", m}};
  s.product_class = PartitionClass::congruence(5, {2, 3});
  s.watched = {2, m};
  s.diff_kind = ClassKind::diff2_star;
  s.linked_id = "twopartM";
  s.linked_param = m;
  s.signature_label = "(j,k)";
  const auto w = s.watched;
  auto sig = [w](int j, int k) { return WeightSignature(w, {j, k}); };
  s.rules.push_back(empty_rule(w));
  s.rules.push_back(rule("one part N=2j or N=2j+3, k=0", 1, 1, [sig](const Partition& l, const Partition&) {
    const int n = l.size();
    Candidates out;
    for (int j = 0; 2 * j <= n; ++j) {
      if (n == 2 * j || n == 2 * j + 3) out.push_back(sig(j, 0));
    }
    return out;
  }));
  s.rules.push_back(rule("two parts", 2, 2, [sig, m](const Partition&, const Partition& c) {
    const int j = c.multiplicity(2);
    const int o = ones(c);
    Candidates out;
    for (int k = 0; m * (k - 1) <= o; ++k) {
      const int i = o - m * k;
      if (i >= 0 && i <= m - 1 && i != m - 3 && i != m - 6) out.push_back(sig(j, k));
      if (k >= 1 && (o == m * (k - 1) + m - 3 || o == m * (k - 1) + m - 6)) out.push_back(sig(j, k));
    }
    return out;
  }));
  s.rules.push_back(rule("3..M-1 parts, Mk..Mk+M-1 ones", 3, m - 1, [sig, m](const Partition&, const Partition& c) {
    const int o = ones(c);
    Candidates out;
    for (int k = 0; m * k <= o; ++k) {
      if (o <= m * k + m - 1) out.push_back(sig(c.multiplicity(2), k));
    }
    return out;
  }));
  s.rules.push_back(rule("at least M parts", m, -1, [sig, m](const Partition&, const Partition& c) {
    return Candidates{sig(c.multiplicity(2), c.multiplicity(m))};
  }));
  return s;
}

RefinementStatement general_two_part_14(int m) {
  const int h = m / 2;
  RefinementStatement s;
  s.id = "general2part14cor";
  s.title = "parts 1, 4 mod 5 with j 1's and k M's";
  s.params = {{"M", m}};
  s.product_class = PartitionClass::congruence(5, {1, 4});
  s.watched = {1, m};
  s.diff_kind = ClassKind::diff2;
  s.linked_id = "twopart14";
  s.linked_param = m;
  s.signature_label = "(j,k)";
  const auto w = s.watched;
  auto sig = [w](int j, int k) { return WeightSignature(w, {j, k}); };
  s.rules.push_back(empty_rule(w));
  s.rules.push_back(rule("one part N=j, k=0", 1, 1, [sig](const Partition& l, const Partition&) {
    return Candidates{sig(l.size(), 0)};
  }));
  s.rules.push_back(rule("two parts, col=2^l 1^j", 2, 2, [sig, h](const Partition&, const Partition& c) {
    const int j = ones(c);
    const int l = c.multiplicity(2);
    Candidates out;
    for (int k = 0; h * k - 2 <= l; ++k) {
      const int i = l - h * k;
      if (i >= 0 && i <= h - 1 && i != h - 2) out.push_back(sig(j, k));
      if (k >= 1 && l == h * k - 2) out.push_back(sig(j, k));
    }
    return out;
  }));
  s.rules.push_back(rule("3..M-1 parts, Mk/2..Mk/2+M/2-1 twos", 3, m - 1, [sig, h](const Partition&, const Partition& c) {
    const int twos = c.multiplicity(2);
    Candidates out;
    for (int k = 0; h * k <= twos; ++k) {
      if (twos <= h * k + h - 1) out.push_back(sig(ones(c), k));
    }
    return out;
  }));
  s.rules.push_back(rule("at least M parts", m, -1, [sig, m](const Partition&, const Partition& c) {
    return Candidates{sig(ones(c), c.multiplicity(m))};
  }));
  return s;
}

// --- three weighted parts ----------------------------------------------------

RefinementStatement first_big() {
  RefinementStatement s;
  s.id = "firstbigcomb";
  s.title = "parts 2, 3 mod 5 with k 2's, j 3's and l 7's";
  s.product_class = PartitionClass::congruence(5, {2, 3});
  s.watched = {2, 3, 7};
  s.diff_kind = ClassKind::diff2_star;
  s.linked_id = "twvthm";
  s.signature_label = "(k,j,l)";
  const auto w = s.watched;
  auto sig = [w](int k, int j, int l) { return WeightSignature(w, {k, j, l}); };
  s.rules.push_back(empty_rule(w));
  s.rules.push_back(rule("one part", 1, 1, [sig](const Partition&, const Partition& c) {
    const int o = ones(c);
    Candidates out;
    for (int k = 0; 2 * k - 2 <= o; ++k) {
      if (k >= 1 && o == 2 * k - 2) out.push_back(sig(k, 0, 0));
      if (o == 2 * k + 1) out.push_back(sig(k, 1, 0));
    }
    return out;
  }));
  s.rules.push_back(rule("two parts", 2, 2, [sig](const Partition&, const Partition& c) {
    const int k = c.multiplicity(2);
    const int o = ones(c);
    Candidates out;
    for (int j = 0; 3 * (j - 2) <= o; ++j) {
      if (j >= 2 && o == 3 * (j - 2)) out.push_back(sig(k, j, 0));
      if (o == 3 * j + 2) out.push_back(sig(k, j, 0));
      if (o == 3 * j + 1) out.push_back(sig(k, j, 1));
    }
    return out;
  }));
  s.rules.push_back(rule("three parts", 3, 3, [sig](const Partition&, const Partition& c) {
    const int o = ones(c);
    Candidates out;
    for (int l = 0; 7 * l - 12 <= o; ++l) {
      for (int offset : {0, 1, -12, -4, 4, 5, 6}) {
        if (o == 7 * l + offset) out.push_back(sig(c.multiplicity(2), c.multiplicity(3), l));
      }
    }
    return out;
  }));
  s.rules.push_back(rule("four to six parts", 4, 6, [sig](const Partition&, const Partition& c) {
    const int o = ones(c);
    Candidates out;
    for (int l = 0; 7 * l <= o; ++l) {
      if (o <= 7 * l + 6) out.push_back(sig(c.multiplicity(2), c.multiplicity(3), l));
    }
    return out;
  }));
  s.rules.push_back(rule("at least seven parts", 7, -1, [sig](const Partition&, const Partition& c) {
    return Candidates{sig(c.multiplicity(2), c.multiplicity(3), c.multiplicity(7))};
  }));
  return s;
}

RefinementStatement big() {
  RefinementStatement s;
  s.id = "bigcomb";
  s.title = "parts 1, 4 mod 5 with k 1's, j 4's and l 6's";
  s.product_class = PartitionClass::congruence(5, {1, 4});
  s.watched = {1, 4, 6};
  s.diff_kind = ClassKind::diff2;
  s.linked_id = "twvx14thm_x1";
  s.signature_label = "(k,j,l)";
  const auto w = s.watched;
  auto sig = [w](int k, int j, int l) { return WeightSignature(w, {k, j, l}); };
  s.rules.push_back(empty_rule(w));
  s.rules.push_back(rule("one part, col=1^(k-1)", 1, 1, [sig](const Partition&, const Partition& c) {
    const int k = ones(c) + 1;
    return Candidates{sig(k, 0, 0)};
  }));
  s.rules.push_back(rule("two parts", 2, 2, [sig](const Partition&, const Partition& c) {
    const int k = ones(c);
    const int b = c.multiplicity(2);
    Candidates out;
    for (int j = 0; 2 * j - 2 <= b; ++j) {
      if (j >= 1 && b == 2 * j - 2) out.push_back(sig(k, j, 0));
      if (b == 2 * j + 1) out.push_back(sig(k, j, 1));
    }
    return out;
  }));
  s.rules.push_back(rule("three parts", 3, 3, [sig](const Partition&, const Partition& c) {
    const int k = ones(c);
    const int a = c.multiplicity(3);
    const int b = c.multiplicity(2);
    Candidates out;
    for (int l = 0; 2 * l - 3 <= a; ++l) {
      for (int j = 0; 2 * j <= b; ++j) {
        if (a == 2 * l && b == 2 * j) out.push_back(sig(k, j, l));
        if (a == 2 * l && b == 2 * j + 1) out.push_back(sig(k, j, l));
        if (l >= 2 && a == 2 * l - 3 && b == 2 * j) out.push_back(sig(k, j, l));
        if (a == 2 * l + 1 && b == 2 * j + 1) out.push_back(sig(k, j, l));
      }
    }
    return out;
  }));
  s.rules.push_back(rule("four or five parts", 4, 5, [sig](const Partition&, const Partition& c) {
    const int a = c.multiplicity(3);
    Candidates out;
    for (int l = 0; 2 * l <= a; ++l) {
      if (a == 2 * l || a == 2 * l + 1) out.push_back(sig(ones(c), c.multiplicity(4), l));
    }
    return out;
  }));
  s.rules.push_back(rule("at least six parts", 6, -1, [sig](const Partition&, const Partition& c) {
    return Candidates{sig(ones(c), c.multiplicity(4), c.multiplicity(6))};
  }));
  return s;
}

// --- specializations -----------------------------------------------------------

RefinementStatement no_three_eight() {
  RefinementStatement s;
  s.id = "spec1";
  s.title = "parts 2, 3 mod 5 with no 3's and no 8's";
  s.product_class = PartitionClass::congruence(5, {2, 3}, {3, 8});
  s.diff_kind = ClassKind::diff2_star;
  s.exhaustive = false;
  s.linked_id = "spec1";
  s.rules.push_back(empty_rule({}));
  s.rules.push_back(rule("one even part", 1, 1, [](const Partition& l, const Partition&) {
    return accept_if(l.size() % 2 == 0);
  }));
  s.rules.push_back(rule("two parts, exactly one 1", 2, 2, [](const Partition&, const Partition& c) {
    return accept_if(ones(c) == 1);
  }));
  s.rules.push_back(rule("three parts, no 3's, ones not 3, 4 mod 7", 3, 3, [](const Partition&, const Partition& c) {
    return accept_if(c.multiplicity(3) == 0 && ones(c) % 7 != 3 && ones(c) % 7 != 4);
  }));
  s.rules.push_back(rule("four parts, no 4's, at most two 3's, ones 2, 3, 4 mod 7", 4, 4,
                         [](const Partition&, const Partition& c) {
                           const int r = ones(c) % 7;
                           return accept_if(c.multiplicity(4) == 0 && c.multiplicity(3) <= 2 && r >= 2 && r <= 4);
                         }));
  s.rules.push_back(rule("5..7 parts, at most one 4, no 3's", 5, 7, [](const Partition&, const Partition& c) {
    return accept_if(c.multiplicity(4) <= 1 && c.multiplicity(3) == 0);
  }));
  s.rules.push_back(rule("at least 8 parts, no 3's and no 8's", 8, -1, [](const Partition&, const Partition& c) {
    return accept_if(c.multiplicity(3) == 0 && c.multiplicity(8) == 0);
  }));
  return s;
}

RefinementStatement smallest_eleven() {
  RefinementStatement s;
  s.id = "spec2";
  s.title = "parts 1, 4 mod 5 of size at least 11, N >= 27";
  s.product_class = PartitionClass::congruence(5, {1, 4}, {1, 4, 6, 9});
  s.diff_kind = ClassKind::diff2;
  s.exhaustive = false;
  s.n_min = 27;
  s.linked_id = "spec2";
  s.rules.push_back(rule("5..8 parts, at most two 2's and two 3's, no 1's or 4's", 5, 8,
                         [](const Partition&, const Partition& c) {
                           return accept_if(c.multiplicity(2) <= 2 && c.multiplicity(3) <= 2 && ones(c) == 0 &&
                                            c.multiplicity(4) == 0);
                         }));
  s.rules.push_back(rule("at least 9 parts, no 1's, 4's, 6's or 9's", 9, -1, [](const Partition&, const Partition& c) {
    return accept_if(ones(c) == 0 && c.multiplicity(4) == 0 && c.multiplicity(6) == 0 && c.multiplicity(9) == 0);
  }));
  return s;
}

RefinementStatement melded() {
  RefinementStatement s;
  s.id = "spec3";
  s.title = "parts 2, 3 mod 5 or 5's, no 3's";
  s.product_class = PartitionClass::congruence(5, {2, 3}, {3}, {5});
  s.diff_kind = ClassKind::diff2_star;
  s.exhaustive = false;
  s.linked_id = "spec3";
  s.rules.push_back(empty_rule({}));
  s.rules.push_back(rule("one part other than 3", 1, 1, [](const Partition& l, const Partition&) {
    return accept_if(l.size() != 3);
  }));
  s.rules.push_back(rule("two parts, ones 1, 2, 4 mod 5", 2, 2, [](const Partition&, const Partition& c) {
    const int r = ones(c) % 5;
    return accept_if(r == 1 || r == 2 || r == 4);
  }));
  s.rules.push_back(rule("at least three parts, #2's >= #3's", 3, -1, [](const Partition&, const Partition& c) {
    return accept_if(c.multiplicity(2) >= c.multiplicity(3));
  }));
  return s;
}

StatementEntry fixed_entry(std::string id, RefinementStatement (*build)()) {
  StatementEntry e;
  e.id = std::move(id);
  e.build = [build](std::optional<int>) { return build(); };
  e.title = build().title;
  return e;
}

StatementEntry param_entry(std::string id, ParameterDomain domain, RefinementStatement (*build)(int)) {
  StatementEntry e;
  e.id = std::move(id);
  e.parameter = std::move(domain);
  e.build = [build](std::optional<int> m) { return build(*m); };
  return e;
}

std::vector<StatementEntry> build_statements() {
  std::vector<StatementEntry> out;
  out.push_back(param_entry("generalminithm",
                            {"M", "M+1 congruent to 2 or 3 mod 5", [](int m) { return m >= 1 && second_residue(m + 1); }, 11},
                            general_mini));
  out.back().title = "parts 2, 3 mod 5 with exactly k parts equal to M+1";
  out.push_back(param_entry("generalmini14thm",
                            {"M", "M+1 >= 2 congruent to 1 or 4 mod 5", [](int m) { return m >= 1 && first_residue(m + 1); }, 11},
                            general_mini_14));
  out.back().title = "parts 1, 4 mod 5 with exactly k parts equal to M+1";
  out.push_back(param_entry("general2partcor",
                            {"M", "M >= 7 congruent to 2 or 3 mod 5", [](int m) { return m >= 7 && second_residue(m); }, 12},
                            general_two_part));
  out.back().title = "parts 2, 3 mod 5 with j 2's and k M's";
  out.push_back(param_entry(
      "general2part14cor",
      {"M", "even M >= 4 congruent to 1 or 4 mod 5", [](int m) { return m >= 4 && m % 2 == 0 && first_residue(m); }, 12},
      general_two_part_14));
  out.back().title = "parts 1, 4 mod 5 with j 1's and k M's";
  out.push_back(fixed_entry("firstbigcomb", first_big));
  out.push_back(fixed_entry("bigcomb", big));
  out.push_back(fixed_entry("spec1", no_three_eight));
  out.push_back(fixed_entry("spec2", smallest_eleven));
  out.push_back(fixed_entry("spec3", melded));
  return out;
}

}  // namespace

const std::vector<StatementEntry>& statements() {
  static const std::vector<StatementEntry> entries = build_statements();
  return entries;
}

const StatementEntry& statement_entry(std::string_view id) {
  for (const auto& e : statements()) {
    if (e.id == id) return e;
  }
  throw UnknownId("unknown statement id \"" + std::string(id) + "\"");
}

RefinementStatement StatementEntry::instantiate(std::optional<int> param) const {
  if (parameter) {
    if (!param) throw ParameterDomainError(id + " requires parameter " + parameter->name);
    if (!parameter->admits(*param)) {
      throw ParameterDomainError(id + ": " + parameter->name + "=" + std::to_string(*param) + " is not admissible (" +
                                 parameter->description + ")");
    }
  } else if (param) {
    throw ParameterDomainError(id + " takes no parameter");
  }
  RefinementStatement s = build(param);
  s.validate();
  return s;
}

std::vector<int> StatementEntry::sweep() const {
  std::vector<int> out;
  if (!parameter) return out;
  for (int m = 0; m <= parameter->sweep_max; ++m) {
    if (parameter->admits(m)) out.push_back(m);
  }
  return out;
}

}  // namespace rrw
