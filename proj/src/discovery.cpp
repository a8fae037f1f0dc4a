#include "rrw/discovery.hpp"

#include <fstream>
#include <sstream>

#include <boost/multiprecision/eigen.hpp>

#include "rrw/errors.hpp"
#include "rrw/exact_solve.hpp"
#include "rrw/polynomial_io.hpp"

namespace rrw {

const std::vector<WeightMonomial>& NumeratorTemplate::allowed(int degree) const {
  auto it = per_degree.find(degree);
  return it == per_degree.end() ? monomials : it->second;
}

std::vector<UnknownCoefficient> DiscoveryProblem::unknowns() const {
  std::vector<UnknownCoefficient> out;
  for (std::size_t i = 0; i < templates.size(); ++i) {
    for (int d = 0; d <= templates[i].max_degree; ++d) {
      for (const auto& m : templates[i].allowed(d)) out.push_back({i, d, m});
    }
  }
  return out;
}

int DiscoveryProblem::effective_match_order() const {
  return match_order ? *match_order : static_cast<int>(unknowns().size()) + 10;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::unique: return "unique";
    case SolveStatus::underdetermined: return "underdetermined";
    case SolveStatus::inconsistent: return "inconsistent";
  }
  return "?";
}

bool DiscoveryReport::passed() const { return status != SolveStatus::inconsistent && integral && sound.value_or(false); }

namespace {

TruncatedSeries known_part(const DiscoveryProblem& p, int order) {
  TruncatedSeries s = expand(p.fixed, order);
  for (const auto& tail : p.tails) s += expand(tail.terms_up_to(order), order);
  return s;
}

std::vector<RationalTerm> candidate_terms(const DiscoveryProblem& p, const std::vector<QPolynomial>& numerators) {
  std::vector<RationalTerm> out;
  for (std::size_t i = 0; i < p.templates.size(); ++i) {
    const auto& t = p.templates[i];
    out.emplace_back(t.q_shift, numerators.at(i), t.denominator);
  }
  return out;
}

Coeff to_coeff(const Rational& r) {
  const auto n = boost::multiprecision::numerator(r);
  if (n > std::numeric_limits<Coeff>::max() || n < std::numeric_limits<Coeff>::min()) {
    throw ArithmeticOverflow("solution coefficient exceeds 64 bits");
  }
  return n.convert_to<Coeff>();
}

}  // namespace

DiscoveryReport solve(const DiscoveryProblem& problem) {
  DiscoveryReport r;
  r.name = problem.name;
  r.match_order = problem.effective_match_order();
  r.unknowns = problem.unknowns();
  for (const auto& t : problem.templates) r.labels.push_back(t.label);
  const int order = r.match_order;

  const TruncatedSeries rhs = expand_product_side(problem.target, order) - known_part(problem, order);

  std::vector<TruncatedSeries> columns;
  columns.reserve(r.unknowns.size());
  for (const auto& u : r.unknowns) {
    const auto& t = problem.templates[u.template_index];
    columns.push_back(expand(RationalTerm(t.q_shift + u.degree, WeightPolynomial(u.monomial), t.denominator), order));
  }

  // One equation per (degree, monomial) seen anywhere.
  std::map<std::pair<int, WeightMonomial>, Eigen::Index> rows;
  auto note = [&](const TruncatedSeries& s) {
    for (int n = 0; n <= order; ++n) {
      for (const auto& [m, c] : s[n].terms()) rows.emplace(std::make_pair(n, m), 0);
    }
  };
  for (const auto& c : columns) note(c);
  note(rhs);
  Eigen::Index next = 0;
  for (auto& [key, idx] : rows) idx = next++;

  const auto ncols = static_cast<Eigen::Index>(columns.size());
  DenseMatrix<Rational> a = DenseMatrix<Rational>::Constant(next, ncols, Rational(0));
  DenseVector<Rational> b = DenseVector<Rational>::Constant(next, Rational(0));
  for (Eigen::Index j = 0; j < ncols; ++j) {
    const auto& s = columns[static_cast<std::size_t>(j)];
    for (int n = 0; n <= order; ++n) {
      for (const auto& [m, c] : s[n].terms()) a(rows.at({n, m}), j) = Rational(c);
    }
  }
  for (int n = 0; n <= order; ++n) {
    for (const auto& [m, c] : rhs[n].terms()) b(rows.at({n, m})) = Rational(c);
  }
  r.equations = static_cast<int>(next);

  const auto sol = solve_exact(a, b);
  r.rank = static_cast<int>(sol.rank);
  if (!sol.consistent) {
    r.status = SolveStatus::inconsistent;
    return r;
  }
  r.status = sol.free_columns.empty() ? SolveStatus::unique : SolveStatus::underdetermined;
  r.particular.assign(sol.particular.data(), sol.particular.data() + sol.particular.size());
  for (Eigen::Index f = 0; f < sol.nullspace.cols(); ++f) {
    std::vector<Rational> v(static_cast<std::size_t>(ncols));
    for (Eigen::Index i = 0; i < ncols; ++i) v[static_cast<std::size_t>(i)] = sol.nullspace(i, f);
    r.nullspace.push_back(std::move(v));
    r.free_unknowns.push_back(static_cast<std::size_t>(sol.free_columns[static_cast<std::size_t>(f)]));
  }

  r.integral = std::all_of(r.particular.begin(), r.particular.end(),
                           [](const Rational& x) { return boost::multiprecision::denominator(x) == 1; });
  if (!r.integral) return r;

  r.numerators.assign(problem.templates.size(), QPolynomial{});
  for (std::size_t i = 0; i < r.unknowns.size(); ++i) {
    const auto& u = r.unknowns[i];
    const Coeff c = to_coeff(r.particular[i]);
    if (c != 0) r.numerators[u.template_index].add(u.degree, WeightPolynomial(u.monomial, c));
  }
  r.sound = satisfies(problem, r.numerators, 2 * order);
  return r;
}

std::optional<std::vector<Rational>> coordinates(const DiscoveryProblem& problem,
                                                 const std::vector<QPolynomial>& numerators) {
  if (numerators.size() != problem.templates.size()) return std::nullopt;
  const auto unknowns = problem.unknowns();
  std::map<std::tuple<std::size_t, int, WeightMonomial>, std::size_t> index;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    index[{unknowns[i].template_index, unknowns[i].degree, unknowns[i].monomial}] = i;
  }
  std::vector<Rational> x(unknowns.size(), Rational(0));
  for (std::size_t t = 0; t < numerators.size(); ++t) {
    const auto& p = numerators[t];
    for (int d = 0; d <= p.degree(); ++d) {
      for (const auto& [m, c] : p[d].terms()) {
        auto it = index.find({t, d, m});
        if (it == index.end()) return std::nullopt;
        x[it->second] = Rational(c);
      }
    }
  }
  return x;
}

bool in_solution_space(const DiscoveryReport& report, const std::vector<Rational>& x) {
  if (report.status == SolveStatus::inconsistent || x.size() != report.particular.size()) return false;
  std::vector<Rational> y = report.particular;
  for (std::size_t k = 0; k < report.nullspace.size(); ++k) {
    const Rational coeff = x[report.free_unknowns[k]];
    if (coeff == 0) continue;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += coeff * report.nullspace[k][i];
  }
  return y == x;
}

bool satisfies(const DiscoveryProblem& problem, const std::vector<QPolynomial>& numerators, int order) {
  const TruncatedSeries lhs = known_part(problem, order) + expand(candidate_terms(problem, numerators), order);
  return compare(lhs, expand_product_side(problem.target, order)).equal();
}

std::string unknown_name(const DiscoveryReport& r, std::size_t i) {
  const auto& u = r.unknowns.at(i);
  const std::string mono = u.monomial.is_one() ? std::string() : to_string(u.monomial) + "*";
  return r.labels.at(u.template_index) + "[" + mono + "q^" + std::to_string(u.degree) + "]";
}

PositivityReport check_positivity(const QPolynomial& p) {
  for (int d = 0; d <= p.degree(); ++d) {
    for (const auto& [m, c] : p[d].terms()) {
      if (c < 0) return {false, PositivityWitness{d, m, c}};
    }
  }
  return {};
}

// --- problem files -----------------------------------------------------------

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("line " + std::to_string(line) + ": expected an integer, got \"" + s + "\"");
}

std::vector<DenominatorFactor> factors(const std::string& s) {
  std::vector<DenominatorFactor> out;
  if (s.empty()) return out;
  for (const auto& f : split(s, ',')) out.push_back(parse_factor(f));
  return out;
}

std::vector<WeightMonomial> monomial_list(const std::string& s) {
  std::vector<WeightMonomial> out;
  if (s.empty()) return out;
  for (const auto& m : split(s, ',')) out.push_back(parse_weight_monomial(m));
  return out;
}

/// Splits "key=value" tokens; plain tokens go to `words`.
struct Tokens {
  std::vector<std::string> words;
  std::map<std::string, std::string> keys;
};

Tokens tokenize(std::istringstream& in, int line) {
  Tokens t;
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      t.words.push_back(tok);
    } else if (!t.keys.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second) {
      throw ParseError("line " + std::to_string(line) + ": repeated key " + tok.substr(0, eq));
    }
  }
  return t;
}

std::optional<int> param_of(const Tokens& t, int line) {
  auto it = t.keys.find("M");
  if (it == t.keys.end()) return std::nullopt;
  return to_int(it->second, line);
}

}  // namespace

DiscoveryProblem parse_problem(std::string_view text) {
  DiscoveryProblem p;
  bool have_target = false;
  std::istringstream lines{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(lines, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    std::string keyword;
    if (!(in >> keyword)) continue;
    auto fail = [&](const std::string& what) {
      return ParseError("line " + std::to_string(line) + ": " + what);
    };

    if (keyword == "name") {
      std::string rest;
      std::getline(in >> std::ws, rest);
      p.name = rest;
    } else if (keyword == "match_order") {
      std::string v;
      if (!(in >> v)) throw fail("match_order needs a value");
      p.match_order = to_int(v, line);
      if (*p.match_order < 0) throw fail("match_order must be non-negative");
    } else if (keyword == "target") {
      const Tokens t = tokenize(in, line);
      if (t.words.size() != 1) throw fail("target takes one catalog id");
      p.target = instantiate(t.words[0], param_of(t, line));
      if (!p.target.product) throw fail(t.words[0] + " has no product side");
      have_target = true;
    } else if (keyword == "fixed") {
      const Tokens t = tokenize(in, line);
      if (t.words.size() >= 1 && t.words[0] == "term") {
        if (!t.keys.contains("shift") || !t.keys.contains("numerator")) throw fail("fixed term needs shift= and numerator=");
        const auto den = t.keys.contains("denominator") ? t.keys.at("denominator") : std::string();
        p.fixed.emplace_back(to_int(t.keys.at("shift"), line), parse_qpolynomial(t.keys.at("numerator")), factors(den));
        continue;
      }
      if (t.words.size() < 2) throw fail("expected: fixed <id> terms <i>... | fixed <id> tail");
      const IdentitySpec spec = instantiate(t.words[0], param_of(t, line));
      if (t.words[1] == "tail") {
        if (t.words.size() != 2) throw fail("tail takes no indices");
        if (!spec.tail) throw fail(spec.id + " has no tail");
        p.tails.push_back({spec.tail->start, [f = *spec.tail, sub = spec.substitution](int m) {
                             return sub.apply(f.term_of(m));
                           }});
      } else if (t.words[1] == "terms") {
        for (std::size_t i = 2; i < t.words.size(); ++i) {
          const int idx = to_int(t.words[i], line);
          if (idx < 0 || idx >= static_cast<int>(spec.sum_terms.size())) {
            throw fail(spec.id + " has no term " + t.words[i]);
          }
          p.fixed.push_back(spec.substitution.apply(spec.sum_terms[static_cast<std::size_t>(idx)]));
        }
      } else {
        throw fail("expected 'terms' or 'tail' after the id");
      }
    } else if (keyword == "unknown") {
      const Tokens t = tokenize(in, line);
      if (!t.words.empty()) throw fail("unexpected word " + t.words[0]);
      NumeratorTemplate nt;
      for (const auto& [k, v] : t.keys) {
        if (k == "label") {
          nt.label = v;
        } else if (k == "shift") {
          nt.q_shift = to_int(v, line);
        } else if (k == "denominator") {
          nt.denominator = factors(v);
        } else if (k == "degree") {
          nt.max_degree = to_int(v, line);
        } else if (k == "monomials") {
          nt.monomials = monomial_list(v);
        } else if (k.rfind("monomials@", 0) == 0) {
          nt.per_degree[to_int(k.substr(10), line)] = monomial_list(v);
        } else {
          throw fail("unknown key " + k);
        }
      }
      if (nt.q_shift < 0 || nt.max_degree < 0) throw fail("shift and degree must be non-negative");
      if (nt.label.empty()) nt.label = "N" + std::to_string(p.templates.size() + 1);
      p.templates.push_back(std::move(nt));
    } else {
      throw fail("unknown keyword " + keyword);
    }
  }
  if (!have_target) throw ParseError("problem has no target line");
  return p;
}

DiscoveryProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace rrw
