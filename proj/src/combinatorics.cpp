#include "rrw/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rrw/errors.hpp"

namespace rrw {

PartitionClass RefinementStatement::diff_class() const {
  return diff_kind == ClassKind::diff2_star ? PartitionClass::diff2_star() : PartitionClass::diff2();
}

Partition RefinementStatement::image(const Partition& lambda) const {
  return diff_kind == ClassKind::diff2_star ? col_star(lambda) : col(lambda);
}

WeightSignature RefinementStatement::signature_of(const Partition& mu) const { return signature(mu, watched); }

void RefinementStatement::validate() const {
  if (diff_kind == ClassKind::congruence) throw std::logic_error(id + ": diff side must be diff2 or diff2_star");
  if (watched.size() > static_cast<std::size_t>(kWeightCount)) throw std::logic_error(id + ": too many watched sizes");
  std::vector<const CaseRule*> sorted;
  for (const auto& r : rules) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return a->min_parts < b->min_parts; });
  int next = 0;
  for (const CaseRule* r : sorted) {
    if (next < 0) throw std::logic_error(id + ": rule " + r->label + " follows an unbounded rule");
    if (r->max_parts >= 0 && r->max_parts < r->min_parts) throw std::logic_error(id + ": empty rule " + r->label);
    if (r->min_parts < next) throw std::logic_error(id + ": overlapping rule " + r->label);
    if (exhaustive && r->min_parts != next) throw std::logic_error(id + ": no rule for " + std::to_string(next) + " parts");
    next = r->max_parts < 0 ? -1 : r->max_parts + 1;
  }
  if (exhaustive && next != -1) throw std::logic_error(id + ": rules stop at " + std::to_string(next) + " parts");
}

SignatureCounts count_product_refined(const RefinementStatement& stmt, int n) {
  SignatureCounts out;
  for (const auto& mu : enumerate(stmt.product_class, n)) ++out[stmt.signature_of(mu)];
  return out;
}

namespace {

std::optional<WeightSignature> classify(const RefinementStatement& stmt, const Partition& lambda) {
  const CaseRule* match = nullptr;
  for (const auto& r : stmt.rules) {
    if (r.covers(lambda.length())) {
      match = &r;
      break;
    }
  }
  if (!match) {
    if (stmt.exhaustive) {
      throw ClassificationGap(stmt.id + ": no case covers " + to_string(lambda) + " with " +
                              std::to_string(lambda.length()) + " parts");
    }
    return std::nullopt;
  }
  const Partition img = stmt.image(lambda);
  std::vector<WeightSignature> c = match->classify(lambda, img);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (c.size() > 1) {
    throw AmbiguousClassification(stmt.id + ": " + to_string(lambda) + " matches both " + to_string(c[0]) + " and " +
                                  to_string(c[1]) + " under \"" + match->label + "\"");
  }
  if (c.empty()) {
    if (stmt.exhaustive) {
      throw ClassificationGap(stmt.id + ": " + to_string(lambda) + " (image " + to_string(img) +
                              ") fails every alternative of \"" + match->label + "\"");
    }
    return std::nullopt;
  }
  return c.front();
}

}  // namespace

SignatureCounts count_diff_refined(const RefinementStatement& stmt, int n) {
  SignatureCounts out;
  for (const auto& lambda : enumerate(stmt.diff_class(), n)) {
    if (auto s = classify(stmt, lambda)) ++out[*s];
  }
  return out;
}

SignatureCounts count_diff_refined(const RefinementStatement& stmt, int n, int parts) {
  SignatureCounts out;
  for (const auto& lambda : enumerate(stmt.diff_class(), n)) {
    if (lambda.length() != parts) continue;
    if (auto s = classify(stmt, lambda)) ++out[*s];
  }
  return out;
}

SignatureCounts signature_counts(const RefinementStatement& stmt, const WeightPolynomial& coefficient) {
  SignatureCounts out;
  for (const auto& [mono, c] : coefficient.terms()) {
    std::vector<int> counts;
    for (std::size_t i = 0; i < static_cast<std::size_t>(kWeightCount); ++i) {
      const int e = mono.exponents()[i];
      if (i < stmt.watched.size()) {
        counts.push_back(e);
      } else if (e != 0) {
        throw std::logic_error(stmt.id + ": linked series carries an unwatched weight");
      }
    }
    out[WeightSignature(stmt.watched, std::move(counts))] += c;
  }
  return out;
}

std::vector<SignatureCounts> count_series_refined(const RefinementStatement& stmt, int n_max) {
  const IdentitySpec spec = instantiate(stmt.linked_id, stmt.linked_param);
  const TruncatedSeries s = expand_sum_side(spec, n_max);
  std::vector<SignatureCounts> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(signature_counts(stmt, s[n]));
  return out;
}

namespace {

long long lookup(const SignatureCounts& m, const WeightSignature& s) {
  auto it = m.find(s);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

RefinementReport check_refinement(const RefinementStatement& stmt, int n_max) {
  RefinementReport r{stmt.id, stmt.params, std::max(stmt.n_min, 0), n_max, true, std::nullopt, {}};
  try {
    const auto series = count_series_refined(stmt, n_max);
    for (int n = r.n_min; n <= n_max; ++n) {
      const auto prod = count_product_refined(stmt, n);
      const auto diff = count_diff_refined(stmt, n);
      const auto& ser = series[static_cast<std::size_t>(n)];
      std::set<WeightSignature> keys;
      for (const auto* m : {&prod, &diff, &ser}) {
        for (const auto& [k, c] : *m) keys.insert(k);
      }
      for (const auto& k : keys) {
        const long long a = lookup(prod, k), b = lookup(diff, k), c = lookup(ser, k);
        if (a != b || b != c) {
          r.passed = false;
          r.mismatch = RefinementMismatch{n, k, a, b, c};
          return r;
        }
      }
    }
  } catch (const ClassificationGap& e) {
    r.passed = false;
    r.error = e.what();
  } catch (const AmbiguousClassification& e) {
    r.passed = false;
    r.error = e.what();
  }
  return r;
}

std::string to_line(const RefinementReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.id;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
  os << " n=" << r.n_min << ".." << r.n_max;
  if (r.mismatch) {
    const auto& m = *r.mismatch;
    os << " at n=" << m.n << " signature " << to_string(m.signature) << ": product=" << m.product
       << ", diff=" << m.diff << ", series=" << m.series;
  }
  if (!r.error.empty()) os << ": " << r.error;
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<TableRow> build_table(const RefinementStatement& stmt, int n, const std::optional<WeightSignature>& only) {
  std::map<WeightSignature, std::vector<Partition>> mus, lambdas;
  for (auto& mu : enumerate(stmt.product_class, n)) {
    auto s = stmt.signature_of(mu);
    if (!only || s == *only) mus[s].push_back(std::move(mu));
  }
  for (auto& lambda : enumerate(stmt.diff_class(), n)) {
    auto s = classify(stmt, lambda);
    if (s && (!only || *s == *only)) lambdas[*s].push_back(std::move(lambda));
  }
  std::vector<TableRow> rows;
  std::set<WeightSignature> keys;
  for (const auto& [k, v] : mus) keys.insert(k);
  for (const auto& [k, v] : lambdas) keys.insert(k);
  for (const auto& k : keys) {
    const auto& a = mus[k];
    const auto& b = lambdas[k];
    if (a.size() != b.size()) {
      throw std::runtime_error(stmt.id + ": class " + to_string(k) + " has " + std::to_string(a.size()) +
                               " product partitions but " + std::to_string(b.size()) + " difference partitions");
    }
    if (!only && a.size() > 1) {
      throw NonsingletonClass(stmt.id + ": signature " + to_string(k) + " has " + std::to_string(a.size()) +
                              " members at n=" + std::to_string(n));
    }
    // enumerate() already yields decreasing lexicographic order.
    for (std::size_t i = 0; i < a.size(); ++i) rows.push_back({a[i], b[i], stmt.image(b[i]), k});
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) { return x.mu > y.mu; });
  return rows;
}

namespace {

std::vector<std::array<std::string, 4>> cells(const RefinementStatement& stmt, const std::vector<TableRow>& rows) {
  std::vector<std::array<std::string, 4>> out;
  out.push_back({"mu", "lambda", stmt.diff_kind == ClassKind::diff2_star ? "col*" : "col",
                 stmt.signature_label.empty() ? "signature" : stmt.signature_label});
  for (const auto& r : rows) {
    out.push_back({to_string(r.mu), to_string(r.lambda), to_string(r.image), to_string(r.signature)});
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string format_table_text(const RefinementStatement& stmt, const std::vector<TableRow>& rows) {
  const auto table = cells(stmt, rows);
  std::array<std::size_t, 4> width{};
  for (const auto& row : table) {
    for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) line += " | ";
      line += row[i];
      if (i < 3) line.append(width[i] - row[i].size(), ' ');
    }
    out += line + '\n';
  }
  return out;
}

std::string format_table_csv(const RefinementStatement& stmt, const std::vector<TableRow>& rows) {
  std::string out = "mu,lambda,image,signature\n";
  (void)stmt;
  for (const auto& r : rows) {
    out += csv_field(to_exponent_string(r.mu)) + ',' + csv_field(to_exponent_string(r.lambda)) + ',' +
           csv_field(to_exponent_string(r.image)) + ',' + csv_field(to_string(r.signature)) + '\n';
  }
  return out;
}

WeightSignature parse_signature(const RefinementStatement& stmt, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ') s += c;
  }
  std::vector<int> counts;
  std::string_view rest = s;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
      throw ParseError("bad signature \"" + std::string(text) + "\"");
    }
    counts.push_back(v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  if (counts.size() != stmt.watched.size()) {
    throw ParseError("signature \"" + std::string(text) + "\" needs " + std::to_string(stmt.watched.size()) +
                     " entries for " + stmt.id);
  }
  return WeightSignature(stmt.watched, std::move(counts));
}

}  // namespace rrw
