#include "rrw/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rrw/combinatorics.hpp"
#include "rrw/discovery.hpp"
#include "rrw/errors.hpp"
#include "rrw/identities.hpp"
#include "rrw/polynomial_io.hpp"
#include "rrw/report_json.hpp"

namespace rrw {

int default_order() {
  const char* env = std::getenv(kOrderEnv);
  if (!env || !*env) return kDefaultOrder;
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0') throw std::invalid_argument(std::string(kOrderEnv) + " is not an integer");
  return v;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format \"" + s + "\" (text, json or csv)");
}

namespace {

struct Outcome {
  std::string body;
  bool passed = true;
};

void require_format(Format f, std::initializer_list<Format> allowed, const char* command) {
  for (Format a : allowed) {
    if (a == f) return;
  }
  throw std::invalid_argument(std::string(command) + " does not support that output format");
}

// --- verify --------------------------------------------------------------------

struct VerifyJob {
  const CatalogEntry* entry;
  std::optional<int> param;
};

Outcome do_verify(const RunConfig& c) {
  require_format(c.format, {Format::text, Format::json}, "verify");
  const int order = c.order ? *c.order : default_order();
  if (order < kMinVerifyOrder) {
    throw std::invalid_argument("verify order must be at least " + std::to_string(kMinVerifyOrder));
  }
  std::vector<const CatalogEntry*> entries;
  if (c.id == "all") {
    if (c.param) throw std::invalid_argument("--param needs a single --id");
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    entries.push_back(&catalog_entry(c.id));
  }
  std::vector<VerifyJob> jobs;
  for (const auto* e : entries) {
    if (c.param) {
      e->instantiate(c.param);  // domain check before any expansion
      jobs.push_back({e, c.param});
    } else if (e->parameter) {
      for (int m : e->sweep()) jobs.push_back({e, m});
    } else {
      jobs.push_back({e, std::nullopt});
    }
  }

  std::vector<VerificationReport> reports;
  for (const auto& j : jobs) reports.push_back(verify(j.entry->instantiate(j.param), std::max(order, j.entry->min_order)));

  Outcome o;
  int failed = 0;
  for (const auto& r : reports) failed += r.passed ? 0 : 1;
  o.passed = failed == 0;
  if (c.format == Format::json) {
    nlohmann::json j = {{"command", "verify"},
                        {"reports", reports},
                        {"passed", static_cast<int>(reports.size()) - failed},
                        {"failed", failed}};
    o.body = j.dump(2) + "\n";
  } else {
    for (const auto& r : reports) o.body += to_line(r) + "\n";
    o.body += std::to_string(reports.size() - static_cast<std::size_t>(failed)) + " passed, " + std::to_string(failed) +
              " failed\n";
  }
  return o;
}

// --- enumerate -----------------------------------------------------------------

Outcome do_enumerate(const RunConfig& c) {
  if (c.n < 0) throw std::invalid_argument("--n must be non-negative");
  PartitionClass cls = PartitionClass::diff2();
  if (c.class_name == "diff2") {
    cls = PartitionClass::diff2();
  } else if (c.class_name == "diff2_star") {
    cls = PartitionClass::diff2_star();
  } else if (c.class_name == "congruence") {
    if (c.residues.empty()) throw std::invalid_argument("congruence class needs --residues");
    cls = PartitionClass::congruence(c.modulus, c.residues, c.forbidden, c.extra);
  } else {
    throw std::invalid_argument("unknown class \"" + c.class_name + "\" (diff2, diff2_star or congruence)");
  }
  const auto parts = enumerate(cls, c.n);
  Outcome o;
  switch (c.format) {
    case Format::text:
      for (const auto& p : parts) o.body += to_string(p) + "\n";
      break;
    case Format::csv:
      o.body = "partition\n";
      for (const auto& p : parts) o.body += "\"" + to_exponent_string(p) + "\"\n";
      break;
    case Format::json: {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& p : parts) list.push_back(to_string(p));
      nlohmann::json j = {{"class", cls.describe()}, {"n", c.n}, {"count", parts.size()}, {"partitions", list}};
      o.body = j.dump(2) + "\n";
      break;
    }
  }
  return o;
}

// --- table -------------------------------------------------------------------

Outcome do_table(const RunConfig& c, std::ostream& err) {
  if (c.id == "all") throw std::invalid_argument("table needs a single --id");
  if (c.n < 0) throw std::invalid_argument("--n must be non-negative");
  const RefinementStatement stmt = statement_entry(c.id).instantiate(c.param);
  std::optional<WeightSignature> only;
  if (c.signature) only = parse_signature(stmt, *c.signature);
  std::vector<TableRow> rows;
  try {
    rows = build_table(stmt, c.n, only);
  } catch (const NonsingletonClass&) {
    err << "class sizes at n=" << c.n << ":\n";
    const auto counts = count_product_refined(stmt, c.n);
    for (const auto& [s, k] : counts) err << "  " << to_string(s) << " " << k << "\n";
    throw;
  }
  Outcome o;
  switch (c.format) {
    case Format::text: o.body = format_table_text(stmt, rows); break;
    case Format::csv: o.body = format_table_csv(stmt, rows); break;
    case Format::json: {
      nlohmann::json j = {{"id", stmt.id}, {"params", stmt.params}, {"n", c.n}, {"rows", rows}};
      o.body = j.dump(2) + "\n";
      break;
    }
  }
  return o;
}

// --- refine-check ----------------------------------------------------------------

Outcome do_refine_check(const RunConfig& c) {
  require_format(c.format, {Format::text, Format::json}, "refine-check");
  if (c.n_max < 0) throw std::invalid_argument("--n-max must be non-negative");
  std::vector<const StatementEntry*> entries;
  if (c.id == "all") {
    if (c.param) throw std::invalid_argument("--param needs a single --id");
    for (const auto& e : statements()) entries.push_back(&e);
  } else {
    entries.push_back(&statement_entry(c.id));
  }
  std::vector<RefinementStatement> stmts;
  for (const auto* e : entries) {
    if (c.param || !e->parameter) {
      stmts.push_back(e->instantiate(c.param));
    } else {
      for (int m : e->sweep()) stmts.push_back(e->instantiate(m));
    }
  }
  std::vector<RefinementReport> reports;
  for (const auto& s : stmts) reports.push_back(check_refinement(s, c.n_max));

  Outcome o;
  int failed = 0;
  for (const auto& r : reports) failed += r.passed ? 0 : 1;
  o.passed = failed == 0;
  if (c.format == Format::json) {
    nlohmann::json j = {{"command", "refine-check"},
                        {"reports", reports},
                        {"passed", static_cast<int>(reports.size()) - failed},
                        {"failed", failed}};
    o.body = j.dump(2) + "\n";
  } else {
    for (const auto& r : reports) o.body += to_line(r) + "\n";
    o.body += std::to_string(reports.size() - static_cast<std::size_t>(failed)) + " passed, " + std::to_string(failed) +
              " failed\n";
  }
  return o;
}

// --- discover ------------------------------------------------------------------

std::string describe(const DiscoveryReport& r) {
  std::ostringstream os;
  if (!r.name.empty()) os << "problem: " << r.name << "\n";
  os << "status: " << to_string(r.status) << "\n";
  os << "match order: " << r.match_order << ", unknowns: " << r.unknowns.size() << ", equations: " << r.equations
     << ", rank: " << r.rank << "\n";
  if (r.status == SolveStatus::inconsistent) return os.str();
  os << "integral: " << (r.integral ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < r.numerators.size(); ++i) {
    os << r.labels.at(i) << " = " << to_string(r.numerators[i]) << "\n";
  }
  if (!r.integral) {
    for (std::size_t i = 0; i < r.particular.size(); ++i) {
      if (r.particular[i] != 0) os << "  " << unknown_name(r, i) << " = " << r.particular[i].str() << "\n";
    }
  }
  if (!r.nullspace.empty()) {
    os << "nullspace dimension: " << r.nullspace.size() << "\n";
    for (std::size_t k = 0; k < r.nullspace.size(); ++k) {
      os << "  basis " << k + 1 << ":";
      for (std::size_t i = 0; i < r.nullspace[k].size(); ++i) {
        if (r.nullspace[k][i] != 0) os << " " << unknown_name(r, i) << "=" << r.nullspace[k][i].str();
      }
      os << "\n";
    }
  }
  if (r.sound) os << "re-verified at order " << 2 * r.match_order << ": " << (*r.sound ? "yes" : "no") << "\n";
  return os.str();
}

Outcome do_discover(const RunConfig& c) {
  require_format(c.format, {Format::text, Format::json}, "discover");
  if (c.problem.empty()) throw std::invalid_argument("discover needs --problem");
  const DiscoveryProblem p = load_problem(c.problem);
  const DiscoveryReport r = solve(p);
  Outcome o;
  o.passed = r.passed();
  o.body = c.format == Format::json ? nlohmann::json(r).dump(2) + "\n" : describe(r);
  return o;
}

Outcome dispatch(const RunConfig& c, std::ostream& err) {
  switch (c.command) {
    case Command::verify: return do_verify(c);
    case Command::enumerate: return do_enumerate(c);
    case Command::table: return do_table(c, err);
    case Command::refine_check: return do_refine_check(c);
    case Command::discover: return do_discover(c);
  }
  throw std::logic_error("unhandled command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Outcome o = dispatch(config, err);
    if (config.output) {
      std::ofstream f(*config.output, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << *config.output << "\n";
        return exit_code::error;
      }
      f << o.body;
    } else {
      out << o.body;
    }
    return o.passed ? exit_code::ok : exit_code::failure;
  } catch (const ArithmeticOverflow& e) {
    err << "overflow: " << e.what() << "\n";
    return exit_code::overflow;
  } catch (const ClassificationGap& e) {
    err << "classification gap: " << e.what() << "\n";
    return exit_code::failure;
  } catch (const AmbiguousClassification& e) {
    err << "ambiguous classification: " << e.what() << "\n";
    return exit_code::failure;
  } catch (const NonsingletonClass& e) {
    err << "table undefined: " << e.what() << "\n";
    return exit_code::failure;
  } catch (const std::invalid_argument& e) {
    // UnknownId, ParameterDomainError, ParseError and bad options.
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::error;
  }
}

}  // namespace rrw
