#pragma once

// Refinements of MacMahon's partition theorems: weighted counts on the
// product side, case-rule classification on the difference-two side, and
// the bijection tables pairing the two.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrw/identities.hpp"
#include "rrw/partitions.hpp"

namespace rrw {

using SignatureCounts = std::map<WeightSignature, long long>;

/// One item of a statement's case list, covering lambda with a given number
/// of parts. `classify` sees lambda and its col / col* image and returns the
/// signatures it may contribute to (empty: lambda is not counted).
struct CaseRule {
  std::string label;
  int min_parts = 0;
  /// -1 means unbounded.
  int max_parts = -1;
  std::function<std::vector<WeightSignature>(const Partition& lambda, const Partition& image)> classify;

  bool covers(int parts) const { return parts >= min_parts && (max_parts < 0 || parts <= max_parts); }
};

struct RefinementStatement {
  std::string id;
  std::string title;
  std::map<std::string, int> params;
  PartitionClass product_class = PartitionClass::diff2();
  /// Watched part sizes, in weight-variable order t, w, v, x.
  std::vector<int> watched;
  /// diff2 (col) or diff2_star (col*).
  ClassKind diff_kind = ClassKind::diff2;
  /// Exhaustive statements must give every lambda exactly one signature;
  /// filters (no watched sizes) simply select a subset.
  bool exhaustive = true;
  /// Smallest n covered by the statement's hypothesis.
  int n_min = 0;
  std::vector<CaseRule> rules;
  /// Sum side whose q^n coefficients count the diff side by signature.
  std::string linked_id;
  std::optional<int> linked_param;
  /// Column heading for signatures, e.g. "(k,j,l)".
  std::string signature_label;

  PartitionClass diff_class() const;
  /// col or col* according to diff_kind.
  Partition image(const Partition& lambda) const;
  WeightSignature signature_of(const Partition& mu) const;
  /// Throws std::logic_error if rules overlap, or leave gaps in an
  /// exhaustive statement.
  void validate() const;
};

struct StatementEntry {
  std::string id;
  std::string title;
  std::optional<ParameterDomain> parameter;
  std::function<RefinementStatement(std::optional<int>)> build;

  /// Throws ParameterDomainError.
  RefinementStatement instantiate(std::optional<int> param = std::nullopt) const;
  std::vector<int> sweep() const;
};

const std::vector<StatementEntry>& statements();
/// Throws UnknownId.
const StatementEntry& statement_entry(std::string_view id);

/// Product side grouped by watched multiplicities.
SignatureCounts count_product_refined(const RefinementStatement& stmt, int n);
/// Diff side classified by the case rules. Throws ClassificationGap or
/// AmbiguousClassification.
SignatureCounts count_diff_refined(const RefinementStatement& stmt, int n);
/// Same, restricted to lambda with exactly `parts` parts.
SignatureCounts count_diff_refined(const RefinementStatement& stmt, int n, int parts);
/// Converts the weight monomials of one q-coefficient into signatures.
SignatureCounts signature_counts(const RefinementStatement& stmt, const WeightPolynomial& coefficient);
/// q^n coefficients of the linked sum side for n = 0..n_max.
std::vector<SignatureCounts> count_series_refined(const RefinementStatement& stmt, int n_max);

struct RefinementMismatch {
  int n = 0;
  WeightSignature signature;
  long long product = 0;
  long long diff = 0;
  long long series = 0;
};

struct RefinementReport {
  std::string id;
  std::map<std::string, int> params;
  int n_min = 0;
  int n_max = 0;
  bool passed = false;
  std::optional<RefinementMismatch> mismatch;
  /// Classification gap or ambiguity, when that is why it failed.
  std::string error;
};

/// Product brute force, diff-side case rules and series coefficients must
/// agree signature by signature for n_min <= n <= n_max.
RefinementReport check_refinement(const RefinementStatement& stmt, int n_max);
std::string to_line(const RefinementReport& r);

struct TableRow {
  Partition mu;
  Partition lambda;
  Partition image;
  WeightSignature signature;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows pairing mu with lambda of equal signature, sorted by decreasing mu.
/// Without `only`, every signature class must be a singleton on both sides
/// (NonsingletonClass otherwise). With `only`, the two members lists of that
/// class are paired in decreasing lexicographic order.
std::vector<TableRow> build_table(const RefinementStatement& stmt, int n,
                                  const std::optional<WeightSignature>& only = std::nullopt);

/// Aligned columns "mu | lambda | col | signature".
std::string format_table_text(const RefinementStatement& stmt, const std::vector<TableRow>& rows);
/// Header plus one line per row; partitions in exponent notation, quoted.
std::string format_table_csv(const RefinementStatement& stmt, const std::vector<TableRow>& rows);

/// Parses "(2)", "2", "(1,0,3)" against the statement's watched sizes.
WeightSignature parse_signature(const RefinementStatement& stmt, std::string_view text);

}  // namespace rrw
