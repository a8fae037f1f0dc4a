#pragma once

// Numerator discovery: unknown numerator coefficients enter the sum side
// linearly, so matching it against a product side is an exact linear system.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrw/identities.hpp"

namespace rrw {

using Rational = boost::multiprecision::cpp_rational;

/// q^{q_shift} N(q) / denominator with N unknown: degree <= max_degree and,
/// at each degree, a caller-chosen set of weight monomials.
struct NumeratorTemplate {
  std::string label;
  int q_shift = 0;
  std::vector<DenominatorFactor> denominator;
  int max_degree = 0;
  std::vector<WeightMonomial> monomials;
  /// Replaces `monomials` at the given degrees.
  std::map<int, std::vector<WeightMonomial>> per_degree;

  const std::vector<WeightMonomial>& allowed(int degree) const;
};

struct UnknownCoefficient {
  std::size_t template_index = 0;
  int degree = 0;
  WeightMonomial monomial;
};

struct DiscoveryProblem {
  std::string name;
  std::vector<RationalTerm> fixed;
  std::vector<TailFamily> tails;
  std::vector<NumeratorTemplate> templates;
  /// Only the product side (and substitution) of the target is used.
  IdentitySpec target;
  std::optional<int> match_order;

  std::vector<UnknownCoefficient> unknowns() const;
  /// match_order, or the number of unknowns plus 10.
  int effective_match_order() const;
};

enum class SolveStatus { unique, underdetermined, inconsistent };

std::string to_string(SolveStatus s);

struct DiscoveryReport {
  std::string name;
  SolveStatus status = SolveStatus::inconsistent;
  int match_order = 0;
  int equations = 0;
  int rank = 0;
  /// Template labels, indexed like UnknownCoefficient::template_index.
  std::vector<std::string> labels;
  std::vector<UnknownCoefficient> unknowns;
  /// Free unknowns set to zero.
  std::vector<Rational> particular;
  /// Basis of the homogeneous solutions, one vector per free unknown.
  std::vector<std::vector<Rational>> nullspace;
  /// Index of the unknown each nullspace vector is attached to.
  std::vector<std::size_t> free_unknowns;
  bool integral = false;
  /// Particular solution as numerators, one per template (when integral).
  std::vector<QPolynomial> numerators;
  /// The particular solution re-verified at twice the match order.
  std::optional<bool> sound;

  /// Consistent, integral and sound.
  bool passed() const;
};

DiscoveryReport solve(const DiscoveryProblem& problem);

/// Coordinates of candidate numerators in the problem's unknowns; nullopt
/// if a candidate uses a (degree, monomial) outside its template.
std::optional<std::vector<Rational>> coordinates(const DiscoveryProblem& problem,
                                                 const std::vector<QPolynomial>& numerators);
/// Whether x = particular + nullspace combination for some coefficients.
bool in_solution_space(const DiscoveryReport& report, const std::vector<Rational>& x);
/// Expands fixed terms plus the candidate numerators and compares with the
/// target at the given order.
bool satisfies(const DiscoveryProblem& problem, const std::vector<QPolynomial>& numerators, int order);

struct PositivityWitness {
  int degree = 0;
  WeightMonomial monomial;
  Coeff coefficient = 0;
};

struct PositivityReport {
  bool nonnegative = true;
  /// First negative coefficient in (degree, monomial) order.
  std::optional<PositivityWitness> witness;
};

PositivityReport check_positivity(const QPolynomial& p);

/// "A[t*q^2]": template label, monomial and q-degree of one unknown.
std::string unknown_name(const DiscoveryReport& r, std::size_t i);

/// Line-oriented problem format:
///   name <text>
///   target <id> [M=<m>]
///   fixed <id> [M=<m>] terms <i> <j> ...
///   fixed <id> [M=<m>] tail
///   fixed term shift=<s> numerator=<poly> [denominator=<f>,<f>,...]
///   unknown [label=<l>] shift=<s> [denominator=<f>,...] degree=<d> monomials=<m>,<m>,... [monomials@<d>=...]
///   match_order <n>
/// '#' starts a comment. Throws ParseError, UnknownId, ParameterDomainError.
DiscoveryProblem parse_problem(std::string_view text);
DiscoveryProblem load_problem(const std::string& path);

}  // namespace rrw
