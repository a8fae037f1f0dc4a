#pragma once

// Canonical text form of weight polynomials and q-polynomials.
//
// Variables print in the order t, w, v, x, q joined by '*', with exponents as
// '^n'. Terms are sorted by total degree (q included), ties broken so that
// the earlier variable carries the larger exponent. Example:
//   "1 + t*q^2 + w*q^3"

#include <string>
#include <string_view>

#include "rrw/series.hpp"

namespace rrw {

std::string to_string(const WeightMonomial& m);
std::string to_string(const WeightPolynomial& p);
std::string to_string(const QPolynomial& p);
/// Terms up to the order followed by " + O(q^{order+1})".
std::string to_string(const TruncatedSeries& s);
std::string to_string(const DenominatorFactor& f);
std::string to_string(const RationalTerm& term);

/// Parses sums and products of integers, t, w, v, x, q, powers '^n' and
/// parenthesised subexpressions, e.g. "(1+q^4)*(x + v^2*q^2) - 3".
QPolynomial parse_qpolynomial(std::string_view text);
/// As parse_qpolynomial, rejecting any occurrence of q.
WeightPolynomial parse_weight_polynomial(std::string_view text);
/// A single monomial "mu*q^e" read as the factor (1 - mu*q^e).
DenominatorFactor parse_factor(std::string_view text);
WeightMonomial parse_weight_monomial(std::string_view text);

}  // namespace rrw
