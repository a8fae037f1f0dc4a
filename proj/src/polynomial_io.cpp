#include "rrw/polynomial_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "rrw/errors.hpp"

namespace rrw {

namespace {

using FullExponents = std::array<int, kWeightCount + 1>;  // t, w, v, x, q

struct FlatTerm {
  FullExponents exps;
  Coeff coeff;
};

int total(const FullExponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

void sort_canonical(std::vector<FlatTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const FlatTerm& a, const FlatTerm& b) {
    const int ta = total(a.exps), tb = total(b.exps);
    if (ta != tb) return ta < tb;
    return a.exps > b.exps;
  });
}

std::string monomial_text(const FullExponents& e) {
  static constexpr std::array<char, kWeightCount + 1> names{'t', 'w', 'v', 'x', 'q'};
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string join_terms(std::vector<FlatTerm> terms) {
  if (terms.empty()) return "0";
  sort_canonical(terms);
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [exps, c] = terms[i];
    const bool negative = c < 0;
    // Magnitude via unsigned to stay defined for INT64_MIN.
    const auto magnitude = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_text(exps);
    if (mono.empty()) {
      out += std::to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += std::to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

void append_flat(std::vector<FlatTerm>& out, const WeightPolynomial& p, int q_degree) {
  for (const auto& [mono, c] : p.terms()) {
    FullExponents e{};
    std::copy(mono.exponents().begin(), mono.exponents().end(), e.begin());
    e[kWeightCount] = q_degree;
    out.push_back({e, c});
  }
}

// Recursive-descent parser over q-polynomials.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QPolynomial parse_all() {
    QPolynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  QPolynomial expression() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    QPolynomial acc = product();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      QPolynomial rhs = product();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  QPolynomial product() {
    QPolynomial acc = power();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * power();
    }
    return acc;
  }

  QPolynomial power() {
    QPolynomial base = atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    // Accept both "^12" and "^{12}".
    const bool braced = peek() == '{';
    if (braced) ++pos_;
    const Coeff e = integer();
    if (braced) expect('}');
    QPolynomial r = 1;
    for (Coeff i = 0; i < e; ++i) r = r * base;
    return r;
  }

  QPolynomial atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      QPolynomial inner = expression();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return WeightPolynomial(integer());
    ++pos_;
    switch (c) {
      case 't': return WeightPolynomial::variable(Weight::t);
      case 'w': return WeightPolynomial::variable(Weight::w);
      case 'v': return WeightPolynomial::variable(Weight::v);
      case 'x': return WeightPolynomial::variable(Weight::x);
      case 'q': return QPolynomial::monomial(1);
      default: --pos_; fail("expected a number, variable or '('");
    }
  }

  Coeff integer() {
    skip_space();
    Coeff value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw ArithmeticOverflow("integer literal out of range");
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const WeightMonomial& m) {
  FullExponents e{};
  std::copy(m.exponents().begin(), m.exponents().end(), e.begin());
  const std::string s = monomial_text(e);
  return s.empty() ? "1" : s;
}

std::string to_string(const WeightPolynomial& p) {
  std::vector<FlatTerm> terms;
  append_flat(terms, p, 0);
  return join_terms(std::move(terms));
}

std::string to_string(const QPolynomial& p) {
  std::vector<FlatTerm> terms;
  for (int d = 0; d <= p.degree(); ++d) append_flat(terms, p[d], d);
  return join_terms(std::move(terms));
}

std::string to_string(const TruncatedSeries& s) {
  std::vector<FlatTerm> terms;
  for (int d = 0; d <= s.order(); ++d) append_flat(terms, s[d], d);
  // Series read better in q-degree order, so sort by q first here.
  std::stable_sort(terms.begin(), terms.end(),
                   [](const FlatTerm& a, const FlatTerm& b) { return a.exps[kWeightCount] < b.exps[kWeightCount]; });
  std::string body;
  if (terms.empty()) {
    body = "0";
  } else {
    // Group per q-degree so each group is canonical.
    std::vector<FlatTerm> group;
    std::string out;
    auto flush = [&] {
      if (group.empty()) return;
      std::string g = join_terms(group);
      if (!out.empty()) {
        if (g.front() == '-') {
          out += " - " + g.substr(1);
        } else {
          out += " + " + g;
        }
      } else {
        out = g;
      }
      group.clear();
    };
    int current = terms.front().exps[kWeightCount];
    for (const auto& t : terms) {
      if (t.exps[kWeightCount] != current) {
        flush();
        current = t.exps[kWeightCount];
      }
      group.push_back(t);
    }
    flush();
    body = out;
  }
  return body + " + O(q^" + std::to_string(s.order() + 1) + ")";
}

std::string to_string(const DenominatorFactor& f) {
  std::string mu = f.weight().is_one() ? "" : to_string(f.weight()) + "*";
  return "(1 - " + mu + "q" + (f.q_exp() > 1 ? "^" + std::to_string(f.q_exp()) : "") + ")";
}

std::string to_string(const RationalTerm& term) {
  std::ostringstream os;
  if (term.q_shift > 0) os << "q^" << term.q_shift << " * ";
  os << "(" << to_string(term.numerator) << ")";
  if (!term.denominator.empty()) {
    os << " / ";
    for (const auto& f : term.denominator) os << to_string(f);
  }
  return os.str();
}

QPolynomial parse_qpolynomial(std::string_view text) { return Parser(text).parse_all(); }

WeightPolynomial parse_weight_polynomial(std::string_view text) {
  QPolynomial p = parse_qpolynomial(text);
  if (p.degree() > 0) throw ParseError("q is not allowed in a weight polynomial: \"" + std::string(text) + "\"");
  return p[0];
}

WeightMonomial parse_weight_monomial(std::string_view text) {
  const WeightPolynomial p = parse_weight_polynomial(text);
  if (p.term_count() != 1 || p.terms().begin()->second != 1) {
    throw ParseError("expected a single weight monomial: \"" + std::string(text) + "\"");
  }
  return p.terms().begin()->first;
}

DenominatorFactor parse_factor(std::string_view text) {
  const QPolynomial p = parse_qpolynomial(text);
  const int e = p.degree();
  if (e < 1 || p.low_degree() != e || p[e].term_count() != 1 || p[e].terms().begin()->second != 1) {
    throw ParseError("expected a factor monomial mu*q^e with e >= 1: \"" + std::string(text) + "\"");
  }
  return DenominatorFactor(p[e].terms().begin()->first, e);
}

}  // namespace rrw
