#include "rrw/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "rrw/errors.hpp"

namespace rrw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string to_exponent_string(const Partition& p) {
  std::string out;
  const auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string to_string(const Partition& p) { return "(" + to_exponent_string(p) + ")"; }

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') s += c;
  }
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parenthesis in partition \"" + std::string(text) + "\"");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  auto read_int = [&](std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
      throw ParseError("bad partition token \"" + std::string(tok) + "\"");
    }
    return v;
  };
  std::string_view rest = s;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto caret = tok.find('^');
    const int part = read_int(tok.substr(0, caret));
    const int mult = caret == std::string_view::npos ? 1 : read_int(tok.substr(caret + 1));
    if (part == 0) {
      // Staircase remainders such as "(7,5,2,1,0)" may carry explicit zeros.
      continue;
    }
    parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------

PartitionClass PartitionClass::congruence(int modulus, std::set<int> residues, std::set<int> forbidden,
                                          std::set<int> extra_allowed) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  for (int r : residues) {
    if (r < 0 || r >= modulus) throw std::invalid_argument("residue out of range");
  }
  for (int f : forbidden) {
    if (extra_allowed.contains(f)) throw std::invalid_argument("a part size cannot be both forbidden and extra-allowed");
  }
  PartitionClass c;
  c.kind_ = ClassKind::congruence;
  c.modulus_ = modulus;
  c.residues_ = std::move(residues);
  c.forbidden_ = std::move(forbidden);
  c.extra_allowed_ = std::move(extra_allowed);
  return c;
}

PartitionClass PartitionClass::diff2() {
  PartitionClass c;
  c.kind_ = ClassKind::diff2;
  return c;
}

PartitionClass PartitionClass::diff2_star() {
  PartitionClass c;
  c.kind_ = ClassKind::diff2_star;
  return c;
}

bool PartitionClass::admits_part(int part) const {
  if (kind_ != ClassKind::congruence) throw std::logic_error("admits_part is defined for congruence classes");
  if (part < 1 || forbidden_.contains(part)) return false;
  return residues_.contains(part % modulus_) || extra_allowed_.contains(part);
}

bool PartitionClass::contains(const Partition& p) const {
  const auto parts = p.parts();
  if (kind_ == ClassKind::congruence) {
    return std::all_of(parts.begin(), parts.end(), [&](int x) { return admits_part(x); });
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i - 1] - parts[i] < 2) return false;
  }
  return kind_ == ClassKind::diff2 || p.empty() || parts.back() >= 2;
}

std::string PartitionClass::describe() const {
  switch (kind_) {
    case ClassKind::diff2: return "diff2";
    case ClassKind::diff2_star: return "diff2_star";
    case ClassKind::congruence: break;
  }
  auto list = [](const std::set<int>& s) {
    std::string out;
    for (int x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
  };
  std::string d = "congruence mod " + std::to_string(modulus_) + " {" + list(residues_) + "}";
  if (!forbidden_.empty()) d += " forbidding {" + list(forbidden_) + "}";
  if (!extra_allowed_.empty()) d += " plus {" + list(extra_allowed_) + "}";
  return d;
}

namespace {

void enumerate_parts(std::span<const int> allowed_desc, std::size_t from, int remaining, std::vector<int>& current,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = from; i < allowed_desc.size(); ++i) {
    const int part = allowed_desc[i];
    if (part > remaining) continue;
    current.push_back(part);
    enumerate_parts(allowed_desc, i, remaining - part, current, out);
    current.pop_back();
  }
}

void enumerate_gapped(int max_part, int min_part, int remaining, std::vector<int>& current,
                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(max_part, remaining); part >= min_part; --part) {
    current.push_back(part);
    enumerate_gapped(part - 2, min_part, remaining - part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(const PartitionClass& cls, int n) {
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  if (cls.kind() == ClassKind::congruence) {
    std::vector<int> allowed;
    for (int part = n; part >= 1; --part) {
      if (cls.admits_part(part)) allowed.push_back(part);
    }
    enumerate_parts(allowed, 0, n, current, out);
  } else {
    enumerate_gapped(n, cls.kind() == ClassKind::diff2_star ? 2 : 1, n, current, out);
  }
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int i = 0; i < part; ++i) ++cols[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(cols));
}

namespace {

Partition strip_staircase(const Partition& p, int bottom) {
  const auto parts = p.parts();
  const int m = p.length();
  std::vector<int> rest;
  for (int i = 0; i < m; ++i) {
    const int r = parts[static_cast<std::size_t>(i)] - (2 * (m - 1 - i) + bottom);
    if (r > 0) rest.push_back(r);
  }
  return conjugate(Partition(std::move(rest)));
}

}  // namespace

Partition col(const Partition& p) {
  if (!PartitionClass::diff2().contains(p)) throw NotInClass(to_string(p) + " is not in Diff2");
  return strip_staircase(p, 1);
}

Partition col_star(const Partition& p) {
  if (!PartitionClass::diff2_star().contains(p)) throw NotInClass(to_string(p) + " is not in Diff2*");
  return strip_staircase(p, 2);
}

// ---------------------------------------------------------------------------

WeightSignature::WeightSignature(std::vector<int> sizes, std::vector<int> counts)
    : sizes_(std::move(sizes)), counts_(std::move(counts)) {
  if (sizes_.size() != counts_.size()) throw std::invalid_argument("signature sizes and counts differ in length");
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("signature multiplicities must be non-negative");
  }
}

int WeightSignature::count(int size) const {
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] == size) return counts_[i];
  }
  return 0;
}

bool WeightSignature::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c == 0; });
}

WeightSignature signature(const Partition& p, std::span<const int> watched) {
  std::vector<int> counts;
  counts.reserve(watched.size());
  for (int s : watched) counts.push_back(p.multiplicity(s));
  return WeightSignature(std::vector<int>(watched.begin(), watched.end()), std::move(counts));
}

std::string to_string(const WeightSignature& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.counts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.counts()[i]);
  }
  return out + ")";
}

}  // namespace rrw
