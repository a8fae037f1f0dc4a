#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rrw {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int part) const;

  /// Lexicographic on the parts; enumeration emits the reverse of this order.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Exponent notation without brackets: "3^2,2^2"; empty partition is "".
std::string to_exponent_string(const Partition& p);
/// Bracketed exponent notation: "(3^2,2^2)"; empty partition is "()".
std::string to_string(const Partition& p);
/// Reads "(12,3,3,2,2)", "(2^4,1^{8})", "3^2,2^2" or "()"; parts may come in any order.
Partition parse_partition(std::string_view text);

enum class ClassKind { congruence, diff2, diff2_star };

/// A set of partitions: a congruence class on the parts (with explicit
/// exceptions), the difference-two partitions, or those without a part 1.
class PartitionClass {
 public:
  static PartitionClass congruence(int modulus, std::set<int> residues, std::set<int> forbidden = {},
                                   std::set<int> extra_allowed = {});
  static PartitionClass diff2();
  static PartitionClass diff2_star();

  ClassKind kind() const { return kind_; }
  int modulus() const { return modulus_; }
  const std::set<int>& residues() const { return residues_; }
  const std::set<int>& forbidden() const { return forbidden_; }
  const std::set<int>& extra_allowed() const { return extra_allowed_; }

  /// Congruence classes only: whether a single part of this size is allowed.
  bool admits_part(int part) const;
  bool contains(const Partition& p) const;
  std::string describe() const;

 private:
  PartitionClass() = default;
  ClassKind kind_ = ClassKind::diff2;
  int modulus_ = 0;
  std::set<int> residues_, forbidden_, extra_allowed_;
};

/// All partitions of n in the class, in decreasing lexicographic order.
std::vector<Partition> enumerate(const PartitionClass& cls, int n);

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition& p);
/// Subtract the staircase (2m-1, ..., 3, 1) from a Diff2 partition with m
/// parts, drop zeros, conjugate. Throws NotInClass outside Diff2.
Partition col(const Partition& p);
/// Subtract (2m, ..., 4, 2) from a Diff2* partition, drop zeros, conjugate.
Partition col_star(const Partition& p);

/// Multiplicities of selected part sizes, in the caller's order. The order
/// of `sizes` is the order of the weight variables t, w, v, x.
class WeightSignature {
 public:
  WeightSignature() = default;
  WeightSignature(std::vector<int> sizes, std::vector<int> counts);

  std::span<const int> sizes() const { return sizes_; }
  std::span<const int> counts() const { return counts_; }
  /// Multiplicity of a watched size; 0 for sizes not watched.
  int count(int size) const;
  bool is_zero() const;

  friend auto operator<=>(const WeightSignature&, const WeightSignature&) = default;

 private:
  std::vector<int> sizes_;
  std::vector<int> counts_;
};

WeightSignature signature(const Partition& p, std::span<const int> watched);
/// "(k,j,l)" tuple of counts; "()" when nothing is watched.
std::string to_string(const WeightSignature& s);

}  // namespace rrw
