#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "rrw/errors.hpp"
#include "rrw/partitions.hpp"

using namespace rrw;

namespace {

bool contains(const std::vector<Partition>& v, const Partition& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

// Adds the staircase back onto the conjugate of an image with m rows.
Partition rebuild(const Partition& image, int m, int top) {
  const auto cols = conjugate(image);
  std::vector<int> parts;
  for (int i = 0; i < m; ++i) {
    const int extra = i < cols.length() ? cols.parts()[static_cast<std::size_t>(i)] : 0;
    parts.push_back(top - 2 * i + extra);
  }
  return Partition(parts);
}

}  // namespace

TEST_CASE("partition basics") {
  const Partition p{12, 3, 3, 2, 2};
  CHECK(p.size() == 22);
  CHECK(p.length() == 5);
  CHECK(p.multiplicity(3) == 2);
  CHECK(to_string(p) == "(12,3^2,2^2)");
  CHECK(to_exponent_string(p) == "12,3^2,2^2");
  CHECK(to_string(Partition{}) == "()");
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("parse_partition") {
  CHECK(parse_partition("(2^4,1^{8})") == Partition{2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(parse_partition("3^2,2^2") == Partition{3, 3, 2, 2});
  CHECK(parse_partition("(2,12,3,3,2)") == Partition{12, 3, 3, 2, 2});
  CHECK(parse_partition("()").empty());
  CHECK_THROWS_AS(parse_partition("(3,x)"), ParseError);
  for (const auto& q : enumerate(PartitionClass::congruence(5, {1, 4}), 23)) CHECK(parse_partition(to_string(q)) == q);
}

TEST_CASE("enumerate examples") {
  const auto star = enumerate(PartitionClass::diff2_star(), 22);
  // 26 by the independent count; see the N=22 table discussion in the README
  CHECK(star.size() == 26);
  CHECK(static_cast<long long>(star.size()) == oracle::count_if(22, oracle::is_diff2_star));
  for (auto p : {Partition{16, 6}, Partition{15, 7}, Partition{12, 6, 4}, Partition{11, 7, 4}, Partition{10, 8, 4},
                 Partition{22}}) {
    CHECK(contains(star, p));
  }

  const auto c14 = enumerate(PartitionClass::congruence(5, {1, 4}), 23);
  CHECK(contains(c14, Partition{11, 4, 4, 4}));
  CHECK(contains(c14, Partition{9, 4, 4, 4, 1, 1}));
  CHECK(contains(c14, Partition{6, 4, 4, 4, 1, 1, 1, 1, 1}));
  CHECK(contains(c14, parse_partition("(4^3,1^{11})")));

  const auto zero = enumerate(PartitionClass::diff2(), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
}

TEST_CASE("enumerate is decreasing lexicographic and duplicate free") {
  for (int n : {7, 15, 24}) {
    const auto all = enumerate(PartitionClass::congruence(1, {0}), n);
    CHECK(static_cast<long long>(all.size()) == oracle::count_if(n, [](const auto&) { return true; }));
    CHECK(std::is_sorted(all.rbegin(), all.rend()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("class exceptions") {
  // parts 2, 3 mod 5 plus 5's, without 3's
  const auto cls = PartitionClass::congruence(5, {2, 3}, {3}, {5});
  for (int n = 0; n <= 25; ++n) {
    const auto keep = [](const oracle::Parts& p) {
      return std::all_of(p.begin(), p.end(), [](int x) { return x != 3 && (x % 5 == 2 || x % 5 == 3 || x == 5); });
    };
    CHECK(static_cast<long long>(enumerate(cls, n).size()) == oracle::count_if(n, keep));
  }
  CHECK_THROWS(PartitionClass::congruence(5, {7}));
  CHECK_THROWS(PartitionClass::congruence(5, {1}, {6}, {6}));
}

TEST_CASE("classical counts agree with brute force") {
  for (int n = 0; n <= 40; ++n) {
    CAPTURE(n);
    const auto d2 = static_cast<long long>(enumerate(PartitionClass::diff2(), n).size());
    const auto d2s = static_cast<long long>(enumerate(PartitionClass::diff2_star(), n).size());
    CHECK(d2 == oracle::count_if(n, oracle::is_diff2));
    CHECK(d2s == oracle::count_if(n, oracle::is_diff2_star));
    CHECK(static_cast<long long>(enumerate(PartitionClass::congruence(5, {1, 4}), n).size()) == d2);
    CHECK(static_cast<long long>(enumerate(PartitionClass::congruence(5, {2, 3}), n).size()) == d2s);
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{7, 5, 2, 1}) == Partition{4, 3, 2, 2, 2, 1, 1});
  CHECK(conjugate(Partition{}).empty());
  CHECK(conjugate(Partition{5, 4, 2, 2}) == Partition{4, 4, 2, 2, 1});
}

TEST_CASE("conjugation is an involution for n <= 40") {
  for (int n = 0; n <= 40; n += (n < 30 ? 1 : 5)) {
    oracle::each_partition(n, [&](const oracle::Parts& v) {
      const Partition p(v);
      const auto c = conjugate(p);
      REQUIRE(c.size() == n);
      REQUIRE(conjugate(c) == p);
    });
  }
}

TEST_CASE("col and col_star examples") {
  CHECK(col(Partition{16, 12, 7, 4, 1}) == Partition{4, 3, 2, 2, 2, 1, 1});
  CHECK(col(Partition{9}) == parse_partition("1^8"));
  CHECK(col(Partition{1}).empty());
  CHECK(col(Partition{8, 6, 4, 1}) == Partition{3});
  CHECK(col_star(Partition{13, 10, 6, 4}) == Partition{4, 4, 2, 2, 1});
  CHECK(col_star(Partition{16, 6}) == parse_partition("(2^4,1^{8})"));
  CHECK(col_star(Partition{2}).empty());
  CHECK_THROWS_AS(col(Partition{5, 4}), NotInClass);
  CHECK_THROWS_AS(col_star(Partition{5, 1}), NotInClass);
}

TEST_CASE("col and col_star size, shape and round trip for n <= 40") {
  for (int n = 0; n <= 40; ++n) {
    std::set<std::pair<int, Partition>> seen, seen_star;
    for (const auto& p : enumerate(PartitionClass::diff2(), n)) {
      const int m = p.length();
      const auto c = col(p);
      CHECK(c.size() == n - m * m);
      CHECK(c.largest() <= m);
      CHECK(rebuild(c, m, 2 * m - 1) == p);
      CHECK(seen.insert({m, c}).second);
    }
    for (const auto& p : enumerate(PartitionClass::diff2_star(), n)) {
      const int m = p.length();
      const auto c = col_star(p);
      CHECK(c.size() == n - m * (m + 1));
      CHECK(c.largest() <= m);
      CHECK(rebuild(c, m, 2 * m) == p);
      CHECK(seen_star.insert({m, c}).second);
    }
  }
}

TEST_CASE("col round trip on random difference-two partitions") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    // random gaps >= 2 build a random Diff2 partition
    std::uniform_int_distribution<int> len(1, 6), gap(2, 6), last(1, 5);
    std::vector<int> parts{last(rng)};
    const int m = len(rng);
    for (int i = 1; i < m; ++i) parts.insert(parts.begin(), parts.front() + gap(rng));
    const Partition p(parts);
    CHECK(rebuild(col(p), m, 2 * m - 1) == p);
  }
}

TEST_CASE("signature") {
  const std::vector<int> three{3};
  const auto s = signature(Partition{12, 3, 3, 2, 2}, three);
  CHECK(s.count(3) == 2);
  CHECK(to_string(s) == "(2)");

  const std::vector<int> twv{2, 3, 7};
  CHECK(signature(Partition{}, twv).is_zero());
  const auto s2 = signature(parse_partition("(3^6,2^2)"), twv);
  CHECK(s2.count(2) == 2);
  CHECK(s2.count(3) == 6);
  CHECK(s2.count(7) == 0);
  CHECK(s2.count(11) == 0);
  CHECK(to_string(s2) == "(2,6,0)");
}
