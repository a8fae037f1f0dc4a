#pragma once

// Test-only reference implementations. Nothing here calls into the library:
// partitions come from plain recursion and series from int64 vectors.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;
using Exps = std::array<int, 4>;  // t, w, v, x

inline void each_partition(int n, int max_part, Parts& cur, const std::function<void(const Parts&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    each_partition(n - p, p, cur, f);
    cur.pop_back();
  }
}

inline void each_partition(int n, const std::function<void(const Parts&)>& f) {
  Parts cur;
  each_partition(n, n, cur, f);
}

inline std::vector<Parts> partitions_of(int n) {
  std::vector<Parts> out;
  each_partition(n, [&](const Parts& p) { out.push_back(p); });
  return out;
}

inline bool is_diff2(const Parts& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] - p[i + 1] < 2) return false;
  }
  return true;
}

inline bool is_diff2_star(const Parts& p) { return is_diff2(p) && (p.empty() || p.back() >= 2); }

inline bool parts_mod5(const Parts& p, std::initializer_list<int> residues) {
  for (int x : p) {
    bool ok = false;
    for (int r : residues) ok = ok || x % 5 == r;
    if (!ok) return false;
  }
  return true;
}

inline long long count_if(int n, const std::function<bool(const Parts&)>& keep) {
  long long c = 0;
  each_partition(n, [&](const Parts& p) { c += keep(p) ? 1 : 0; });
  return c;
}

/// Partitions of n with every part allowed, grouped by the multiplicities of
/// the marked sizes (size -> weight slot 0..3).
inline std::map<Exps, long long> weighted_count(int n, const std::function<bool(int)>& allowed,
                                                const std::map<int, int>& marks) {
  std::map<Exps, long long> out;
  each_partition(n, [&](const Parts& p) {
    Exps e{};
    for (int x : p) {
      if (!allowed(x)) return;
      auto it = marks.find(x);
      if (it != marks.end()) ++e[static_cast<std::size_t>(it->second)];
    }
    ++out[e];
  });
  return out;
}

// --- single-variable series --------------------------------------------------

using Series = std::vector<long long>;  // coefficients of q^0..q^order

inline Series one(int order) {
  Series s(static_cast<std::size_t>(order) + 1, 0);
  s[0] = 1;
  return s;
}

inline Series mul(const Series& a, const Series& b) {
  Series c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// 1 / (1 - q^e) as an explicit geometric sum.
inline Series geometric(int e, int order) {
  Series s(static_cast<std::size_t>(order) + 1, 0);
  for (int k = 0; k <= order; k += e) s[static_cast<std::size_t>(k)] = 1;
  return s;
}

/// q^shift * numerator / prod (1 - q^e).
inline Series term(int shift, const Series& numerator, const std::vector<int>& denominator, int order) {
  Series s(static_cast<std::size_t>(order) + 1, 0);
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const std::size_t d = i + static_cast<std::size_t>(shift);
    if (d < s.size()) s[d] = numerator[i];
  }
  for (int e : denominator) s = mul(s, geometric(e, order));
  return s;
}

inline Series add(Series a, const Series& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

/// Classical sum sides: sum_m q^{m^2 + shift*m} / (q;q)_m.
inline Series classical_sum(int shift, int order) {
  Series s(static_cast<std::size_t>(order) + 1, 0);
  for (int m = 0; m * m + shift * m <= order; ++m) {
    std::vector<int> den;
    for (int e = 1; e <= m; ++e) den.push_back(e);
    s = add(s, term(m * m + shift * m, {1}, den, order));
  }
  return s;
}

}  // namespace oracle
