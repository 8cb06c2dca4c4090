#pragma once

// Brute-force reference computations used by the tests. None of these call into
// the code paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sumcolour/ambient.hpp>
#include <sumcolour/finite_group.hpp>
#include <sumcolour/presentation.hpp>

namespace oracle {

using sumcolour::Integer;
using sumcolour::IntMatrix;
using sumcolour::Rational;

// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors (the k-th determinantal divisor); 0 if all vanish.
inline Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for_each_subset(a.rows(), k, [&](const auto& rows) {
    for_each_subset(a.cols(), k, [&](const auto& cols) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
      g = sumcolour::gcd(g, determinant(sub));
    });
  });
  return g;
}

// Invariant factors d_k = D_k / D_{k-1} from determinantal divisors, for k up to rank.
inline std::vector<Integer> determinantal_invariants(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer dk = minor_gcd(a, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// All partitions of e, largest part first.
inline void partitions(unsigned e, unsigned max_part, std::vector<unsigned>& cur,
                       std::vector<std::vector<unsigned>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = std::min(e, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(e - p, p, cur, out);
    cur.pop_back();
  }
}

// Every abelian group of order n, as a list of prime-power cyclic orders.
inline std::vector<std::vector<std::int64_t>> abelian_groups_of_order(std::int64_t n) {
  std::vector<std::pair<std::int64_t, unsigned>> fac;
  std::int64_t m = n;
  for (std::int64_t p = 2; p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  std::vector<std::vector<std::int64_t>> groups{{}};
  for (auto [p, e] : fac) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& g : groups)
      for (const auto& part : parts) {
        auto h = g;
        for (unsigned k : part) {
          std::int64_t pk = 1;
          for (unsigned i = 0; i < k; ++i) pk *= p;
          h.push_back(pk);
        }
        next.push_back(h);
      }
    groups = std::move(next);
  }
  return groups;
}

// Does some element of the explicit group have order exactly 4?
inline bool census_has_order_four(const sumcolour::FiniteGroup& g) {
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (g.order(e) == 4) return true;
  }
  return false;
}

// Set of all 2g for g in the given candidates, as canonical texts.
inline std::set<std::string> doubling_images(const std::vector<sumcolour::AmbientElement>& candidates) {
  std::set<std::string> out;
  for (const auto& g : candidates) out.insert(sumcolour::to_text(g + g));
  return out;
}

}  // namespace oracle
