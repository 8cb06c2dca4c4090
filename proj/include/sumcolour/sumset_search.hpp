#pragma once

// Finite exploration of which groups force a monochromatic {2x, 2y, x+y}, x != y,
// under every c-colouring. Only pair sumsets (|X| = 2) are considered.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "finite_group.hpp"

namespace sumcolour {

// colour id per element index
using ColouringTable = std::vector<unsigned>;

enum class Verdict { forced, not_forced, unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::forced: return "forced";
    case Verdict::not_forced: return "not_forced";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

inline constexpr std::size_t kDefaultSearchGroupCap = 4096;
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

inline std::optional<std::pair<FiniteGroup::Element, FiniteGroup::Element>> find_mono_pair_sumset(
    const FiniteGroup& g, const ColouringTable& col) {
  if (col.size() != g.size()) throw Error("colouring table does not cover the group");
  for (FiniteGroup::Element x = 0; x < g.size(); ++x) {
    const unsigned c = col[g.twice(x)];
    for (FiniteGroup::Element y = x + 1; y < g.size(); ++y) {
      if (col[g.twice(y)] == c && col[g.add(x, y)] == c) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

struct SearchResult {
  Verdict verdict = Verdict::unknown;
  unsigned colours = 0;
  std::optional<ColouringTable> witness;  // set iff not_forced; lexicographically least
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

namespace detail {

class ColouringSearch {
 public:
  ColouringSearch(const FiniteGroup& g, unsigned colours, std::uint64_t budget)
      : n_(g.size()), colours_(colours), budget_(budget), closing_(g.size()) {
    // Each triple is checked once, when its last element (in index order) is coloured.
    for (FiniteGroup::Element x = 0; x < n_; ++x)
      for (FiniteGroup::Element y = x + 1; y < n_; ++y) {
        std::array<std::size_t, 3> t{g.twice(x), g.twice(y), g.add(x, y)};
        std::sort(t.begin(), t.end());
        closing_[t[2]].push_back({t[0], t[1]});
      }
    for (auto& c : closing_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
  }

  SearchResult run() {
    const auto start = std::chrono::steady_clock::now();
    SearchResult r;
    r.colours = colours_;
    table_.assign(n_, 0);
    const int found = extend(0, 0);
    r.nodes = nodes_;
    if (found == 1) {
      r.verdict = Verdict::not_forced;
      r.witness = table_;
    } else {
      r.verdict = found == 0 ? Verdict::forced : Verdict::unknown;
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  // 1 = avoiding colouring completed, 0 = subtree exhausted, -1 = budget ran out.
  int extend(std::size_t pos, unsigned used) {
    if (pos == n_) return 1;
    // Colour symmetry: a fresh colour is only ever the next unused one.
    const unsigned limit = std::min(colours_, used + 1);
    for (unsigned c = 0; c < limit; ++c) {
      if (nodes_ >= budget_) return -1;
      ++nodes_;
      table_[pos] = c;
      bool ok = true;
      for (const auto& [a, b] : closing_[pos]) {
        if (table_[a] == c && table_[b] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const int res = extend(pos + 1, std::max(used, c + 1));
      if (res != 0) return res;
    }
    return 0;
  }

  std::size_t n_;
  unsigned colours_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> closing_;
  ColouringTable table_;
};

}  // namespace detail

// forced: every c-colouring has a monochromatic {2x, 2y, x+y}; not_forced comes with
// the lexicographically least avoiding colouring; unknown when the node budget runs out.
inline SearchResult all_colourings_forced(const FiniteGroup& g, unsigned colours,
                                          std::uint64_t budget = kDefaultSearchBudget,
                                          std::size_t group_cap = kDefaultSearchGroupCap) {
  if (colours == 0) throw Error("colour count must be positive");
  if (g.size() > group_cap) {
    throw CapExceeded("group order " + std::to_string(g.size()) + " exceeds search cap " +
                      std::to_string(group_cap));
  }
  return detail::ColouringSearch(g, colours, budget).run();
}

struct MinColoursResult {
  std::optional<unsigned> colours;  // empty when the budget ran out first
  std::optional<ColouringTable> witness;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Least c admitting an avoiding c-colouring. c = |G| always works (all colours
// distinct), so the loop terminates unless the shared budget runs out.
inline MinColoursResult min_colours_avoiding(const FiniteGroup& g,
                                             std::uint64_t budget = kDefaultSearchBudget,
                                             std::size_t group_cap = kDefaultSearchGroupCap) {
  MinColoursResult out;
  std::uint64_t remaining = budget;
  for (unsigned c = 1; c <= g.size(); ++c) {
    auto r = all_colourings_forced(g, c, remaining, group_cap);
    out.nodes += r.nodes;
    out.elapsed_seconds += r.elapsed_seconds;
    remaining -= std::min(remaining, r.nodes);
    if (r.verdict == Verdict::unknown) return out;
    if (r.verdict == Verdict::not_forced) {
      out.colours = c;
      out.witness = std::move(r.witness);
      return out;
    }
  }
  return out;
}

}  // namespace sumcolour
