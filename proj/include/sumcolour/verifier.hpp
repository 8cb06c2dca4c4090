#pragma once

// Finite sweeps over windows of the ambient group.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ambient.hpp"
#include "colouring.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "finite_group.hpp"

namespace sumcolour {

enum class SampleMode { exhaustive, random };

inline std::string to_string(SampleMode m) { return m == SampleMode::exhaustive ? "exhaustive" : "random"; }

inline SampleMode parse_sample_mode(std::string_view s) {
  if (s == "exhaustive") return SampleMode::exhaustive;
  if (s == "random") return SampleMode::random;
  throw ParseError("unknown sample mode '" + std::string(s) + "'");
}

inline constexpr std::size_t kDefaultCap = 100000;

struct SampleSpec {
  SignaturePtr signature;
  unsigned prufer_depth = 2;
  Integer q_numerator_bound = 2;
  Integer q_denominator_bound = 2;  // ignored in integer free mode
  SampleMode mode = SampleMode::exhaustive;
  std::size_t count = 10000;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultCap;
};

// Small window (36 elements) on which dropping any single colour layer produces
// monochromatic triples:
//   without the D profile:  a = 1/3, b = 2/3      (2a, 2b, a+b = 2/3, 1/3, 0)
//   without the Y profile:  a = q 1, b = q -1     (2, -2, 0)
//   without halvability:    a = t 10, b = t 01    (0, 0, t 11)
inline SampleSpec documented_layer_sample() {
  SampleSpec s;
  s.signature = make_signature({3}, 2, 1);
  s.prufer_depth = 1;
  s.q_numerator_bound = 1;
  s.q_denominator_bound = 1;
  return s;
}

namespace detail {

// Cartesian product of per-slot value lists, enumerated (last slot fastest) or sampled.
class Box {
 public:
  explicit Box(std::vector<std::size_t> radices) : radices_(std::move(radices)) {}

  Integer cardinality() const {
    Integer n = 1;
    for (auto r : radices_) n *= static_cast<unsigned long>(r);
    return n;
  }

  void enumerate(const std::function<void(const std::vector<std::size_t>&)>& visit) const {
    if (std::any_of(radices_.begin(), radices_.end(), [](auto r) { return r == 0; })) return;
    std::vector<std::size_t> idx(radices_.size(), 0);
    while (true) {
      visit(idx);
      std::size_t k = idx.size();
      while (k > 0) {
        --k;
        if (++idx[k] < radices_[k]) break;
        idx[k] = 0;
        if (k == 0) return;
      }
      if (idx.empty()) return;
    }
  }

  void draw(std::size_t count, std::uint64_t seed,
            const std::function<void(const std::vector<std::size_t>&)>& visit) const {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(radices_.size());
    for (std::size_t n = 0; n < count; ++n) {
      for (std::size_t k = 0; k < radices_.size(); ++k) {
        idx[k] = std::uniform_int_distribution<std::size_t>(0, radices_[k] - 1)(rng);
      }
      visit(idx);
    }
  }

 private:
  std::vector<std::size_t> radices_;
};

inline void check_cap(const Integer& size, std::size_t cap) {
  if (size > static_cast<unsigned long>(cap)) {
    throw CapExceeded("exhaustive sample of " + size.get_str() + " elements exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace detail

// All a/p^depth, 0 <= a < p^depth, reduced.
inline std::vector<Rational> prufer_window(const Integer& p, unsigned depth) {
  Integer pk = ipow(p, depth);
  std::vector<Rational> out;
  for (Integer a = 0; a < pk; ++a) out.push_back(make_rational(a, pk));
  return out;
}

// Distinct n/m with |n| <= B and 1 <= m <= C (integers only in integer mode), ascending.
inline std::vector<Rational> q_window(const Integer& B, const Integer& C, FreeMode mode) {
  std::set<Rational> vals;
  const Integer max_den = mode == FreeMode::integer ? Integer(1) : C;
  for (Integer m = 1; m <= max_den; ++m)
    for (Integer n = -B; n <= B; ++n) vals.insert(make_rational(n, m));
  return {vals.begin(), vals.end()};
}

inline Integer sample_box_size(const SampleSpec& spec) {
  const auto& sig = *spec.signature;
  Integer n = 1;
  for (const auto& p : sig.prufer_primes()) n *= ipow(p, spec.prufer_depth);
  n *= ipow(2, sig.s());
  n *= ipow(Integer(static_cast<unsigned long>(
                q_window(spec.q_numerator_bound, spec.q_denominator_bound, sig.free_mode()).size())),
            sig.r());
  return n;
}

inline std::vector<AmbientElement> enumerate_sample(const SampleSpec& spec) {
  if (!spec.signature) throw Error("sample spec has no signature");
  if (spec.q_numerator_bound < 0 || spec.q_denominator_bound < 1) {
    throw Error("sample bounds must be positive");
  }
  const auto& sig = *spec.signature;
  std::vector<std::vector<Rational>> prufer_vals;
  for (const auto& p : sig.prufer_primes()) prufer_vals.push_back(prufer_window(p, spec.prufer_depth));
  auto qvals = q_window(spec.q_numerator_bound, spec.q_denominator_bound, sig.free_mode());

  std::vector<std::size_t> radices;
  for (const auto& v : prufer_vals) radices.push_back(v.size());
  radices.insert(radices.end(), sig.s(), 2);
  radices.insert(radices.end(), sig.r(), qvals.size());
  detail::Box box(std::move(radices));

  std::vector<AmbientElement> out;
  auto build = [&](const std::vector<std::size_t>& idx) {
    PruferMap d;
    std::size_t k = 0;
    for (std::size_t i = 0; i < prufer_vals.size(); ++i, ++k) {
      if (idx[k] != 0) d.emplace(i, prufer_vals[i][idx[k]]);
    }
    BitVector t(sig.s());
    for (std::size_t i = 0; i < sig.s(); ++i, ++k) t[i] = static_cast<std::uint8_t>(idx[k]);
    std::vector<Rational> q(sig.r());
    for (std::size_t i = 0; i < sig.r(); ++i, ++k) q[i] = qvals[idx[k]];
    out.push_back(AmbientElement::from_parts(spec.signature, d, std::move(t), std::move(q)));
  };
  if (spec.mode == SampleMode::exhaustive) {
    detail::check_cap(box.cardinality(), spec.cap);
    box.enumerate(build);
  } else {
    box.draw(spec.count, spec.seed, build);
  }
  return out;
}

// Images of canonical representatives: torsion coefficients in [0, order), free ones in [-B, B].
inline std::vector<AmbientElement> enumerate_image_sample(const EmbeddingMap& m, const Integer& free_bound,
                                                          SampleMode mode, std::size_t count,
                                                          std::uint64_t seed, std::size_t cap = kDefaultCap) {
  std::vector<std::vector<Integer>> vals;
  for (const auto& f : m.decomposition.primary_factors) {
    std::vector<Integer> v;
    for (Integer a = 0; a < f.value(); ++a) v.push_back(a);
    vals.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < m.decomposition.free_rank; ++j) {
    std::vector<Integer> v;
    for (Integer a = -free_bound; a <= free_bound; ++a) v.push_back(a);
    vals.push_back(std::move(v));
  }
  std::vector<std::size_t> radices;
  for (const auto& v : vals) radices.push_back(v.size());
  detail::Box box(std::move(radices));

  std::vector<AmbientElement> out;
  auto build = [&](const std::vector<std::size_t>& idx) {
    std::vector<Integer> coeffs;
    for (std::size_t k = 0; k < idx.size(); ++k) coeffs.push_back(vals[k][idx[k]]);
    out.push_back(embed(m, coeffs));
  };
  if (mode == SampleMode::exhaustive) {
    detail::check_cap(box.cardinality(), cap);
    box.enumerate(build);
  } else {
    box.draw(count, seed, build);
  }
  return out;
}

struct Violation {
  std::size_t i = 0;  // sample positions, i < j
  std::size_t j = 0;
  AmbientElement a;
  AmbientElement b;
  Colour colour;
};

struct TripleReport {
  std::size_t sample_size = 0;
  std::uint64_t pair_count = 0;       // unordered index pairs covered
  std::uint64_t candidate_pairs = 0;  // pairs with colour(2a) = colour(2b), checked explicitly
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // the smallest (i, j) pairs, at most max_recorded
  double elapsed_seconds = 0.0;
};

struct SweepOptions {
  unsigned parallel = 1;
  std::size_t max_recorded = 100;
};

namespace detail {

template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i, w);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

// Every unordered pair a != b with colour(2a) = colour(2b) = colour(a+b).
// Pairs are bucketed by colour(2a) first; only pairs inside a bucket need colour(a+b).
template <class ColourFn>
  requires std::invocable<ColourFn&, const AmbientElement&>
TripleReport find_mono_triples(std::span<const AmbientElement> elements, ColourFn&& colour_fn,
                               const SweepOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = elements.size();
  for (const auto& e : elements) {
    if (!same_signature(e.signature(), elements.front().signature())) throw SignatureMismatch();
  }
  const unsigned workers = std::max(1u, opts.parallel);

  std::vector<Colour> doubled(n);
  detail::parallel_for(n, workers, [&](std::size_t i, unsigned) { doubled[i] = colour_fn(twice(elements[i])); });

  std::map<Colour, std::vector<std::size_t>, ColourLess> bucket_map;
  for (std::size_t i = 0; i < n; ++i) bucket_map[doubled[i]].push_back(i);
  std::vector<const std::vector<std::size_t>*> buckets;
  for (const auto& [c, idx] : bucket_map) {
    if (idx.size() > 1) buckets.push_back(&idx);
  }

  struct Local {
    std::vector<std::pair<std::size_t, std::size_t>> found;
    std::uint64_t count = 0;
    std::uint64_t candidates = 0;
  };
  std::vector<Local> locals(workers);
  const std::size_t keep = opts.max_recorded;
  auto trim = [keep](std::vector<std::pair<std::size_t, std::size_t>>& v) {
    std::sort(v.begin(), v.end());
    if (v.size() > keep) v.resize(keep);
  };

  detail::parallel_for(buckets.size(), workers, [&](std::size_t b, unsigned w) {
    const auto& idx = *buckets[b];
    Local& loc = locals[w];
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y) {
        const auto& a = elements[idx[x]];
        const auto& c = elements[idx[y]];
        ++loc.candidates;
        if (a == c) continue;
        if (colour_fn(a + c) == doubled[idx[x]]) {
          ++loc.count;
          loc.found.emplace_back(idx[x], idx[y]);
          if (loc.found.size() > 2 * keep + 16) trim(loc.found);
        }
      }
  });

  TripleReport report;
  report.sample_size = n;
  report.pair_count = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (auto& loc : locals) {
    report.violation_count += loc.count;
    report.candidate_pairs += loc.candidates;
    all.insert(all.end(), loc.found.begin(), loc.found.end());
  }
  trim(all);
  for (auto [i, j] : all) {
    report.violations.push_back({i, j, elements[i], elements[j], doubled[i]});
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline TripleReport find_mono_triples(std::span<const AmbientElement> elements,
                                      const SweepOptions& opts = {}) {
  return find_mono_triples(elements, [](const AmbientElement& a) { return colour(a); }, opts);
}

struct CosetReport {
  std::size_t distinct_elements = 0;
  std::size_t cosets = 0;
  std::size_t halvable_elements = 0;
  // Cosets of T holding more than one halvable element.
  std::vector<std::vector<AmbientElement>> failures;

  bool passed() const { return failures.empty(); }
};

// Groups elements by (d, q), i.e. by coset of T, and counts halvable members.
inline CosetReport check_coset_uniqueness(std::span<const AmbientElement> elements) {
  std::map<AmbientElement, std::set<AmbientElement, ElementLess>, ElementLess> cosets;
  std::set<AmbientElement, ElementLess> distinct;
  for (const auto& e : elements) {
    distinct.insert(e);
    auto key = AmbientElement::from_parts(e.signature(), e.d(), BitVector(e.t().size(), 0), e.q());
    auto& members = cosets[key];
    if (is_halvable(e)) members.insert(e);
  }
  CosetReport r;
  r.distinct_elements = distinct.size();
  r.cosets = cosets.size();
  for (const auto& [key, halvable] : cosets) {
    r.halvable_elements += halvable.size();
    if (halvable.size() > 1) r.failures.emplace_back(halvable.begin(), halvable.end());
  }
  return r;
}

// g, h with u = 2g and v = 2h nonzero and distinct, u - v of order 2. Any such pair
// forces g - h to have order 4.
struct Order4Witness {
  FiniteGroup::Element g = 0, h = 0, u = 0, v = 0, u_minus_v = 0, g_minus_h = 0;
  std::int64_t order_g_minus_h = 0;
};

// Scans g, then h, in element index order.
inline std::optional<Order4Witness> find_order4_witness(const FiniteGroup& grp) {
  for (FiniteGroup::Element g = 0; g < grp.size(); ++g) {
    auto u = grp.twice(g);
    if (u == 0) continue;
    for (FiniteGroup::Element h = 0; h < grp.size(); ++h) {
      auto v = grp.twice(h);
      if (v == 0 || v == u) continue;
      auto diff = grp.sub(u, v);
      if (grp.order(diff) != 2) continue;
      auto gh = grp.sub(g, h);
      return Order4Witness{g, h, u, v, diff, gh, grp.order(gh)};
    }
  }
  return std::nullopt;
}

// Same search inside an ambient sample: positions (g, h).
inline std::optional<std::pair<std::size_t, std::size_t>> find_order4_witness(
    std::span<const AmbientElement> elements) {
  std::vector<AmbientElement> doubled;
  doubled.reserve(elements.size());
  for (const auto& e : elements) doubled.push_back(twice(e));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (doubled[i].is_zero()) continue;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (doubled[j].is_zero() || doubled[j] == doubled[i]) continue;
      auto ord = element_order(doubled[i] - doubled[j]);
      if (!ord.is_infinite() && ord.value() == 2) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

struct Order4Demo {
  std::string group;
  std::optional<Order4Witness> witness;
  std::string transcript;
};

inline Order4Demo order4_obstruction_demo(const FiniteGroup& grp = FiniteGroup({4, 4})) {
  Order4Demo demo{grp.text(), find_order4_witness(grp), {}};
  std::ostringstream os;
  os << "group: " << grp.text() << "\n";
  if (!demo.witness) {
    os << "no g, h with 2g != 2h (both nonzero) and 2g - 2h of order 2: two distinct\n"
          "elements of one coset of the order-2 subgroup are never both halvable here.\n";
    demo.transcript = os.str();
    return demo;
  }
  const auto& w = *demo.witness;
  auto t = [&](FiniteGroup::Element e) { return grp.element_text(e); };
  os << "g = " << t(w.g) << ", h = " << t(w.h) << "\n"
     << "u = 2g = " << t(w.u) << ", v = 2h = " << t(w.v) << " (u != v)\n"
     << "u - v = " << t(w.u_minus_v) << " has order 2, so u and v lie in one coset of the\n"
     << "order-2 subgroup and both are halvable\n"
     << "g - h = " << t(w.g_minus_h) << " has order " << w.order_g_minus_h << "\n"
     << "2(g - h) = u - v != 0, so g - h has order 4: with order-4 elements present a coset\n"
     << "can hold two halvable elements and the halvability layer no longer separates\n"
     << "2a from a + b.\n";
  demo.transcript = os.str();
  return demo;
}

}  // namespace sumcolour
