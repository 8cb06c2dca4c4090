#pragma once

// JSON views of library results. Keys keep insertion order so reports are byte-stable.

#include "json.hpp"

#include "ambient.hpp"
#include "colouring.hpp"
#include "embedding.hpp"
#include "presentation.hpp"
#include "sumset_search.hpp"
#include "verifier.hpp"

namespace sumcolour {

using Json = nlohmann::ordered_json;

inline Json to_json(const Order& o) {
  if (o.is_infinite()) return "inf";
  return o.value().get_str();
}

inline Json to_json(const SampleSpec& s) {
  Json j;
  j["signature"] = to_text(*s.signature);
  j["mode"] = to_string(s.mode);
  j["prufer_depth"] = s.prufer_depth;
  j["q_bound"] = s.q_numerator_bound.get_str();
  j["q_den_bound"] = s.q_denominator_bound.get_str();
  if (s.mode == SampleMode::random) {
    j["count"] = s.count;
    j["seed"] = s.seed;
  } else {
    j["cap"] = s.cap;
  }
  return j;
}

inline Json to_json(const CanonicalDecomposition& d) {
  Json factors = Json::array();
  for (const auto& f : d.primary_factors) {
    factors.push_back({{"prime", f.prime.get_str()}, {"exponent", f.exponent}, {"order", f.value().get_str()}});
  }
  return {{"free_rank", d.free_rank}, {"primary_factors", factors}, {"text", to_string(d)}};
}

inline Json to_json(const EmbeddingMap& m) {
  Json images = Json::array();
  for (const auto& e : m.generator_images) images.push_back(to_text(e));
  return {{"decomposition", to_json(m.decomposition)},
          {"signature", to_text(*m.signature)},
          {"generator_images", images}};
}

inline Json to_json(const TripleReport& r, bool include_timing = true) {
  Json j;
  j["sample_size"] = r.sample_size;
  j["pair_count"] = r.pair_count;
  j["candidate_pairs"] = r.candidate_pairs;
  j["violation_count"] = r.violation_count;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"a", to_text(x.a)}, {"b", to_text(x.b)}, {"colour", colour_encode(x.colour)}});
  }
  j["violations"] = v;
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline Json to_json(const CosetReport& r) {
  Json f = Json::array();
  for (const auto& coset : r.failures) {
    Json c = Json::array();
    for (const auto& e : coset) c.push_back(to_text(e));
    f.push_back(c);
  }
  return {{"passed", r.passed()},
          {"distinct_elements", r.distinct_elements},
          {"cosets", r.cosets},
          {"halvable_elements", r.halvable_elements},
          {"failures", f}};
}

inline Json to_json(const Order4Demo& d, const FiniteGroup& g) {
  Json j;
  j["group"] = d.group;
  j["witness_found"] = d.witness.has_value();
  if (d.witness) {
    const auto& w = *d.witness;
    j["g"] = g.element_text(w.g);
    j["h"] = g.element_text(w.h);
    j["u"] = g.element_text(w.u);
    j["v"] = g.element_text(w.v);
    j["u_minus_v"] = g.element_text(w.u_minus_v);
    j["g_minus_h"] = g.element_text(w.g_minus_h);
    j["order_g_minus_h"] = w.order_g_minus_h;
  }
  j["transcript"] = d.transcript;
  return j;
}

inline Json to_json(const SearchResult& r, bool include_timing = true) {
  Json j;
  j["colours"] = r.colours;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["nodes"] = r.nodes;
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline Json to_json(const MinColoursResult& r, bool include_timing = true) {
  Json j;
  j["verdict"] = r.colours ? "found" : "unknown";
  j["min_colours"] = r.colours ? Json(*r.colours) : Json(nullptr);
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["nodes"] = r.nodes;
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace sumcolour
