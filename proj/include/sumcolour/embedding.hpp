#pragma once

// Embedding of a 4-free finitely generated abelian group into an ambient
// D (+) T (+) F: each odd factor Z_{p^k} gets its own Pruefer coordinate, each Z_2
// factor its own t bit and each free generator its own q coordinate.

#include <cstddef>
#include <vector>

#include "ambient.hpp"
#include "errors.hpp"
#include "presentation.hpp"

namespace sumcolour {

struct EmbeddingMap {
  CanonicalDecomposition decomposition;
  SignaturePtr signature;
  // One image per canonical generator: primary factors in order, then free generators.
  std::vector<AmbientElement> generator_images;
};

inline EmbeddingMap build_embedding(const CanonicalDecomposition& d,
                                    FreeMode mode = FreeMode::rational) {
  if (has_order_four(d)) {
    throw HypothesisViolated("group " + to_string(d) + " has an element of order 4");
  }
  std::vector<Integer> primes;
  std::size_t s = 0;
  for (const auto& f : d.primary_factors) {
    if (f.prime == 2) {
      ++s;
    } else {
      primes.push_back(f.prime);
    }
  }
  EmbeddingMap m{d, make_signature(primes, s, d.free_rank, mode), {}};

  std::size_t prufer_idx = 0, t_idx = 0;
  for (const auto& f : d.primary_factors) {
    PruferMap dpart;
    BitVector t(s, 0);
    if (f.prime == 2) {
      t[t_idx++] = 1;
    } else {
      dpart.emplace(prufer_idx++, make_rational(1, f.value()));
    }
    m.generator_images.push_back(
        AmbientElement::from_parts(m.signature, dpart, std::move(t), std::vector<Rational>(d.free_rank)));
  }
  for (std::size_t j = 0; j < d.free_rank; ++j) {
    std::vector<Rational> q(d.free_rank);
    q[j] = 1;
    m.generator_images.push_back(
        AmbientElement::from_parts(m.signature, {}, BitVector(s, 0), std::move(q)));
  }
  return m;
}

inline AmbientElement embed(const EmbeddingMap& m, const std::vector<Integer>& coeffs) {
  if (coeffs.size() != m.generator_images.size()) {
    throw Error("coefficient vector has length " + std::to_string(coeffs.size()) + ", expected " +
                std::to_string(m.generator_images.size()));
  }
  AmbientElement out(m.signature);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out = out + scalar_mul(coeffs[i], m.generator_images[i]);
  }
  return out;
}

// Image of  sum_j x_j g_j  for the presentation's own generators.
inline AmbientElement embed_generators(const GroupStructure& g, const EmbeddingMap& m,
                                       const std::vector<Integer>& x) {
  return embed(m, g.canonical_coords(x));
}

}  // namespace sumcolour
