#pragma once

// Countable colouring of the ambient group with no distinct a, b such that
// {2a, 2b, a+b} is monochromatic. A colour is the triple
//   (profile of the D part, profile of the free part, can the element be halved?)

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ambient.hpp"
#include "errors.hpp"

namespace sumcolour {

struct Colour {
  Profile d_profile;
  Profile y_profile;
  bool halvable = false;

  friend bool operator==(const Colour& a, const Colour& b) {
    return a.halvable == b.halvable && a.d_profile == b.d_profile && a.y_profile == b.y_profile;
  }
};

struct ColourLess {
  bool operator()(const Colour& a, const Colour& b) const {
    if (a.halvable != b.halvable) return a.halvable < b.halvable;
    if (a.d_profile != b.d_profile) {
      return std::lexicographical_compare(a.d_profile.begin(), a.d_profile.end(),
                                          b.d_profile.begin(), b.d_profile.end());
    }
    return std::lexicographical_compare(a.y_profile.begin(), a.y_profile.end(),
                                        b.y_profile.begin(), b.y_profile.end());
  }
};

// Image of the free part in X/T; T is the t part, so this is just q.
inline std::vector<Rational> pi_projection(const AmbientElement& a) { return a.q(); }

inline bool is_halvable(const AmbientElement& a) {
  if (std::any_of(a.t().begin(), a.t().end(), [](auto b) { return b != 0; })) return false;
  if (a.signature()->free_mode() == FreeMode::integer) {
    for (const auto& x : a.q()) {
      if (mpz_odd_p(x.get_num_mpz_t()) != 0) return false;
    }
  }
  return true;
}

// Canonical witness g with 2g = a and zero t part.
inline AmbientElement halve(const AmbientElement& a) {
  if (!is_halvable(a)) throw NotHalvable(to_text(a));
  PruferMap d;
  for (const auto& [idx, value] : a.d()) {
    const Integer& pk = value.get_den();
    Integer num = mod_floor(value.get_num() * inverse_mod(2, pk), pk);
    d.emplace(idx, make_rational(num, pk));
  }
  std::vector<Rational> q;
  q.reserve(a.q().size());
  for (const auto& x : a.q()) q.push_back(x / 2);
  return AmbientElement::from_parts(a.signature(), d, BitVector(a.t().size(), 0), std::move(q));
}

// Which layers take part; dropping a layer replaces it by a constant.
struct ColourLayers {
  bool d_profile = true;
  bool y_profile = true;
  bool halvable = true;
};

inline Colour colour(const AmbientElement& a, const ColourLayers& layers = {}) {
  Colour c;
  if (layers.d_profile) c.d_profile = profile_of(a.d());
  if (layers.y_profile) c.y_profile = profile_of(pi_projection(a));
  if (layers.halvable) c.halvable = is_halvable(a);
  return c;
}

// Stable encoding:  D[v1,v2,...];Y[w1,...];H<0|1>
// Values are reduced fractions "num/den", or plain integers when den = 1.
// The zero element encodes as  D[];Y[];H1
inline std::string colour_encode(const Colour& c) {
  auto list = [](const Profile& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ',';
      out += to_string(p[i]);
    }
    return out + "]";
  };
  return "D" + list(c.d_profile) + ";Y" + list(c.y_profile) + ";H" + (c.halvable ? "1" : "0");
}

inline Colour colour_decode(std::string_view text) {
  const std::string ctx = "colour '" + std::string(text) + "'";
  auto parts = detail::split(text, ';');
  if (parts.size() != 3 || parts[0].rfind("D", 0) != 0 || parts[1].rfind("Y", 0) != 0 ||
      (parts[2] != "H0" && parts[2] != "H1")) {
    throw ParseError(ctx + ": expected D[...];Y[...];H<0|1>");
  }
  auto list = [&](std::string_view s) {
    Profile p;
    for (const auto& tok : detail::split(detail::strip_wrapped(s, '[', ']', ctx), ',')) {
      Rational v;
      try {
        v = parse_rational(tok);
      } catch (const std::exception& e) {
        throw ParseError(ctx + ": " + e.what());
      }
      // Only the canonical spelling of a nonzero value is accepted.
      if (v == 0 || to_string(v) != tok) throw ParseError(ctx + ": non-canonical value '" + tok + "'");
      p.push_back(std::move(v));
    }
    return p;
  };
  Colour c;
  c.d_profile = list(std::string_view(parts[0]).substr(1));
  c.y_profile = list(std::string_view(parts[1]).substr(1));
  c.halvable = parts[2] == "H1";
  return c;
}

}  // namespace sumcolour
