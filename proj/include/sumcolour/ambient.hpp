#pragma once

// Elements of ambient groups  (+)_i Z_{p_i^inf}  (+)  (Z_2)^s  (+)  F^r  with F = Q or Z.
//
// Pruefer coordinates are rationals with p-power denominator reduced mod 1, so the
// zero element has a unique representation and structural equality is group equality.
// Index order: Pruefer factors in declaration order, then the t bits, then the q entries.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace sumcolour {

enum class FreeMode { rational, integer };

inline std::string to_string(FreeMode m) { return m == FreeMode::rational ? "rational" : "integer"; }

inline FreeMode parse_free_mode(std::string_view s) {
  if (s == "rational") return FreeMode::rational;
  if (s == "integer") return FreeMode::integer;
  throw ParseError("unknown free mode '" + std::string(s) + "'");
}

class AmbientSignature {
 public:
  AmbientSignature(std::vector<Integer> prufer_primes, std::size_t s, std::size_t r,
                   FreeMode mode = FreeMode::rational)
      : primes_(std::move(prufer_primes)), s_(s), r_(r), mode_(mode) {
    for (const auto& p : primes_) {
      if (p == 2 || !is_prime(p)) {
        throw Error("Pruefer factor prime must be an odd prime, got " + p.get_str());
      }
    }
  }

  const std::vector<Integer>& prufer_primes() const { return primes_; }
  std::size_t prufer_count() const { return primes_.size(); }
  std::size_t s() const { return s_; }
  std::size_t r() const { return r_; }
  FreeMode free_mode() const { return mode_; }

  friend bool operator==(const AmbientSignature& a, const AmbientSignature& b) {
    return a.primes_ == b.primes_ && a.s_ == b.s_ && a.r_ == b.r_ && a.mode_ == b.mode_;
  }

 private:
  std::vector<Integer> primes_;
  std::size_t s_;
  std::size_t r_;
  FreeMode mode_;
};

using SignaturePtr = std::shared_ptr<const AmbientSignature>;

inline SignaturePtr make_signature(std::vector<Integer> primes, std::size_t s, std::size_t r,
                                   FreeMode mode = FreeMode::rational) {
  return std::make_shared<const AmbientSignature>(std::move(primes), s, r, mode);
}

inline bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

// "prufer=3,5;s=2;r=2;mode=rational" (mode optional, defaults to rational).
inline std::string to_text(const AmbientSignature& sig) {
  std::string out = "prufer=";
  for (std::size_t i = 0; i < sig.prufer_count(); ++i) {
    if (i) out += ',';
    out += sig.prufer_primes()[i].get_str();
  }
  out += ";s=" + std::to_string(sig.s()) + ";r=" + std::to_string(sig.r());
  out += ";mode=" + to_string(sig.free_mode());
  return out;
}

inline SignaturePtr parse_signature(const std::string& text) {
  std::vector<Integer> primes;
  std::size_t s = 0, r = 0;
  FreeMode mode = FreeMode::rational;
  std::stringstream ss(text);
  std::string field;
  try {
    while (std::getline(ss, field, ';')) {
      if (field.empty()) continue;
      auto eq = field.find('=');
      if (eq == std::string::npos) throw ParseError("signature field '" + field + "' lacks '='");
      std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      if (key == "prufer") {
        std::stringstream vs(value);
        std::string p;
        while (std::getline(vs, p, ',')) {
          if (!p.empty()) primes.emplace_back(p);
        }
      } else if (key == "s") {
        s = std::stoul(value);
      } else if (key == "r") {
        r = std::stoul(value);
      } else if (key == "mode") {
        mode = parse_free_mode(value);
      } else {
        throw ParseError("unknown signature field '" + key + "'");
      }
    }
    return make_signature(std::move(primes), s, r, mode);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("malformed signature '" + text + "': " + e.what());
  }
}

// Order of an element: a positive integer or infinity.
class Order {
 public:
  static Order infinite() { return Order(); }
  static Order finite(Integer n) { return Order(std::move(n)); }

  bool is_infinite() const { return !value_.has_value(); }
  const Integer& value() const { return *value_; }

  friend bool operator==(const Order& a, const Order& b) { return a.value_ == b.value_; }

  std::string str() const { return is_infinite() ? "inf" : value_->get_str(); }

 private:
  Order() = default;
  explicit Order(Integer n) : value_(std::move(n)) {}
  std::optional<Integer> value_;
};

using PruferMap = std::map<std::size_t, Rational>;
using BitVector = std::vector<std::uint8_t>;
using Profile = std::vector<Rational>;
using Support = std::vector<std::size_t>;

class AmbientElement {
 public:
  explicit AmbientElement(SignaturePtr sig)
      : sig_(std::move(sig)), t_(sig_->s(), 0), q_(sig_->r()) {}

  // Normalises Pruefer coordinates mod 1 and validates against the signature.
  static AmbientElement from_parts(SignaturePtr sig, const PruferMap& d, BitVector t,
                                   std::vector<Rational> q) {
    AmbientElement e(std::move(sig));
    const auto& s = *e.sig_;
    for (const auto& [idx, value] : d) {
      if (idx >= s.prufer_count()) {
        throw Error("Pruefer index " + std::to_string(idx) + " out of range");
      }
      Rational c = frac(value);
      if (c == 0) continue;
      if (power_of(c.get_den(), s.prufer_primes()[idx]) < 0) {
        throw Error("denominator " + c.get_den().get_str() + " at Pruefer index " +
                    std::to_string(idx) + " is not a power of " +
                    s.prufer_primes()[idx].get_str());
      }
      e.d_.emplace(idx, std::move(c));
    }
    if (t.size() != s.s()) throw Error("t has wrong length");
    for (auto& b : t) {
      if (b > 1) throw Error("t entries must be bits");
    }
    e.t_ = std::move(t);
    if (q.size() != s.r()) throw Error("q has wrong length");
    for (auto& x : q) {
      x.canonicalize();
      if (s.free_mode() == FreeMode::integer && x.get_den() != 1) {
        throw Error("integer free mode requires integral q entries");
      }
    }
    e.q_ = std::move(q);
    return e;
  }

  const SignaturePtr& signature() const { return sig_; }
  const PruferMap& d() const { return d_; }
  const BitVector& t() const { return t_; }
  const std::vector<Rational>& q() const { return q_; }

  bool is_zero() const {
    return d_.empty() && std::all_of(t_.begin(), t_.end(), [](auto b) { return b == 0; }) &&
           std::all_of(q_.begin(), q_.end(), [](const Rational& x) { return x == 0; });
  }

  friend bool operator==(const AmbientElement& a, const AmbientElement& b) {
    return same_signature(a.sig_, b.sig_) && a.d_ == b.d_ && a.t_ == b.t_ && a.q_ == b.q_;
  }

  friend AmbientElement operator+(const AmbientElement& a, const AmbientElement& b) {
    if (!same_signature(a.sig_, b.sig_)) throw SignatureMismatch();
    AmbientElement out = a;
    for (const auto& [idx, value] : b.d_) {
      auto it = out.d_.find(idx);
      if (it == out.d_.end()) {
        out.d_.emplace(idx, value);
        continue;
      }
      Rational sum = frac(it->second + value);
      if (sum == 0) {
        out.d_.erase(it);
      } else {
        it->second = std::move(sum);
      }
    }
    for (std::size_t i = 0; i < out.t_.size(); ++i) out.t_[i] ^= b.t_[i];
    for (std::size_t i = 0; i < out.q_.size(); ++i) out.q_[i] += b.q_[i];
    return out;
  }

  friend AmbientElement operator-(const AmbientElement& a) {
    AmbientElement out = a;
    for (auto& [idx, value] : out.d_) value = 1 - value;
    for (auto& x : out.q_) x = -x;
    return out;
  }

  friend AmbientElement operator-(const AmbientElement& a, const AmbientElement& b) {
    return a + (-b);
  }

 private:
  SignaturePtr sig_;
  PruferMap d_;
  BitVector t_;
  std::vector<Rational> q_;

  friend AmbientElement scalar_mul(const Integer& n, const AmbientElement& a);
};

inline AmbientElement add(const AmbientElement& a, const AmbientElement& b) { return a + b; }
inline AmbientElement negate(const AmbientElement& a) { return -a; }

inline AmbientElement scalar_mul(const Integer& n, const AmbientElement& a) {
  AmbientElement out(a.sig_);
  for (const auto& [idx, value] : a.d_) {
    Rational c = frac(Rational(n) * value);
    if (c != 0) out.d_.emplace(idx, std::move(c));
  }
  const bool odd = mpz_odd_p(n.get_mpz_t()) != 0;
  for (std::size_t i = 0; i < a.t_.size(); ++i) out.t_[i] = odd ? a.t_[i] : 0;
  for (std::size_t i = 0; i < a.q_.size(); ++i) out.q_[i] = Rational(n) * a.q_[i];
  return out;
}

inline AmbientElement twice(const AmbientElement& a) { return scalar_mul(2, a); }

// lcm of coordinate orders; infinite as soon as a free coordinate is nonzero.
inline Order element_order(const AmbientElement& a) {
  for (const auto& x : a.q()) {
    if (x != 0) return Order::infinite();
  }
  Integer n = 1;
  for (const auto& [idx, value] : a.d()) n = lcm(n, value.get_den());
  if (std::any_of(a.t().begin(), a.t().end(), [](auto b) { return b != 0; })) n = lcm(n, 2);
  return Order::finite(n);
}

inline Profile profile_of(const PruferMap& part) {
  Profile out;
  out.reserve(part.size());
  for (const auto& [idx, value] : part) out.push_back(value);
  return out;
}

inline Profile profile_of(const std::vector<Rational>& part) {
  Profile out;
  for (const auto& x : part) {
    if (x != 0) out.push_back(x);
  }
  return out;
}

inline Support support_of(const PruferMap& part) {
  Support out;
  out.reserve(part.size());
  for (const auto& [idx, value] : part) out.push_back(idx);
  return out;
}

inline Support support_of(const std::vector<Rational>& part) {
  Support out;
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i] != 0) out.push_back(i);
  }
  return out;
}

// Strict weak order on elements of one signature (d, then t, then q).
struct ElementLess {
  bool operator()(const AmbientElement& a, const AmbientElement& b) const {
    if (a.d() != b.d()) {
      return std::lexicographical_compare(
          a.d().begin(), a.d().end(), b.d().begin(), b.d().end(),
          [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first < y.first : x.second < y.second;
          });
    }
    if (a.t() != b.t()) return a.t() < b.t();
    return std::lexicographical_compare(a.q().begin(), a.q().end(), b.q().begin(), b.q().end());
  }
};

// Canonical text form:  d:{idx=num/den,...};t:bits;q:(r1,...)
inline std::string to_text(const AmbientElement& a) {
  std::string out = "d:{";
  bool first = true;
  for (const auto& [idx, value] : a.d()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(idx) + "=" + to_string(value);
  }
  out += "};t:";
  for (auto b : a.t()) out += b ? '1' : '0';
  out += ";q:(";
  for (std::size_t i = 0; i < a.q().size(); ++i) {
    if (i) out += ',';
    out += to_string(a.q()[i]);
  }
  out += ')';
  return out;
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view strip_wrapped(std::string_view s, char open, char close,
                                      const std::string& what) {
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ParseError(what + ": expected " + open + "..." + close);
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace detail

inline AmbientElement parse_element(const SignaturePtr& sig, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact += c;
  }
  const std::string ctx = "element '" + compact + "'";
  auto parts = detail::split(compact, ';');
  if (parts.size() != 3 || parts[0].rfind("d:", 0) != 0 || parts[1].rfind("t:", 0) != 0 ||
      parts[2].rfind("q:", 0) != 0) {
    throw ParseError(ctx + ": expected d:{...};t:...;q:(...)");
  }
  try {
    PruferMap d;
    auto dbody = detail::strip_wrapped(std::string_view(parts[0]).substr(2), '{', '}', ctx);
    for (const auto& entry : detail::split(dbody, ',')) {
      auto eq = entry.find('=');
      if (eq == std::string::npos) throw ParseError(ctx + ": d entry '" + entry + "' lacks '='");
      std::size_t idx = std::stoul(entry.substr(0, eq));
      if (d.count(idx)) throw ParseError(ctx + ": duplicate d index " + std::to_string(idx));
      d.emplace(idx, parse_rational(entry.substr(eq + 1)));
    }
    BitVector t;
    for (char c : parts[1].substr(2)) {
      if (c != '0' && c != '1') throw ParseError(ctx + ": t must be a bit string");
      t.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    std::vector<Rational> q;
    auto qbody = detail::strip_wrapped(std::string_view(parts[2]).substr(2), '(', ')', ctx);
    for (const auto& entry : detail::split(qbody, ',')) q.push_back(parse_rational(entry));
    return AmbientElement::from_parts(sig, d, std::move(t), std::move(q));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

}  // namespace sumcolour
