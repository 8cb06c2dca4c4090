#pragma once

// Small explicit groups Z_{n_1} (+) ... (+) Z_{n_k}, elements indexed in mixed radix
// with the first coordinate varying fastest.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sumcolour {

class FiniteGroup {
 public:
  using Element = std::size_t;

  explicit FiniteGroup(std::vector<std::int64_t> orders, std::size_t cap = 1u << 20)
      : orders_(std::move(orders)) {
    for (auto n : orders_) {
      if (n < 2) throw Error("cyclic factor orders must be >= 2");
      if (size_ > cap / static_cast<std::size_t>(n)) {
        throw CapExceeded("group of order > " + std::to_string(cap) + " is too large");
      }
      size_ *= static_cast<std::size_t>(n);
    }
  }

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t size() const { return size_; }

  std::vector<std::int64_t> coords(Element e) const {
    std::vector<std::int64_t> out(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      out[i] = static_cast<std::int64_t>(e % orders_[i]);
      e /= orders_[i];
    }
    return out;
  }

  Element index(const std::vector<std::int64_t>& c) const {
    if (c.size() != orders_.size()) throw Error("coordinate vector has wrong length");
    Element e = 0;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      auto n = orders_[i];
      e = e * n + static_cast<Element>(((c[i] % n) + n) % n);
    }
    return e;
  }

  Element add(Element a, Element b) const {
    auto ca = coords(a), cb = coords(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return index(ca);
  }

  Element negate(Element a) const {
    auto c = coords(a);
    for (auto& x : c) x = -x;
    return index(c);
  }

  Element sub(Element a, Element b) const { return add(a, negate(b)); }
  Element twice(Element a) const { return add(a, a); }

  // Least n >= 1 with n*a = 0, by repeated addition.
  std::int64_t order(Element a) const {
    std::int64_t n = 1;
    for (Element x = a; x != 0; x = add(x, a)) ++n;
    return n;
  }

  std::string element_text(Element e) const {
    auto c = coords(e);
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    return out + ")";
  }

  std::string text() const {
    if (orders_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i) out += " + ";
      out += "Z_" + std::to_string(orders_[i]);
    }
    return out;
  }

 private:
  std::vector<std::int64_t> orders_;
  std::size_t size_ = 1;
};

}  // namespace sumcolour
