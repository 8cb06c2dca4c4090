#pragma once

// Finitely presented abelian groups  Z^n / <relations>.

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ambient.hpp"
#include "bigint.hpp"
#include "errors.hpp"

namespace sumcolour {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error("ragged matrix row " + std::to_string(i));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SNFResult {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix S;  // U * A * V
  IntMatrix V;  // cols x cols, unimodular

  // Diagonal of S (length min(rows, cols)).
  std::vector<Integer> diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) out.push_back(S(i, i));
    return out;
  }
};

// Unimodular row/column reduction, pivoting on the smallest nonzero absolute value.
inline SNFResult smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SNFResult res{IntMatrix::identity(m), A, IntMatrix::identity(n)};
  IntMatrix& S = res.S;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;

  auto move_smallest_to = [&](std::size_t t, bool whole_block) -> bool {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (!whole_block && i != t && j != t) continue;
        if (S(i, j) == 0) continue;
        Integer a = abs(S(i, j));
        if (!found || a < best) {
          best = a;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    if (bi != t) {
      S.swap_rows(bi, t);
      U.swap_rows(bi, t);
    }
    if (bj != t) {
      S.swap_cols(bj, t);
      V.swap_cols(bj, t);
    }
    return true;
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    if (!move_smallest_to(t, true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer f = -(S(i, t) / S(t, t));  // truncating division, |remainder| < |pivot|
        S.add_row(i, t, f);
        U.add_row(i, t, f);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer f = -(S(t, j) / S(t, t));
        S.add_col(j, t, f);
        V.add_col(j, t, f);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_smallest_to(t, false);
        continue;
      }
      // Pivot must divide the rest of the block; otherwise fold an offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (S(i, j) % S(t, t) != 0) {
            S.add_row(t, i, 1);
            U.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
  return res;
}

struct Presentation {
  std::size_t n_generators = 0;
  std::vector<std::vector<Integer>> relations;

  IntMatrix relation_matrix() const { return IntMatrix::from_rows(relations, n_generators); }
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  Integer value() const { return ipow(prime, exponent); }

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
  friend bool operator<(const PrimePower& a, const PrimePower& b) {
    return std::tie(a.prime, a.exponent) < std::tie(b.prime, b.exponent);
  }
};

// Z^free_rank (+) (+)_f Z_{p_f^k_f}; factors sorted by (prime, exponent).
struct CanonicalDecomposition {
  std::size_t free_rank = 0;
  std::vector<PrimePower> primary_factors;

  std::size_t generator_count() const { return primary_factors.size() + free_rank; }

  Integer torsion_order() const {
    Integer n = 1;
    for (const auto& f : primary_factors) n *= f.value();
    return n;
  }

  friend bool operator==(const CanonicalDecomposition& a, const CanonicalDecomposition& b) {
    return a.free_rank == b.free_rank && a.primary_factors == b.primary_factors;
  }
};

inline std::string to_string(const CanonicalDecomposition& d) {
  std::string out;
  for (const auto& f : d.primary_factors) {
    if (!out.empty()) out += " + ";
    out += "Z_" + f.value().get_str();
  }
  if (d.free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += "Z^" + std::to_string(d.free_rank);
  }
  return out.empty() ? "0" : out;
}

// Presentation together with its SNF and the bookkeeping that maps generator
// coordinates to canonical coordinates (primary factors first, then free part).
class GroupStructure {
 public:
  explicit GroupStructure(Presentation p)
      : presentation_(std::move(p)), snf_(smith_normal_form(presentation_.relation_matrix())) {
    const std::size_t n = presentation_.n_generators;
    auto diag = snf_.diagonal();
    struct Slot {
      PrimePower factor;
      std::size_t column;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < n; ++i) {
      Integer d = i < diag.size() ? diag[i] : Integer(0);
      if (d == 0) {
        free_columns_.push_back(i);
      } else if (d != 1) {
        invariant_factors_.push_back(d);
        for (const auto& [p, e] : factorize(d)) slots.push_back({PrimePower{p, e}, i});
      }
    }
    std::stable_sort(slots.begin(), slots.end(),
                     [](const Slot& a, const Slot& b) { return a.factor < b.factor; });
    for (const auto& s : slots) {
      decomposition_.primary_factors.push_back(s.factor);
      factor_columns_.push_back(s.column);
    }
    decomposition_.free_rank = free_columns_.size();
  }

  const Presentation& presentation() const { return presentation_; }
  const SNFResult& snf() const { return snf_; }
  const CanonicalDecomposition& decomposition() const { return decomposition_; }
  // Invariant factors d_i > 1 in divisibility order.
  const std::vector<Integer>& invariant_factors() const { return invariant_factors_; }

  // Canonical coordinates of the element sum_j x_j g_j; factor coordinates reduced.
  std::vector<Integer> canonical_coords(const std::vector<Integer>& x) const {
    if (x.size() != presentation_.n_generators) throw Error("coordinate vector has wrong length");
    const auto& V = snf_.V;
    auto y = [&](std::size_t col) {
      Integer s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * V(j, col);
      return s;
    };
    std::vector<Integer> out;
    for (std::size_t f = 0; f < factor_columns_.size(); ++f) {
      out.push_back(mod_floor(y(factor_columns_[f]), decomposition_.primary_factors[f].value()));
    }
    for (auto col : free_columns_) out.push_back(y(col));
    return out;
  }

 private:
  Presentation presentation_;
  SNFResult snf_;
  CanonicalDecomposition decomposition_;
  std::vector<Integer> invariant_factors_;
  std::vector<std::size_t> factor_columns_;
  std::vector<std::size_t> free_columns_;
};

inline CanonicalDecomposition canonical_decomposition(const Presentation& p) {
  return GroupStructure(p).decomposition();
}

inline bool has_order_four(const CanonicalDecomposition& d) {
  return std::any_of(d.primary_factors.begin(), d.primary_factors.end(),
                     [](const PrimePower& f) { return f.prime == 2 && f.exponent >= 2; });
}

// Adds a generator y with relation  prime * y - x = 0, i.e. G x Z / <(x, -prime)>.
inline Presentation adjoin_divisor(const Presentation& p, const std::vector<Integer>& x,
                                   const Integer& prime) {
  if (prime == 2 || !is_prime(prime)) {
    throw Error("adjoin_divisor needs an odd prime, got " + prime.get_str());
  }
  if (x.size() != p.n_generators) throw Error("x has wrong length");
  Presentation out;
  out.n_generators = p.n_generators + 1;
  for (const auto& rel : p.relations) {
    auto row = rel;
    row.push_back(0);
    out.relations.push_back(std::move(row));
  }
  std::vector<Integer> row;
  for (const auto& xi : x) row.push_back(-xi);
  row.push_back(prime);
  out.relations.push_back(std::move(row));
  return out;
}

// Order of the element with the given canonical coordinates.
inline Order element_order_in(const CanonicalDecomposition& d, const std::vector<Integer>& coords) {
  if (coords.size() != d.generator_count()) throw Error("coordinate vector has wrong length");
  const std::size_t nf = d.primary_factors.size();
  for (std::size_t i = nf; i < coords.size(); ++i) {
    if (coords[i] != 0) return Order::infinite();
  }
  Integer n = 1;
  for (std::size_t i = 0; i < nf; ++i) {
    Integer pk = d.primary_factors[i].value();
    n = lcm(n, pk / gcd(coords[i], pk));
  }
  return Order::finite(n);
}

}  // namespace sumcolour
