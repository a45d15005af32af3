#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpc/errors.hpp"
#include "qpc/rational.hpp"

namespace qpc {

// Element of Z/p for a small prime p.
class Fp {
 public:
  Fp() = default;
  Fp(long v, unsigned p) : p_(p) {
    long r = v % static_cast<long>(p);
    v_ = static_cast<unsigned>(r < 0 ? r + static_cast<long>(p) : r);
  }
  unsigned value() const { return v_; }
  unsigned modulus() const { return p_; }

  Fp operator+(const Fp& o) const { return Fp::raw((v_ + o.v_) % p_, p_); }
  Fp operator-(const Fp& o) const { return Fp::raw((v_ + p_ - o.v_) % p_, p_); }
  Fp operator-() const { return Fp::raw((p_ - v_) % p_, p_); }
  Fp operator*(const Fp& o) const {
    return Fp::raw(static_cast<unsigned>((std::uint64_t{v_} * o.v_) % p_), p_);
  }
  Fp inverse() const {
    if (v_ == 0) throw DivisionError("division by zero in F_p");
    // Fermat: v^(p-2).
    Fp r = Fp::raw(1 % p_, p_), b = *this;
    for (unsigned e = p_ - 2; e; e >>= 1, b = b * b)
      if (e & 1) r = r * b;
    return r;
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool is_zero() const { return v_ == 0; }

 private:
  static Fp raw(unsigned v, unsigned p) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  unsigned v_ = 0;
  unsigned p_ = 2;
};

// p == 0 denotes the rationals.
struct FieldSpec {
  unsigned p = 0;
  bool is_rational() const { return p == 0; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_small_prime(unsigned p) {
  if (p < 2 || p > 251) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational make(long v, FieldSpec) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw DivisionError("division by zero");
    return 1 / x;
  }
  static std::string str(const Rational& x) { return to_string(x); }
};

template <>
struct FieldOps<Fp> {
  static Fp make(long v, FieldSpec f) { return Fp(v, f.p); }
  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static Fp inverse(const Fp& x) { return x.inverse(); }
  static std::string str(const Fp& x) { return std::to_string(x.value()); }
};

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, FieldOps<F>::make(0, field)) {}

  static Matrix identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldOps<F>::make(1, field);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw TypingError("matrix shapes do not compose");
    Matrix m(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& a = (*this)(i, k);
        if (FieldOps<F>::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && FieldOps<F>::is_zero((*this)(piv, c))) ++piv;
      if (piv == rows_) continue;
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(piv, j));
      F inv = FieldOps<F>::inverse((*this)(r, c));
      for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || FieldOps<F>::is_zero((*this)(i, c))) continue;
        F f = (*this)(i, c);
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.row_reduce().size();
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::size_t n = rows_;
    Matrix aug(n, 2 * n, field_);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = FieldOps<F>::make(1, field_);
    }
    auto piv = aug.row_reduce();
    if (piv.size() < n || (n && piv[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n, field_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + FieldOps<F>::str((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<F> data_;
};

}  // namespace qpc
