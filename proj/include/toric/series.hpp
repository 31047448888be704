#pragma once

// Integer polynomials in one variable and exact power-series expansion of
// their quotients.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/integer.hpp"

namespace toric {

/// Coefficients c_0, c_1, ... of c_0 + c_1 t + ...; trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Int> c) : c_(c) { trim(); }
  explicit IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }

  static IntPoly monomial(const Int& c, std::size_t degree) {
    std::vector<Int> v(degree + 1, 0);
    v[degree] = c;
    return IntPoly(std::move(v));
  }

  const std::vector<Int>& coeffs() const noexcept { return c_; }
  Int operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(out));
  }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return IntPoly(std::move(out));
  }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly pow(unsigned e) const {
    IntPoly r{1};
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// numerator / denominator as a power series in t.
class RationalSeries {
 public:
  RationalSeries(IntPoly numerator, IntPoly denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_[0] == 0) throw DomainError("RationalSeries: denominator vanishes at t = 0");
  }

  const IntPoly& numerator() const noexcept { return num_; }
  const IntPoly& denominator() const noexcept { return den_; }

  /// Coefficients of t^0 .. t^order. Throws DomainError when a coefficient
  /// is not an integer.
  std::vector<Int> expand(std::size_t order) const {
    std::vector<Int> out;
    out.reserve(order + 1);
    const Int& q0 = den_[0];
    for (std::size_t k = 0; k <= order; ++k) {
      Int acc = num_[k];
      for (std::size_t i = 1; i <= k && i < den_.coeffs().size(); ++i) acc -= den_[i] * out[k - i];
      if (acc % q0 != 0) throw DomainError("RationalSeries: coefficient of t^" + std::to_string(k) + " is not integral");
      out.push_back(acc / q0);
    }
    return out;
  }

 private:
  IntPoly num_;
  IntPoly den_;
};

}  // namespace toric
