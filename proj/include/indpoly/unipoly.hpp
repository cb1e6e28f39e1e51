#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace indpoly {

using Integer = mpz_class;

// Dense univariate polynomial over the integers. Index = degree. The stored
// sequence never ends in a zero, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Integer& c);
  static UniPoly monomial(const Integer& c, std::size_t degree);
  // (1 + x)^n
  static UniPoly one_plus_x_pow(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  // Zero beyond the stored range.
  Integer coeff(std::size_t k) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// a · x^k
UniPoly shift(const UniPoly& a, std::size_t k);
Integer evaluate(const UniPoly& a, const Integer& t);
// x^n · a(1/x): coefficient i moves to n - i. Throws DegreeExceedsWindow
// when deg(a) > n.
UniPoly reciprocal_transform(const UniPoly& a, std::size_t n);
UniPoly pow(const UniPoly& a, std::size_t k);

// "1 + 3*x + 3*x^2"; "0" for the zero polynomial.
std::string to_string(const UniPoly& a);
// Decimal coefficient strings, index = degree.
std::vector<std::string> coefficient_strings(const UniPoly& a);

}  // namespace indpoly
