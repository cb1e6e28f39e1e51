#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "indpoly/unipoly.hpp"

namespace indpoly {

// Exponents of (v, x, y, z), in that order.
using Exponents = std::array<std::uint32_t, 4>;

enum class Var : std::size_t { V = 0, X = 1, Y = 2, Z = 3 };

// Sparse polynomial in the four variables v, x, y, z of the generalized
// subgraph counting polynomial. Terms are ordered lexicographically by
// exponent tuple; zero coefficients are never stored.
class MultiPoly4 {
 public:
  using Terms = std::map<Exponents, Integer>;

  MultiPoly4() = default;

  static MultiPoly4 constant(const Integer& c);
  static MultiPoly4 monomial(const Integer& c, Exponents e);
  static MultiPoly4 variable(Var var);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  Integer coeff(const Exponents& e) const;

  MultiPoly4& operator+=(const MultiPoly4& other);
  MultiPoly4& operator-=(const MultiPoly4& other);

  friend MultiPoly4 operator+(MultiPoly4 a, const MultiPoly4& b) { return a += b; }
  friend MultiPoly4 operator-(MultiPoly4 a, const MultiPoly4& b) { return a -= b; }
  friend MultiPoly4 operator*(const MultiPoly4& a, const MultiPoly4& b);
  friend bool operator==(const MultiPoly4&, const MultiPoly4&) = default;

  // Accumulates c · v^a x^b y^c z^d into this polynomial.
  void add_term(const Exponents& e, const Integer& c);

 private:
  Terms terms_;
};

MultiPoly4 pow(const MultiPoly4& a, std::size_t k);

// Marks the one slot in `substitute` that stays symbolic (as x).
struct KeepAsX {};
inline constexpr KeepAsX keep_x{};
using Substitution = std::variant<KeepAsX, Integer>;

// Substitutes integers for three of the four variables and renames the
// remaining one to x. 0^0 = 1. Throws BadSubstitution unless exactly one
// slot is KeepAsX.
UniPoly substitute(const MultiPoly4& a, const Substitution& v, const Substitution& x,
                   const Substitution& y, const Substitution& z);

// "1 + 2*v*x + v^2*x*y*z", terms in lexicographic exponent order.
std::string to_string(const MultiPoly4& a);

}  // namespace indpoly
