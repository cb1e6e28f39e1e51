#include "indpoly/multipoly.hpp"

#include <sstream>

#include "indpoly/error.hpp"

namespace indpoly {

MultiPoly4 MultiPoly4::constant(const Integer& c) { return monomial(c, {0, 0, 0, 0}); }

MultiPoly4 MultiPoly4::monomial(const Integer& c, Exponents e) {
  MultiPoly4 p;
  p.add_term(e, c);
  return p;
}

MultiPoly4 MultiPoly4::variable(Var var) {
  Exponents e{0, 0, 0, 0};
  e[static_cast<std::size_t>(var)] = 1;
  return monomial(1, e);
}

Integer MultiPoly4::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly4::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly4& MultiPoly4::operator+=(const MultiPoly4& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly4& MultiPoly4::operator-=(const MultiPoly4& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly4 operator*(const MultiPoly4& a, const MultiPoly4& b) {
  MultiPoly4 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    }
  }
  return out;
}

MultiPoly4 pow(const MultiPoly4& a, std::size_t k) {
  MultiPoly4 result = MultiPoly4::constant(1);
  for (std::size_t i = 0; i < k; ++i) result = result * a;
  return result;
}

UniPoly substitute(const MultiPoly4& a, const Substitution& v, const Substitution& x,
                   const Substitution& y, const Substitution& z) {
  const std::array<const Substitution*, 4> slots{&v, &x, &y, &z};
  std::size_t symbolic = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::holds_alternative<KeepAsX>(*slots[i])) {
      if (symbolic != 4) throw Error(Errc::BadSubstitution, "more than one symbolic slot");
      symbolic = i;
    }
  }
  if (symbolic == 4) throw Error(Errc::BadSubstitution, "no symbolic slot");

  std::vector<Integer> coeffs;
  for (const auto& [e, c] : a.terms()) {
    Integer term = c;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == symbolic) continue;
      Integer power;
      // mpz_pow_ui follows 0^0 = 1.
      mpz_pow_ui(power.get_mpz_t(), std::get<Integer>(*slots[i]).get_mpz_t(), e[i]);
      term *= power;
    }
    const std::size_t degree = e[symbolic];
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += term;
  }
  return UniPoly(std::move(coeffs));
}

std::string to_string(const MultiPoly4& a) {
  if (a.is_zero()) return "0";
  static constexpr char names[4] = {'v', 'x', 'y', 'z'};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_constant = e == Exponents{0, 0, 0, 0};
    bool need_star = false;
    if (is_constant || magnitude != 1) {
      os << magnitude.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << names[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace indpoly
