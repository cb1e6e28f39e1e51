#include "indpoly/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "indpoly/error.hpp"

namespace indpoly {

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Integer& c) { return UniPoly(std::vector<Integer>{c}); }

UniPoly UniPoly::monomial(const Integer& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::one_plus_x_pow(std::size_t n) {
  std::vector<Integer> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    mpz_bin_uiui(coeffs[k].get_mpz_t(), n, k);
  }
  return UniPoly(std::move(coeffs));
}

Integer UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) { return *this = *this * other; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

UniPoly shift(const UniPoly& a, std::size_t k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<Integer> coeffs(k);
  coeffs.insert(coeffs.end(), a.coeffs().begin(), a.coeffs().end());
  return UniPoly(std::move(coeffs));
}

Integer evaluate(const UniPoly& a, const Integer& t) {
  Integer acc = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

UniPoly reciprocal_transform(const UniPoly& a, std::size_t n) {
  if (a.degree() > static_cast<long>(n)) {
    throw Error(Errc::DegreeExceedsWindow,
                "degree " + std::to_string(a.degree()) + " exceeds window " + std::to_string(n));
  }
  std::vector<Integer> coeffs(n + 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) coeffs[n - i] = a.coeffs()[i];
  return UniPoly(std::move(coeffs));
}

UniPoly pow(const UniPoly& a, std::size_t k) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string to_string(const UniPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const Integer& c = a.coeffs()[k];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::vector<std::string> coefficient_strings(const UniPoly& a) {
  std::vector<std::string> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace indpoly
