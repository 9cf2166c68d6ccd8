#pragma once

#include <string>
#include <vector>

#include "cinf/rational.hpp"

namespace cinf {

// Dense polynomial in one variable t; coeffs()[k] multiplies t^k. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(unsigned power, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& t) const;
  // Integral over [0, 1].
  Rational integrate_unit() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // e.g. "1/2 t^2 - 1/2 t"; "0" for the zero polynomial.
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace cinf
