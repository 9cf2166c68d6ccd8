#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cinf/forms.hpp"
#include "cinf/rational.hpp"

namespace cinf {

// Strictly increasing vertex list. A face with k+1 vertices carries degree-k cochains.
using Face = std::vector<int>;

// Orders faces by size, then lexicographically.
struct FaceOrder {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string face_str(const Face& f);

// All nonempty faces of the n-simplex in FaceOrder.
std::vector<Face> simplex_faces(int dim);

// Normalized cochain on the standard n-simplex.
class Cochain {
 public:
  using Coefficients = std::map<Face, Rational, FaceOrder>;

  explicit Cochain(int dim);
  static Cochain indicator(int dim, const Face& face, const Rational& c = 1);

  int dim() const { return dim_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational at(const Face& face) const;

  void add(const Face& face, const Rational& c);
  Cochain degree_part(int degree) const;
  std::optional<int> homogeneous_degree() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Rational& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator-(Cochain a) { return a *= Rational(-1); }
  friend Cochain operator*(Cochain a, const Rational& c) { return a *= c; }
  friend Cochain operator*(const Rational& c, Cochain a) { return a *= c; }
  friend bool operator==(const Cochain&, const Cochain&) = default;

  // One "face=[i0,i1] coeff=p/q" entry per line; "0" when empty.
  std::string str() const;

 private:
  int dim_;
  Coefficients coeffs_;
};

// (dc)(i_0..i_k) = sum_j (-1)^j c(i_0..^i_j..i_k).
Cochain coboundary(const Cochain& c);

// Whitney form k! sum_j (-1)^j t_{i_j} dt_{i_0}..^dt_{i_j}..dt_{i_k}.
Form elementary_form(std::span<const int> face, int dim);

// Integration projection: each face gets the integral of the matching-degree part over it.
Cochain project_f(const Form& a);

// Linear extension of face -> elementary form.
Form include_g(const Cochain& c);

// Pullback of a cochain on the n-simplex to the k-simplex spanned by `face`, relabelled 0..k.
Cochain restrict_cochain(const Cochain& c, std::span<const int> face);

// Coordinates of a 1-simplex cochain in the basis {1, t, dt} (1 = chi_0 + chi_1, t = chi_1,
// dt = chi_01).
struct IntervalCoords {
  Rational one;
  Rational t;
  Rational dt;
  friend bool operator==(const IntervalCoords&, const IntervalCoords&) = default;
};

IntervalCoords to_interval_basis(const Cochain& c);
Cochain from_interval_basis(const IntervalCoords& coords);
std::string interval_str(const IntervalCoords& coords);

}  // namespace cinf
