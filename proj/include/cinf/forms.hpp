#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cinf/rational.hpp"

namespace cinf {

// t_1^{a_1} ... t_n^{a_n} dt_S on the n-simplex. The barycentric coordinate t_0 and its
// differential are eliminated through t_0 = 1 - sum t_j and dt_0 = -sum dt_j, so only
// indices 1..n are stored. dt factors are kept in ascending index order.
struct FormMonomial {
  std::vector<unsigned> exponents;  // exponents[j-1] is the power of t_j
  std::uint32_t dt_mask = 0;        // bit j-1 set iff dt_j is a factor

  int form_degree() const;
  unsigned poly_degree() const;
  bool has_dt(int j) const { return (dt_mask >> (j - 1)) & 1U; }

  friend auto operator<=>(const FormMonomial&, const FormMonomial&) = default;
  friend bool operator==(const FormMonomial&, const FormMonomial&) = default;
};

enum class Generator { t, dt };

// Polynomial differential form on the standard n-simplex, in canonical normal form.
// Forms may mix form degrees.
class Form {
 public:
  using Terms = std::map<FormMonomial, Rational>;

  explicit Form(int dim);

  static Form constant(int dim, const Rational& c);
  static Form monomial(int dim, FormMonomial m, const Rational& c = 1);
  // t_i or dt_i for 0 <= i <= dim; index 0 comes back in eliminated form.
  static Form generator(int dim, Generator kind, int vertex);
  // Accepts the textual syntax "3/2 t1^2 t2 dt1 dt3 + ...". t0/dt0 are allowed and eliminated.
  static Form parse(int dim, std::string_view text);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FormMonomial& m, const Rational& c);
  Form degree_part(int form_degree) const;
  // The common form degree of all terms, or nullopt for zero and mixed forms.
  std::optional<int> homogeneous_degree() const;
  std::vector<int> degrees_present() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rational& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= Rational(-1); }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend bool operator==(const Form&, const Form&) = default;

  std::string str() const;

 private:
  int dim_;
  Terms terms_;
};

std::string monomial_str(const FormMonomial& m);

// Graded commutative product.
Form wedge(const Form& a, const Form& b);
// d(t_i) = dt_i, d(dt_i) = 0, extended as a graded derivation.
Form differential(const Form& a);
// Value at vertex e_i: t_i = 1, other t_j = 0, every dt = 0.
Rational vertex_evaluate(const Form& a, int vertex);
// Pullback along the inclusion of the face (i_0 < ... < i_k) as a form on the k-simplex.
Form face_restrict(const Form& a, std::span<const int> face);
// Sum over the top-degree terms of coeff * a_1!...a_n! / (a_1+...+a_n+n)!.
Rational integrate_top(const Form& a);
Rational integrate_face(const Form& a, std::span<const int> face);

// Every monomial of the n-simplex with polynomial degree <= max_poly_degree, all dt subsets.
std::vector<FormMonomial> monomial_basis(int dim, unsigned max_poly_degree);

void validate_face(std::span<const int> face, int dim);

}  // namespace cinf
