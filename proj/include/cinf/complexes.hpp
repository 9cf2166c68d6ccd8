#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cinf/cochains.hpp"
#include "cinf/contraction.hpp"
#include "cinf/forms.hpp"
#include "cinf/transfer.hpp"

namespace cinf {

// Finite simplicial complex whose simplices are strictly increasing lists of vertex indices.
class OrderedComplex {
 public:
  // Validates ordering, range and duplicates; computes the closure.
  OrderedComplex(std::vector<std::string> vertex_names, std::vector<Face> simplices);

  static OrderedComplex standard_simplex(int n);
  static OrderedComplex simplex_boundary(int n);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  // As listed in the input.
  const std::vector<Face>& generating_simplices() const { return generators_; }
  // Every face of every listed simplex, in FaceOrder.
  const std::vector<Face>& simplices() const { return closure_; }
  bool contains(const Face& s) const { return index_.contains(s); }
  int dimension() const;

 private:
  std::vector<std::string> names_;
  std::vector<Face> generators_;
  std::vector<Face> closure_;
  std::map<Face, int, FaceOrder> index_;
};

// JSON text {"vertices": [...], "simplices": [[...], ...]}; "vertices" may be omitted, in which
// case vertices 0..max are assumed. Throws std::invalid_argument on malformed input.
OrderedComplex load_complex(std::string_view text);
std::string complex_to_json(const OrderedComplex& x);

// Rational-valued function on the simplices of a complex; zero entries are never stored.
class GlobalCochain {
 public:
  using Coefficients = std::map<Face, Rational, FaceOrder>;

  GlobalCochain() = default;
  static GlobalCochain indicator(const Face& s, const Rational& c = 1);
  static GlobalCochain unit(const OrderedComplex& x);

  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational at(const Face& s) const;
  void add(const Face& s, const Rational& c);
  // Throws std::invalid_argument when an entry is not a simplex of x.
  void validate(const OrderedComplex& x) const;

  GlobalCochain& operator+=(const GlobalCochain& o);
  GlobalCochain& operator*=(const Rational& c);
  friend GlobalCochain operator+(GlobalCochain a, const GlobalCochain& b) { return a += b; }
  friend GlobalCochain operator-(GlobalCochain a, const GlobalCochain& b) { return a += b * Rational(-1); }
  friend GlobalCochain operator-(GlobalCochain a) { return a *= Rational(-1); }
  friend GlobalCochain operator*(GlobalCochain a, const Rational& c) { return a *= c; }
  friend bool operator==(const GlobalCochain&, const GlobalCochain&) = default;

  std::string str() const;

 private:
  Coefficients coeffs_;
};

// JSON text {"entries": [{"simplex": [...], "coeff": "p/q"}, ...]}.
GlobalCochain load_cochain(std::string_view text, const OrderedComplex& x);
std::string cochain_to_json(const GlobalCochain& c);

// A form on every simplex, the form on s living on the standard simplex of dimension |s|-1.
class GlobalForm {
 public:
  explicit GlobalForm(const OrderedComplex& x);  // zero form

  const OrderedComplex& complex() const { return *x_; }
  const Form& on(const Face& s) const;
  void set(const Face& s, Form a);
  bool is_zero() const;

  // Barycentric coordinate t_v and its differential.
  static GlobalForm coordinate(const OrderedComplex& x, int v);
  static GlobalForm coordinate_differential(const OrderedComplex& x, int v);

  GlobalForm& operator+=(const GlobalForm& o);
  GlobalForm& operator*=(const Rational& c);
  friend GlobalForm operator+(GlobalForm a, const GlobalForm& b) { return a += b; }
  friend GlobalForm operator-(GlobalForm a, const GlobalForm& b) { return a += b * Rational(-1); }
  friend GlobalForm operator*(GlobalForm a, const Rational& c) { return a *= c; }
  friend bool operator==(const GlobalForm& a, const GlobalForm& b) { return a.forms_ == b.forms_; }

 private:
  const OrderedComplex* x_;
  std::map<Face, Form, FaceOrder> forms_;
};

// Empty when the restrictions to all codimension-one faces agree, else a description of the first
// disagreement.
std::string compatibility_violation(const GlobalForm& a);
void require_compatible(const GlobalForm& a, std::string_view where);

// The cochain on the standard simplex obtained by pulling c back along s.
Cochain local_cochain(const GlobalCochain& c, const Face& s);

GlobalCochain global_f(const GlobalForm& a);
GlobalForm global_g(const OrderedComplex& x, const GlobalCochain& c);
GlobalForm global_H(const GlobalForm& a);
GlobalForm global_d(const GlobalForm& a);
GlobalForm global_wedge(const GlobalForm& a, const GlobalForm& b);
GlobalCochain global_coboundary(const OrderedComplex& x, const GlobalCochain& c);

// a cup b = f(g a ^ g b).
GlobalCochain cup(const OrderedComplex& x, const GlobalCochain& a, const GlobalCochain& b);

// Transferred operations computed simplexwise with one engine per simplex dimension.
class GlobalTransfer {
 public:
  explicit GlobalTransfer(const OrderedComplex& x);

  const OrderedComplex& complex() const { return *x_; }
  // m_n on a word of global cochains; checks that the local results agree on shared faces.
  GlobalCochain m(const std::vector<GlobalCochain>& inputs);
  TransferEngine& engine(int dim);

 private:
  const OrderedComplex* x_;
  std::vector<std::unique_ptr<SimplexContraction>> contractions_;
  std::vector<std::unique_ptr<TransferEngine>> engines_;
};

// Whitney's product conditions (locality, Leibniz, unit), graded commutativity, a
// nonassociativity witness and the global A-infinity relations up to arity 3, over all basis cochains of x.
VerificationReport check_whitney_conditions(const OrderedComplex& x);

// f g = 1, 1 - g f = ds + sd, f s = 0, s s = 0 on global forms t_{v_1}..t_{v_k} g(chi_s) with k up to
// max_poly_degree, and global m_n shuffle vanishing for n <= max_arity.
VerificationReport check_global_contraction(const OrderedComplex& x, int max_poly_degree, int max_arity);

}  // namespace cinf
