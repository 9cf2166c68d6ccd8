#pragma once

#include <span>
#include <vector>

#include "cinf/cochains.hpp"
#include "cinf/dupont.hpp"
#include "cinf/forms.hpp"

namespace cinf {

// The Whitney-Dupont contraction (f, g, H = -s) from forms on the n-simplex onto normalized
// cochains, packaged with the A-infinity data of the form algebra. All degrees reported here
// are shifted: a p-form and a cochain on a face with p+1 vertices both sit in degree p - 1.
class SimplexContraction {
 public:
  explicit SimplexContraction(int dim);

  int dim() const { return dim_; }

  // Basis of N_n: indicator cochains of the faces, in FaceOrder.
  const std::vector<Face>& basis() const { return faces_; }
  std::size_t basis_size() const { return faces_.size(); }
  int basis_index(const Face& face) const;
  int basis_degree(int index) const { return static_cast<int>(faces_[index].size()) - 2; }
  Cochain basis_element(int index) const { return Cochain::indicator(dim_, faces_[index]); }

  Cochain f(const Form& a) const { return project_f(a); }
  Form g(const Cochain& c) const;
  const Form& g_basis(int index) const { return elementary_[index]; }
  Form H(const Form& a) const { return homotopy_H(a); }

  Form d_A(const Form& a) const { return differential(a); }
  Cochain d_B(const Cochain& c) const { return coboundary(c); }

  // Highest k with m_k^A possibly nonzero.
  int max_product_arity() const { return 2; }
  // m_1 = d, m_2(a, b) = (-1)^{|a|+1} a ^ b with |a| the shifted degree, m_k = 0 for k >= 3.
  Form m_A(std::span<const Form> args) const;

  Form unit_A() const { return Form::constant(dim_, 1); }
  Cochain unit_B() const { return f(unit_A()); }

 private:
  int dim_;
  std::vector<Face> faces_;
  std::vector<Form> elementary_;
};

// A word of basis indices with its coefficient; the multilinear expansion of a word of cochains.
struct BasisTerm {
  std::vector<int> word;
  Rational coeff;
};
std::vector<BasisTerm> expand_inputs(const SimplexContraction& ctx, const std::vector<Cochain>& inputs);

// m_2 on forms: splits the first argument by form degree p and applies (-1)^p.
Form signed_product(const Form& a, const Form& b);

}  // namespace cinf
