#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cinf/cochains.hpp"
#include "cinf/forms.hpp"

namespace cinf {

// Dilation homotopy towards vertex i: pull back along
//   t_j -> (1-u) t_j + [j == i] u,
// keep the part linear in du, and integrate u over [0, 1]. The orientation of the fibre
// integral is fixed so that 1 - eval_i = d h^i + h^i d holds; concretely the du factor is moved
// to the front and the integral enters with a minus sign. Lowers form degree by one.
Form h_operator(const Form& a, int vertex);

// s = sum_{k<n} sum_{i_0<...<i_k} (-1)^k w_{i_0..i_k} h^{i_k} ... h^{i_0}  (h^{i_0} applied first).
// The (-1)^k weight is what 1 - g f = ds + sd requires given the h^i orientation above.
Form s_operator(const Form& a);

// H = -s, so that g f - 1 = dH + Hd.
Form homotopy_H(const Form& a);

struct IdentityCheck {
  std::string name;
  std::size_t basis_size = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

struct ContractionReport {
  int dimension = 0;
  unsigned poly_degree_bound = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

// Runs the full battery on every monomial of the n-simplex with polynomial degree <= bound.
ContractionReport check_contraction(int dim, unsigned poly_degree_bound);

}  // namespace cinf
