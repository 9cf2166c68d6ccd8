#include "cinf/contraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace cinf {

SimplexContraction::SimplexContraction(int dim) : dim_(dim), faces_(simplex_faces(dim)) {
  elementary_.reserve(faces_.size());
  for (const Face& face : faces_) elementary_.push_back(elementary_form(face, dim_));
}

int SimplexContraction::basis_index(const Face& face) const {
  const auto it = std::lower_bound(faces_.begin(), faces_.end(), face, FaceOrder{});
  if (it == faces_.end() || *it != face) throw std::out_of_range("face is not in the simplex: " + face_str(face));
  return static_cast<int>(it - faces_.begin());
}

Form SimplexContraction::g(const Cochain& c) const {
  Form out(dim_);
  for (const auto& [face, value] : c.coefficients()) out += elementary_[basis_index(face)] * value;
  return out;
}

std::vector<BasisTerm> expand_inputs(const SimplexContraction& ctx, const std::vector<Cochain>& inputs) {
  std::vector<BasisTerm> terms{{{}, Rational(1)}};
  for (const Cochain& c : inputs) {
    if (c.dim() != ctx.dim()) throw std::invalid_argument("input cochain lives on a different simplex");
    std::vector<BasisTerm> next;
    next.reserve(terms.size() * c.coefficients().size());
    for (const auto& t : terms) {
      for (const auto& [face, value] : c.coefficients()) {
        BasisTerm e = t;
        e.word.push_back(ctx.basis_index(face));
        e.coeff *= value;
        next.push_back(std::move(e));
      }
    }
    terms = std::move(next);
  }
  return terms;
}

Form signed_product(const Form& a, const Form& b) {
  Form out(a.dim());
  for (int p : a.degrees_present()) {
    const Form part = wedge(a.degree_part(p), b);
    if (p % 2 == 0)
      out += part;
    else
      out -= part;
  }
  return out;
}

Form SimplexContraction::m_A(std::span<const Form> args) const {
  switch (args.size()) {
    case 0:
      throw std::invalid_argument("m_A needs at least one argument");
    case 1:
      return differential(args[0]);
    case 2:
      return signed_product(args[0], args[1]);
    default:
      return Form(dim_);
  }
}

}  // namespace cinf
