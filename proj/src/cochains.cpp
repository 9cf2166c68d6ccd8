#include "cinf/cochains.hpp"

#include <algorithm>
#include <stdexcept>

namespace cinf {

std::string face_str(const Face& f) {
  std::string out = "[";
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(f[j]);
  }
  return out + "]";
}

std::vector<Face> simplex_faces(int dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("simplex dimension out of range");
  std::vector<Face> out;
  for (unsigned mask = 1; mask < (1U << (dim + 1)); ++mask) {
    Face f;
    for (int v = 0; v <= dim; ++v)
      if ((mask >> v) & 1U) f.push_back(v);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), FaceOrder{});
  return out;
}

Cochain::Cochain(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative simplex dimension");
}

Cochain Cochain::indicator(int dim, const Face& face, const Rational& c) {
  Cochain out(dim);
  out.add(face, c);
  return out;
}

Rational Cochain::at(const Face& face) const {
  const auto it = coeffs_.find(face);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Cochain::add(const Face& face, const Rational& c) {
  validate_face(face, dim_);
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(face, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Cochain Cochain::degree_part(int degree) const {
  Cochain out(dim_);
  for (const auto& [f, c] : coeffs_)
    if (static_cast<int>(f.size()) - 1 == degree) out.coeffs_.emplace(f, c);
  return out;
}

std::optional<int> Cochain::homogeneous_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  const int lo = static_cast<int>(coeffs_.begin()->first.size()) - 1;
  const int hi = static_cast<int>(coeffs_.rbegin()->first.size()) - 1;
  if (lo != hi) return std::nullopt;
  return lo;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("cochain dimension mismatch");
  for (const auto& [f, c] : o.coeffs_) add(f, c);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("cochain dimension mismatch");
  for (const auto& [f, c] : o.coeffs_) add(f, -c);
  return *this;
}

Cochain& Cochain::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [f, v] : coeffs_) v *= c;
  return *this;
}

std::string Cochain::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [f, c] : coeffs_) {
    if (!out.empty()) out += '\n';
    out += "face=" + face_str(f) + " coeff=" + c.str();
  }
  return out;
}

Cochain coboundary(const Cochain& c) {
  Cochain out(c.dim());
  for (const auto& [face, value] : c.coefficients()) {
    for (int v = 0; v <= c.dim(); ++v) {
      Face coface;
      int position = -1;
      for (int w : face) {
        if (w == v) {
          position = -2;
          break;
        }
        if (w > v && position == -1) {
          position = static_cast<int>(coface.size());
          coface.push_back(v);
        }
        coface.push_back(w);
      }
      if (position == -2) continue;
      if (position == -1) {
        position = static_cast<int>(coface.size());
        coface.push_back(v);
      }
      out.add(coface, position % 2 == 0 ? value : -value);
    }
  }
  return out;
}

Form elementary_form(std::span<const int> face, int dim) {
  validate_face(face, dim);
  const int k = static_cast<int>(face.size()) - 1;
  Form out(dim);
  for (int j = 0; j <= k; ++j) {
    Form term = Form::generator(dim, Generator::t, face[j]);
    for (int l = 0; l <= k; ++l)
      if (l != j) term = wedge(term, Form::generator(dim, Generator::dt, face[l]));
    if (j % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out * Rational(factorial(static_cast<unsigned>(k)));
}

Cochain project_f(const Form& a) {
  Cochain out(a.dim());
  const auto degrees = a.degrees_present();
  for (int p : degrees) {
    if (p > a.dim()) continue;
    const Form part = a.degree_part(p);
    for (const Face& f : simplex_faces(a.dim())) {
      if (static_cast<int>(f.size()) != p + 1) continue;
      out.add(f, integrate_face(part, f));
    }
  }
  return out;
}

Form include_g(const Cochain& c) {
  Form out(c.dim());
  for (const auto& [f, value] : c.coefficients()) out += elementary_form(f, c.dim()) * value;
  return out;
}

Cochain restrict_cochain(const Cochain& c, std::span<const int> face) {
  validate_face(face, c.dim());
  const int k = static_cast<int>(face.size()) - 1;
  std::vector<int> local(c.dim() + 1, -1);
  for (int j = 0; j <= k; ++j) local[face[j]] = j;
  Cochain out(k);
  for (const auto& [f, value] : c.coefficients()) {
    Face g;
    for (int v : f) {
      if (local[v] < 0) {
        g.clear();
        break;
      }
      g.push_back(local[v]);
    }
    if (!g.empty()) out.add(g, value);
  }
  return out;
}

IntervalCoords to_interval_basis(const Cochain& c) {
  if (c.dim() != 1) throw std::invalid_argument("interval basis needs a 1-simplex cochain");
  const Rational c0 = c.at({0});
  return IntervalCoords{c0, c.at({1}) - c0, c.at({0, 1})};
}

Cochain from_interval_basis(const IntervalCoords& coords) {
  Cochain out(1);
  out.add({0}, coords.one);
  out.add({1}, coords.one + coords.t);
  out.add({0, 1}, coords.dt);
  return out;
}

std::string interval_str(const IntervalCoords& coords) {
  std::string out;
  auto append = [&](const Rational& c, const std::string& name) {
    if (c.is_zero()) return;
    const bool negative = c.sign() < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = c.abs();
    if (name == "1")
      out += mag.str();
    else if (mag == 1)
      out += name;
    else
      out += mag.str() + " " + name;
  };
  append(coords.one, "1");
  append(coords.t, "t");
  append(coords.dt, "dt");
  return out.empty() ? "0" : out;
}

}  // namespace cinf
