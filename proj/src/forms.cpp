#include "cinf/forms.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cinf {

namespace {

constexpr int kMaxDim = 31;

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("simplex dimension out of range");
}

// Sign of dt_A ^ dt_B after sorting into ascending order: one transposition per pair (a in A, b in B, a > b).
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Form power(const Form& base, unsigned e) {
  Form out = Form::constant(base.dim(), 1);
  for (unsigned k = 0; k < e; ++k) out = wedge(out, base);
  return out;
}

}  // namespace

int FormMonomial::form_degree() const { return std::popcount(dt_mask); }

unsigned FormMonomial::poly_degree() const {
  unsigned s = 0;
  for (unsigned e : exponents) s += e;
  return s;
}

Form::Form(int dim) : dim_(dim) { check_dim(dim); }

Form Form::constant(int dim, const Rational& c) {
  Form f(dim);
  f.add_term(FormMonomial{std::vector<unsigned>(dim, 0), 0}, c);
  return f;
}

Form Form::monomial(int dim, FormMonomial m, const Rational& c) {
  if (static_cast<int>(m.exponents.size()) != dim || (dim < 32 && (m.dt_mask >> dim) != 0))
    throw std::invalid_argument("monomial does not fit the simplex dimension");
  Form f(dim);
  f.add_term(m, c);
  return f;
}

Form Form::generator(int dim, Generator kind, int vertex) {
  check_dim(dim);
  if (vertex < 0 || vertex > dim) throw std::out_of_range("generator index out of range");
  Form f(dim);
  if (vertex == 0) {
    if (kind == Generator::t) f.add_term(FormMonomial{std::vector<unsigned>(dim, 0), 0}, 1);
    for (int j = 1; j <= dim; ++j) {
      FormMonomial m{std::vector<unsigned>(dim, 0), 0};
      if (kind == Generator::t)
        m.exponents[j - 1] = 1;
      else
        m.dt_mask = 1U << (j - 1);
      f.add_term(m, -1);
    }
    return f;
  }
  FormMonomial m{std::vector<unsigned>(dim, 0), 0};
  if (kind == Generator::t)
    m.exponents[vertex - 1] = 1;
  else
    m.dt_mask = 1U << (vertex - 1);
  f.add_term(m, 1);
  return f;
}

void Form::add_term(const FormMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::degree_part(int form_degree) const {
  Form out(dim_);
  for (const auto& [m, c] : terms_)
    if (m.form_degree() == form_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

std::optional<int> Form::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    if (!deg)
      deg = m.form_degree();
    else if (*deg != m.form_degree())
      return std::nullopt;
  }
  return deg;
}

std::vector<int> Form::degrees_present() const {
  std::uint64_t seen = 0;
  for (const auto& [m, c] : terms_) seen |= 1ULL << m.form_degree();
  std::vector<int> out;
  for (int p = 0; p < 64; ++p)
    if ((seen >> p) & 1ULL) out.push_back(p);
  return out;
}

Form& Form::operator+=(const Form& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("form dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("form dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form& Form::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string monomial_str(const FormMonomial& m) {
  std::string out;
  for (std::size_t j = 0; j < m.exponents.size(); ++j) {
    if (m.exponents[j] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "t" + std::to_string(j + 1);
    if (m.exponents[j] > 1) out += "^" + std::to_string(m.exponents[j]);
  }
  for (std::size_t j = 0; j < m.exponents.size(); ++j) {
    if (!m.has_dt(static_cast<int>(j) + 1)) continue;
    if (!out.empty()) out += ' ';
    out += "dt" + std::to_string(j + 1);
  }
  return out;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mono = monomial_str(m);
    const Rational mag = c.abs();
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + " " + mono;
  }
  return out;
}

Form Form::parse(int dim, std::string_view text) {
  check_dim(dim);
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw std::invalid_argument("empty form text");
  if (tokens.size() == 1 && tokens[0] == "0") return Form(dim);

  auto parse_index = [&](std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("missing index in '" + std::string(s) + "'");
    const int idx = std::stoi(std::string(s.substr(start, pos - start)));
    if (idx > dim) throw std::out_of_range("generator index exceeds dimension in '" + std::string(s) + "'");
    return idx;
  };

  Form total(dim);
  Form term = Form::constant(dim, 1);
  Rational sign = 1;
  bool term_open = false;
  auto close_term = [&] {
    if (!term_open) throw std::invalid_argument("dangling operator in form text");
    total += term * sign;
    term = Form::constant(dim, 1);
    sign = 1;
    term_open = false;
  };
  for (std::string tok : tokens) {
    if (tok.size() > 1 && tok[0] == '-' && (tok[1] == 't' || tok[1] == 'd')) {
      sign = -sign;
      tok.erase(0, 1);
    }
    if (tok == "+" || tok == "-") {
      if (term_open) close_term();
      if (tok == "-") sign = -sign;
      continue;
    }
    term_open = true;
    if (tok.rfind("dt", 0) == 0) {
      std::size_t pos = 2;
      const int idx = parse_index(tok, pos);
      if (pos != tok.size()) throw std::invalid_argument("malformed factor '" + tok + "'");
      term = wedge(term, generator(dim, Generator::dt, idx));
    } else if (tok[0] == 't') {
      std::size_t pos = 1;
      const int idx = parse_index(tok, pos);
      unsigned e = 1;
      if (pos < tok.size()) {
        if (tok[pos] != '^') throw std::invalid_argument("malformed factor '" + tok + "'");
        ++pos;
        const std::size_t start = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (start == pos || pos != tok.size()) throw std::invalid_argument("malformed exponent '" + tok + "'");
        e = static_cast<unsigned>(std::stoul(tok.substr(start)));
      }
      term = wedge(term, power(generator(dim, Generator::t, idx), e));
    } else {
      term *= Rational::parse(tok);
    }
  }
  close_term();
  return total;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  Form out(a.dim());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma.dt_mask & mb.dt_mask) != 0) continue;
      FormMonomial m{ma.exponents, ma.dt_mask | mb.dt_mask};
      for (std::size_t j = 0; j < m.exponents.size(); ++j) m.exponents[j] += mb.exponents[j];
      Rational c = ca * cb;
      if (merge_sign(ma.dt_mask, mb.dt_mask) < 0) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

Form differential(const Form& a) {
  Form out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    for (int j = 1; j <= a.dim(); ++j) {
      const unsigned e = m.exponents[j - 1];
      if (e == 0 || m.has_dt(j)) continue;
      FormMonomial dm = m;
      dm.exponents[j - 1] -= 1;
      dm.dt_mask |= 1U << (j - 1);
      // dt_j moves past the dt factors with smaller index.
      const int passed = std::popcount(m.dt_mask & ((1U << (j - 1)) - 1U));
      Rational coeff = c * Rational(static_cast<long>(e));
      if (passed % 2 != 0) coeff = -coeff;
      out.add_term(dm, coeff);
    }
  }
  return out;
}

Rational vertex_evaluate(const Form& a, int vertex) {
  if (vertex < 0 || vertex > a.dim()) throw std::out_of_range("vertex index out of range");
  Rational out;
  for (const auto& [m, c] : a.terms()) {
    if (m.dt_mask != 0) continue;
    bool survives = true;
    for (int j = 1; j <= a.dim(); ++j) {
      if (j != vertex && m.exponents[j - 1] != 0) survives = false;
    }
    if (survives) out += c;
  }
  return out;
}

void validate_face(std::span<const int> face, int dim) {
  if (face.empty()) throw std::invalid_argument("face must have at least one vertex");
  for (std::size_t j = 0; j < face.size(); ++j) {
    if (face[j] < 0 || face[j] > dim) throw std::out_of_range("face vertex out of range");
    if (j > 0 && face[j] <= face[j - 1]) throw std::invalid_argument("face vertices must be strictly increasing");
  }
}

Form face_restrict(const Form& a, std::span<const int> face) {
  validate_face(face, a.dim());
  const int k = static_cast<int>(face.size()) - 1;
  // local_index[l] = j when face[j] == l, -1 when l is not on the face.
  std::vector<int> local_index(a.dim() + 1, -1);
  for (int j = 0; j <= k; ++j) local_index[face[j]] = j;

  Form out(k);
  for (const auto& [m, c] : a.terms()) {
    bool vanishes = false;
    for (int l = 1; l <= a.dim(); ++l)
      if (local_index[l] < 0 && (m.exponents[l - 1] != 0 || m.has_dt(l))) vanishes = true;
    if (vanishes) continue;
    Form image = Form::constant(k, c);
    for (int l = 1; l <= a.dim(); ++l)
      if (m.exponents[l - 1] != 0)
        image = wedge(image, power(Form::generator(k, Generator::t, local_index[l]), m.exponents[l - 1]));
    for (int l = 1; l <= a.dim(); ++l)
      if (m.has_dt(l)) image = wedge(image, Form::generator(k, Generator::dt, local_index[l]));
    out += image;
  }
  return out;
}

Rational integrate_top(const Form& a) {
  const int n = a.dim();
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1U);
  Rational out;
  for (const auto& [m, c] : a.terms()) {
    if (m.dt_mask != full) continue;
    BigInt num = 1;
    for (unsigned e : m.exponents) num *= factorial(e);
    out += c * Rational(num, factorial(m.poly_degree() + static_cast<unsigned>(n)));
  }
  return out;
}

Rational integrate_face(const Form& a, std::span<const int> face) {
  return integrate_top(face_restrict(a, face));
}

std::vector<FormMonomial> monomial_basis(int dim, unsigned max_poly_degree) {
  check_dim(dim);
  std::vector<std::vector<unsigned>> exps{{}};
  for (int j = 0; j < dim; ++j) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& e : exps) {
      unsigned used = 0;
      for (unsigned x : e) used += x;
      for (unsigned p = 0; used + p <= max_poly_degree; ++p) {
        auto f = e;
        f.push_back(p);
        next.push_back(std::move(f));
      }
    }
    exps = std::move(next);
  }
  std::vector<FormMonomial> out;
  for (std::uint32_t mask = 0; mask < (1U << dim); ++mask)
    for (const auto& e : exps) out.push_back(FormMonomial{e, mask});
  return out;
}

}  // namespace cinf
