#include "cinf/dupont.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cinf {

namespace {

// int_0^1 (1-u)^alpha u^beta du = alpha! beta! / (alpha+beta+1)!
Rational beta_integral(unsigned alpha, unsigned beta) {
  return Rational(factorial(alpha) * factorial(beta), factorial(alpha + beta + 1));
}

void h_monomial(const FormMonomial& mono, const Rational& coeff, int n, int vertex, Form& out) {
  if (mono.dt_mask == 0) return;
  const unsigned deg_others = mono.poly_degree() - (vertex >= 1 ? mono.exponents[vertex - 1] : 0U);
  const unsigned dt_count = static_cast<unsigned>(mono.form_degree());
  const unsigned a_i = vertex >= 1 ? mono.exponents[vertex - 1] : 0U;

  int position = 0;
  for (int j = 1; j <= n; ++j) {
    if (!mono.has_dt(j)) continue;
    const Rational slot_sign = (position % 2 == 0) ? Rational(-1) : Rational(1);
    ++position;
    for (unsigned m = 0; m <= a_i; ++m) {
      const unsigned alpha = deg_others + m + dt_count - 1;
      const unsigned beta = a_i - m;
      const Rational weight = slot_sign * coeff * Rational(binomial(a_i, m)) * beta_integral(alpha, beta);

      FormMonomial base = mono;
      base.dt_mask &= ~(1U << (j - 1));
      if (vertex >= 1) base.exponents[vertex - 1] = m;
      // factor ([j == vertex] - t_j)
      if (j == vertex) out.add_term(base, weight);
      FormMonomial shifted = base;
      shifted.exponents[j - 1] += 1;
      out.add_term(shifted, -weight);
    }
  }
}

void s_chains(const Form& current, int last_vertex, std::vector<int>& chain, Form& out) {
  const int n = current.dim();
  if (static_cast<int>(chain.size()) >= n) return;
  for (int v = last_vertex + 1; v <= n; ++v) {
    const Form next = h_operator(current, v);
    if (next.is_zero()) continue;
    chain.push_back(v);
    // chains of length k+1 carry (-1)^k under the h^i orientation fixed above
    const Rational weight = (chain.size() % 2 == 1) ? Rational(1) : Rational(-1);
    out += wedge(elementary_form(chain, n), next) * weight;
    s_chains(next, v, chain, out);
    chain.pop_back();
  }
}

// Runs check(i) for i in [0, count) on worker threads; reports the lowest failing index so the
// outcome does not depend on scheduling.
std::optional<std::string> first_failure(std::size_t count,
                                         const std::function<std::optional<std::string>(std::size_t)>& check) {
  const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 8U));
  std::mutex mu;
  std::optional<std::size_t> lowest;
  std::optional<std::string> message;
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += workers) {
      {
        std::lock_guard lock(mu);
        if (lowest && *lowest < i) return;
      }
      if (auto msg = check(i)) {
        std::lock_guard lock(mu);
        if (!lowest || i < *lowest) {
          lowest = i;
          message = std::move(msg);
        }
        return;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return message;
}

std::string describe_mismatch(const std::string& input, const std::string& lhs, const std::string& rhs) {
  return "input " + input + ": lhs = " + lhs + ", rhs = " + rhs;
}

}  // namespace

Form h_operator(const Form& a, int vertex) {
  if (vertex < 0 || vertex > a.dim()) throw std::out_of_range("h_operator: vertex index out of range");
  Form out(a.dim());
  for (const auto& [m, c] : a.terms()) h_monomial(m, c, a.dim(), vertex, out);
  return out;
}

Form s_operator(const Form& a) {
  Form out(a.dim());
  std::vector<int> chain;
  s_chains(a, -1, chain, out);
  return out;
}

Form homotopy_H(const Form& a) { return -s_operator(a); }

bool ContractionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

ContractionReport check_contraction(int dim, unsigned poly_degree_bound) {
  if (dim < 0) throw std::invalid_argument("check_contraction: negative dimension");
  ContractionReport report;
  report.dimension = dim;
  report.poly_degree_bound = poly_degree_bound;

  const std::vector<Face> faces = simplex_faces(dim);
  const std::vector<FormMonomial> monos = monomial_basis(dim, poly_degree_bound);
  auto mono_form = [&](std::size_t i) { return Form::monomial(dim, monos[i]); };

  auto add = [&](std::string name, std::size_t size,
                 const std::function<std::optional<std::string>(std::size_t)>& check) {
    IdentityCheck entry{std::move(name), size, true, std::nullopt};
    entry.counterexample = first_failure(size, check);
    entry.passed = !entry.counterexample.has_value();
    report.checks.push_back(std::move(entry));
  };

  add("f g = 1", faces.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Cochain chi = Cochain::indicator(dim, faces[i]);
    const Cochain back = project_f(include_g(chi));
    if (back == chi) return std::nullopt;
    return describe_mismatch("face " + face_str(faces[i]), back.str(), chi.str());
  });
  add("f d = delta f", monos.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Form a = mono_form(i);
    const Cochain lhs = project_f(differential(a));
    const Cochain rhs = coboundary(project_f(a));
    if (lhs == rhs) return std::nullopt;
    return describe_mismatch(a.str(), lhs.str(), rhs.str());
  });
  add("d g = g delta", faces.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Cochain chi = Cochain::indicator(dim, faces[i]);
    const Form lhs = differential(include_g(chi));
    const Form rhs = include_g(coboundary(chi));
    if (lhs == rhs) return std::nullopt;
    return describe_mismatch("face " + face_str(faces[i]), lhs.str(), rhs.str());
  });
  add("1 - g f = ds + sd", monos.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Form a = mono_form(i);
    const Form lhs = a - include_g(project_f(a));
    const Form rhs = differential(s_operator(a)) + s_operator(differential(a));
    if (lhs == rhs) return std::nullopt;
    return describe_mismatch(a.str(), lhs.str(), rhs.str());
  });
  add("f s = 0", monos.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Form a = mono_form(i);
    const Cochain v = project_f(s_operator(a));
    if (v.is_zero()) return std::nullopt;
    return describe_mismatch(a.str(), v.str(), "0");
  });
  add("s s = 0", monos.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Form a = mono_form(i);
    const Form v = s_operator(s_operator(a));
    if (v.is_zero()) return std::nullopt;
    return describe_mismatch(a.str(), v.str(), "0");
  });
  add("s g = 0", faces.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Form v = s_operator(elementary_form(faces[i], dim));
    if (v.is_zero()) return std::nullopt;
    return describe_mismatch("face " + face_str(faces[i]), v.str(), "0");
  });
  add("s(1) = 0", 1, [&](std::size_t) -> std::optional<std::string> {
    const Form v = s_operator(Form::constant(dim, 1));
    if (v.is_zero()) return std::nullopt;
    return describe_mismatch("1", v.str(), "0");
  });
  for (int vertex = 0; vertex <= dim; ++vertex) {
    add("1 - eval_" + std::to_string(vertex) + " = dh^" + std::to_string(vertex) + " + h^" +
            std::to_string(vertex) + "d",
        monos.size(), [&, vertex](std::size_t i) -> std::optional<std::string> {
          const Form a = mono_form(i);
          const Form lhs = a - Form::constant(dim, vertex_evaluate(a, vertex));
          const Form rhs = differential(h_operator(a, vertex)) + h_operator(differential(a), vertex);
          if (lhs == rhs) return std::nullopt;
          return describe_mismatch(a.str(), lhs.str(), rhs.str());
        });
  }
  return report;
}

}  // namespace cinf
