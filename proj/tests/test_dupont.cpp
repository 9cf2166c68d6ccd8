#include "doctest.h"

#include "cinf/cochains.hpp"
#include "cinf/dupont.hpp"
#include "cinf/forms.hpp"

using namespace cinf;

TEST_CASE("h on the interval") {
  CHECK(h_operator(Form::parse(1, "dt1"), 0) == Form::parse(1, "t1"));
  CHECK(h_operator(Form::parse(1, "t1^2"), 0).is_zero());
  CHECK(h_operator(Form::parse(1, "dt1"), 1) == Form::parse(1, "t1 - 1"));
}

TEST_CASE("s and H examples") {
  CHECK(s_operator(Form::parse(1, "t1 dt1")) == Form::parse(1, "1/2 t1^2 - 1/2 t1"));
  CHECK(homotopy_H(Form::parse(1, "t1 dt1")) == Form::parse(1, "1/2 t1 - 1/2 t1^2"));
  CHECK(s_operator(Form::parse(1, "dt1")).is_zero());
  for (int n = 0; n <= 3; ++n) {
    CHECK(s_operator(Form::constant(n, 1)).is_zero());
    CHECK(homotopy_H(Form::constant(n, 1)).is_zero());
    for (const auto& f : simplex_faces(n)) CHECK(homotopy_H(elementary_form(f, n)).is_zero());
  }
}

TEST_CASE("s on t^k dt") {
  for (unsigned k = 0; k <= 10; ++k) {
    const Form in = Form::monomial(1, FormMonomial{{k}, 1U});
    Form out(1);
    out.add_term(FormMonomial{{k + 1}, 0U}, Rational(1, k + 1));
    out.add_term(FormMonomial{{1}, 0U}, -Rational(1, k + 1));
    CHECK(s_operator(in) == out);
  }
}

TEST_CASE("Poincare identity for each vertex") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : monomial_basis(n, 3)) {
      const Form a = Form::monomial(n, m);
      for (int i = 0; i <= n; ++i) {
        Form lhs = a;
        if (a.homogeneous_degree() == 0) lhs -= Form::constant(n, vertex_evaluate(a, i));
        CHECK(lhs == differential(h_operator(a, i)) + h_operator(differential(a), i));
      }
    }
}

TEST_CASE("h commutes with faces through the vertex") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& face : simplex_faces(n)) {
      if (face.size() < 2) continue;
      for (const auto& m : monomial_basis(n, 3)) {
        const Form a = Form::monomial(n, m);
        for (std::size_t local = 0; local < face.size(); ++local) {
          const int i = face[local];
          CHECK(face_restrict(h_operator(a, i), face) ==
                h_operator(face_restrict(a, face), static_cast<int>(local)));
        }
      }
    }
}

TEST_CASE("contraction batteries") {
  const std::pair<int, unsigned> cases[] = {{0, 1}, {1, 6}, {2, 4}};
  for (auto [n, d] : cases) {
    const auto report = check_contraction(n, d);
    for (const auto& c : report.checks) {
      INFO(n, " ", c.name, " ", c.counterexample.value_or(""));
      CHECK(c.passed);
    }
    CHECK(report.all_passed());
  }
}
