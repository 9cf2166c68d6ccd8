#include "doctest.h"

#include "cinf/cochains.hpp"
#include "cinf/forms.hpp"

using namespace cinf;

TEST_CASE("faces of the simplex") {
  CHECK(simplex_faces(1) == std::vector<Face>{{0}, {1}, {0, 1}});
  CHECK(simplex_faces(2).size() == 7);
  CHECK(simplex_faces(3).size() == 15);
}

TEST_CASE("coboundary") {
  CHECK(coboundary(Cochain::indicator(1, {0})) == Cochain::indicator(1, {0, 1}, -1));
  CHECK(coboundary(Cochain::indicator(1, {0, 1})).is_zero());
  CHECK(coboundary(Cochain::indicator(1, {0}) + Cochain::indicator(1, {1})).is_zero());
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : simplex_faces(n)) CHECK(coboundary(coboundary(Cochain::indicator(n, f))).is_zero());
}

TEST_CASE("cochain validation") {
  Cochain c(2);
  CHECK_THROWS(c.add({1, 0}, 1));
  CHECK_THROWS(c.add({0, 3}, 1));
  c.add({0, 2}, 1);
  c.add({0, 2}, -1);
  CHECK(c.is_zero());
}

TEST_CASE("elementary forms") {
  const std::vector<int> v0{0}, e01{0, 1}, f012{0, 1, 2};
  CHECK(elementary_form(v0, 1) == Form::parse(1, "1 - t1"));
  CHECK(elementary_form(e01, 1) == Form::parse(1, "dt1"));
  const Form expected = Form::parse(2, "2 t0 dt1 dt2 - 2 t1 dt0 dt2 + 2 t2 dt0 dt1");
  CHECK(elementary_form(f012, 2) == expected);
  CHECK(elementary_form(f012, 2) == Form::parse(2, "2 dt1 dt2"));
}

TEST_CASE("f and g on the interval") {
  CHECK(project_f(Form::parse(1, "t1")) == Cochain::indicator(1, {1}));
  CHECK(project_f(Form::parse(1, "dt1")) == Cochain::indicator(1, {0, 1}));
  CHECK(project_f(Form::constant(1, 1)) == Cochain::indicator(1, {0}) + Cochain::indicator(1, {1}));
  CHECK(include_g(Cochain::indicator(1, {0, 1})) == Form::parse(1, "dt1"));
  CHECK(include_g(Cochain::indicator(1, {1})) == Form::parse(1, "t1"));
  CHECK(include_g(Cochain::indicator(1, {0}) + Cochain::indicator(1, {1})) == Form::constant(1, 1));
}

TEST_CASE("f g is the identity") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& f : simplex_faces(n)) {
      const Cochain c = Cochain::indicator(n, f);
      CHECK(project_f(include_g(c)) == c);
    }
}

TEST_CASE("f and g are chain maps") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& m : monomial_basis(n, 5)) {
      const Form a = Form::monomial(n, m);
      CHECK(project_f(differential(a)) == coboundary(project_f(a)));
    }
    for (const auto& f : simplex_faces(n)) {
      const Cochain c = Cochain::indicator(n, f);
      CHECK(differential(include_g(c)) == include_g(coboundary(c)));
    }
  }
}

TEST_CASE("g commutes with restriction to faces") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& c_face : simplex_faces(n))
      for (const auto& face : simplex_faces(n)) {
        const Cochain c = Cochain::indicator(n, c_face);
        CHECK(face_restrict(include_g(c), face) == include_g(restrict_cochain(c, face)));
      }
}

TEST_CASE("interval basis") {
  const Cochain one = Cochain::indicator(1, {0}) + Cochain::indicator(1, {1});
  CHECK(to_interval_basis(one) == IntervalCoords{1, 0, 0});
  CHECK(to_interval_basis(Cochain::indicator(1, {1})) == IntervalCoords{0, 1, 0});
  CHECK(to_interval_basis(Cochain::indicator(1, {0, 1})) == IntervalCoords{0, 0, 1});
  CHECK(from_interval_basis({2, Rational(1, 3), -1}) ==
        Cochain::indicator(1, {0}, 2) + Cochain::indicator(1, {1}, Rational(7, 3)) - Cochain::indicator(1, {0, 1}));
  // f(a) = a(0) 1 + (a(1) - a(0)) t for 0-forms.
  for (const char* text : {"t1^3 - 2 t1 + 5", "7/2", "t1^2", "1 - t1^4"}) {
    const Form a = Form::parse(1, text);
    const Rational a0 = vertex_evaluate(a, 0), a1 = vertex_evaluate(a, 1);
    CHECK(to_interval_basis(project_f(a)) == IntervalCoords{a0, a1 - a0, 0});
  }
}
