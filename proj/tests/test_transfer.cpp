#include "doctest.h"

#include "cinf/bernoulli.hpp"
#include "cinf/transfer.hpp"

using namespace cinf;

namespace {

void require_pass(const VerificationReport& r) {
  for (const auto& c : r.checks) {
    INFO(r.title, ": ", c.name, " ", c.counterexample.value_or(""));
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("low arity operations on the interval") {
  const SimplexContraction ctx(1);
  TransferEngine engine(ctx);
  const Cochain v0 = Cochain::indicator(1, {0});
  const Cochain t = Cochain::indicator(1, {1});
  const Cochain dt = Cochain::indicator(1, {0, 1});
  CHECK(engine.transferred_m({v0}) == -dt);
  CHECK(engine.transferred_m({t, t}) == t);
  const Cochain m3 = engine.transferred_m({t, dt, dt});
  CHECK((m3 == dt * Rational(1, 12) || m3 == dt * Rational(-1, 12)));
  CHECK(engine.morphism_G({dt}) == Form::parse(1, "dt1"));
  CHECK(engine.morphism_G({t, t}).is_zero());
  const Form half = Form::parse(1, "1/2 t1^2 - 1/2 t1");
  const Form g2 = engine.morphism_G({t, dt});
  CHECK((g2 == half || g2 == -half));
  CHECK_THROWS(engine.transferred_m({}));
}

TEST_CASE("recursion and tree sum agree") {
  for (int dim = 1; dim <= 2; ++dim) {
    const SimplexContraction ctx(dim);
    TransferEngine engine(ctx);
    const int max_n = dim == 1 ? 5 : 3;
    for (int n = 2; n <= max_n; ++n)
      for (const auto& w : all_words(ctx.basis_size(), n)) {
        std::vector<Cochain> slots;
        for (int idx : w) slots.push_back(ctx.basis_element(idx));
        INFO(basis_word_str(ctx, w));
        CHECK(engine.transferred_m_trees(slots) == engine.m(w));
        if (n <= 3) CHECK(engine.morphism_G_trees(slots) == engine.G(w));
      }
  }
}

TEST_CASE("transferred structure on the interval") {
  const SimplexContraction ctx(1);
  TransferEngine engine(ctx);
  require_pass(check_a_infinity(engine, 4));
  require_pass(check_morphism(engine, 3));
  require_pass(check_c_infinity(engine, 4));
  require_pass(check_unital(engine, 4));
}

TEST_CASE("transferred structure on the triangle, low arity") {
  const SimplexContraction ctx(2);
  TransferEngine engine(ctx);
  require_pass(check_a_infinity(engine, 2));
  require_pass(check_c_infinity(engine, 2));
  require_pass(check_unital(engine, 3));
}

TEST_CASE("unit on the interval") {
  const SimplexContraction ctx(1);
  TransferEngine engine(ctx);
  const Cochain e = ctx.unit_B();
  CHECK(e == Cochain::indicator(1, {0}) + Cochain::indicator(1, {1}));
  CHECK(engine.transferred_m({e, Cochain::indicator(1, {1})}) == Cochain::indicator(1, {1}));
  for (const auto& w : all_words(ctx.basis_size(), 2))
    CHECK(engine.transferred_m({e, ctx.basis_element(w[0]), ctx.basis_element(w[1])}).is_zero());
}

TEST_CASE("wrong sign rule is detected") {
  const SimplexContraction ctx(1);
  TransferEngine engine(ctx, SignRule::unshifted);
  CHECK_FALSE(check_a_infinity(engine, 3).all_passed());
  CHECK_FALSE(check_c_infinity(engine, 3).all_passed());
}

TEST_CASE("interval table") {
  const IntervalTable table = interval_product_table(5);
  CHECK(table.m2_tt_ok);
  CHECK(table.vanishing_ok);
  CHECK(table.all_passed());
  for (const auto& e : table.entries)
    if (e.word == "ttd") CHECK(e.value.is_zero());
  for (const auto& row : table.bernoulli) {
    const Rational expected = (bernoulli_number(row.n) / Rational(factorial(row.n))).abs();
    CHECK(row.dt_coefficient.abs() == expected);
    if (row.n == 2) CHECK(row.dt_coefficient.abs() == Rational(1, 12));
    if (row.n == 3) CHECK(row.dt_coefficient.is_zero());
  }
  CHECK(table.ratios.size() == 2 + 3 + 4 + 5);
  CHECK_THROWS(interval_product_table(1));
}

TEST_CASE("p polynomials") {
  const auto ps = p_polynomial_sequence(3);
  CHECK(ps[0] == UniPoly::monomial(1));
  CHECK(ps[1] == UniPoly({0, Rational(-1, 2), Rational(1, 2)}));
  for (const auto& row : p_polynomial_report(8)) {
    INFO(row.n);
    CHECK(row.from_recursion == row.closed_form);
    CHECK(row.from_series == row.closed_form);
    CHECK(row.b_n == row.b_n_expected);
  }
  const auto rows = p_polynomial_report(2);
  // integral of p_2 is -1/12, so b_2 = 1/12 = B_2 / 2!.
  CHECK(rows[1].from_recursion.integrate_unit() == Rational(-1, 12));
  CHECK(rows[1].b_n == Rational(1, 12));
}
