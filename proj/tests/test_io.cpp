#include "doctest.h"

#include "cinf/io.hpp"

using namespace cinf;

TEST_CASE("reports serialize rationals as strings") {
  const auto table = interval_product_table(3);
  const Json j = to_json(table);
  CHECK(j["passed"] == true);
  bool saw = false;
  for (const auto& p : j["products"])
    if (p["operation"] == "m_3(t,dt,dt)") {
      saw = true;
      CHECK(p["dt"].is_string());
      CHECK((p["dt"] == "1/12" || p["dt"] == "-1/12"));
    }
  CHECK(saw);
  CHECK(to_text(table).find("m_2(t,t)") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const auto a = to_json(check_contraction(1, 2)).dump();
  const auto b = to_json(check_contraction(1, 2)).dump();
  CHECK(a == b);
  const SimplexContraction ctx(1);
  TransferEngine e1(ctx), e2(ctx);
  CHECK(to_text(check_a_infinity(e1, 3)) == to_text(check_a_infinity(e2, 3)));
}

TEST_CASE("labels") {
  CHECK(interval_word_label("tdd") == "m_3(t,dt,dt)");
  CHECK(to_json(p_polynomial_report(2))[1]["p_n"] == UniPoly({0, Rational(-1, 2), Rational(1, 2)}).str("t"));
}
