#include "cinf/io.hpp"

#include <algorithm>
#include <sstream>

namespace cinf {

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string sign_str(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

}  // namespace

std::string interval_word_label(const std::string& word) {
  std::string out = "m_" + std::to_string(word.size()) + "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += word[i] == 't' ? "t" : "dt";
  }
  return out + ")";
}

Json to_json(const ContractionReport& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["max_poly_degree"] = r.poly_degree_bound;
  j["passed"] = r.all_passed();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["basis_size"] = c.basis_size;
    e["passed"] = c.passed;
    if (c.counterexample) e["counterexample"] = *c.counterexample;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

std::string to_text(const ContractionReport& r) {
  std::ostringstream os;
  os << "Contraction identities on forms of the " << r.dimension << "-simplex, polynomial degree <= "
     << r.poly_degree_bound << "\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << "  " << verdict(c.passed) << "  " << pad(c.name, width) << "  monomials " << c.basis_size << "\n";
    if (c.counterexample) os << "        counterexample: " << *c.counterexample << "\n";
  }
  os << "result: " << verdict(r.all_passed()) << "\n";
  return os.str();
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["title"] = r.title;
  j["passed"] = r.all_passed();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["family"] = c.family;
    e["name"] = c.name;
    e["basis"] = c.basis;
    e["cases"] = c.cases;
    e["passed"] = c.passed;
    if (c.counterexample) e["counterexample"] = *c.counterexample;
    if (c.note) e["note"] = *c.note;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.title << "\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << "  " << verdict(c.passed) << "  " << pad(c.name, width) << "  cases " << c.cases << "\n";
    if (c.counterexample) os << "        counterexample: " << *c.counterexample << "\n";
    if (c.note) os << "        note: " << *c.note << "\n";
  }
  os << "result: " << verdict(r.all_passed()) << "\n";
  return os.str();
}

Json to_json(const IntervalTable& t) {
  Json j;
  j["max_arity"] = t.max_arity;
  j["passed"] = t.all_passed();
  j["products"] = Json::array();
  for (const auto& e : t.entries) {
    Json p;
    p["operation"] = interval_word_label(e.word);
    p["one"] = e.coords.one.str();
    p["t"] = e.coords.t.str();
    p["dt"] = e.coords.dt.str();
    p["value"] = interval_str(e.coords);
    j["products"].push_back(std::move(p));
  }
  j["m2_t_t_is_t"] = t.m2_tt_ok;
  j["other_products_vanish"] = t.vanishing_ok;
  j["unexpected_nonzero"] = t.unexpected_nonzero;
  j["bernoulli"] = Json::array();
  for (const auto& b : t.bernoulli) {
    Json e;
    e["n"] = b.n;
    e["dt_coefficient"] = b.dt_coefficient.str();
    e["bernoulli_over_factorial"] = b.bernoulli_over_factorial.str();
    e["expected_magnitude"] = b.expected_magnitude.str();
    e["magnitude_ok"] = b.magnitude_ok;
    j["bernoulli"].push_back(std::move(e));
  }
  j["ratios"] = Json::array();
  for (const auto& r : t.ratios) {
    Json e;
    e["n"] = r.n;
    e["i"] = r.i;
    e["value"] = r.value.str();
    e["base"] = r.base.str();
    e["magnitude_ok"] = r.magnitude_ok;
    e["observed_sign"] = r.observed_sign;
    e["sign_(-1)^(n-i)"] = r.statement_sign;
    e["sign_(-1)^i"] = r.per_tree_sign;
    j["ratios"].push_back(std::move(e));
  }
  j["findings"] = t.findings;
  return j;
}

std::string to_text(const IntervalTable& t) {
  std::ostringstream os;
  os << "Transferred products on the interval, words over {t, dt} of length 2.." << t.max_arity << "\n";
  std::size_t width = 0;
  for (const auto& e : t.entries) width = std::max(width, interval_word_label(e.word).size());
  for (const auto& e : t.entries)
    os << "  " << pad(interval_word_label(e.word), width) << " = " << interval_str(e.coords) << "\n";
  os << "\n  " << verdict(t.m2_tt_ok) << "  m_2(t,t) = t\n";
  os << "  " << verdict(t.vanishing_ok) << "  all other products vanish, m(..t..) is a multiple of dt\n";
  for (const auto& u : t.unexpected_nonzero) os << "        unexpected: " << u << "\n";
  os << "\n  dt-coefficient c_n of m_{n+1}(t,dt,..,dt)\n";
  os << "        " << pad("n", 3) << pad("c_n", 12) << pad("B_n/n!", 12) << "|B_n|/n!\n";
  for (const auto& b : t.bernoulli)
    os << "  " << verdict(b.magnitude_ok) << "  " << pad(std::to_string(b.n), 3) << pad(b.dt_coefficient.str(), 12)
       << pad(b.bernoulli_over_factorial.str(), 12) << b.expected_magnitude.str() << "\n";
  os << "\n  dt-coefficient v of m_{n+1}(dt^i,t,dt^{n-i}); sign of v / c_n against (-1)^{n-i} and (-1)^i\n";
  os << "        " << pad("n", 3) << pad("i", 3) << pad("v", 12) << pad("sign", 6) << pad("n-i", 6) << "i\n";
  for (const auto& r : t.ratios)
    os << "  " << verdict(r.magnitude_ok) << "  " << pad(std::to_string(r.n), 3) << pad(std::to_string(r.i), 3)
       << pad(r.value.str(), 12) << pad(sign_str(r.observed_sign), 6) << pad(sign_str(r.statement_sign), 6)
       << sign_str(r.per_tree_sign) << "\n";
  os << "\nfindings:\n";
  for (const auto& f : t.findings) os << "  " << f << "\n";
  os << "result: " << verdict(t.all_passed()) << "\n";
  return os.str();
}

Json to_json(const std::vector<PPolynomialRow>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["n"] = r.n;
    e["p_n"] = r.from_recursion.str("t");
    e["closed_form"] = r.closed_form.str("t");
    e["series_coefficient"] = r.from_series.str("t");
    e["b_n"] = r.b_n.str();
    e["b_n_expected"] = r.b_n_expected.str();
    e["passed"] = r.ok();
    j.push_back(std::move(e));
  }
  return j;
}

std::string to_text(const std::vector<PPolynomialRow>& rows) {
  std::ostringstream os;
  os << "p_1 = t, p_n = s(p_{n-1} dt); closed form (B_n(t) - B_n)/n!; b_n = (-1)^{n-1} int p_n\n";
  for (const auto& r : rows) {
    os << "  " << verdict(r.ok()) << "  n=" << pad(std::to_string(r.n), 3) << "b_n = " << pad(r.b_n.str(), 14)
       << "p_n = " << r.from_recursion.str("t") << "\n";
  }
  return os.str();
}

}  // namespace cinf
