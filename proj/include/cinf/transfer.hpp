#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cinf/cochains.hpp"
#include "cinf/contraction.hpp"
#include "cinf/forms.hpp"
#include "cinf/tensor.hpp"
#include "cinf/unipoly.hpp"

namespace cinf {

using BasisWord = std::vector<int>;

// Transferred operations m_n^B and the morphism G_n along a SimplexContraction, evaluated by
// the inductive formula
//   m_n = sum_k sum_{n_1+..+n_k=n} f m_k^A (G_{n_1} x .. x G_{n_k}),   G_n likewise with H,
// memoized per basis word. One engine per sweep; not safe for concurrent use.
class TransferEngine {
 public:
  explicit TransferEngine(const SimplexContraction& ctx, SignRule rule = SignRule::shifted);

  const SimplexContraction& contraction() const { return *ctx_; }
  SignRule sign_rule() const { return rule_; }
  int sign_degree_of(int basis_index) const { return sign_degree(ctx_->basis_degree(basis_index), rule_); }

  const Form& G(const BasisWord& word);
  const Cochain& m(const BasisWord& word);

  Cochain transferred_m(const std::vector<Cochain>& inputs);
  Form morphism_G(const std::vector<Cochain>& inputs);
  // Direct sum over planar trees; an independent route to transferred_m.
  Cochain transferred_m_trees(const std::vector<Cochain>& inputs) const;
  Form morphism_G_trees(const std::vector<Cochain>& inputs) const;

  std::size_t memo_size() const { return g_memo_.size() + m_memo_.size(); }

 private:
  Form product_sum(const BasisWord& word);

  const SimplexContraction* ctx_;
  SignRule rule_;
  std::map<BasisWord, Form> g_memo_;
  std::map<BasisWord, Cochain> m_memo_;
};

struct RelationCheck {
  std::string family;  // e.g. "a-infinity", "morphism", "C-infinity", "unital"
  std::string name;    // the specific relation, e.g. "A-infinity relation n=3"
  std::string basis;
  std::size_t cases = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
  std::optional<std::string> note;  // extra evidence, e.g. an exhibited witness
};

struct VerificationReport {
  std::string title;
  std::vector<RelationCheck> checks;
  bool all_passed() const;
};

// All words of the given length over basis indices 0..basis_size-1, lexicographic.
std::vector<BasisWord> all_words(std::size_t basis_size, int length);
std::string basis_word_str(const SimplexContraction& ctx, const BasisWord& word);

// sum_{k,j} +-m(1^j x m_k x 1^{n-j-k}) = 0 for n = 1..max_arity on every basis word.
VerificationReport check_a_infinity(TransferEngine& engine, int max_arity);
// Morphism relations for G: sum m^A(G x .. x G) = sum +-G(1^j x m_k x 1^{n-j-k}), both sides as forms.
VerificationReport check_morphism(TransferEngine& engine, int max_arity);
// m_n and G_n on every u sh v with |u| + |v| = n, 2 <= n <= max_arity.
VerificationReport check_c_infinity(TransferEngine& engine, int max_arity);
// Unit e_B = f(1): unit laws for m_1, m_2, vanishing of higher m_n and G_n on words containing e_B.
VerificationReport check_unital(TransferEngine& engine, int max_arity);

// ---- interval ----

struct IntervalEntry {
  std::string word;  // letters 't' and 'd' (for dt)
  Cochain value{1};
  IntervalCoords coords;
};

struct BernoulliRow {
  int n = 0;
  Rational dt_coefficient;  // of m_{n+1}(t, dt, ..., dt)
  Rational expected_magnitude;  // |B_n| / n!
  Rational bernoulli_over_factorial;  // B_n / n!
  bool magnitude_ok = false;
};

struct RatioRow {
  int n = 0;
  int i = 0;  // number of dt before t
  Rational value;  // dt-coefficient of m_{n+1}(dt^i, t, dt^{n-i})
  Rational base;   // dt-coefficient of m_{n+1}(t, dt^n)
  bool magnitude_ok = false;  // |value| == C(n,i) |base|
  int observed_sign = 0;      // sign of value/base, 0 when base is 0
  int statement_sign = 0;     // (-1)^{n-i}
  int per_tree_sign = 0;      // (-1)^i
};

struct IntervalTable {
  int max_arity = 0;
  std::vector<IntervalEntry> entries;
  bool m2_tt_ok = false;
  bool vanishing_ok = false;
  std::vector<std::string> unexpected_nonzero;
  std::vector<BernoulliRow> bernoulli;
  std::vector<RatioRow> ratios;
  std::vector<std::string> findings;
  bool all_passed() const;
};

IntervalTable interval_product_table(int max_arity);

struct PPolynomialRow {
  int n = 0;
  UniPoly from_recursion;   // p_n = s(p_{n-1} dt)
  UniPoly closed_form;      // (B_n(t) - B_n)/n!
  UniPoly from_series;      // coefficient of z^n in z (e^{zt}-1)/(e^z-1)
  Rational b_n;             // (-1)^{n-1} int_0^1 p_n
  Rational b_n_expected;    // (-1)^n B_n / n!
  bool ok() const { return from_recursion == closed_form && from_series == closed_form && b_n == b_n_expected; }
};

// p_1 = t, p_n = s(p_{n-1} dt) on the 1-simplex.
std::vector<UniPoly> p_polynomial_sequence(int n_max);
std::vector<PPolynomialRow> p_polynomial_report(int n_max);

// Conversions between polynomials in t and 0-forms on the 1-simplex.
Form unipoly_to_form(const UniPoly& p);
UniPoly form_to_unipoly(const Form& a);

}  // namespace cinf
