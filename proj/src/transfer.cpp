#include "cinf/transfer.hpp"

#include <algorithm>
#include <stdexcept>

#include "cinf/bernoulli.hpp"
#include "cinf/dupont.hpp"
#include "cinf/trees.hpp"

namespace cinf {

TransferEngine::TransferEngine(const SimplexContraction& ctx, SignRule rule) : ctx_(&ctx), rule_(rule) {}

Form TransferEngine::product_sum(const BasisWord& word) {
  const int n = static_cast<int>(word.size());
  Form out(ctx_->dim());
  for (int k = 2; k <= std::min(n, ctx_->max_product_arity()); ++k) {
    for (const auto& comp : compositions(n, k)) {
      std::vector<Form> args;
      std::vector<int> parities(k, 0);  // every G_j has degree 0
      std::vector<int> degrees;
      args.reserve(k);
      int start = 0;
      bool zero = false;
      for (int len : comp) {
        const BasisWord sub(word.begin() + start, word.begin() + start + len);
        int deg = 0;
        for (int idx : sub) deg += sign_degree_of(idx);
        degrees.push_back(deg);
        const Form& value = G(sub);
        if (value.is_zero()) zero = true;
        args.push_back(value);
        start += len;
      }
      if (zero) continue;
      Form term = ctx_->m_A(args);
      if (koszul_sign(parities, degrees) < 0) term = -term;
      out += term;
    }
  }
  return out;
}

const Form& TransferEngine::G(const BasisWord& word) {
  if (word.empty()) throw std::invalid_argument("G: empty word");
  if (auto it = g_memo_.find(word); it != g_memo_.end()) return it->second;
  Form value = word.size() == 1 ? ctx_->g_basis(word[0]) : ctx_->H(product_sum(word));
  return g_memo_.emplace(word, std::move(value)).first->second;
}

const Cochain& TransferEngine::m(const BasisWord& word) {
  if (word.empty()) throw std::invalid_argument("m: empty word");
  if (auto it = m_memo_.find(word); it != m_memo_.end()) return it->second;
  Cochain value =
      word.size() == 1 ? ctx_->d_B(ctx_->basis_element(word[0])) : ctx_->f(product_sum(word));
  return m_memo_.emplace(word, std::move(value)).first->second;
}

Cochain TransferEngine::transferred_m(const std::vector<Cochain>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("transferred_m: empty input");
  Cochain out(ctx_->dim());
  for (const auto& term : expand_inputs(*ctx_, inputs)) out += m(term.word) * term.coeff;
  return out;
}

Form TransferEngine::morphism_G(const std::vector<Cochain>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("morphism_G: empty input");
  Form out(ctx_->dim());
  for (const auto& term : expand_inputs(*ctx_, inputs)) out += G(term.word) * term.coeff;
  return out;
}

Cochain TransferEngine::transferred_m_trees(const std::vector<Cochain>& inputs) const {
  const int n = static_cast<int>(inputs.size());
  if (n == 0) throw std::invalid_argument("transferred_m_trees: empty input");
  if (n == 1) return ctx_->d_B(inputs[0]);
  Cochain out(ctx_->dim());
  for (const auto& tree : enumerate_trees(n)) out += evaluate_tree_m(*ctx_, tree, inputs, rule_);
  return out;
}

Form TransferEngine::morphism_G_trees(const std::vector<Cochain>& inputs) const {
  const int n = static_cast<int>(inputs.size());
  if (n == 0) throw std::invalid_argument("morphism_G_trees: empty input");
  Form out(ctx_->dim());
  for (const auto& tree : enumerate_trees(n)) out += evaluate_tree_G(*ctx_, tree, inputs, rule_);
  return out;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

std::vector<BasisWord> all_words(std::size_t basis_size, int length) {
  std::vector<BasisWord> out{{}};
  for (int l = 0; l < length; ++l) {
    std::vector<BasisWord> next;
    next.reserve(out.size() * basis_size);
    for (const auto& w : out)
      for (std::size_t b = 0; b < basis_size; ++b) {
        auto e = w;
        e.push_back(static_cast<int>(b));
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::string basis_word_str(const SimplexContraction& ctx, const BasisWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += " ";
    out += face_str(ctx.basis()[word[i]]);
  }
  return out;
}

namespace {

std::string basis_label(const SimplexContraction& ctx) { return "N_" + std::to_string(ctx.dim()) + " face basis"; }

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

// Koszul sign of 1^{j} x phi x 1^{rest} with phi odd: (-1)^{deg of the first j letters}.
int prefix_sign(const TransferEngine& engine, const BasisWord& word, int j) {
  std::vector<int> parities(word.size(), 0), degrees;
  parities[j] = 1;
  for (int idx : word) degrees.push_back(engine.sign_degree_of(idx));
  return koszul_sign(parities, degrees);
}

std::vector<Cochain> slots_with_block(const SimplexContraction& ctx, const BasisWord& word, int j, int k,
                                      const Cochain& block) {
  std::vector<Cochain> slots;
  for (int i = 0; i < j; ++i) slots.push_back(ctx.basis_element(word[i]));
  slots.push_back(block);
  for (int i = j + k; i < static_cast<int>(word.size()); ++i) slots.push_back(ctx.basis_element(word[i]));
  return slots;
}

}  // namespace

VerificationReport check_a_infinity(TransferEngine& engine, int max_arity) {
  const SimplexContraction& ctx = engine.contraction();
  VerificationReport report{"A-infinity relations on N_" + std::to_string(ctx.dim()), {}};
  for (int n = 1; n <= max_arity; ++n) {
    RelationCheck check{"a-infinity", "A-infinity relation n=" + std::to_string(n), basis_label(ctx), 0, true, std::nullopt, std::nullopt};
    for (const auto& word : all_words(ctx.basis_size(), n)) {
      ++check.cases;
      Cochain residual(ctx.dim());
      for (int k = 1; k <= n; ++k) {
        for (int j = 0; j + k <= n; ++j) {
          const BasisWord inner(word.begin() + j, word.begin() + j + k);
          const Cochain& block = engine.m(inner);
          if (block.is_zero()) continue;
          Cochain term = engine.transferred_m(slots_with_block(ctx, word, j, k, block));
          if (prefix_sign(engine, word, j) < 0) term = -term;
          residual += term;
        }
      }
      if (!residual.is_zero()) {
        check.passed = false;
        check.counterexample = "word " + basis_word_str(ctx, word) + ": residual " + one_line(residual.str());
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerificationReport check_morphism(TransferEngine& engine, int max_arity) {
  const SimplexContraction& ctx = engine.contraction();
  VerificationReport report{"A-infinity morphism relations for G on N_" + std::to_string(ctx.dim()), {}};
  for (int n = 1; n <= max_arity; ++n) {
    RelationCheck check{"morphism", "morphism relation n=" + std::to_string(n), basis_label(ctx), 0, true, std::nullopt, std::nullopt};
    for (const auto& word : all_words(ctx.basis_size(), n)) {
      ++check.cases;
      Form lhs(ctx.dim());
      lhs += ctx.d_A(engine.G(word));
      for (int k = 2; k <= std::min(n, ctx.max_product_arity()); ++k) {
        for (const auto& comp : compositions(n, k)) {
          std::vector<Form> args;
          std::vector<int> parities(k, 0), degrees;
          int start = 0;
          for (int len : comp) {
            const BasisWord sub(word.begin() + start, word.begin() + start + len);
            int deg = 0;
            for (int idx : sub) deg += engine.sign_degree_of(idx);
            degrees.push_back(deg);
            args.push_back(engine.G(sub));
            start += len;
          }
          Form term = ctx.m_A(args);
          if (koszul_sign(parities, degrees) < 0) term = -term;
          lhs += term;
        }
      }
      Form rhs(ctx.dim());
      for (int k = 1; k <= n; ++k) {
        for (int j = 0; j + k <= n; ++j) {
          const BasisWord inner(word.begin() + j, word.begin() + j + k);
          const Cochain& block = engine.m(inner);
          if (block.is_zero()) continue;
          Form term = engine.morphism_G(slots_with_block(ctx, word, j, k, block));
          if (prefix_sign(engine, word, j) < 0) term = -term;
          rhs += term;
        }
      }
      if (lhs != rhs) {
        check.passed = false;
        check.counterexample =
            "word " + basis_word_str(ctx, word) + ": lhs " + lhs.str() + ", rhs " + rhs.str();
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerificationReport check_c_infinity(TransferEngine& engine, int max_arity) {
  const SimplexContraction& ctx = engine.contraction();
  VerificationReport report{"C-infinity vanishing on shuffles on N_" + std::to_string(ctx.dim()), {}};
  auto degree_of = [&](int idx) { return engine.sign_degree_of(idx); };
  for (int n = 2; n <= max_arity; ++n) {
    RelationCheck m_check{"C-infinity", "m_" + std::to_string(n) + "(u sh v) = 0", basis_label(ctx), 0, true,
                          std::nullopt, std::nullopt};
    RelationCheck g_check{"C-infinity", "G_" + std::to_string(n) + "(u sh v) = 0", basis_label(ctx), 0, true,
                          std::nullopt, std::nullopt};
    for (int p = 1; p < n; ++p) {
      const auto left = all_words(ctx.basis_size(), p);
      const auto right = all_words(ctx.basis_size(), n - p);
      for (const auto& u : left) {
        for (const auto& v : right) {
          ++m_check.cases;
          ++g_check.cases;
          Cochain m_sum(ctx.dim());
          Form g_sum(ctx.dim());
          for (const auto& [w, sign] : shuffle_terms<int>(u, v, degree_of)) {
            m_sum += engine.m(w) * Rational(sign);
            g_sum += engine.G(w) * Rational(sign);
          }
          const std::string label = "u = " + basis_word_str(ctx, u) + ", v = " + basis_word_str(ctx, v);
          if (m_check.passed && !m_sum.is_zero()) {
            m_check.passed = false;
            m_check.counterexample = label + ": " + one_line(m_sum.str());
          }
          if (g_check.passed && !g_sum.is_zero()) {
            g_check.passed = false;
            g_check.counterexample = label + ": " + g_sum.str();
          }
        }
      }
    }
    report.checks.push_back(std::move(m_check));
    report.checks.push_back(std::move(g_check));
  }
  return report;
}

VerificationReport check_unital(TransferEngine& engine, int max_arity) {
  const SimplexContraction& ctx = engine.contraction();
  VerificationReport report{"Unitality of the transferred structure on N_" + std::to_string(ctx.dim()), {}};
  const Cochain unit = ctx.unit_B();
  const std::string basis = basis_label(ctx);

  {
    Cochain expected(ctx.dim());
    for (int v = 0; v <= ctx.dim(); ++v) expected.add({v}, 1);
    RelationCheck c{"unital", "e_B = f(1) = sum of vertex indicators", basis, 1, unit == expected, std::nullopt, std::nullopt};
    if (!c.passed) c.counterexample = one_line(unit.str());
    report.checks.push_back(std::move(c));
  }
  {
    const Form g_unit = ctx.g(unit);
    RelationCheck c{"unital", "G_1(e_B) = 1", basis, 1, g_unit == ctx.unit_A(), std::nullopt, std::nullopt};
    if (!c.passed) c.counterexample = g_unit.str();
    report.checks.push_back(std::move(c));
  }
  {
    const Cochain d_unit = engine.transferred_m({unit});
    RelationCheck c{"unital", "m_1(e_B) = 0", basis, 1, d_unit.is_zero(), std::nullopt, std::nullopt};
    if (!c.passed) c.counterexample = one_line(d_unit.str());
    report.checks.push_back(std::move(c));
  }
  if (max_arity >= 2) {
    RelationCheck left{"unital", "m_2(e_B, b) = b", basis, 0, true, std::nullopt, std::nullopt};
    RelationCheck right{"unital", "(-1)^{|b|+1} m_2(b, e_B) = b", basis, 0, true, std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < ctx.basis_size(); ++i) {
      const Cochain b = ctx.basis_element(static_cast<int>(i));
      ++left.cases;
      ++right.cases;
      const Cochain l = engine.transferred_m({unit, b});
      if (left.passed && l != b) {
        left.passed = false;
        left.counterexample = "b = " + face_str(ctx.basis()[i]) + ": " + one_line(l.str());
      }
      Cochain r = engine.transferred_m({b, unit});
      if ((engine.sign_degree_of(static_cast<int>(i)) + 1) % 2 != 0) r = -r;
      if (right.passed && r != b) {
        right.passed = false;
        right.counterexample = "b = " + face_str(ctx.basis()[i]) + ": " + one_line(r.str());
      }
    }
    report.checks.push_back(std::move(left));
    report.checks.push_back(std::move(right));
  }
  auto vanishing = [&](int n, bool for_m) {
    RelationCheck c{"unital",
                    std::string(for_m ? "m_" : "G_") + std::to_string(n) + " vanishes on words containing e_B",
                    basis, 0, true, std::nullopt, std::nullopt};
    for (int pos = 0; pos < n; ++pos) {
      for (const auto& rest : all_words(ctx.basis_size(), n - 1)) {
        ++c.cases;
        std::vector<Cochain> slots;
        for (int i = 0, r = 0; i < n; ++i)
          slots.push_back(i == pos ? unit : ctx.basis_element(rest[r++]));
        bool zero;
        std::string value;
        if (for_m) {
          const Cochain out = engine.transferred_m(slots);
          zero = out.is_zero();
          value = one_line(out.str());
        } else {
          const Form out = engine.morphism_G(slots);
          zero = out.is_zero();
          value = out.str();
        }
        if (!zero && c.passed) {
          c.passed = false;
          c.counterexample = "e_B at slot " + std::to_string(pos + 1) + ", others " +
                             basis_word_str(ctx, rest) + ": " + value;
        }
      }
    }
    report.checks.push_back(std::move(c));
  };
  for (int n = 2; n <= max_arity; ++n) vanishing(n, false);
  for (int n = 3; n <= max_arity; ++n) vanishing(n, true);
  return report;
}

// ---- interval ----

bool IntervalTable::all_passed() const {
  return m2_tt_ok && vanishing_ok &&
         std::all_of(bernoulli.begin(), bernoulli.end(), [](const BernoulliRow& r) { return r.magnitude_ok; }) &&
         std::all_of(ratios.begin(), ratios.end(), [](const RatioRow& r) { return r.magnitude_ok; });
}

namespace {

int sign_of(const Rational& r) { return r.sign(); }

std::string pow_sign_str(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

}  // namespace

IntervalTable interval_product_table(int max_arity) {
  if (max_arity < 2) throw std::invalid_argument("interval table needs max_arity >= 2");
  const SimplexContraction ctx(1);
  TransferEngine engine(ctx);
  const int t_idx = ctx.basis_index({1});
  const int dt_idx = ctx.basis_index({0, 1});

  IntervalTable table;
  table.max_arity = max_arity;
  table.vanishing_ok = true;
  std::map<std::string, IntervalCoords> by_word;
  for (int len = 2; len <= max_arity; ++len) {
    for (unsigned mask = 0; mask < (1U << len); ++mask) {
      std::string word;
      BasisWord basis_word;
      int t_count = 0;
      for (int j = 0; j < len; ++j) {
        const bool is_t = ((mask >> (len - 1 - j)) & 1U) != 0;
        word += is_t ? 't' : 'd';
        basis_word.push_back(is_t ? t_idx : dt_idx);
        t_count += is_t;
      }
      const Cochain value = engine.m(basis_word);
      const IntervalCoords coords = to_interval_basis(value);
      table.entries.push_back({word, value, coords});
      by_word[word] = coords;

      const bool allowed = word == "tt" || t_count == 1;
      const bool dt_only = coords.one.is_zero() && coords.t.is_zero();
      if ((!allowed && !value.is_zero()) || (t_count == 1 && !dt_only)) {
        table.vanishing_ok = false;
        table.unexpected_nonzero.push_back(word + " -> " + interval_str(coords));
      }
    }
  }
  table.m2_tt_ok = by_word.at("tt") == IntervalCoords{0, 1, 0};

  auto word_for = [](int n, int i) { return std::string(i, 'd') + "t" + std::string(n - i, 'd'); };
  for (int n = 1; n + 1 <= max_arity; ++n) {
    BernoulliRow row;
    row.n = n;
    row.dt_coefficient = by_word.at(word_for(n, 0)).dt;
    const Rational bn = bernoulli_number(n);
    row.bernoulli_over_factorial = bn / Rational(factorial(n));
    row.expected_magnitude = row.bernoulli_over_factorial.abs();
    row.magnitude_ok = row.dt_coefficient.abs() == row.expected_magnitude;
    table.bernoulli.push_back(row);

    for (int i = 0; i <= n; ++i) {
      RatioRow r;
      r.n = n;
      r.i = i;
      r.value = by_word.at(word_for(n, i)).dt;
      r.base = row.dt_coefficient;
      r.magnitude_ok = r.value.abs() == Rational(binomial(n, i)) * r.base.abs();
      r.observed_sign = r.base.is_zero() ? 0 : sign_of(r.value) * sign_of(r.base);
      r.statement_sign = ((n - i) % 2 == 0) ? 1 : -1;
      r.per_tree_sign = (i % 2 == 0) ? 1 : -1;
      table.ratios.push_back(r);
    }
  }

  // Sign findings.
  for (const auto& row : table.bernoulli) {
    if (row.dt_coefficient.is_zero()) {
      table.findings.push_back("n=" + std::to_string(row.n) + ": m_" + std::to_string(row.n + 1) +
                               "(t,dt,...,dt) = 0 and B_n = 0");
      continue;
    }
    const Rational rel = row.dt_coefficient / row.bernoulli_over_factorial;
    table.findings.push_back("n=" + std::to_string(row.n) + ": m_" + std::to_string(row.n + 1) +
                             "(t,dt,...,dt) = " + row.dt_coefficient.str() + " dt; B_n/n! = " +
                             row.bernoulli_over_factorial.str() + "; ratio " + rel.str());
  }
  int statement_agree = 0, per_tree_agree = 0, compared = 0;
  for (const auto& r : table.ratios) {
    if (r.observed_sign == 0) continue;
    ++compared;
    statement_agree += r.observed_sign == r.statement_sign;
    per_tree_agree += r.observed_sign == r.per_tree_sign;
  }
  table.findings.push_back("sign of m_{n+1}(dt^i,t,dt^{n-i}) / m_{n+1}(t,dt^n): matches (-1)^{n-i} in " +
                           std::to_string(statement_agree) + "/" + std::to_string(compared) +
                           " cases, matches (-1)^i in " + std::to_string(per_tree_agree) + "/" +
                           std::to_string(compared) + " cases");
  for (const auto& r : table.ratios) {
    if (r.observed_sign == 0 || r.observed_sign == r.statement_sign) continue;
    table.findings.push_back("  (n,i)=(" + std::to_string(r.n) + "," + std::to_string(r.i) + "): observed " +
                             pow_sign_str(r.observed_sign) + ", (-1)^{n-i} gives " +
                             pow_sign_str(r.statement_sign));
  }
  return table;
}

Form unipoly_to_form(const UniPoly& p) {
  Form out(1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    out.add_term(FormMonomial{{static_cast<unsigned>(k)}, 0}, p.coeffs()[k]);
  return out;
}

UniPoly form_to_unipoly(const Form& a) {
  if (a.dim() != 1) throw std::invalid_argument("form_to_unipoly: expected a form on the 1-simplex");
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : a.terms()) {
    if (m.dt_mask != 0) throw std::invalid_argument("form_to_unipoly: expected a 0-form");
    if (coeffs.size() <= m.exponents[0]) coeffs.resize(m.exponents[0] + 1);
    coeffs[m.exponents[0]] = c;
  }
  return UniPoly(std::move(coeffs));
}

std::vector<UniPoly> p_polynomial_sequence(int n_max) {
  if (n_max < 1) throw std::invalid_argument("p_polynomial_sequence needs n_max >= 1");
  const Form dt = Form::generator(1, Generator::dt, 1);
  std::vector<UniPoly> out{UniPoly::monomial(1)};
  for (int n = 2; n <= n_max; ++n)
    out.push_back(form_to_unipoly(s_operator(wedge(unipoly_to_form(out.back()), dt))));
  return out;
}

std::vector<PPolynomialRow> p_polynomial_report(int n_max) {
  const auto ps = p_polynomial_sequence(n_max);
  const auto series = exp_series_ratio(static_cast<unsigned>(n_max));
  const Form dt = Form::generator(1, Generator::dt, 1);
  std::vector<PPolynomialRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    PPolynomialRow row;
    row.n = n;
    row.from_recursion = ps[n - 1];
    const Rational bn = bernoulli_number(n);
    const Rational inv_fact(BigInt(1), factorial(n));
    row.closed_form = (bernoulli_polynomial(n) - UniPoly::constant(bn)) * inv_fact;
    row.from_series = series[n];
    const Rational integral = integrate_top(wedge(unipoly_to_form(row.from_recursion), dt));
    row.b_n = (n % 2 == 1) ? integral : -integral;
    row.b_n_expected = (n % 2 == 0) ? bn * inv_fact : -bn * inv_fact;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cinf
