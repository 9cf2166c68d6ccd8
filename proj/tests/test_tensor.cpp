#include <algorithm>

#include "doctest.h"

#include "cinf/tensor.hpp"

using namespace cinf;

namespace {

Letter L(const char* name, int degree) { return Letter{name, degree}; }

Rational coeff(const TensorSum& s, const Word& w) {
  auto it = s.find(w);
  return it == s.end() ? Rational(0) : it->second;
}

// Every map from letters to degrees in {-1, 0, 1}.
std::vector<Word> alphabets(int letters) {
  std::vector<Word> out;
  int total = 1;
  for (int i = 0; i < letters; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    Word w;
    int c = code;
    for (int i = 0; i < letters; ++i) {
      w.push_back(Letter{std::string(1, static_cast<char>('a' + i)), c % 3 - 1});
      c /= 3;
    }
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("koszul sign") {
  const int par[] = {0, 1};
  const int odd[] = {1, 0};
  const int even[] = {0, 0};
  CHECK(koszul_sign(par, odd) == -1);
  CHECK(koszul_sign(par, even) == 1);
  const int par2[] = {1, 0};
  CHECK(koszul_sign(par2, odd) == 1);
  const int none[] = {0, 0};
  CHECK(koszul_sign(none, odd) == 1);
}

TEST_CASE("koszul_apply") {
  std::vector<SlotOp<int, int>> ops{{[](const int& x) { return x; }, 0}, {[](const int& x) { return 10 * x; }, 1}};
  std::vector<Homog<int>> word{{3, 1}, {4, 0}};
  auto out = koszul_apply<int, int>(ops, word);
  CHECK(out.sign == -1);
  CHECK(out.values == std::vector<int>{3, 40});
  std::swap(ops[0], ops[1]);
  out = koszul_apply<int, int>(ops, word);
  CHECK(out.sign == 1);
  CHECK_THROWS(koszul_apply<int, int>(std::span(ops).first(1), word));
}

TEST_CASE("koszul_apply composes") {
  // (phi1 x phi2)(psi1 x psi2) = (-1)^{|phi2||psi1|} (phi1 psi1 x phi2 psi2)
  for (int p1 = 0; p1 < 2; ++p1)
    for (int p2 = 0; p2 < 2; ++p2)
      for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
          for (int d1 = -1; d1 <= 1; ++d1)
            for (int d2 = -1; d2 <= 1; ++d2) {
              const int psi[] = {q1, q2}, phi[] = {p1, p2}, comp[] = {(p1 + q1) % 2, (p2 + q2) % 2};
              const int deg[] = {d1, d2};
              const int moved[] = {d1 + q1, d2 + q2};
              const int two_step = koszul_sign(psi, deg) * koszul_sign(phi, moved);
              const int direct = koszul_sign(comp, deg) * (((p2 * q1) % 2 == 0) ? 1 : -1);
              CHECK(two_step == direct);
            }
}

TEST_CASE("shuffle of small words") {
  for (const auto& abc : alphabets(3)) {
    const Letter a1 = abc[0], a2 = abc[1], a3 = abc[2];
    const TensorSum s = shuffle(Word{a1, a2}, Word{a3});
    const int e2 = (a2.degree * a3.degree) % 2 == 0 ? 1 : -1;
    const int e3 = ((a1.degree + a2.degree) * a3.degree) % 2 == 0 ? 1 : -1;
    CHECK(coeff(s, {a1, a2, a3}) == Rational(1));
    CHECK(coeff(s, {a1, a3, a2}) == Rational(e2));
    CHECK(coeff(s, {a3, a1, a2}) == Rational(e3));
    CHECK(s.size() == 3);
  }
  const TensorSum ab = shuffle(Word{L("a", 1)}, Word{L("b", 1)});
  CHECK(coeff(ab, {L("a", 1), L("b", 1)}) == Rational(1));
  CHECK(coeff(ab, {L("b", 1), L("a", 1)}) == Rational(-1));
  const Word u{L("a", 0), L("b", 0)}, v{L("c", 0), L("d", 0)};
  CHECK(shuffle_terms<Letter>(u, v, [](const Letter& l) { return l.degree; }).size() == 6);
}

TEST_CASE("shuffle is graded commutative and associative") {
  for (const auto& abcd : alphabets(4)) {
    const Word u{abcd[0], abcd[1]}, v{abcd[2]}, w{abcd[3]};
    for (const auto& [x, y] : {std::pair{u, v}, std::pair{v, w}, std::pair{Word{abcd[0]}, Word{abcd[1], abcd[2], abcd[3]}}}) {
      TensorSum rev = shuffle(y, x);
      const int sign = (word_degree(x) * word_degree(y)) % 2 == 0 ? 1 : -1;
      for (auto& [word, c] : rev) c *= Rational(sign);
      CHECK(shuffle(x, y) == rev);
    }
    TensorSum uu;
    add_to(uu, u, 1);
    TensorSum vv;
    add_to(vv, v, 1);
    TensorSum ww;
    add_to(ww, w, 1);
    CHECK(shuffle(shuffle(uu, vv), ww) == shuffle(uu, shuffle(vv, ww)));
  }
}

TEST_CASE("deconcatenations") {
  const Letter a = L("a", 0), b = L("b", 1), c = L("c", -1);
  CHECK(deconcatenations({a, b}, 2) == std::vector<SlotTuple>{{{a}, {b}}});
  CHECK(deconcatenations({a, b, c}, 2) == std::vector<SlotTuple>{{{a}, {b, c}}, {{a, b}, {c}}});
  CHECK(deconcatenations({a, b, c}, 3) == std::vector<SlotTuple>{{{a}, {b}, {c}}});
  CHECK_THROWS_AS(deconcatenations({a}, 2), std::out_of_range);
  CHECK(compositions(4, 2) == std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}});
}

TEST_CASE("shuffle span membership examples") {
  const Letter a = L("a", 0), b = L("b", 1), c = L("c", 0);
  TensorSum x;
  add_to(x, {a}, 1);
  TensorSum y;
  add_to(y, {b}, 1);
  CHECK(shuffle_span_membership(nabla(shuffle(x, y), 2)));
  TensorSum ab;
  add_to(ab, {a, b}, 1);
  TensorSum cc;
  add_to(cc, {c}, 1);
  CHECK(shuffle_span_membership(nabla(shuffle(ab, cc), 2)));
  SlotSum generic;
  add_to(generic, SlotTuple{{a}, {b}}, 1);
  CHECK_FALSE(shuffle_span_membership(generic));
}

TEST_CASE("nabla of shuffles lies in the span, total length <= 4") {
  // Exhaustive over splits u|v of the alphabet and all degree assignments; the acceptance
  // binary runs the same sweep, this keeps a smaller slice here.
  for (int total = 2; total <= 3; ++total)
    for (const auto& letters : alphabets(total))
      for (int p = 1; p < total; ++p) {
        TensorSum u, v;
        add_to(u, Word(letters.begin(), letters.begin() + p), 1);
        add_to(v, Word(letters.begin() + p, letters.end()), 1);
        const TensorSum s = shuffle(u, v);
        for (int k = 1; k <= std::min(total, 3); ++k) CHECK(shuffle_span_membership(nabla(s, k)));
      }
}
