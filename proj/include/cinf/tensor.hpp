#pragma once

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cinf/rational.hpp"

namespace cinf {

// Which degree feeds the sign computations. `shifted` (cochain/form degree - 1) is the
// working convention; `unshifted` exists only to demonstrate that the identity checks detect
// a wrong sign rule.
enum class SignRule { shifted, unshifted };

inline int sign_degree(int shifted_degree, SignRule rule) {
  return rule == SignRule::shifted ? shifted_degree : shifted_degree + 1;
}

// (-1)^{sum_{i<j} parity_j * degree_i}: the sign picked up by (phi_1 x ... x phi_k)(a_1 x ... x a_k).
int koszul_sign(std::span<const int> op_parities, std::span<const int> degrees);

// Homogeneous element with the degree used for signs.
template <class T>
struct Homog {
  T carrier;
  int degree = 0;
};

template <class In, class Out>
struct SlotOp {
  std::function<Out(const In&)> apply;
  int parity = 0;
};

template <class Out>
struct SignedTuple {
  int sign = 1;
  std::vector<Out> values;
};

template <class In, class Out>
SignedTuple<Out> koszul_apply(std::span<const SlotOp<In, Out>> ops, std::span<const Homog<In>> word) {
  if (ops.size() != word.size()) throw std::invalid_argument("koszul_apply: arity mismatch");
  std::vector<int> parities, degrees;
  parities.reserve(ops.size());
  degrees.reserve(word.size());
  for (const auto& op : ops) parities.push_back(op.parity);
  for (const auto& a : word) degrees.push_back(a.degree);
  SignedTuple<Out> out;
  out.sign = koszul_sign(parities, degrees);
  out.values.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) out.values.push_back(ops[i].apply(word[i].carrier));
  return out;
}

// All interleavings of u and v with sign (-1)^{eps(I,J)}, eps = sum over (u letter placed after
// v letter) of deg(u letter) * deg(v letter). Letters are opaque; `degree_of` supplies degrees.
template <class L, class DegreeOf>
std::vector<std::pair<std::vector<L>, int>> shuffle_terms(std::span<const L> u, std::span<const L> v,
                                                          DegreeOf degree_of) {
  std::vector<std::pair<std::vector<L>, int>> out;
  std::vector<int> u_suffix_degree(u.size() + 1, 0);
  for (std::size_t i = u.size(); i-- > 0;) u_suffix_degree[i] = u_suffix_degree[i + 1] + degree_of(u[i]);
  std::vector<L> current;
  current.reserve(u.size() + v.size());
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int eps) {
    if (i == u.size() && j == v.size()) {
      out.emplace_back(current, (eps % 2 == 0) ? 1 : -1);
      return;
    }
    if (i < u.size()) {
      current.push_back(u[i]);
      rec(i + 1, j, eps);
      current.pop_back();
    }
    if (j < v.size()) {
      current.push_back(v[j]);
      // v[j] jumps ahead of the remaining u letters
      rec(i, j + 1, eps + ((degree_of(v[j]) * u_suffix_degree[i]) & 1));
      current.pop_back();
    }
  };
  rec(0, 0, 0);
  return out;
}

// Compositions n_1 + ... + n_k = n with n_i > 0, in lexicographic order.
std::vector<std::vector<int>> compositions(int n, int k);

// ---- formal letters ----

struct Letter {
  std::string name;
  int degree = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;
using TensorSum = std::map<Word, Rational>;
// An element of T^k(TA): k words.
using SlotTuple = std::vector<Word>;
using SlotSum = std::map<SlotTuple, Rational>;

void add_to(TensorSum& sum, const Word& w, const Rational& c);
void add_to(SlotSum& sum, const SlotTuple& w, const Rational& c);

int word_degree(const Word& w);
std::string word_str(const Word& w);
std::string slot_tuple_str(const SlotTuple& t);

TensorSum shuffle(const Word& u, const Word& v);
TensorSum shuffle(const TensorSum& x, const TensorSum& y);

// Splits of `word` into k consecutive nonempty pieces, one per composition.
std::vector<SlotTuple> deconcatenations(const Word& word, int k);
// nabla_k extended linearly; words shorter than k contribute nothing.
SlotSum nabla(const TensorSum& x, int k);

// Shuffle product in T(TA), treating each word as a single letter of degree word_degree.
SlotSum slot_shuffle(const SlotTuple& x, const SlotTuple& y);

// Decides by exact row reduction whether x lies in
//   (shuffles of T(TA) landing in T^k(TA)) + sum_j T^{j-1}(TA) (TA sh TA) T^{k-j}(TA).
// Every tuple in x must have the same k and at most 5 letters in total.
bool shuffle_span_membership(const SlotSum& x);

}  // namespace cinf
