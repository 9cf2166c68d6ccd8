#include "cinf/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cinf {

int koszul_sign(std::span<const int> op_parities, std::span<const int> degrees) {
  if (op_parities.size() != degrees.size()) throw std::invalid_argument("koszul_sign: arity mismatch");
  int passed_degree = 0;
  int exponent = 0;
  for (std::size_t j = 0; j < op_parities.size(); ++j) {
    exponent += (op_parities[j] & 1) * (passed_degree & 1);
    passed_degree += degrees[j];
  }
  return (exponent % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 1 || n < k) return out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int slots) {
    if (slots == 1) {
      parts.push_back(remaining);
      out.push_back(parts);
      parts.pop_back();
      return;
    }
    for (int first = 1; first <= remaining - (slots - 1); ++first) {
      parts.push_back(first);
      rec(remaining - first, slots - 1);
      parts.pop_back();
    }
  };
  rec(n, k);
  return out;
}

void add_to(TensorSum& sum, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = sum.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) sum.erase(it);
  }
}

void add_to(SlotSum& sum, const SlotTuple& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = sum.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) sum.erase(it);
  }
}

int word_degree(const Word& w) {
  int d = 0;
  for (const auto& l : w) d += l.degree;
  return d;
}

std::string word_str(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].name + ":" + std::to_string(w[i].degree);
  }
  return out + "]";
}

std::string slot_tuple_str(const SlotTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += " (x) ";
    out += word_str(t[i]);
  }
  return out;
}

TensorSum shuffle(const Word& u, const Word& v) {
  TensorSum out;
  for (auto& [w, sign] :
       shuffle_terms<Letter>(u, v, [](const Letter& l) { return l.degree; }))
    add_to(out, w, Rational(sign));
  return out;
}

TensorSum shuffle(const TensorSum& x, const TensorSum& y) {
  TensorSum out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y)
      for (const auto& [w, c] : shuffle(u, v)) add_to(out, w, cu * cv * c);
  return out;
}

std::vector<SlotTuple> deconcatenations(const Word& word, int k) {
  const int n = static_cast<int>(word.size());
  if (k < 1 || k > n) throw std::out_of_range("deconcatenations: k out of range");
  std::vector<SlotTuple> out;
  for (const auto& comp : compositions(n, k)) {
    SlotTuple t;
    int start = 0;
    for (int len : comp) {
      t.emplace_back(word.begin() + start, word.begin() + start + len);
      start += len;
    }
    out.push_back(std::move(t));
  }
  return out;
}

SlotSum nabla(const TensorSum& x, int k) {
  SlotSum out;
  for (const auto& [w, c] : x) {
    if (static_cast<int>(w.size()) < k) continue;
    for (const auto& t : deconcatenations(w, k)) add_to(out, t, c);
  }
  return out;
}

SlotSum slot_shuffle(const SlotTuple& x, const SlotTuple& y) {
  SlotSum out;
  for (auto& [t, sign] : shuffle_terms<Word>(x, y, [](const Word& w) { return word_degree(w); }))
    add_to(out, t, Rational(sign));
  return out;
}

namespace {

// Row-echelon basis of sparse rational vectors; each row is keyed by its smallest entry.
class SparseEchelon {
 public:
  // Reduces v against the basis; returns the remainder.
  SlotSum reduce(SlotSum v) const {
    SlotSum remainder;
    while (!v.empty()) {
      auto lead = v.begin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) {
        remainder.insert(*lead);
        v.erase(lead);
        continue;
      }
      // every other key of the row is larger than its pivot
      const Rational factor = lead->second;
      for (const auto& [k, c] : row->second) add_to(v, k, -factor * c);
    }
    return remainder;
  }

  void insert(SlotSum v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    const Rational lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    const SlotTuple pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
  }

 private:
  std::map<SlotTuple, SlotSum> rows_;
};

std::vector<Letter> sorted_letters(const SlotTuple& t) {
  std::vector<Letter> out;
  for (const auto& w : t) out.insert(out.end(), w.begin(), w.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Generators of the target subspace restricted to tuples using exactly `letters`.
void add_generators(const std::vector<Letter>& letters, int k, SparseEchelon& basis) {
  std::vector<Letter> arrangement = letters;
  const int n = static_cast<int>(letters.size());
  const auto comps = compositions(n, k);
  do {
    for (const auto& comp : comps) {
      SlotTuple t;
      int start = 0;
      for (int len : comp) {
        t.emplace_back(arrangement.begin() + start, arrangement.begin() + start + len);
        start += len;
      }
      // shuffles in T(TA): first p slots against the rest
      for (int p = 1; p < k; ++p) {
        const SlotTuple x(t.begin(), t.begin() + p);
        const SlotTuple y(t.begin() + p, t.end());
        basis.insert(slot_shuffle(x, y));
      }
      // one slot replaced by a shuffle of two nonempty words
      for (int j = 0; j < k; ++j) {
        const Word& w = t[j];
        for (std::size_t cut = 1; cut < w.size(); ++cut) {
          const Word left(w.begin(), w.begin() + static_cast<long>(cut));
          const Word right(w.begin() + static_cast<long>(cut), w.end());
          SlotSum gen;
          for (const auto& [sw, c] : shuffle(left, right)) {
            SlotTuple copy = t;
            copy[j] = sw;
            add_to(gen, copy, c);
          }
          basis.insert(std::move(gen));
        }
      }
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
}

}  // namespace

bool shuffle_span_membership(const SlotSum& x) {
  if (x.empty()) return true;
  const int k = static_cast<int>(x.begin()->first.size());
  std::map<std::vector<Letter>, SlotSum> by_content;
  for (const auto& [t, c] : x) {
    if (static_cast<int>(t.size()) != k) throw std::invalid_argument("membership: mixed tensor lengths");
    std::size_t total = 0;
    for (const auto& w : t) {
      if (w.empty()) throw std::invalid_argument("membership: empty word in a slot");
      total += w.size();
    }
    if (total > 5) throw std::invalid_argument("membership: instance too large (more than 5 letters)");
    add_to(by_content[sorted_letters(t)], t, c);
  }
  for (const auto& [letters, part] : by_content) {
    SparseEchelon basis;
    add_generators(letters, k, basis);
    if (!basis.reduce(part).empty()) return false;
  }
  return true;
}

}  // namespace cinf
