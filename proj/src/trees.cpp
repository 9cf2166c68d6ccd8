#include "cinf/trees.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cinf {

PlanarTree PlanarTree::node(std::vector<PlanarTree> children) {
  if (children.size() < 2) throw std::invalid_argument("internal vertices need at least two inputs");
  PlanarTree t;
  t.children_ = std::move(children);
  return t;
}

namespace {

PlanarTree parse_tree(std::string_view text, std::size_t& pos) {
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size()) throw std::invalid_argument("unexpected end of tree text");
  if (text[pos] == '*') {
    ++pos;
    return PlanarTree::leaf();
  }
  if (text[pos] != '(') throw std::invalid_argument("unexpected character in tree text");
  ++pos;
  std::vector<PlanarTree> children;
  for (;;) {
    skip();
    if (pos >= text.size()) throw std::invalid_argument("unbalanced tree text");
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    children.push_back(parse_tree(text, pos));
  }
  return PlanarTree::node(std::move(children));
}

void encode(const PlanarTree& t, std::vector<int>& out) {
  out.push_back(static_cast<int>(t.children().size()));
  for (const auto& c : t.children()) encode(c, out);
}

}  // namespace

PlanarTree PlanarTree::parse(std::string_view text) {
  std::size_t pos = 0;
  PlanarTree t = parse_tree(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw std::invalid_argument("trailing characters after tree");
  return t;
}

int PlanarTree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children_) n += c.leaves();
  return n;
}

int PlanarTree::internal_vertices() const {
  if (is_leaf()) return 0;
  int n = 1;
  for (const auto& c : children_) n += c.internal_vertices();
  return n;
}

bool PlanarTree::is_binary() const {
  if (is_leaf()) return true;
  return children_.size() == 2 && children_[0].is_binary() && children_[1].is_binary();
}

std::vector<int> PlanarTree::encoding() const {
  std::vector<int> out;
  encode(*this, out);
  return out;
}

std::string PlanarTree::str() const {
  if (is_leaf()) return "*";
  std::string out = "(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) out += ' ';
    out += children_[i].str();
  }
  return out + ")";
}

const std::vector<PlanarTree>& enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("trees need at least one tail");
  static std::mutex mu;
  static std::map<int, std::vector<PlanarTree>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<PlanarTree> out;
  if (n == 1) {
    out.push_back(PlanarTree::leaf());
  } else {
    for (int k = 2; k <= n; ++k) {
      for (const auto& comp : compositions(n, k)) {
        std::vector<std::vector<PlanarTree>> partial{{}};
        for (int part : comp) {
          const auto& options = enumerate_trees(part);
          std::vector<std::vector<PlanarTree>> next;
          for (const auto& prefix : partial)
            for (const auto& option : options) {
              auto extended = prefix;
              extended.push_back(option);
              next.push_back(std::move(extended));
            }
          partial = std::move(next);
        }
        for (auto& children : partial) out.push_back(PlanarTree::node(std::move(children)));
      }
    }
    std::sort(out.begin(), out.end());
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(out)).first->second;
}

namespace {

// Internal vertices on the path from tail `position` (0-based) to the root, or -1 if the tail
// is not inside this subtree.
int path_length(const PlanarTree& t, int position) {
  if (t.is_leaf()) return position == 0 ? 0 : -1;
  int offset = 0;
  for (const auto& c : t.children()) {
    const int n = c.leaves();
    if (position < offset + n) {
      const int inner = path_length(c, position - offset);
      return inner < 0 ? -1 : inner + 1;
    }
    offset += n;
  }
  return -1;
}

}  // namespace

std::vector<PlanarTree> path_trees(int leaves, int position) {
  if (position < 1 || position > leaves) throw std::out_of_range("path_trees: position out of range");
  std::vector<PlanarTree> out;
  for (const auto& t : enumerate_trees(leaves))
    if (t.is_binary() && path_length(t, position - 1) == t.internal_vertices()) out.push_back(t);
  return out;
}

PlanarTree tree_from_path_word(std::string_view word) {
  if (word.empty()) return PlanarTree::leaf();
  PlanarTree rest = tree_from_path_word(word.substr(1));
  switch (word.front()) {
    case 'L':
      return PlanarTree::node({std::move(rest), PlanarTree::leaf()});
    case 'R':
      return PlanarTree::node({PlanarTree::leaf(), std::move(rest)});
    default:
      throw std::invalid_argument("path words use only L and R");
  }
}

std::vector<PlanarTree> path_trees_from_words(int leaves, int position) {
  if (position < 1 || position > leaves) throw std::out_of_range("path_trees_from_words: position out of range");
  const int n = leaves - 1;
  std::vector<PlanarTree> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != position - 1) continue;
    std::string word;
    for (int j = 0; j < n; ++j) word += ((mask >> j) & 1U) ? 'R' : 'L';
    out.push_back(tree_from_path_word(word));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string operation_str(const PlanarTree& t, bool at_root, bool root_is_f) {
  if (t.is_leaf()) return "g";
  std::string inner;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) inner += "⊗";
    inner += operation_str(t.children()[i], false, root_is_f);
  }
  const std::string head = std::string(at_root ? (root_is_f ? "f" : "H") : "H") + "∘m_" +
                           std::to_string(t.children().size()) + "∘(" + inner + ")";
  return at_root ? head : "(" + head + ")";
}

struct Evaluated {
  Form value;
  int parity;  // degree of the operator that produced it
  int degree;  // total sign degree of the consumed inputs
};

Evaluated eval_subtree(const SimplexContraction& ctx, const PlanarTree& t, std::span<const int> word,
                       std::size_t& cursor, bool at_root, SignRule rule) {
  if (t.is_leaf()) {
    const int idx = word[cursor++];
    return {ctx.g_basis(idx), 0, sign_degree(ctx.basis_degree(idx), rule)};
  }
  std::vector<Form> values;
  std::vector<int> parities, degrees;
  int parity = 1;  // m_k
  int degree = 0;
  for (const auto& c : t.children()) {
    Evaluated e = eval_subtree(ctx, c, word, cursor, false, rule);
    parity += e.parity;
    degree += e.degree;
    parities.push_back(e.parity);
    degrees.push_back(e.degree);
    values.push_back(std::move(e.value));
  }
  Form product = ctx.m_A(values);
  if (koszul_sign(parities, degrees) < 0) product = -product;
  if (at_root) return {std::move(product), parity, degree};
  return {ctx.H(product), parity + 1, degree};
}

}  // namespace

std::string tree_operation_str(const PlanarTree& tree, bool root_is_f) {
  if (tree.is_leaf()) return "g";
  return operation_str(tree, true, root_is_f);
}

Cochain evaluate_tree_m(const SimplexContraction& ctx, const PlanarTree& tree, const std::vector<Cochain>& inputs,
                        SignRule rule) {
  if (static_cast<int>(inputs.size()) != tree.leaves()) throw std::invalid_argument("evaluate_tree_m: arity mismatch");
  if (tree.is_leaf()) throw std::invalid_argument("evaluate_tree_m: the single-tail tree has no operation");
  Cochain out(ctx.dim());
  for (const auto& term : expand_inputs(ctx, inputs)) {
    std::size_t cursor = 0;
    const Evaluated e = eval_subtree(ctx, tree, term.word, cursor, true, rule);
    out += ctx.f(e.value) * term.coeff;
  }
  return out;
}

Form evaluate_tree_G(const SimplexContraction& ctx, const PlanarTree& tree, const std::vector<Cochain>& inputs,
                     SignRule rule) {
  if (static_cast<int>(inputs.size()) != tree.leaves()) throw std::invalid_argument("evaluate_tree_G: arity mismatch");
  Form out(ctx.dim());
  for (const auto& term : expand_inputs(ctx, inputs)) {
    if (tree.is_leaf()) {
      out += ctx.g_basis(term.word[0]) * term.coeff;
      continue;
    }
    std::size_t cursor = 0;
    const Evaluated e = eval_subtree(ctx, tree, term.word, cursor, true, rule);
    out += ctx.H(e.value) * term.coeff;
  }
  return out;
}

std::vector<BigInt> schroeder_counts(int n_max) {
  // s_1 = 1; s_n = sum over compositions of n into k >= 2 parts of prod s_{n_i}.
  std::vector<BigInt> s(n_max + 1, 0);
  if (n_max >= 1) s[1] = 1;
  // w[m][k]: sum over compositions of m into k parts of prod s
  for (int n = 2; n <= n_max; ++n) {
    std::vector<std::vector<BigInt>> w(n + 1, std::vector<BigInt>(n + 1, 0));
    w[0][0] = 1;
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= m; ++k)
        for (int last = 1; last <= m - k + 1 && last < n; ++last) w[m][k] += w[m - last][k - 1] * s[last];
    for (int k = 2; k <= n; ++k) s[n] += w[n][k];
  }
  return s;
}

}  // namespace cinf
