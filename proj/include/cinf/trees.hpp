#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cinf/cochains.hpp"
#include "cinf/contraction.hpp"
#include "cinf/forms.hpp"
#include "cinf/tensor.hpp"

namespace cinf {

// Rooted planar tree whose internal vertices all have at least two inputs. Leaves are the tails.
class PlanarTree {
 public:
  static PlanarTree leaf() { return PlanarTree(); }
  // Throws std::invalid_argument for fewer than two children.
  static PlanarTree node(std::vector<PlanarTree> children);
  // Parses the bracket syntax, e.g. "(* (* * * *) *)".
  static PlanarTree parse(std::string_view text);

  bool is_leaf() const { return children_.empty(); }
  const std::vector<PlanarTree>& children() const { return children_; }
  int leaves() const;
  int internal_vertices() const;
  bool is_binary() const;

  // Preorder arity sequence (0 for a leaf); unique per planar isomorphism class.
  std::vector<int> encoding() const;
  std::string str() const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.encoding() == b.encoding(); }
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
    return a.encoding() <=> b.encoding();
  }

 private:
  std::vector<PlanarTree> children_;
};

// All trees with n tails in encoding order. Cached per n.
const std::vector<PlanarTree>& enumerate_trees(int n);

// Binary trees with `leaves` tails whose path from tail `position` (1-based) to the root
// visits every internal vertex. Found by filtering enumerate_trees.
std::vector<PlanarTree> path_trees(int leaves, int position);

// Builds the path tree described by a word in L/R: letter j says whether the path leaves the
// j-th vertex (counted from the root) through its left or right input.
PlanarTree tree_from_path_word(std::string_view word);
// All path trees for (leaves, position) generated from L/R words with position-1 R's.
std::vector<PlanarTree> path_trees_from_words(int leaves, int position);

// Symbolic composite, e.g. "f∘m_3∘(g⊗(H∘m_4∘(g⊗g⊗g⊗g))⊗g)". root_is_f selects f or H at the root.
std::string tree_operation_str(const PlanarTree& tree, bool root_is_f = true);

// m_T and G_T. Inputs are expanded multilinearly in the face basis; slot signs go through the
// Koszul rule with the parity of each subtree operator.
Cochain evaluate_tree_m(const SimplexContraction& ctx, const PlanarTree& tree, const std::vector<Cochain>& inputs,
                        SignRule rule = SignRule::shifted);
Form evaluate_tree_G(const SimplexContraction& ctx, const PlanarTree& tree, const std::vector<Cochain>& inputs,
                     SignRule rule = SignRule::shifted);

// Little Schroeder numbers by the composition recursion, independent of enumeration.
std::vector<BigInt> schroeder_counts(int n_max);

}  // namespace cinf
