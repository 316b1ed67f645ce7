#pragma once

#include <optional>
#include <vector>

#include "treespec/tree.hpp"

namespace treespec {

// Exhaustive stream of non-isomorphic free trees on n vertices, one
// representative per isomorphism class, in a fixed, documented order:
// canonical rooted level sequences are generated in decreasing lexicographic
// order and kept exactly when they are the centroid-rooted canonical form of
// their free tree. Restartable and cheap to regenerate, so (n, index) is a
// sufficient resume cursor.
class TreeStream {
 public:
  static constexpr int kMaxN = 20;

  // min_subdivided filters to trees whose longest subdivided edge has at
  // least that many vertices. Throws std::invalid_argument for n outside
  // [1, kMaxN] or a filter value < 2.
  explicit TreeStream(int n, std::optional<int> min_subdivided = std::nullopt);

  // Yields the next tree, or false when the stream is exhausted.
  bool next(Tree& out);

  // Number of trees yielded so far == index of the next tree in this stream.
  long index() const { return index_; }
  int n() const { return n_; }

  // Fast-forward: drop the next `count` trees.
  void skip(long count);

 private:
  bool next_raw(Tree& out);
  int n_;
  std::optional<int> min_subdivided_;
  std::vector<int> seq_;
  bool exhausted_ = false;
  bool fresh_ = true;
  long index_ = 0;
};

TreeStream enumerate_free_trees(int n);
TreeStream enumerate_with_subdivided_edge(int n, int k);

// Centroid-anchored canonical level sequence of a free tree; two trees are
// isomorphic iff these agree. Exposed for tests.
std::vector<int> canonical_level_sequence(const Tree& t);

}  // namespace treespec
