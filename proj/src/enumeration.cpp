#include "treespec/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace treespec {

namespace {

// Level sequence of the canonical plane form rooted at r: each vertex's child
// blocks are emitted in non-increasing lexicographic order, which makes the
// full sequence the lexicographic maximum over all plane embeddings.
std::vector<int> canon_seq_rooted(const Tree& t, int v, int parent, int level) {
  std::vector<std::vector<int>> blocks;
  for (int w : t.adj[v])
    if (w != parent) blocks.push_back(canon_seq_rooted(t, w, v, level + 1));
  std::sort(blocks.begin(), blocks.end(), std::greater<>());
  std::vector<int> seq{level};
  for (const auto& b : blocks) seq.insert(seq.end(), b.begin(), b.end());
  return seq;
}

Tree seq_to_tree(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  std::vector<int> last_at_level(n + 2, 0);  // position+1 of last vertex per level
  last_at_level[seq[0]] = 1;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(last_at_level[seq[i] - 1], i + 1);
    last_at_level[seq[i]] = i + 1;
  }
  return make_tree(n, std::move(edges));
}

// Successor in the decreasing-lex generation of canonical rooted level
// sequences: find the last entry above 2, locate its parent's position, and
// copy that block cyclically across the tail.
bool advance_seq(std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (seq[i] > 2) {
      p = i;
      break;
    }
  if (p < 0) return false;  // the star terminates the stream
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (seq[i] == seq[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n; ++i) seq[i] = seq[i - (p - q)];
  return true;
}

}  // namespace

std::vector<int> canonical_level_sequence(const Tree& t) {
  std::vector<int> best;
  for (int c : centroids(t)) {
    std::vector<int> seq = canon_seq_rooted(t, c, 0, 1);
    if (best.empty() || seq > best) best = seq;
  }
  return best;
}

TreeStream::TreeStream(int n, std::optional<int> min_subdivided)
    : n_(n), min_subdivided_(min_subdivided) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("tree order must be in [1, " + std::to_string(kMaxN) + "]");
  if (min_subdivided_ && *min_subdivided_ < 2)
    throw std::invalid_argument("subdivided-edge length filter must be >= 2");
  seq_.resize(n);
  for (int i = 0; i < n; ++i) seq_[i] = i + 1;  // the path, lexicographic maximum
}

bool TreeStream::next_raw(Tree& out) {
  while (true) {
    if (exhausted_) return false;
    if (!fresh_) {
      if (!advance_seq(seq_)) {
        exhausted_ = true;
        return false;
      }
    }
    fresh_ = false;
    if (n_ == 1) {
      exhausted_ = true;
      out = make_tree(1, {});
      return true;
    }
    Tree t = seq_to_tree(seq_);
    if (canonical_level_sequence(t) == seq_) {
      out = std::move(t);
      return true;
    }
  }
}

bool TreeStream::next(Tree& out) {
  Tree t;
  while (next_raw(t)) {
    if (!min_subdivided_ || longest_subdivided_edge_length(t) >= *min_subdivided_) {
      out = std::move(t);
      ++index_;
      return true;
    }
  }
  return false;
}

void TreeStream::skip(long count) {
  Tree scratch;
  while (count-- > 0 && next(scratch)) {
  }
}

TreeStream enumerate_free_trees(int n) { return TreeStream(n); }

TreeStream enumerate_with_subdivided_edge(int n, int k) {
  if (k < 2) throw std::invalid_argument("subdivided-edge length filter must be >= 2");
  return TreeStream(n, k);
}

}  // namespace treespec
