#pragma once

#include <string>
#include <utility>
#include <vector>

namespace treespec {

// Undirected tree on vertices 1..n. Validated on construction: exactly n-1
// edges, no self-loops or duplicates, connected. Immutable after that.
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj;       // 1-based, neighbor lists ascending
};

Tree make_tree(int n, std::vector<std::pair<int, int>> edges);

// Edge-list text: '#' starts a comment; first token is n, followed by n-1
// "u v" pairs. Whitespace (including newlines) separates tokens, so the
// single-line record format parses with the same function.
Tree parse_tree(const std::string& text);

std::string format_edge_record(const Tree& t);  // one line: "n u1 v1 u2 v2 ..."
std::string format_edge_list(const Tree& t);    // multi-line document

inline int degree(const Tree& t, int v) { return static_cast<int>(t.adj[v].size()); }

// Rooted view of a tree: parent/children maps and a postorder where every
// vertex appears after all of its descendants. Children are listed in
// ascending label order, which fixes the postorder deterministically.
struct RootedTree {
  Tree base;
  int root = 0;
  std::vector<int> parent;                 // parent[root] == 0
  std::vector<std::vector<int>> children;  // ascending
  std::vector<int> postorder;
};

RootedTree root_at(const Tree& t, int r);

// Maximal path whose inner vertices all have degree 2 in the whole tree.
// Endpoints are the first vertices of degree != 2 in each direction (leaves
// included, so a bare path is one subdivided edge spanning everything).
struct SubdividedEdge {
  std::pair<int, int> endpoints;  // (a, b) with a < b
  std::vector<int> vertices;      // path from a to b
  int length = 0;                 // vertex count, >= 2
};

// All maximal subdivided edges, sorted by (length desc, endpoints asc).
// Every tree edge lies in exactly one of them. Empty for n == 1.
std::vector<SubdividedEdge> find_subdivided_edges(const Tree& t);

// Max length over find_subdivided_edges; 1 for the single-vertex tree.
int longest_subdivided_edge_length(const Tree& t);

// Two rooted trees joined by a path that has path_inner extra inner vertices;
// the path's endpoint vertices are the two roots. Left keeps its labels,
// inner vertices and the right tree are relabeled upward.
Tree build_figure_tree(const RootedTree& left, int path_inner, const RootedTree& right);

// Isomorphism-invariant byte code: canonical rooted encoding at the centroid,
// lexicographic min over the two centroids when the tree is bicentroidal.
// Equal codes iff the trees are isomorphic.
std::string canonical_code(const Tree& t);
std::string canonical_code_hex(const Tree& t);

// The one or two centroid vertices.
std::vector<int> centroids(const Tree& t);

}  // namespace treespec
