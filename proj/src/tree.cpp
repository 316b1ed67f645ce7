#include "treespec/tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treespec {

Tree make_tree(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw std::invalid_argument("tree must have at least one vertex");
  if (static_cast<int>(edges.size()) > n - 1)
    throw std::invalid_argument("cycle detected: " + std::to_string(edges.size()) +
                                " edges on " + std::to_string(n) + " vertices");
  if (static_cast<int>(edges.size()) < n - 1)
    throw std::invalid_argument("disconnected input: " + std::to_string(edges.size()) +
                                " edges on " + std::to_string(n) + " vertices");
  Tree t;
  t.n = n;
  t.adj.assign(n + 1, {});
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("vertex label out of range: " + std::to_string(u < 1 || u > n ? u : v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  }
  t.edges.assign(seen.begin(), seen.end());
  for (auto& nb : t.adj) std::sort(nb.begin(), nb.end());

  // edge count is n-1, so connected <=> acyclic; a BFS detects both failures
  std::vector<char> visited(n + 1, 0);
  std::vector<int> stack{1};
  visited[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.adj[v])
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n)
    throw std::invalid_argument("disconnected input (the edge set also contains a cycle)");
  return t;
}

Tree parse_tree(const std::string& text) {
  std::string stripped;
  stripped.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (!in_comment) stripped.push_back(c);
  }
  std::istringstream in(stripped);
  long n;
  if (!(in >> n)) throw std::invalid_argument("missing vertex count");
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  std::vector<std::pair<int, int>> edges;
  long u, v;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("dangling edge endpoint");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!in.eof()) throw std::invalid_argument("unexpected token in edge list");
  return make_tree(static_cast<int>(n), std::move(edges));
}

std::string format_edge_record(const Tree& t) {
  std::string out = std::to_string(t.n);
  for (auto [u, v] : t.edges) {
    out += " " + std::to_string(u) + " " + std::to_string(v);
  }
  return out;
}

std::string format_edge_list(const Tree& t) {
  std::string out = std::to_string(t.n) + "\n";
  for (auto [u, v] : t.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

RootedTree root_at(const Tree& t, int r) {
  if (r < 1 || r > t.n) throw std::invalid_argument("root vertex out of range");
  RootedTree rt;
  rt.base = t;
  rt.root = r;
  rt.parent.assign(t.n + 1, 0);
  rt.children.assign(t.n + 1, {});
  rt.postorder.reserve(t.n);
  // iterative DFS; children visited in ascending order (adj is sorted)
  std::vector<std::pair<int, size_t>> stack{{r, 0}};
  std::vector<char> seen(t.n + 1, 0);
  seen[r] = 1;
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx < t.adj[v].size()) {
      int w = t.adj[v][idx++];
      if (!seen[w]) {
        seen[w] = 1;
        rt.parent[w] = v;
        rt.children[v].push_back(w);
        stack.emplace_back(w, 0);
      }
    } else {
      rt.postorder.push_back(v);
      stack.pop_back();
    }
  }
  return rt;
}

std::vector<SubdividedEdge> find_subdivided_edges(const Tree& t) {
  std::vector<SubdividedEdge> out;
  if (t.n < 2) return out;
  for (int a = 1; a <= t.n; ++a) {
    if (degree(t, a) == 2) continue;
    for (int nb : t.adj[a]) {
      std::vector<int> path{a, nb};
      int prev = a, cur = nb;
      while (degree(t, cur) == 2) {
        int next = t.adj[cur][0] == prev ? t.adj[cur][1] : t.adj[cur][0];
        prev = cur;
        cur = next;
        path.push_back(cur);
      }
      if (a > cur) continue;  // the walk from the other endpoint reports it
      SubdividedEdge e;
      e.endpoints = {a, cur};
      e.vertices = std::move(path);
      e.length = static_cast<int>(e.vertices.size());
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(), [](const SubdividedEdge& x, const SubdividedEdge& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.endpoints < y.endpoints;
  });
  return out;
}

int longest_subdivided_edge_length(const Tree& t) {
  if (t.n == 1) return 1;
  int best = 0;
  for (const auto& e : find_subdivided_edges(t)) best = std::max(best, e.length);
  return best;
}

Tree build_figure_tree(const RootedTree& left, int path_inner, const RootedTree& right) {
  if (path_inner < 0) throw std::invalid_argument("path_inner must be >= 0");
  int nl = left.base.n, nr = right.base.n;
  std::vector<std::pair<int, int>> edges = left.base.edges;
  int offset = nl + path_inner;
  for (auto [u, v] : right.base.edges) edges.emplace_back(u + offset, v + offset);
  int prev = left.root;
  for (int i = 1; i <= path_inner; ++i) {
    edges.emplace_back(prev, nl + i);
    prev = nl + i;
  }
  edges.emplace_back(prev, right.root + offset);
  return make_tree(nl + path_inner + nr, std::move(edges));
}

std::vector<int> centroids(const Tree& t) {
  if (t.n == 1) return {1};
  std::vector<int> size(t.n + 1, 1), order, parent(t.n + 1, 0);
  order.reserve(t.n);
  std::vector<int> stack{1};
  std::vector<char> seen(t.n + 1, 0);
  seen[1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it]) size[parent[*it]] += size[*it];
  int best = t.n + 1;
  std::vector<int> cs;
  for (int v = 1; v <= t.n; ++v) {
    int maxcomp = t.n - size[v];
    for (int w : t.adj[v])
      if (w != parent[v]) maxcomp = std::max(maxcomp, size[w]);
    if (maxcomp < best) {
      best = maxcomp;
      cs = {v};
    } else if (maxcomp == best) {
      cs.push_back(v);
    }
  }
  return cs;
}

namespace {

// AHU encoding rooted at r: code(v) = '(' + sorted children codes + ')'.
std::string ahu_code(const Tree& t, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : t.adj[v])
    if (w != parent) child_codes.push_back(ahu_code(t, w, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

}  // namespace

std::string canonical_code(const Tree& t) {
  std::vector<int> cs = centroids(t);
  std::string best;
  for (int c : cs) {
    std::string code = ahu_code(t, c, 0);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::string canonical_code_hex(const Tree& t) {
  static const char digits[] = "0123456789abcdef";
  std::string code = canonical_code(t);
  std::string hex;
  hex.reserve(code.size() * 2);
  for (unsigned char c : code) {
    hex.push_back(digits[c >> 4]);
    hex.push_back(digits[c & 0xf]);
  }
  return hex;
}

}  // namespace treespec
