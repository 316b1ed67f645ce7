#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treespec/eigen_locate.hpp"
#include "treespec/polynomial.hpp"
#include "treespec/tree.hpp"

namespace treespec {

// Position in the filtered enumeration order: `index` trees of
// enumerate_with_subdivided_edge(n, k) are already done.
struct Checkpoint {
  int n = 0;
  long index = 0;
};

struct Violation {
  int n = 0;
  long index = 0;
  std::string tree_record;  // single-line edge record
  long distinct_in_m2_2 = 0;
  bool is_integral = false;
};

struct VerificationReport {
  int n_max = 0;
  int k = 7;
  long trees_checked = 0;
  std::vector<Violation> violations;  // empty unless a checked tree defeats the claim
  long min_distinct_in_interval = -1;  // -1 when no tree was checked
  double elapsed_seconds = 0.0;
  Checkpoint checkpoint;  // position after the last processed tree
};

// For every tree with a subdivided edge of at least k vertices on up to n_max
// vertices, checks that it has >= 4 distinct eigenvalues in (-2, 2) and is
// not integral. Violations are recorded as data, never thrown. `jobs` only
// changes the wall time; the report is identical for any worker count.
VerificationReport verify_theorem(int n_max, int k = 7, int jobs = 1,
                                  std::optional<Checkpoint> resume = std::nullopt);

// One event point inside (-2, 2): a root of some path vertex's reduced
// numerator or denominator, given either exactly (lo == hi) or by an open
// rational interval containing exactly this one event.
struct TraceBreakpoint {
  BigRational lo, hi;
  std::vector<int> zero_positions;  // 1-based path positions with d == 0 here
  std::vector<int> pole_positions;  // 1-based path positions with a pole here
  bool exact() const { return lo == hi; }
};

struct SignTrace {
  std::vector<int> path;  // path vertices, root first
  std::vector<TraceBreakpoint> breakpoints;
  std::vector<std::string> panels;  // one row per sub-interval, one of +/- per path vertex
  long root_zero_count = 0;         // breakpoints where d at the root vanishes
};

// Sign bookkeeping of the root functions along a subdivided edge, rooted at
// the first path vertex. Breakpoints are all roots of the reduced num/den
// pairs inside (-2, 2); panel signs come from exact evaluation strictly
// between consecutive breakpoints. Monotonicity of the root functions makes
// every panel differ from its neighbor.
SignTrace trace_sign_dynamics(const Tree& t, const SubdividedEdge& edge);

// Values positive-or-pole at theta = 2 and theta = -2 among non-root path
// vertices; a vertex consumed by the zero-fix counts as a true zero, not as
// positive.
std::pair<int, int> theta_boundary_counts(const Tree& t, const SubdividedEdge& edge);

// Every integral tree on at most n_max vertices with its spectrum report,
// ordered by (n, enumeration index).
std::vector<std::pair<Tree, SpectrumReport>> search_integral_trees(int n_max, int jobs = 1);

}  // namespace treespec
