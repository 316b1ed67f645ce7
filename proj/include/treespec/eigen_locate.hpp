#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treespec/polynomial.hpp"
#include "treespec/rational.hpp"
#include "treespec/tree.hpp"

namespace treespec {

// Final diagonal entry of one vertex after the bottom-up elimination of
// theta*I - A. Two entries per zero-fix carry placeholder values: the vertex
// whose child vanished stores -1/2 and is marked is_pole (its true value is
// infinite), and the child whose 0 was consumed stores 2 and is marked
// zeroed_by_fix (its true value is 0). Every other entry equals the value of
// the vertex's rational root function at theta.
struct DiagValue {
  int vertex = 0;
  BigRational value;
  bool is_pole = false;
  bool zeroed_by_fix = false;
};

// Eigenvalue counts of the adjacency matrix relative to theta.
struct Inertia {
  long below = 0;  // eigenvalues < theta
  long at = 0;     // multiplicity of theta
  long above = 0;  // eigenvalues > theta
};

struct JTResult {
  std::vector<DiagValue> values;  // indexed by vertex label; [0] unused
  Inertia inertia;
};

// Bottom-up diagonalization: d_v = theta - sum over children of 1/d_child,
// processed in postorder. When a child's value is exactly 0, the fix picks
// the smallest-label such child, sets child := 2 and parent := -1/2, and
// detaches the parent from its own parent; this keeps the diagonal congruent
// to theta*I - A, so counting signs yields the inertia.
JTResult jt_evaluate(const RootedTree& rt, const BigRational& theta);

// The root function of a vertex as a pair of integer polynomials. num is the
// characteristic polynomial of the vertex's subtree; den the one of the
// subtree minus the vertex, i.e. the product of the children's num parts.
// num and den may share factors; identities on them should be stated
// cross-multiplied.
struct RationalFunction {
  IntPolynomial num, den;
};

RationalFunction d_symbolic(const RootedTree& rt, int i);
std::vector<RationalFunction> d_symbolic_all(const RootedTree& rt);  // by vertex label

// Characteristic polynomial of the adjacency matrix: monic, degree n, even or
// odd as n is. Independent of the internally chosen root.
IntPolynomial char_poly(const Tree& t);

enum class CountMode { distinct, with_multiplicity };

// Eigenvalues in the open interval (a, b). distinct mode runs a Sturm count
// on the characteristic polynomial; with_multiplicity differences two
// inertia evaluations.
long count_eigs_interval(const Tree& t, const BigRational& a, const BigRational& b,
                         CountMode mode);

struct SpectrumReport {
  int n = 0;
  IntPolynomial char_poly;
  std::vector<std::pair<BigInt, int>> integer_spectrum;  // (eigenvalue, multiplicity)
  bool is_integral = false;
  long distinct_in_open_m2_2 = 0;
  // Open interval with rational endpoints containing a non-integer eigenvalue;
  // present exactly when the spectrum is not integral.
  std::optional<std::pair<BigRational, BigRational>> witness;
};

SpectrumReport spectrum_report(const Tree& t);

// d_i'(theta) evaluated exactly via (num' den - num den') / den^2.
// Throws std::domain_error when theta is a pole (den(theta) == 0) so the
// caller can resample.
BigRational derivative_check(const RootedTree& rt, int i, const BigRational& theta);

}  // namespace treespec
