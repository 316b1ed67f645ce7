#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "treespec/rational.hpp"

namespace treespec {

// Dense integer-coefficient polynomial, coefficients stored degree-ascending
// with trailing zeros stripped. The zero polynomial has an empty coefficient
// vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(BigInt c);
  static IntPolynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int k) const;  // 0 beyond the stored range
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  bool operator==(const IntPolynomial& other) const = default;

  IntPolynomial derivative() const;
  BigRational eval(const BigRational& x) const;
  BigInt eval_int(const BigInt& x) const;
  int sign_at(const BigRational& x) const;
  IntPolynomial shifted_up(int k) const;  // multiply by x^k

  BigInt content() const;              // nonnegative; 0 only for the zero polynomial
  IntPolynomial primitive_part() const;  // sign of leading coefficient preserved

  std::string str() const;  // "x^3 - 2*x" style, for diagnostics

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// gcd over the integers (contents included), normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Quotient a / b when the division is exact over the integers; throws
// std::invalid_argument otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'), primitive with positive leading coefficient. Same root set
// as p with every root simple. Throws on the zero polynomial.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun decomposition of the primitive part: returns a_1, a_2, ... with
// p ~ a_1 * a_2^2 * a_3^3 * ... up to a constant, each a_i primitive,
// squarefree and with positive leading coefficient.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

// Multiplicity of the rational point r as a root of p (0 when p(r) != 0).
int root_multiplicity(const IntPolynomial& p, const BigRational& r);

struct IntegerRoots {
  std::vector<std::pair<BigInt, int>> roots;  // (root, multiplicity), ascending
  IntPolynomial cofactor;                     // monic, no remaining integer roots
};

// All integer roots of a monic polynomial with multiplicities. The root 0 is
// split off as an x^m factor before divisors of the constant term are tested.
// Throws std::invalid_argument on non-monic input.
IntegerRoots integer_roots(const IntPolynomial& p);

// Sturm chain of the squarefree part of p, built with a primitive
// pseudo-remainder scheme so every element stays integral while the sign
// sequence matches the classical rational chain.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);

  int variations_at(const BigRational& x) const;
  // Distinct real roots in the open interval (a, b); endpoint roots excluded.
  long count_open(const BigRational& a, const BigRational& b) const;
  bool is_root(const BigRational& x) const;
  const IntPolynomial& squarefree() const { return seq_.front(); }

 private:
  std::vector<IntPolynomial> seq_;
};

// Number of distinct real roots of p in the open interval (a, b).
// Throws std::invalid_argument unless a < b and p != 0.
long sturm_count_distinct(const IntPolynomial& p, const BigRational& a,
                          const BigRational& b);

// Enclosure of one real root: either an open interval (lo, hi) with rational
// non-root endpoints containing exactly one distinct root, or an exact
// rational root when lo == hi.
struct RootEnclosure {
  BigRational lo, hi;
  bool exact() const { return lo == hi; }
};

// Disjoint, strictly ordered enclosures of every distinct root of p inside
// the open interval (a, b). Interval endpoints are never roots of p.
std::vector<RootEnclosure> isolate_roots(const IntPolynomial& p,
                                         const BigRational& a,
                                         const BigRational& b);

// One bisection step; keeps the enclosed root, may collapse to an exact point.
void refine_enclosure(RootEnclosure& e, const SturmChain& chain);

}  // namespace treespec
