#include "treespec/eigen_locate.hpp"

#include <stdexcept>

namespace treespec {

JTResult jt_evaluate(const RootedTree& rt, const BigRational& theta) {
  const int n = rt.base.n;
  JTResult res;
  res.values.resize(n + 1);
  std::vector<char> detached(n + 1, 0);
  for (int v : rt.postorder) {
    res.values[v].vertex = v;
    int zero_child = 0;
    for (int c : rt.children[v]) {
      if (detached[c]) continue;
      if (sgn(res.values[c].value) == 0 && !res.values[c].zeroed_by_fix) {
        zero_child = c;  // children are ascending, first zero is the smallest label
        break;
      }
    }
    if (zero_child != 0) {
      res.values[zero_child].value = 2;
      res.values[zero_child].zeroed_by_fix = true;
      res.values[v].value = BigRational(-1, 2);
      res.values[v].is_pole = true;
      detached[v] = 1;  // parent must skip this vertex's contribution
    } else {
      BigRational d = theta;
      for (int c : rt.children[v]) {
        if (detached[c]) continue;
        d -= 1 / res.values[c].value;
      }
      res.values[v].value = d;
    }
  }
  for (int v = 1; v <= n; ++v) {
    int s = sgn(res.values[v].value);
    if (s > 0)
      ++res.inertia.below;
    else if (s < 0)
      ++res.inertia.above;
    else
      ++res.inertia.at;
  }
  return res;
}

std::vector<RationalFunction> d_symbolic_all(const RootedTree& rt) {
  std::vector<RationalFunction> rf(rt.base.n + 1);
  for (int v : rt.postorder) {
    const auto& kids = rt.children[v];
    // den_v = prod of children num; num_v = x*den_v - sum_j den_j * prod_{k != j} num_k
    IntPolynomial den = IntPolynomial::constant(BigInt(1));
    for (int c : kids) den = den * rf[c].num;
    IntPolynomial num = den.shifted_up(1);
    for (size_t j = 0; j < kids.size(); ++j) {
      IntPolynomial term = rf[kids[j]].den;
      for (size_t k = 0; k < kids.size(); ++k)
        if (k != j) term = term * rf[kids[k]].num;
      num = num - term;
    }
    rf[v] = {std::move(num), std::move(den)};
  }
  return rf;
}

RationalFunction d_symbolic(const RootedTree& rt, int i) {
  if (i < 1 || i > rt.base.n) throw std::invalid_argument("vertex out of range");
  // compute only the subtree below i
  RootedTree sub;
  sub.base = rt.base;
  sub.root = i;
  sub.parent = rt.parent;
  sub.children = rt.children;
  sub.postorder.clear();
  // postorder restricted to descendants of i keeps their relative order
  std::vector<char> in_subtree(rt.base.n + 1, 0);
  in_subtree[i] = 1;
  for (auto it = rt.postorder.rbegin(); it != rt.postorder.rend(); ++it)
    if (*it != i && rt.parent[*it] && in_subtree[rt.parent[*it]]) in_subtree[*it] = 1;
  for (int v : rt.postorder)
    if (in_subtree[v]) sub.postorder.push_back(v);
  auto rf = d_symbolic_all(sub);
  return rf[i];
}

IntPolynomial char_poly(const Tree& t) {
  RootedTree rt = root_at(t, 1);
  auto rf = d_symbolic_all(rt);
  return rf[1].num;
}

long count_eigs_interval(const Tree& t, const BigRational& a, const BigRational& b,
                         CountMode mode) {
  if (!(a < b)) throw std::invalid_argument("count_eigs_interval requires a < b");
  if (mode == CountMode::distinct) return sturm_count_distinct(char_poly(t), a, b);
  RootedTree rt = root_at(t, 1);
  Inertia at_a = jt_evaluate(rt, a).inertia;
  Inertia at_b = jt_evaluate(rt, b).inertia;
  return at_b.below - at_a.below - at_a.at;
}

SpectrumReport spectrum_report(const Tree& t) {
  SpectrumReport rep;
  rep.n = t.n;
  rep.char_poly = char_poly(t);
  IntegerRoots ir = integer_roots(rep.char_poly);
  rep.integer_spectrum = std::move(ir.roots);
  long mult_sum = 0;
  for (const auto& [root, mult] : rep.integer_spectrum) mult_sum += mult;
  rep.is_integral = (mult_sum == t.n);
  SturmChain chain(rep.char_poly);
  rep.distinct_in_open_m2_2 = chain.count_open(BigRational(-2), BigRational(2));
  if (!rep.is_integral) {
    // Eigenvalues lie in (-n, n), so some open unit interval (k, k+1) holds a
    // non-integer root; the first one found is the witness.
    for (long k = -t.n; k < t.n; ++k) {
      if (chain.count_open(BigRational(k), BigRational(k + 1)) > 0) {
        rep.witness = {BigRational(k), BigRational(k + 1)};
        break;
      }
    }
    if (!rep.witness) throw std::logic_error("non-integral spectrum without a witness interval");
  }
  return rep;
}

BigRational derivative_check(const RootedTree& rt, int i, const BigRational& theta) {
  RationalFunction rf = d_symbolic(rt, i);
  BigRational den_val = rf.den.eval(theta);
  if (sgn(den_val) == 0) throw std::domain_error("theta is a pole of d_i");
  BigRational num_val = rf.num.eval(theta);
  BigRational dnum = rf.num.derivative().eval(theta);
  BigRational dden = rf.den.derivative().eval(theta);
  return (dnum * den_val - num_val * dden) / (den_val * den_val);
}

}  // namespace treespec
