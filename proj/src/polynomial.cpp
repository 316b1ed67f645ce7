#include "treespec/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace treespec {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (sgn(c) != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[k];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  if (sgn(c) == 0) return IntPolynomial();
  IntPolynomial r(p);
  for (auto& k : r.coeffs_) k *= c;
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = BigInt(static_cast<long>(i)) * coeffs_[i];
  return IntPolynomial(std::move(c));
}

BigRational IntPolynomial::eval(const BigRational& x) const {
  if (is_zero()) return BigRational(0);
  // p(n/d) = (sum c_k n^k d^(deg-k)) / d^deg, assembled with integer Horner.
  const BigInt& n = x.get_num();
  const BigInt& d = x.get_den();
  BigInt acc = coeffs_.back();
  BigInt dpow(1);
  for (int k = static_cast<int>(coeffs_.size()) - 2; k >= 0; --k) {
    acc *= n;
    dpow *= d;
    acc += coeffs_[k] * dpow;
  }
  BigInt denom(1);
  mpz_pow_ui(denom.get_mpz_t(), d.get_mpz_t(), coeffs_.size() - 1);
  return make_rational(acc, denom);
}

BigInt IntPolynomial::eval_int(const BigInt& x) const {
  BigInt acc(0);
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    acc *= x;
    acc += coeffs_[k];
  }
  return acc;
}

int IntPolynomial::sign_at(const BigRational& x) const {
  if (is_zero()) return 0;
  const BigInt& n = x.get_num();
  const BigInt& d = x.get_den();
  BigInt acc = coeffs_.back();
  BigInt dpow(1);
  for (int k = static_cast<int>(coeffs_.size()) - 2; k >= 0; --k) {
    acc *= n;
    dpow *= d;
    acc += coeffs_[k] * dpow;
  }
  return sgn(acc);  // denominator power is positive
}

IntPolynomial IntPolynomial::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> c(coeffs_.size() + k, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::content() const {
  BigInt g(0);
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c /= g;
  return r;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt c = coeff(k);
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) out += "-";
    BigInt a = abs(c);
    bool need_coeff = (a != 1) || k == 0;
    if (need_coeff) out += a.get_str();
    if (k > 0) {
      if (need_coeff) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

// Pseudo-remainder scaled to a *positive* multiple of the rational remainder:
// returns |lc(g)|^(deg f - deg g + 1) * (f mod g).
IntPolynomial positive_pseudo_rem(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo remainder by zero");
  int df = f.degree(), dg = g.degree();
  if (df < dg) return f;
  const BigInt& lg = g.leading();
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  for (int k = df; k >= dg; --k) {
    // invariant: positions > k already eliminated; each pass scales by lg once
    BigInt top = r[k];
    for (int i = 0; i < k; ++i) r[i] *= lg;
    r[k] = 0;
    if (sgn(top) != 0) {
      for (int i = 0; i < dg; ++i) r[k - dg + i] -= top * g.coeff(i);
    }
  }
  IntPolynomial rem{std::vector<BigInt>(r.begin(), r.begin() + dg)};
  // total scale is lg^(df-dg+1), which may be negative; flip to keep it positive
  if (sgn(lg) < 0 && ((df - dg + 1) % 2) == 1) rem = -rem;
  return rem;
}

IntPolynomial primitive_positive(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  IntPolynomial q = p.primitive_part();
  if (sgn(q.leading()) < 0) q = -q;
  return q;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : primitive_positive(b) * IntPolynomial::constant(b.content());
  if (b.is_zero()) return primitive_positive(a) * IntPolynomial::constant(a.content());
  BigInt ca = a.content(), cb = b.content();
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial f = a.primitive_part(), g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPolynomial r = positive_pseudo_rem(f, g);
    f = std::move(g);
    g = r.is_zero() ? r : r.primitive_part();
  }
  IntPolynomial result = primitive_positive(f);
  return IntPolynomial::constant(cg) * result;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return a;
  int da = a.degree(), db = b.degree();
  if (da < db) throw std::invalid_argument("inexact polynomial division");
  std::vector<BigInt> rem(a.coeffs());
  std::vector<BigInt> q(da - db + 1, BigInt(0));
  const BigInt& lb = b.leading();
  for (int k = da; k >= db; --k) {
    BigInt top = rem[k];
    if (sgn(top) == 0) continue;
    BigInt qk, r;
    mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    if (sgn(r) != 0) throw std::invalid_argument("inexact polynomial division");
    q[k - db] = qk;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= qk * b.coeff(i);
  }
  for (const auto& c : rem)
    if (sgn(c) != 0) throw std::invalid_argument("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  if (p.degree() == 0) return IntPolynomial::constant(BigInt(1));
  IntPolynomial pp = primitive_positive(p);
  IntPolynomial g = poly_gcd(pp, pp.derivative());
  return primitive_positive(divide_exact(pp, g));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
  IntPolynomial pp = primitive_positive(p);
  if (pp.degree() == 0) return {};
  IntPolynomial g = poly_gcd(pp, pp.derivative());
  if (g.degree() == 0) return {pp};
  // Yun's algorithm
  std::vector<IntPolynomial> out;
  IntPolynomial w = divide_exact(pp, g);
  IntPolynomial y = divide_exact(pp.derivative(), g);
  while (true) {
    IntPolynomial z = y - w.derivative();
    if (z.is_zero()) {
      out.push_back(primitive_positive(w));
      break;
    }
    IntPolynomial ai = poly_gcd(w, z);
    out.push_back(primitive_positive(ai));
    w = divide_exact(w, ai);
    y = divide_exact(z, ai);
  }
  return out;
}

int root_multiplicity(const IntPolynomial& p, const BigRational& r) {
  if (p.is_zero()) throw std::invalid_argument("root multiplicity in zero polynomial");
  // primitive linear factor den*x - num
  IntPolynomial lin{std::vector<BigInt>{-r.get_num(), r.get_den()}};
  IntPolynomial q = p;
  int m = 0;
  while (!q.is_zero() && q.sign_at(r) == 0) {
    q = divide_exact(q, lin);
    ++m;
  }
  return m;
}

IntegerRoots integer_roots(const IntPolynomial& p) {
  if (p.is_zero() || !p.is_monic())
    throw std::invalid_argument("integer_roots requires a monic polynomial");
  IntegerRoots result;
  int zero_mult = 0;
  while (zero_mult <= p.degree() && sgn(p.coeff(zero_mult)) == 0) ++zero_mult;
  IntPolynomial q{std::vector<BigInt>(p.coeffs().begin() + zero_mult, p.coeffs().end())};
  if (zero_mult > 0) result.roots.emplace_back(BigInt(0), zero_mult);

  if (q.degree() >= 1) {
    BigInt c0 = abs(q.coeff(0));
    std::vector<BigInt> divisors;
    for (BigInt d(1); d * d <= c0; ++d) {
      if (c0 % d == 0) {
        divisors.push_back(d);
        divisors.push_back(c0 / d);
      }
    }
    std::vector<BigInt> candidates;
    for (const auto& d : divisors) {
      candidates.push_back(-d);
      candidates.push_back(d);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (q.degree() >= 1 && sgn(q.eval_int(r)) == 0) {
        // synthetic division by (x - r)
        std::vector<BigInt> nc(q.degree(), BigInt(0));
        BigInt carry(0);
        for (int k = q.degree(); k >= 1; --k) {
          carry = q.coeff(k) + carry * r;
          nc[k - 1] = carry;
        }
        q = IntPolynomial(std::move(nc));
        ++mult;
      }
      if (mult > 0) result.roots.emplace_back(r, mult);
    }
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  result.cofactor = std::move(q);
  return result;
}

SturmChain::SturmChain(const IntPolynomial& p) {
  IntPolynomial p0 = squarefree_part(p);
  seq_.push_back(p0);
  if (p0.degree() <= 0) return;
  seq_.push_back(p0.derivative().primitive_part());
  while (seq_.back().degree() > 0) {
    IntPolynomial r = positive_pseudo_rem(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;  // cannot happen for a squarefree head, kept as a guard
    // primitive_part divides by the (positive) content, preserving signs
    seq_.push_back((-r).primitive_part());
  }
}

int SturmChain::variations_at(const BigRational& x) const {
  int variations = 0;
  int prev = 0;
  for (const auto& q : seq_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

bool SturmChain::is_root(const BigRational& x) const {
  return seq_.front().sign_at(x) == 0;
}

long SturmChain::count_open(const BigRational& a, const BigRational& b) const {
  if (!(a < b)) throw std::invalid_argument("count_open requires a < b");
  // V(a) - V(b) counts distinct roots in (a, b]; drop b when it is a root.
  long n = variations_at(a) - variations_at(b);
  if (is_root(b)) --n;
  return n;
}

long sturm_count_distinct(const IntPolynomial& p, const BigRational& a,
                          const BigRational& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm count of zero polynomial");
  if (!(a < b)) throw std::invalid_argument("sturm count requires a < b");
  return SturmChain(p).count_open(a, b);
}

namespace {

void isolate_rec(const SturmChain& chain, const BigRational& lo, int vlo,
                 const BigRational& hi, int vhi, std::vector<RootEnclosure>& out) {
  long open_count = vlo - vhi - (chain.is_root(hi) ? 1 : 0);
  if (open_count == 0) return;
  if (open_count == 1 && !chain.is_root(lo) && !chain.is_root(hi)) {
    out.push_back({lo, hi});
    return;
  }
  BigRational mid = (lo + hi) / 2;
  int vmid = chain.variations_at(mid);
  if (chain.is_root(mid)) {
    isolate_rec(chain, lo, vlo, mid, vmid, out);
    out.push_back({mid, mid});
    isolate_rec(chain, mid, vmid, hi, vhi, out);
  } else {
    isolate_rec(chain, lo, vlo, mid, vmid, out);
    isolate_rec(chain, mid, vmid, hi, vhi, out);
  }
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const IntPolynomial& p, const BigRational& a,
                                         const BigRational& b) {
  if (!(a < b)) throw std::invalid_argument("isolate_roots requires a < b");
  SturmChain chain(p);
  std::vector<RootEnclosure> out;
  isolate_rec(chain, a, chain.variations_at(a), b, chain.variations_at(b), out);
  return out;
}

void refine_enclosure(RootEnclosure& e, const SturmChain& chain) {
  if (e.exact()) return;
  BigRational mid = (e.lo + e.hi) / 2;
  if (chain.is_root(mid)) {
    e.lo = mid;
    e.hi = mid;
    return;
  }
  // root lies in (lo, mid] iff V(lo) - V(mid) > 0
  if (chain.variations_at(e.lo) - chain.variations_at(mid) > 0)
    e.hi = mid;
  else
    e.lo = mid;
}

}  // namespace treespec
