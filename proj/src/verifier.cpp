#include "treespec/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <stdexcept>
#include <thread>

#include "treespec/enumeration.hpp"

namespace treespec {

namespace {

// Runs fn(i) for i in [0, count) across `jobs` threads.
void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> cursor{0};
  auto worker = [&] {
    for (long i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  int spawn = std::min<long>(jobs, count) - 1;
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

constexpr long kBatchSize = 512;

}  // namespace

VerificationReport verify_theorem(int n_max, int k, int jobs,
                                  std::optional<Checkpoint> resume) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (n_max < k) throw std::invalid_argument("n_max must be >= k");
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.n_max = n_max;
  rep.k = k;
  rep.checkpoint = {k, 0};

  struct Outcome {
    long distinct = 0;
    bool integral = false;
  };

  for (int n = k; n <= n_max; ++n) {
    if (resume && n < resume->n) continue;
    TreeStream stream = enumerate_with_subdivided_edge(n, k);
    if (resume && n == resume->n) stream.skip(resume->index);
    while (true) {
      std::vector<Tree> batch;
      std::vector<long> indices;
      Tree t;
      long first_index = stream.index();
      while (static_cast<long>(batch.size()) < kBatchSize && stream.next(t)) {
        indices.push_back(first_index + static_cast<long>(batch.size()));
        batch.push_back(std::move(t));
      }
      if (batch.empty()) break;
      std::vector<Outcome> results(batch.size());
      parallel_for(static_cast<long>(batch.size()), jobs, [&](long i) {
        const Tree& tr = batch[i];
        IntPolynomial cp = char_poly(tr);
        SturmChain chain(cp);
        Outcome o;
        o.distinct = chain.count_open(BigRational(-2), BigRational(2));
        long mult_sum = 0;
        for (const auto& [root, mult] : integer_roots(cp).roots) mult_sum += mult;
        o.integral = (mult_sum == tr.n);
        results[i] = o;
      });
      for (size_t i = 0; i < batch.size(); ++i) {
        ++rep.trees_checked;
        if (rep.min_distinct_in_interval < 0 ||
            results[i].distinct < rep.min_distinct_in_interval)
          rep.min_distinct_in_interval = results[i].distinct;
        if (results[i].distinct < 4 || results[i].integral) {
          rep.violations.push_back({n, indices[i], format_edge_record(batch[i]),
                                    results[i].distinct, results[i].integral});
        }
        rep.checkpoint = {n, indices[i] + 1};
      }
    }
    rep.checkpoint = {n, stream.index()};
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

void validate_subdivided_edge(const Tree& t, const SubdividedEdge& edge) {
  const auto& vs = edge.vertices;
  if (vs.size() < 2) throw std::invalid_argument("subdivided edge needs >= 2 vertices");
  for (int v : vs)
    if (v < 1 || v > t.n) throw std::invalid_argument("path vertex out of range");
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    const auto& nb = t.adj[vs[i]];
    if (!std::binary_search(nb.begin(), nb.end(), vs[i + 1]))
      throw std::invalid_argument("path vertices are not adjacent in the tree");
  }
  for (size_t i = 1; i + 1 < vs.size(); ++i)
    if (degree(t, vs[i]) != 2)
      throw std::invalid_argument("inner path vertex " + std::to_string(vs[i]) +
                                  " does not have degree 2");
}

struct ReducedFunction {
  IntPolynomial num, den;        // coprime
  IntPolynomial num_sf, den_sf;  // squarefree parts, for root queries
  std::unique_ptr<SturmChain> num_chain, den_chain;
};

bool poly_has_root_at(const IntPolynomial& sf, const SturmChain& chain,
                      const TraceBreakpoint& b) {
  if (b.exact()) return sf.sign_at(b.lo) == 0;
  return chain.count_open(b.lo, b.hi) > 0;
}

}  // namespace

SignTrace trace_sign_dynamics(const Tree& t, const SubdividedEdge& edge) {
  validate_subdivided_edge(t, edge);
  const auto& path = edge.vertices;
  const int m = static_cast<int>(path.size());
  RootedTree rt = root_at(t, path.front());
  auto rf = d_symbolic_all(rt);

  std::vector<ReducedFunction> funcs(m);
  for (int i = 0; i < m; ++i) {
    const RationalFunction& f = rf[path[i]];
    IntPolynomial g = poly_gcd(f.num, f.den);
    funcs[i].num = divide_exact(f.num, g);
    funcs[i].den = divide_exact(f.den, g);
    funcs[i].num_sf = squarefree_part(funcs[i].num);
    funcs[i].den_sf = squarefree_part(funcs[i].den);
    funcs[i].num_chain = std::make_unique<SturmChain>(funcs[i].num_sf);
    funcs[i].den_chain = std::make_unique<SturmChain>(funcs[i].den_sf);
  }

  // master polynomial holding every event point exactly once
  IntPolynomial master = IntPolynomial::constant(BigInt(1));
  auto merge = [&master](const IntPolynomial& q) {
    if (q.degree() < 1) return;
    master = master * divide_exact(q, poly_gcd(master, q));
  };
  for (const auto& f : funcs) {
    merge(f.num_sf);
    merge(f.den_sf);
  }

  SignTrace trace;
  trace.path = path;

  const BigRational lo_bound(-2), hi_bound(2);
  std::vector<RootEnclosure> encl;
  SturmChain master_chain(master);
  if (master.degree() >= 1) encl = isolate_roots(master, lo_bound, hi_bound);
  // push interval ends strictly inside (-2, 2) so every panel has a sample
  if (!encl.empty()) {
    while (!encl.front().exact() && encl.front().lo == lo_bound)
      refine_enclosure(encl.front(), master_chain);
    while (!encl.back().exact() && encl.back().hi == hi_bound)
      refine_enclosure(encl.back(), master_chain);
  }

  for (const auto& e : encl) {
    TraceBreakpoint b;
    b.lo = e.lo;
    b.hi = e.hi;
    for (int i = 0; i < m; ++i) {
      if (poly_has_root_at(funcs[i].num_sf, *funcs[i].num_chain, b))
        b.zero_positions.push_back(i + 1);
      if (poly_has_root_at(funcs[i].den_sf, *funcs[i].den_chain, b))
        b.pole_positions.push_back(i + 1);
    }
    if (!b.zero_positions.empty() && b.zero_positions.front() == 1) ++trace.root_zero_count;
    trace.breakpoints.push_back(std::move(b));
  }

  // one exact sample strictly between consecutive events
  std::vector<BigRational> samples;
  if (trace.breakpoints.empty()) {
    samples.push_back(BigRational(0));
  } else {
    samples.push_back((lo_bound + trace.breakpoints.front().lo) / 2);
    for (size_t j = 0; j + 1 < trace.breakpoints.size(); ++j) {
      const BigRational& r = trace.breakpoints[j].hi;
      const BigRational& l = trace.breakpoints[j + 1].lo;
      samples.push_back(r == l ? r : (r + l) / 2);
    }
    samples.push_back((trace.breakpoints.back().hi + hi_bound) / 2);
  }

  for (const BigRational& s : samples) {
    std::string row(m, '?');
    for (int i = 0; i < m; ++i) {
      int sign = funcs[i].num.sign_at(s) * funcs[i].den.sign_at(s);
      row[i] = sign > 0 ? '+' : '-';
    }
    trace.panels.push_back(std::move(row));
  }
  return trace;
}

std::pair<int, int> theta_boundary_counts(const Tree& t, const SubdividedEdge& edge) {
  validate_subdivided_edge(t, edge);
  RootedTree rt = root_at(t, edge.vertices.front());
  auto count_pos_or_pole = [&](const BigRational& theta) {
    JTResult jt = jt_evaluate(rt, theta);
    int count = 0;
    for (size_t i = 1; i < edge.vertices.size(); ++i) {
      const DiagValue& dv = jt.values[edge.vertices[i]];
      if (dv.is_pole || (!dv.zeroed_by_fix && sgn(dv.value) > 0)) ++count;
    }
    return count;
  };
  return {count_pos_or_pole(BigRational(2)), count_pos_or_pole(BigRational(-2))};
}

std::vector<std::pair<Tree, SpectrumReport>> search_integral_trees(int n_max, int jobs) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<std::pair<Tree, SpectrumReport>> found;
  for (int n = 1; n <= n_max; ++n) {
    TreeStream stream = enumerate_free_trees(n);
    while (true) {
      std::vector<Tree> batch;
      Tree t;
      while (static_cast<long>(batch.size()) < kBatchSize && stream.next(t))
        batch.push_back(std::move(t));
      if (batch.empty()) break;
      std::vector<SpectrumReport> reports(batch.size());
      parallel_for(static_cast<long>(batch.size()), jobs,
                   [&](long i) { reports[i] = spectrum_report(batch[i]); });
      for (size_t i = 0; i < batch.size(); ++i)
        if (reports[i].is_integral)
          found.emplace_back(std::move(batch[i]), std::move(reports[i]));
    }
  }
  return found;
}

}  // namespace treespec
