#include "enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "unimod/errors.hpp"

namespace unimod::detail {

bool EnumerationProblem::has_offset() const {
  return std::any_of(offset_num.begin(), offset_num.end(), [](Int v) { return v != 0; });
}

namespace {

using Real = long double;

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t budget) : budget_(budget) {}

  void charge(std::uint64_t nodes) {
    const std::uint64_t total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > budget_)
      throw BudgetExceeded("enumeration exceeded the node budget of " + std::to_string(budget_) +
                           " (raise it with --budget)");
  }
  std::uint64_t used() const { return used_.load(); }

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> used_{0};
};

// Depth-first Fincke-Pohst enumeration on the Cholesky data of one problem.
// Levels run from dim-1 (top) down to 0. Center partial sums are cached per
// level and recomputed only from the highest coordinate that changed.
class Tree {
 public:
  Tree(const EnumerationProblem& p, bool symmetric) : n_(static_cast<int>(p.gram.rows())), symmetric_(symmetric) {
    const auto n = static_cast<std::size_t>(n_);
    mu_.assign(n * n, 0);
    r_.assign(n, 0);
    offset_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      offset_[i] = p.offset_num.empty() ? 0 : static_cast<Real>(p.offset_num[i]) / static_cast<Real>(p.denominator);
      for (std::size_t j = 0; j < i; ++j) {
        Real s = static_cast<Real>(p.gram(i, j)) / static_cast<Real>(p.scale);
        for (std::size_t k = 0; k < j; ++k) s -= mu_[j * n + k] * mu_[i * n + k] * r_[k];
        mu_[i * n + j] = s / r_[j];
      }
      Real d = static_cast<Real>(p.gram(i, i)) / static_cast<Real>(p.scale);
      for (std::size_t k = 0; k < i; ++k) d -= mu_[i * n + k] * mu_[i * n + k] * r_[k];
      if (!(d > 0)) throw InvalidArgument("Gram matrix is not positive definite");
      r_[i] = d;
    }
    x_.assign(n, 0);
    center_.assign(n, 0);
    hi_.assign(n, 0);
    dist_.assign(n + 1, 0);
    allzero_.assign(n + 1, 1);
    sums_.assign(n * (n + 1), 0);
    begin_.assign(n + 1, n_ - 1);
  }

  int dim() const { return n_; }

  // Visit(const std::vector<Int>& x, int level) is called for every point at
  // level 0 (full vectors) or at stop_level (prefixes). `radius` may be
  // lowered by the visitor. Levels >= start_level are taken from prefix.
  template <typename Visit>
  void run(const std::vector<Int>& prefix, int start_level, int stop_level, Real& radius, NodeBudget& budget,
           Visit&& visit) {
    const auto n = static_cast<std::size_t>(n_);
    dist_[n] = 0;
    allzero_[n] = 1;
    for (int k = n_ - 1; k >= start_level; --k) {
      Real c = -offset_[idx(k)];
      for (int i = k + 1; i < n_; ++i) c -= mu_[idx(i) * n + idx(k)] * (static_cast<Real>(x_[idx(i)]) + offset_[idx(i)]);
      center_[idx(k)] = c;
      x_[idx(k)] = prefix[idx(k)];
      const Real diff = static_cast<Real>(x_[idx(k)]) - c;
      dist_[idx(k)] = dist_[idx(k + 1)] + r_[idx(k)] * diff * diff;
      allzero_[idx(k)] = allzero_[idx(k + 1)] && x_[idx(k)] == 0;
    }
    if (start_level == 0) {
      if (dist_[0] <= radius && !(symmetric_ && allzero_[0])) visit(x_, 0);
      return;
    }
    if (dist_[idx(start_level)] > radius) return;
    std::fill(begin_.begin(), begin_.end(), n_ - 1);

    std::uint64_t local = 0;
    int k = start_level - 1;
    enter(k, radius);
    while (true) {
      if (x_[idx(k)] > hi_[idx(k)]) {
        ++k;
        if (k >= start_level) break;
        ++x_[idx(k)];
        continue;
      }
      if (++local == 4096) {
        budget.charge(local);
        local = 0;
      }
      const Real diff = static_cast<Real>(x_[idx(k)]) - center_[idx(k)];
      const Real d = dist_[idx(k + 1)] + r_[idx(k)] * diff * diff;
      if (d > radius) {
        if (diff > 0)
          hi_[idx(k)] = x_[idx(k)] - 1;
        else
          ++x_[idx(k)];
        continue;
      }
      dist_[idx(k)] = d;
      if (k == 0 || k == stop_level) {
        visit(x_, k);
        ++x_[idx(k)];
        continue;
      }
      allzero_[idx(k)] = allzero_[idx(k + 1)] && x_[idx(k)] == 0;
      --k;
      enter(k, radius);
    }
    budget.charge(local);
  }

 private:
  static std::size_t idx(int k) { return static_cast<std::size_t>(k); }

  void enter(int k, Real radius) {
    const auto n = static_cast<std::size_t>(n_);
    Real* row = &sums_[idx(k) * (n + 1)];
    row[n] = 0;
    for (int j = begin_[idx(k + 1)]; j > k; --j)
      row[idx(j)] = row[idx(j + 1)] + mu_[idx(j) * n + idx(k)] * (static_cast<Real>(x_[idx(j)]) + offset_[idx(j)]);
    begin_[idx(k)] = std::max(begin_[idx(k)], begin_[idx(k + 1)]);
    begin_[idx(k + 1)] = k + 1;
    const Real c = -offset_[idx(k)] - row[idx(k + 1)];
    center_[idx(k)] = c;
    Real rem = radius - dist_[idx(k + 1)];
    if (rem < 0) rem = 0;
    const Real w = std::sqrt(rem / r_[idx(k)]);
    Int lo = static_cast<Int>(std::ceil(c - w));
    hi_[idx(k)] = static_cast<Int>(std::floor(c + w));
    if (symmetric_ && allzero_[idx(k + 1)]) lo = std::max<Int>(lo, k == 0 ? 1 : 0);
    x_[idx(k)] = lo;
  }

  int n_;
  bool symmetric_;
  std::vector<Real> mu_, r_, offset_;
  std::vector<Int> x_;
  std::vector<Real> center_;
  std::vector<Int> hi_;
  std::vector<Real> dist_;
  std::vector<char> allzero_;
  std::vector<Real> sums_;
  std::vector<int> begin_;
};

Int exact_numerator(const EnumerationProblem& p, const std::vector<Int>& x) {
  const std::size_t n = p.gram.rows();
  thread_local std::vector<Int> y;
  y.resize(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = p.denominator * x[i] + (p.offset_num.empty() ? 0 : p.offset_num[i]);
  __int128 acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < n; ++j) row += static_cast<__int128>(p.gram(i, j)) * y[j];
    acc += row * y[i];
  }
  return static_cast<Int>(acc);
}

// Radius that admits every point with numerator <= bound_num despite rounding.
Real float_radius(const EnumerationProblem& p, Int bound_num) {
  return (static_cast<Real>(bound_num) + 0.5L) / static_cast<Real>(p.norm_denominator());
}

unsigned resolve_threads(const EnumerationOptions& options) {
  unsigned t = options.threads ? options.threads : std::thread::hardware_concurrency();
  return std::max(1u, t);
}

std::map<Int, std::uint64_t> count_single(const EnumerationProblem& p, Int bound_num, const EnumerationOptions& options,
                                          NodeBudget& budget) {
  const bool symmetric = !p.has_offset();
  const std::uint64_t weight = symmetric ? 2 : 1;
  std::map<Int, std::uint64_t> counts;
  if (symmetric) counts[0] = 1;
  Tree tree(p, symmetric);
  const int n = tree.dim();
  Real radius = float_radius(p, bound_num);
  const unsigned threads = resolve_threads(options);

  auto leaf_counter = [&](std::map<Int, std::uint64_t>& out) {
    return [&p, &out, bound_num, weight](const std::vector<Int>& x, int) {
      const Int num = exact_numerator(p, x);
      if (num <= bound_num) out[num] += weight;
    };
  };

  if (threads == 1 || n < 8) {
    tree.run({}, n, -1, radius, budget, leaf_counter(counts));
    return counts;
  }

  // Split the tree at a level with enough subtrees to keep workers busy.
  std::vector<std::vector<Int>> prefixes;
  int stop = n - 1;
  for (;; --stop) {
    prefixes.clear();
    tree.run({}, n, stop, radius, budget, [&](const std::vector<Int>& x, int) { prefixes.push_back(x); });
    if (stop == 1 || prefixes.size() >= 32 * static_cast<std::size_t>(threads)) break;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::map<Int, std::uint64_t>> partial(threads);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](unsigned id) {
    try {
      Tree local(p, symmetric);
      Real r = radius;
      auto visit = leaf_counter(partial[id]);
      for (std::size_t t = next++; t < prefixes.size(); t = next++) local.run(prefixes[t], stop, -1, r, budget, visit);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = prefixes.size();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  for (const auto& m : partial)
    for (const auto& [num, c] : m) counts[num] += c;
  return counts;
}

std::optional<Int> minimum_single(const EnumerationProblem& p, Int limit_num, NodeBudget& budget) {
  const bool symmetric = !p.has_offset();
  Tree tree(p, symmetric);
  Real radius = float_radius(p, limit_num);
  std::optional<Int> best;
  const Real den = static_cast<Real>(p.norm_denominator());
  tree.run({}, tree.dim(), -1, radius, budget, [&](const std::vector<Int>& x, int) {
    const Int num = exact_numerator(p, x);
    if (num > limit_num || (best && num >= *best)) return;
    if (symmetric && num == 0) return;
    best = num;
    // From now on only strictly shorter points matter.
    radius = (static_cast<Real>(num) - 0.5L) / den;
  });
  return best;
}

// Connected components of the nonzero pattern of the Gram matrix.
std::vector<std::vector<std::size_t>> orthogonal_components(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram(i, j) != 0) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

EnumerationProblem restrict_to(const EnumerationProblem& p, const std::vector<std::size_t>& members) {
  EnumerationProblem sub;
  sub.scale = p.scale;
  sub.denominator = p.denominator;
  sub.gram = IntMatrix(members.size(), members.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) sub.gram(a, b) = p.gram(members[a], members[b]);
    sub.offset_num.push_back(p.offset_num.empty() ? 0 : p.offset_num[members[a]]);
  }
  return sub;
}

std::map<Int, std::uint64_t> convolve(const std::map<Int, std::uint64_t>& a, const std::map<Int, std::uint64_t>& b,
                                      Int bound_num) {
  std::map<Int, std::uint64_t> out;
  for (const auto& [na, ca] : a)
    for (const auto& [nb, cb] : b) {
      if (na + nb > bound_num) break;
      std::uint64_t prod;
      if (__builtin_mul_overflow(ca, cb, &prod) || __builtin_add_overflow(out[na + nb], prod, &out[na + nb]))
        throw Overflow("vector count exceeds 64 bits");
    }
  return out;
}

}  // namespace

std::map<Int, std::uint64_t> count_points(const EnumerationProblem& problem, Int bound_num,
                                          const EnumerationOptions& options) {
  if (bound_num < 0) return {};
  NodeBudget budget(options.node_budget);
  const auto components = orthogonal_components(problem.gram);
  if (components.size() == 1) return count_single(problem, bound_num, options, budget);
  // Orthogonal sum: counts multiply as power series.
  std::map<Int, std::uint64_t> total{{0, 1}};
  for (const auto& members : components)
    total = convolve(total, count_single(restrict_to(problem, members), bound_num, options, budget), bound_num);
  return total;
}

std::optional<Int> minimum_norm(const EnumerationProblem& problem, Int limit_num, const EnumerationOptions& options) {
  if (limit_num < 0) return std::nullopt;
  NodeBudget budget(options.node_budget);
  const auto components = orthogonal_components(problem.gram);
  if (components.size() == 1) return minimum_single(problem, limit_num, budget);
  // Each component contributes its own minimum; a zero-offset component
  // may also contribute the zero vector.
  Int sum = 0;
  std::optional<Int> best_nonzero_gain;  // for plain lattices: smallest component minimum
  const bool plain = !problem.has_offset();
  for (const auto& members : components) {
    EnumerationProblem sub = restrict_to(problem, members);
    if (plain) {
      auto m = minimum_single(sub, limit_num, budget);
      if (m && (!best_nonzero_gain || *m < *best_nonzero_gain)) best_nonzero_gain = m;
      continue;
    }
    if (!sub.has_offset()) continue;  // zero vector of this component
    auto m = minimum_single(sub, limit_num - sum, budget);
    if (!m) return std::nullopt;
    sum += *m;
  }
  if (plain) return best_nonzero_gain;
  return sum;
}

std::vector<std::vector<Int>> points_of_norm(const EnumerationProblem& problem, Int target_num,
                                             const EnumerationOptions& options) {
  if (problem.has_offset()) throw InvalidArgument("points_of_norm expects a plain lattice");
  NodeBudget budget(options.node_budget);
  Tree tree(problem, true);
  Real radius = float_radius(problem, target_num);
  std::vector<std::vector<Int>> out;
  tree.run({}, tree.dim(), -1, radius, budget, [&](const std::vector<Int>& x, int) {
    if (exact_numerator(problem, x) != target_num) return;
    out.push_back(x);
    std::vector<Int> neg(x.size());
    std::transform(x.begin(), x.end(), neg.begin(), [](Int v) { return -v; });
    out.push_back(std::move(neg));
  });
  return out;
}

}  // namespace unimod::detail
