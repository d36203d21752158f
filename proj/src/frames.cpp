#include "unimod/frames.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "unimod/errors.hpp"

namespace unimod {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

bool lexicographically_positive(std::span<const Int> v) {
  for (Int x : v)
    if (x != 0) return x > 0;
  return false;
}

// Branch and bound with greedy coloring over bitsets. Vertices are relabeled
// in degeneracy order so that dense cores come first.
class CliqueSearch {
 public:
  CliqueSearch(const FrameGraph& g, std::optional<int> stop_at) : stop_at_(stop_at) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> removal;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v)
        if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
      removed[best] = true;
      removal.push_back(static_cast<int>(best));
      for (std::size_t u = 0; u < n; ++u)
        if (!removed[u] && g.adjacent(best, u)) --deg[u];
    }
    order_.assign(removal.rbegin(), removal.rend());
    words_ = words_for(n);
    adj_.assign(n, Bits(words_, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && g.adjacent(static_cast<std::size_t>(order_[i]), static_cast<std::size_t>(order_[j])))
          set_bit(adj_[i], j);
    n_ = n;
  }

  CliqueResult run() {
    CliqueResult out;
    if (n_ == 0) return out;
    best_.assign(1, 0);
    Bits p(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) set_bit(p, i);
    current_.clear();
    expand(p);
    for (int v : best_) out.witness.push_back(order_[static_cast<std::size_t>(v)]);
    std::sort(out.witness.begin(), out.witness.end());
    out.size = static_cast<int>(best_.size());
    out.stopped_early = done_ && stop_at_ && out.size >= *stop_at_;
    return out;
  }

 private:
  void expand(Bits& p) {
    std::vector<int> verts;
    std::vector<int> colors;
    color(p, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (done_) return;
      if (current_.size() + static_cast<std::size_t>(colors[i]) <= best_.size()) return;
      const int v = verts[i];
      current_.push_back(v);
      Bits q(words_);
      bool empty = true;
      for (std::size_t w = 0; w < words_; ++w) {
        q[w] = p[w] & adj_[static_cast<std::size_t>(v)][w];
        empty = empty && q[w] == 0;
      }
      if (empty) {
        if (current_.size() > best_.size()) {
          best_ = current_;
          if (stop_at_ && static_cast<int>(best_.size()) >= *stop_at_) done_ = true;
        }
      } else {
        expand(q);
      }
      current_.pop_back();
      p[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
    }
  }

  // Vertices of p whose greedy color can still improve on the incumbent,
  // in nondecreasing color order.
  void color(const Bits& p, std::vector<int>& verts, std::vector<int>& colors) const {
    const int kmin = static_cast<int>(best_.size()) - static_cast<int>(current_.size()) + 1;
    Bits u = p;
    int k = 1;
    bool any = true;
    while (any) {
      Bits q = u;
      any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const int bit = std::countr_zero(q[w]);
          const std::size_t v = w * 64 + static_cast<std::size_t>(bit);
          q[w] &= q[w] - 1;
          u[w] &= ~(std::uint64_t{1} << bit);
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~adj_[v][x];
          if (k >= kmin) {
            verts.push_back(static_cast<int>(v));
            colors.push_back(k);
          }
        }
      }
      for (std::size_t w = 0; w < words_; ++w) any = any || u[w] != 0;
      ++k;
    }
  }

  std::optional<int> stop_at_;
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<int> order_;
  std::vector<Bits> adj_;
  std::vector<int> current_;
  std::vector<int> best_;
  bool done_ = false;
};

}  // namespace

FrameGraph::FrameGraph(IntMatrix vertex_vectors, Int scale)
    : n_(vertex_vectors.rows()), vectors_(std::move(vertex_vectors)), scale_(scale) {
  rows_.assign(n_, Bits(words_for(n_), 0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (checked_dot(vectors_.row(i), vectors_.row(j)) == 0) {
        set_bit(rows_[i], j);
        set_bit(rows_[j], i);
      }
}

FrameGraph FrameGraph::from_edges(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges) {
  FrameGraph g;
  g.n_ = vertex_count;
  g.rows_.assign(vertex_count, Bits(words_for(vertex_count), 0));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vertex_count || static_cast<std::size_t>(b) >= vertex_count)
      throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("self-loops are not allowed");
    set_bit(g.rows_[static_cast<std::size_t>(a)], static_cast<std::size_t>(b));
    set_bit(g.rows_[static_cast<std::size_t>(b)], static_cast<std::size_t>(a));
  }
  return g;
}

std::size_t FrameGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : rows_[v]) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::optional<std::size_t> FrameGraph::valency() const {
  if (n_ == 0) return std::nullopt;
  const std::size_t d = degree(0);
  for (std::size_t v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

std::size_t FrameGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

FrameGraph frame_graph(const Lattice& lattice, const EnumerationOptions& options) {
  const IntMatrix all = vectors_of_norm(lattice, 3, options);
  IntMatrix reps(0, lattice.dimension());
  for (std::size_t i = 0; i < all.rows(); ++i)
    if (lexicographically_positive(all.row(i))) reps.append_row(all.row(i));
  if (reps.rows() * 2 != all.rows()) throw Error("norm-3 vectors do not pair up");
  return FrameGraph(std::move(reps), lattice.scale());
}

CliqueResult max_clique(const FrameGraph& graph, std::optional<int> stop_at) {
  return CliqueSearch(graph, stop_at).run();
}

std::optional<IntMatrix> find_3_frame(const Lattice& lattice, const EnumerationOptions& options) {
  const int n = static_cast<int>(lattice.dimension());
  const FrameGraph g = frame_graph(lattice, options);
  if (static_cast<int>(g.vertex_count()) < n) return std::nullopt;
  const CliqueResult c = max_clique(g, n);
  if (c.size < n) return std::nullopt;
  IntMatrix frame(0, lattice.dimension());
  for (int i = 0; i < n; ++i) frame.append_row(g.vertex_vectors().row(static_cast<std::size_t>(c.witness[i])));
  for (std::size_t i = 0; i < frame.rows(); ++i) {
    if (checked_dot(frame.row(i), frame.row(i)) != 3 * lattice.scale()) throw Error("frame vector has wrong norm");
    for (std::size_t j = i + 1; j < frame.rows(); ++j)
      if (checked_dot(frame.row(i), frame.row(j)) != 0) throw Error("frame vectors are not orthogonal");
  }
  return frame;
}

bool has_3_frame(const Lattice& lattice, const EnumerationOptions& options) {
  return find_3_frame(lattice, options).has_value();
}

void write_adjacency_list(const FrameGraph& graph, std::ostream& out) {
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    bool first = true;
    for (std::size_t u = 0; u < graph.vertex_count(); ++u)
      if (graph.adjacent(v, u)) {
        out << (first ? "" : " ") << u;
        first = false;
      }
    out << '\n';
  }
}

}  // namespace unimod
