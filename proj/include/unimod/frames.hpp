#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "unimod/lattice.hpp"

namespace unimod {

/// Vertices are antipodal pairs {x, -x} of norm-3 vectors; x and y are
/// adjacent when (x, y) = 0.
class FrameGraph {
 public:
  FrameGraph() = default;
  /// Builds the graph on the given representatives (rows, ambient units of a
  /// lattice with the given scale).
  FrameGraph(IntMatrix vertex_vectors, Int scale);
  /// Graph from an explicit adjacency relation; vertex vectors are left empty.
  static FrameGraph from_edges(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges);

  std::size_t vertex_count() const { return n_; }
  bool adjacent(std::size_t a, std::size_t b) const { return (rows_[a][b / 64] >> (b % 64)) & 1U; }
  const std::vector<std::uint64_t>& row(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const;
  /// Common degree when the graph is regular.
  std::optional<std::size_t> valency() const;
  std::size_t edge_count() const;

  const IntMatrix& vertex_vectors() const { return vectors_; }
  Int scale() const { return scale_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
  IntMatrix vectors_;
  Int scale_ = 1;
};

FrameGraph frame_graph(const Lattice& lattice, const EnumerationOptions& options = {});

struct CliqueResult {
  int size = 0;
  std::vector<int> witness;
  /// Set when the search stopped at stop_at; size is then only a lower bound.
  bool stopped_early = false;
};

CliqueResult max_clique(const FrameGraph& graph, std::optional<int> stop_at = std::nullopt);

/// n pairwise orthogonal norm-3 vectors (rows, ambient units), re-verified
/// by exact inner products; absent when there is none.
std::optional<IntMatrix> find_3_frame(const Lattice& lattice, const EnumerationOptions& options = {});
bool has_3_frame(const Lattice& lattice, const EnumerationOptions& options = {});

/// One line per vertex: its neighbor indices, ascending, space separated.
void write_adjacency_list(const FrameGraph& graph, std::ostream& out);

}  // namespace unimod
