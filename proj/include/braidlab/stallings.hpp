#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "braidlab/free_group.hpp"

namespace braidlab {

/// Folded core graph of a finitely generated subgroup of a free group.
/// Vertex 0 is the base vertex; vertices are numbered in breadth-first order
/// from it, so equal subgroups built from the same generators produce equal
/// graphs.
class SubgroupGraph {
 public:
  struct Edge {
    int source = 0;
    int label = 1;  // letter index; traversed backwards for the inverse
    int target = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  SubgroupGraph(int rank, int vertex_count, std::vector<Edge> edges);

  int rank() const noexcept { return rank_; }
  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  static constexpr int base() noexcept { return 0; }

  /// No vertex has two outgoing edges with the same signed label.
  bool is_folded() const;
  /// Every non-base vertex has degree >= 2.
  bool is_core() const;

  /// Rank of the subgroup: E - V + 1.
  long subgroup_rank() const {
    return static_cast<long>(edges_.size()) - vertex_count_ + 1;
  }

  /// Endpoint of the edge leaving `vertex` with signed label `letter`.
  std::optional<int> follow(int vertex, int letter) const;

  bool contains(const FreeWord& w) const;

  /// Subgroup elements as reduced closed paths at the base vertex, in
  /// length-lex order (x < x^-1 < y < y^-1 < ...), up to `max_length` letters
  /// and at most `max_count` words. The empty word comes first.
  std::vector<FreeWord> elements(std::size_t max_length, std::size_t max_count) const;

 private:
  int rank_;
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::optional<int>>> out_;  // [vertex][code]
};

/// Builds one petal per generator and folds until no two edges leaving a
/// vertex share a label, then trims hanging trees.
SubgroupGraph stallings_graph(std::span<const FreeWord> generators, int rank);

bool subgroup_contains(const SubgroupGraph& g, const FreeWord& w);

/// Signed letter to position in the order x < x^-1 < y < y^-1 < ...
inline int letter_code(int letter) { return 2 * ((letter < 0 ? -letter : letter) - 1) + (letter < 0 ? 1 : 0); }
inline int code_letter(int code) { return code % 2 == 0 ? code / 2 + 1 : -(code / 2 + 1); }

}  // namespace braidlab
