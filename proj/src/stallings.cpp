#include "braidlab/stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "braidlab/errors.hpp"

namespace braidlab {

SubgroupGraph::SubgroupGraph(int rank, int vertex_count, std::vector<Edge> edges)
    : rank_(rank), vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  out_.assign(static_cast<std::size_t>(vertex_count_),
              std::vector<std::optional<int>>(static_cast<std::size_t>(2 * rank_)));
  for (const auto& e : edges_) {
    out_[static_cast<std::size_t>(e.source)][static_cast<std::size_t>(letter_code(e.label))] = e.target;
    out_[static_cast<std::size_t>(e.target)][static_cast<std::size_t>(letter_code(-e.label))] = e.source;
  }
}

bool SubgroupGraph::is_folded() const {
  std::vector<int> count(static_cast<std::size_t>(vertex_count_ * 2 * rank_), 0);
  for (const auto& e : edges_) {
    if (++count[static_cast<std::size_t>(e.source * 2 * rank_ + letter_code(e.label))] > 1) return false;
    if (++count[static_cast<std::size_t>(e.target * 2 * rank_ + letter_code(-e.label))] > 1) return false;
  }
  return true;
}

bool SubgroupGraph::is_core() const {
  std::vector<int> degree(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& e : edges_) {
    ++degree[static_cast<std::size_t>(e.source)];
    ++degree[static_cast<std::size_t>(e.target)];
  }
  for (int v = 1; v < vertex_count_; ++v)
    if (degree[static_cast<std::size_t>(v)] < 2) return false;
  return true;
}

std::optional<int> SubgroupGraph::follow(int vertex, int letter) const {
  const int a = letter < 0 ? -letter : letter;
  if (a < 1 || a > rank_) return std::nullopt;
  return out_[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(letter_code(letter))];
}

bool SubgroupGraph::contains(const FreeWord& w) const {
  if (w.rank() != rank_) throw DomainError("word rank does not match subgroup graph rank");
  int v = base();
  for (int l : w.signed_letters()) {
    const auto next = follow(v, l);
    if (!next) return false;
    v = *next;
  }
  return v == base();
}

std::vector<FreeWord> SubgroupGraph::elements(std::size_t max_length, std::size_t max_count) const {
  std::vector<FreeWord> out;
  if (max_count == 0) return out;
  std::vector<int> path;
  const int codes = 2 * rank_;
  // Depth-first search over reduced paths of exactly `length` letters, taken
  // in code order so each length comes out lexicographically.
  const auto search = [&](auto&& self, int vertex, std::size_t length) -> void {
    if (out.size() >= max_count) return;
    if (path.size() == length) {
      if (vertex == base()) out.push_back(FreeWord::from_signed_letters(rank_, path));
      return;
    }
    for (int code = 0; code < codes; ++code) {
      const int letter = code_letter(code);
      if (!path.empty() && path.back() == -letter) continue;
      const auto& next = out_[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(code)];
      if (!next) continue;
      path.push_back(letter);
      self(self, *next, length);
      path.pop_back();
      if (out.size() >= max_count) return;
    }
  };
  for (std::size_t length = 0; length <= max_length && out.size() < max_count; ++length)
    search(search, base(), length);
  return out;
}

SubgroupGraph stallings_graph(std::span<const FreeWord> generators, int rank) {
  if (rank < 1) throw DomainError("free group rank must be at least 1");
  using Edge = SubgroupGraph::Edge;

  // Petals.
  std::vector<Edge> edges;
  int vertices = 1;
  for (const auto& g : generators) {
    if (g.rank() != rank) throw DomainError("generator rank does not match");
    const auto letters = g.signed_letters();
    if (letters.empty()) continue;
    int current = 0;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const int next = k + 1 == letters.size() ? 0 : vertices++;
      const int l = letters[k];
      if (l > 0) edges.push_back({current, l, next});
      else edges.push_back({next, -l, current});
      current = next;
    }
  }

  // Fold: merge the two endpoints of any pair of equally labelled edges that
  // share a source (or a target), until a fixed point. Roots are the lowest
  // vertex of each class.
  std::vector<int> parent(static_cast<std::size_t>(vertices));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& e : edges) e = {find(e.source), e.label, find(e.target)};
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::vector<int>> seen(static_cast<std::size_t>(vertices),
                                       std::vector<int>(static_cast<std::size_t>(2 * rank), -1));
    for (const auto& e : edges) {
      const std::pair<int, int> sides[2] = {{e.source, letter_code(e.label)},
                                            {e.target, letter_code(-e.label)}};
      const int ends[2] = {e.target, e.source};
      for (int s = 0; s < 2; ++s) {
        int& slot = seen[static_cast<std::size_t>(sides[s].first)][static_cast<std::size_t>(sides[s].second)];
        const int other = find(ends[s]);
        if (slot == -1) {
          slot = other;
        } else if (find(slot) != other) {
          const int a = find(slot);
          const int b = other;
          parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
          changed = true;
        }
      }
    }
  }

  // Trim hanging trees.
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::vector<int> degree(static_cast<std::size_t>(vertices), 0);
    for (const auto& e : edges) {
      ++degree[static_cast<std::size_t>(e.source)];
      ++degree[static_cast<std::size_t>(e.target)];
    }
    const auto hanging = [&](const Edge& e) {
      return (e.source != 0 && degree[static_cast<std::size_t>(e.source)] == 1) ||
             (e.target != 0 && degree[static_cast<std::size_t>(e.target)] == 1);
    };
    const auto before = edges.size();
    edges.erase(std::remove_if(edges.begin(), edges.end(), hanging), edges.end());
    trimmed = edges.size() != before;
  }

  // Renumber breadth-first from the base, following letters in code order.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices),
                                    std::vector<int>(static_cast<std::size_t>(2 * rank), -1));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.source)][static_cast<std::size_t>(letter_code(e.label))] = e.target;
    adj[static_cast<std::size_t>(e.target)][static_cast<std::size_t>(letter_code(-e.label))] = e.source;
  }
  std::vector<int> order(static_cast<std::size_t>(vertices), -1);
  std::deque<int> queue{0};
  order[0] = 0;
  int next_id = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int code = 0; code < 2 * rank; ++code) {
      const int w = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(code)];
      if (w >= 0 && order[static_cast<std::size_t>(w)] < 0) {
        order[static_cast<std::size_t>(w)] = next_id++;
        queue.push_back(w);
      }
    }
  }
  for (auto& e : edges)
    e = {order[static_cast<std::size_t>(e.source)], e.label, order[static_cast<std::size_t>(e.target)]};
  return SubgroupGraph(rank, next_id, std::move(edges));
}

bool subgroup_contains(const SubgroupGraph& g, const FreeWord& w) { return g.contains(w); }

}  // namespace braidlab
