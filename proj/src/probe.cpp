#include "braidlab/probe.hpp"

#include "braidlab/errors.hpp"

namespace braidlab {

BallEnumerator::BallEnumerator(int rank, std::size_t radius) : rank_(rank), radius_(radius) {
  if (rank < 1) throw DomainError("free group rank must be at least 1");
}

bool BallEnumerator::advance() {
  const int codes = 2 * rank_;
  // Inverse of code c is c ^ 1.
  for (std::size_t pos = codes_.size(); pos-- > 0;) {
    for (int c = codes_[pos] + 1; c < codes; ++c) {
      if (pos > 0 && c == (codes_[pos - 1] ^ 1)) continue;
      codes_[pos] = c;
      for (std::size_t k = pos + 1; k < codes_.size(); ++k) codes_[k] = codes_[k - 1] == 1 ? 1 : 0;
      return true;
    }
  }
  return false;
}

std::optional<FreeWord> BallEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return FreeWord(rank_);
  }
  if (length_ == 0 || !advance()) {
    ++length_;
    if (length_ > radius_) {
      done_ = true;
      return std::nullopt;
    }
    codes_.assign(length_, 0);
  }
  std::vector<int> letters;
  letters.reserve(codes_.size());
  for (int c : codes_) letters.push_back(code_letter(c));
  return FreeWord::from_signed_letters(rank_, letters);
}

std::vector<FreeWord> ball(int rank, std::size_t radius) {
  std::vector<FreeWord> out;
  BallEnumerator e(rank, radius);
  while (auto w = e.next()) out.push_back(std::move(*w));
  return out;
}

ConvexityResult convexity_probe(const std::vector<FreeWord>& generators, const ExoticContext& ctx,
                                const ConvexityOptions& options) {
  if (generators.empty()) throw DomainError("convexity_probe needs at least one generator");
  ConvexityResult result;
  const SubgroupGraph graph = stallings_graph(generators, ctx.rank());
  // {1} and the whole group are convex; every other subgroup has a witness.
  const bool whole = graph.vertex_count() == 1 && graph.edges().size() == static_cast<std::size_t>(ctx.rank());
  if (graph.edges().empty() || whole) {
    result.vacuous = true;
    return result;
  }
  const std::size_t length = options.subgroup_length.value_or(2 * options.radius);
  const std::vector<FreeWord> members = graph.elements(length, options.max_subgroup_elements);
  result.subgroup_elements = members.size();

  const auto less = [&](const FreeWord& a, const FreeWord& b) {
    return exotic_compare(a, b, ctx) == Ordering::less;
  };
  // Extremes of the enumerated members; g is sandwiched by some pair iff it
  // lies strictly between them.
  const FreeWord* lowest = &members.front();
  const FreeWord* highest = &members.front();
  for (const auto& m : members) {
    if (less(m, *lowest)) lowest = &m;
    if (less(*highest, m)) highest = &m;
  }

  BallEnumerator candidates(ctx.rank(), options.radius);
  std::size_t index = 0;
  while (auto g = candidates.next()) {
    ++index;
    if (graph.contains(*g)) continue;
    ++result.candidates_examined;
    if (!less(*lowest, *g) || !less(*g, *highest)) continue;
    // Report the first bounding members in enumeration order.
    const FreeWord* low = nullptr;
    const FreeWord* high = nullptr;
    for (const auto& m : members) {
      if (!low && less(m, *g)) low = &m;
      if (!high && less(*g, m)) high = &m;
      if (low && high) break;
    }
    result.witness = ConvexityWitness{*low, *high, *g, ctx};
    result.witness_index = index;
    return result;
  }
  return result;
}

bool witness_is_valid(const ConvexityWitness& w, const std::vector<FreeWord>& generators) {
  const ExoticContext& ctx = w.context;
  const SubgroupGraph graph = stallings_graph(generators, ctx.rank());
  return graph.contains(w.c_low) && graph.contains(w.c_high) && !graph.contains(w.g) &&
         exotic_compare(w.c_low, w.g, ctx) == Ordering::less &&
         exotic_compare(w.g, w.c_high, ctx) == Ordering::less;
}

std::optional<std::pair<FreeWord, FreeWord>> conradian_violation_search(const ExoticContext& ctx,
                                                                        std::size_t radius) {
  std::vector<FreeWord> positives;
  for (auto& w : ball(ctx.rank(), radius))
    if (exotic_sign(w, ctx).positive()) positives.push_back(std::move(w));
  for (const auto& g : positives) {
    const FreeWord g2 = g * g;
    for (const auto& h : positives)
      if (exotic_compare(h * g2, g, ctx) == Ordering::less) return std::pair{g, h};
  }
  return std::nullopt;
}

}  // namespace braidlab
