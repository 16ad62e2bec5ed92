#pragma once

// Maximum clique search on small dense graphs stored as bitset rows.

#include <cstdint>
#include <vector>

namespace fieldclique::cayley {

class BitGraph {
 public:
  explicit BitGraph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  const std::uint64_t* row(std::size_t v) const { return rows_.data() + v * words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Vertices of one maximum clique, ascending. Branch-and-bound over the
/// Bron-Kerbosch candidate sets with a greedy-colouring upper bound.
std::vector<std::size_t> maximum_clique(const BitGraph& g);

}  // namespace fieldclique::cayley
