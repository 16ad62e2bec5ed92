#include "fieldclique/max_clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "fieldclique/error.hpp"

namespace fieldclique::cayley {

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) raise(Errc::kInvalidArgument, "bad edge");
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool BitGraph::has_edge(std::size_t u, std::size_t v) const {
  return (rows_[u * words_ + v / 64] >> (v % 64)) & 1;
}

std::size_t BitGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[v * words_ + w]);
  return d;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

class Search {
 public:
  explicit Search(const BitGraph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    Bits all(g_.words(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (g_.size() > 0) expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential colouring of the candidate set: classes are built one at
  // a time, so a vertex of colour k certifies at most k more clique members.
  void colour(const Bits& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) {
    Bits uncoloured = cand;
    std::size_t k = 0;
    while (any(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < q.size(); ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          q[w] &= q[w] - 1;
          uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          const std::uint64_t* nbr = g_.row(v);
          for (std::size_t t = w; t < q.size(); ++t) q[t] &= ~nbr[t];
          order.push_back(v);
          bound.push_back(k);
        }
      }
    }
  }

  void expand(Bits cand) {
    std::vector<std::size_t> order, bound;
    colour(cand, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next(cand.size());
      const std::uint64_t* nbr = g_.row(v);
      for (std::size_t w = 0; w < cand.size(); ++w) next[w] = cand[w] & nbr[w];
      if (any(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const BitGraph& g_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> maximum_clique(const BitGraph& g) {
  // Relabel by non-increasing degree; colouring then opens with dense vertices
  // and the bound tightens sooner.
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  BitGraph relabeled(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g.has_edge(perm[i], perm[j])) relabeled.add_edge(i, j);
    }
  }
  auto clique = Search(relabeled).run();
  for (auto& v : clique) v = perm[v];
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace fieldclique::cayley
