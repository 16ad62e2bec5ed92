#include "fieldclique/cayley.hpp"

#include <algorithm>

#include "fieldclique/arith.hpp"
#include "fieldclique/error.hpp"
#include "fieldclique/max_clique.hpp"

namespace fieldclique::cayley {

std::string_view to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::kGeneralizedPaley: return "paley";
    case GraphFamily::kGeneralizedPeisert: return "peisert";
    case GraphFamily::kResidueClass: return "residue";
  }
  return "unknown";
}

std::string_view to_string(ExtensionStrategy strategy) {
  return strategy == ExtensionStrategy::kExact ? "exact" : "greedy";
}

GraphKind GraphKind::paley(std::uint32_t d) {
  if (d < 2) raise(Errc::kInvalidArgument, "generalized Paley graphs need d > 1");
  return GraphKind(GraphFamily::kGeneralizedPaley, d, {0});
}

GraphKind GraphKind::peisert(std::uint32_t d) {
  if (d < 2 || d % 2 != 0) raise(Errc::kOddD, "generalized Peisert graphs need an even d >= 2");
  if (d == 2) return paley(2);
  std::vector<std::uint32_t> residues(d / 2);
  for (std::uint32_t j = 0; j < d / 2; ++j) residues[j] = j;
  return GraphKind(GraphFamily::kGeneralizedPeisert, d, std::move(residues));
}

GraphKind GraphKind::residue_class(std::uint32_t d, std::vector<std::uint32_t> residues) {
  if (d == 0) raise(Errc::kInvalidArgument, "d must be positive");
  if (residues.empty()) raise(Errc::kEmptyJ, "residue set J is empty");
  for (auto j : residues) {
    if (j >= d) raise(Errc::kInvalidArgument, "residue " + std::to_string(j) + " not below d");
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  return GraphKind(GraphFamily::kResidueClass, d, std::move(residues));
}

CayleyGraph::CayleyGraph(ff::FieldPtr field, GraphKind kind)
    : field_(std::move(field)), kind_(std::move(kind)) {
  const std::uint64_t q = field_->order();
  const std::uint64_t d = kind_.d();
  if ((q - 1) % (2 * d) != 0) {
    raise(Errc::kDegenerateModulus,
          "field order " + std::to_string(q) + " is not 1 mod 2d = " + std::to_string(2 * d));
  }
  in_class_.assign(d, 0);
  for (auto j : kind_.residues()) in_class_[j] = 1;

  // -1 = g^((Q-1)/2); negation shifts every log residue by this amount.
  const std::uint64_t shift = ((q - 1) / 2) % d;
  for (std::uint64_t j = 0; j < d; ++j) {
    if (in_class_[j] != in_class_[(j + shift) % d]) {
      raise(Errc::kDegenerateModulus, "connection set is not closed under negation");
    }
  }
}

std::vector<Element> CayleyGraph::connection_set() const {
  std::vector<Element> out;
  for (std::uint32_t c = 1; c < order(); ++c) {
    if (in_connection_set(Element{c})) out.push_back(Element{c});
  }
  return out;
}

bool CayleyGraph::adjacent(Element u, Element v) const {
  if (u == v) raise(Errc::kSelfLoopQuery, "adjacency of a vertex with itself");
  return in_connection_set(field_->sub(u, v));
}

bool CayleyGraph::is_clique(std::span<const Element> clique) const {
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (clique[i] == clique[j]) continue;
      if (!in_connection_set(field_->sub(clique[i], clique[j]))) return false;
    }
  }
  return true;
}

std::vector<Element> CayleyGraph::common_neighbors(std::span<const Element> clique) const {
  std::vector<Element> members(clique.begin(), clique.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<Element> out;
  for (std::uint32_t c = 0; c < order(); ++c) {
    const Element v{c};
    if (std::binary_search(members.begin(), members.end(), v)) continue;
    bool all = true;
    for (const Element& m : members) {
      if (!in_connection_set(field_->sub(v, m))) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(v);
  }
  return out;
}

MaximalityResult CayleyGraph::is_maximal_clique(std::span<const Element> clique) const {
  if (!is_clique(clique)) raise(Errc::kNotAClique, "input set is not a clique");
  MaximalityResult result;
  result.witnesses = common_neighbors(clique);
  result.is_maximal = result.witnesses.empty();
  return result;
}

CliqueReport CayleyGraph::extend_to_maximal_clique(std::span<const Element> clique,
                                                   ExtensionStrategy strategy,
                                                   std::size_t exact_budget) const {
  if (!is_clique(clique)) raise(Errc::kNotAClique, "input set is not a clique");
  CliqueReport report;
  report.method = strategy;
  report.clique.assign(clique.begin(), clique.end());
  std::vector<Element> candidates = common_neighbors(clique);

  if (strategy == ExtensionStrategy::kGreedy) {
    while (!candidates.empty()) {
      const Element pick = candidates.front();
      report.clique.push_back(pick);
      std::vector<Element> next;
      for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (in_connection_set(field_->sub(candidates[i], pick))) next.push_back(candidates[i]);
      }
      candidates = std::move(next);
    }
  } else {
    if (candidates.size() > exact_budget) {
      raise(Errc::kExactBudgetExceeded, std::to_string(candidates.size()) +
                                            " common neighbours exceed the exact budget " +
                                            std::to_string(exact_budget));
    }
    BitGraph sub(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (in_connection_set(field_->sub(candidates[i], candidates[j]))) sub.add_edge(i, j);
      }
    }
    for (std::size_t idx : maximum_clique(sub)) report.clique.push_back(candidates[idx]);
  }

  std::sort(report.clique.begin(), report.clique.end());
  report.clique.erase(std::unique(report.clique.begin(), report.clique.end()), report.clique.end());
  auto check = is_maximal_clique(report.clique);
  report.is_maximal = check.is_maximal;
  report.witnesses = std::move(check.witnesses);
  return report;
}

bool CayleyGraph::subfield_is_clique(std::uint32_t r) const {
  const ff::FieldTable& f = *field_;
  if (r == 0 || f.degree() % r != 0) {
    raise(Errc::kNotADivisor, std::to_string(r) + " does not divide " + std::to_string(f.degree()));
  }
  const std::uint64_t sub_order = ipow(f.characteristic(), r);
  const std::uint64_t step = (f.order() - 1) / (sub_order - 1);
  // Differences of subfield elements stay in the subfield, so it suffices
  // that every nonzero subfield element lies in S.
  for (std::uint64_t k = 0; k < sub_order - 1; ++k) {
    if (!in_connection_set(f.exp(k * step))) return false;
  }
  return true;
}

bool CayleyGraph::is_maximal_subfield_clique(std::uint32_t r) const {
  if (!subfield_is_clique(r)) {
    raise(Errc::kNotAClique, "the subfield of degree " + std::to_string(r) + " is not a clique");
  }
  const std::uint32_t e = field_->degree();
  for (std::uint64_t m : divisors(e)) {
    if (m > r && m % r == 0 && subfield_is_clique(static_cast<std::uint32_t>(m))) return false;
  }
  return true;
}

std::uint32_t clique_number(const CayleyGraph& graph, std::uint32_t cap) {
  if (graph.order() > cap) {
    raise(Errc::kCapExceeded, "order " + std::to_string(graph.order()) +
                                  " exceeds the exact clique-number cap " + std::to_string(cap));
  }
  const auto s = graph.connection_set();
  BitGraph g(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (graph.adjacent(s[i], s[j])) g.add_edge(i, j);
    }
  }
  return 1 + static_cast<std::uint32_t>(maximum_clique(g).size());
}

bool paley_subfield_criterion(std::uint64_t p, std::uint32_t E, std::uint32_t r, std::uint32_t d) {
  if (r == 0 || E % r != 0) raise(Errc::kNotADivisor, "r must divide E");
  const std::uint64_t quotient = (ipow(p, E) - 1) / (ipow(p, r) - 1);
  return quotient % d == 0;
}

}  // namespace fieldclique::cayley
