#pragma once

// Cayley graphs on the additive group of GF(Q) whose connection set is a
// union of cosets of the d-th powers:
//
//   S = { x != 0 : (log_g x mod d) in J }.
//
// The generalized Paley graph GP(Q, d) is J = {0}; the generalized Peisert
// graph GP*(Q, d) is J = {0, ..., d/2 - 1}. Adjacency is answered from the
// discrete log table; no adjacency matrix is stored.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fieldclique/ff.hpp"

namespace fieldclique::cayley {

using ff::Element;

enum class GraphFamily { kGeneralizedPaley, kGeneralizedPeisert, kResidueClass };

std::string_view to_string(GraphFamily family);

class GraphKind {
 public:
  static GraphKind paley(std::uint32_t d);
  /// d must be even; d == 2 is normalized to paley(2).
  static GraphKind peisert(std::uint32_t d);
  static GraphKind residue_class(std::uint32_t d, std::vector<std::uint32_t> residues);

  GraphFamily family() const noexcept { return family_; }
  std::uint32_t d() const noexcept { return d_; }
  /// Sorted residues J.
  const std::vector<std::uint32_t>& residues() const noexcept { return residues_; }
  bool contains_paley() const noexcept { return !residues_.empty() && residues_.front() == 0; }

  friend bool operator==(const GraphKind&, const GraphKind&) = default;

 private:
  GraphKind(GraphFamily family, std::uint32_t d, std::vector<std::uint32_t> residues)
      : family_(family), d_(d), residues_(std::move(residues)) {}

  GraphFamily family_;
  std::uint32_t d_;
  std::vector<std::uint32_t> residues_;
};

enum class ExtensionStrategy { kGreedy, kExact };

std::string_view to_string(ExtensionStrategy strategy);

struct MaximalityResult {
  bool is_maximal = false;
  /// Vertices adjacent to the whole clique, ascending.
  std::vector<Element> witnesses;
};

struct CliqueReport {
  std::vector<Element> clique;
  bool is_maximal = false;
  std::vector<Element> witnesses;
  ExtensionStrategy method = ExtensionStrategy::kGreedy;
};

/// Largest common-neighbour set handed to the exact search by default.
inline constexpr std::size_t kDefaultExactBudget = 2000;
/// Largest field order accepted by clique_number() by default.
inline constexpr std::uint32_t kDefaultCliqueNumberCap = 4096;

class CayleyGraph {
 public:
  /// Throws DegenerateModulus unless Q = 1 (mod 2d).
  CayleyGraph(ff::FieldPtr field, GraphKind kind);

  const ff::FieldTable& field() const noexcept { return *field_; }
  const ff::FieldPtr& field_ptr() const noexcept { return field_; }
  const GraphKind& kind() const noexcept { return kind_; }
  std::uint32_t order() const noexcept { return field_->order(); }

  bool in_connection_set(Element x) const noexcept {
    return x.code != 0 && in_class_[field_->log_unchecked(x) % kind_.d()];
  }
  std::vector<Element> connection_set() const;

  /// Throws SelfLoopQuery when u == v.
  bool adjacent(Element u, Element v) const;

  bool is_clique(std::span<const Element> clique) const;
  std::vector<Element> common_neighbors(std::span<const Element> clique) const;
  /// Throws NotAClique.
  MaximalityResult is_maximal_clique(std::span<const Element> clique) const;
  /// Returns a maximal clique containing the input. The exact strategy returns
  /// one of maximum size among those; it throws ExactBudgetExceeded when the
  /// common neighbourhood has more than exact_budget vertices.
  CliqueReport extend_to_maximal_clique(std::span<const Element> clique,
                                        ExtensionStrategy strategy,
                                        std::size_t exact_budget = kDefaultExactBudget) const;

  /// Whether the subfield of order p^r is a clique (all its nonzero elements
  /// lie in S).
  bool subfield_is_clique(std::uint32_t r) const;
  /// Whether no strictly larger subfield containing F_{p^r} is a clique.
  /// Throws NotAClique when F_{p^r} itself is not one.
  bool is_maximal_subfield_clique(std::uint32_t r) const;

 private:
  ff::FieldPtr field_;
  GraphKind kind_;
  std::vector<char> in_class_;
};

/// Exact clique number. Uses vertex transitivity: omega = 1 + omega(G[S]).
std::uint32_t clique_number(const CayleyGraph& graph,
                            std::uint32_t cap = kDefaultCliqueNumberCap);

/// d | (p^E - 1)/(p^r - 1): the closed-form test for F_{p^r} being a clique
/// in GP(p^E, d).
bool paley_subfield_criterion(std::uint64_t p, std::uint32_t E, std::uint32_t r, std::uint32_t d);

}  // namespace fieldclique::cayley
