#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "fieldclique/arith.hpp"
#include "fieldclique/cayley.hpp"
#include "fieldclique/error.hpp"
#include "oracles.hpp"

namespace fieldclique::cayley {
namespace {

using ff::build_field;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::kInvalidArgument;
}

std::vector<Element> elems(std::initializer_list<std::uint32_t> codes) {
  std::vector<Element> out;
  for (auto c : codes) out.push_back(Element{c});
  return out;
}

TEST(MakeGraph, CubesModThirteen) {
  const CayleyGraph g(build_field(13, 1), GraphKind::paley(3));
  std::vector<Element> cubes;
  for (std::uint32_t x = 1; x < 13; ++x) {
    const Element c{x * x * x % 13};
    if (std::find(cubes.begin(), cubes.end(), c) == cubes.end()) cubes.push_back(c);
  }
  std::sort(cubes.begin(), cubes.end());
  EXPECT_EQ(g.connection_set(), cubes);
  EXPECT_EQ(g.connection_set(), elems({1, 5, 8, 12}));
}

TEST(MakeGraph, ConnectionSetSizes) {
  EXPECT_EQ(CayleyGraph(build_field(3, 2), GraphKind::paley(2)).connection_set().size(), 4u);
  EXPECT_EQ(CayleyGraph(build_field(3, 4), GraphKind::peisert(4)).connection_set().size(), 40u);
  EXPECT_EQ(CayleyGraph(build_field(5, 6), GraphKind::peisert(62)).connection_set().size(), 31u * 252u);
}

TEST(MakeGraph, Errors) {
  const auto f13 = build_field(13, 1);
  EXPECT_EQ(code_of([&] { CayleyGraph(f13, GraphKind::paley(4)); }), Errc::kDegenerateModulus);
  EXPECT_EQ(code_of([&] { CayleyGraph(f13, GraphKind::paley(12)); }), Errc::kDegenerateModulus);
  EXPECT_EQ(code_of([] { GraphKind::residue_class(4, {}); }), Errc::kEmptyJ);
  EXPECT_EQ(code_of([] { GraphKind::residue_class(4, {4}); }), Errc::kInvalidArgument);
  EXPECT_EQ(code_of([] { GraphKind::peisert(5); }), Errc::kOddD);
  EXPECT_EQ(code_of([] { GraphKind::paley(1); }), Errc::kInvalidArgument);
  EXPECT_EQ(GraphKind::peisert(2), GraphKind::paley(2));
}

TEST(Adjacent, Examples) {
  const CayleyGraph g(build_field(13, 1), GraphKind::paley(3));
  EXPECT_TRUE(g.adjacent(Element{0}, Element{5}));
  EXPECT_FALSE(g.adjacent(Element{0}, Element{2}));
  EXPECT_EQ(code_of([&] { g.adjacent(Element{3}, Element{3}); }), Errc::kSelfLoopQuery);
}

std::vector<CayleyGraph> small_graphs() {
  std::vector<CayleyGraph> out;
  out.emplace_back(build_field(13, 1), GraphKind::paley(3));
  out.emplace_back(build_field(3, 4), GraphKind::peisert(4));
  out.emplace_back(build_field(3, 4), GraphKind::paley(10));
  out.emplace_back(build_field(5, 4), GraphKind::peisert(6));
  out.emplace_back(build_field(7, 2), GraphKind::residue_class(8, {0, 3, 5}));
  out.emplace_back(build_field(3, 6), GraphKind::paley(7));
  return out;
}

TEST(Adjacent, UndirectedExhaustive) {
  for (const auto& g : small_graphs()) {
    for (std::uint32_t u = 0; u < g.order(); ++u) {
      for (std::uint32_t v = u + 1; v < g.order(); ++v) {
        ASSERT_EQ(g.adjacent(Element{u}, Element{v}), g.adjacent(Element{v}, Element{u}));
      }
    }
  }
}

TEST(Adjacent, TranslationInvariant) {
  std::mt19937 rng(5);
  for (const auto& g : small_graphs()) {
    std::uniform_int_distribution<std::uint32_t> pick(0, g.order() - 1);
    for (int i = 0; i < 20000; ++i) {
      const Element u{pick(rng)}, v{pick(rng)}, w{pick(rng)};
      if (u == v) continue;
      ASSERT_EQ(g.adjacent(u, v), g.adjacent(g.field().add(u, w), g.field().add(v, w)));
    }
  }
}

TEST(Adjacent, PaleyEdgesArePeisertEdges) {
  for (auto [p, e, d] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
           {3, 4, 4}, {5, 4, 4}, {5, 4, 6}, {3, 6, 4}, {13, 2, 4}, {7, 4, 8}}) {
    const auto f = build_field(p, e);
    const CayleyGraph paley(f, GraphKind::paley(d));
    const CayleyGraph peisert(f, GraphKind::peisert(d));
    for (std::uint32_t u = 0; u < f->order(); ++u) {
      for (std::uint32_t v = u + 1; v < f->order(); ++v) {
        if (paley.adjacent(Element{u}, Element{v})) ASSERT_TRUE(peisert.adjacent(Element{u}, Element{v}));
      }
    }
  }
}

TEST(IsClique, Examples) {
  const CayleyGraph g13(build_field(13, 1), GraphKind::paley(3));
  EXPECT_TRUE(g13.is_clique(elems({0, 1})));
  EXPECT_TRUE(g13.is_clique(elems({4})));
  EXPECT_TRUE(g13.is_clique({}));
  EXPECT_FALSE(g13.is_clique(elems({0, 2})));

  const CayleyGraph g81(build_field(3, 4), GraphKind::peisert(4));
  EXPECT_TRUE(g81.is_clique(g81.field().subfield_elements(1)));
}

TEST(CommonNeighbors, PeisertEightyOne) {
  const CayleyGraph g(build_field(3, 4), GraphKind::peisert(4));
  const auto f3 = g.field().subfield_elements(1);
  const auto nbrs = g.common_neighbors(f3);
  ASSERT_EQ(nbrs.size(), 12u);
  for (auto w : nbrs) {
    for (auto a : f3) EXPECT_TRUE(g.adjacent(w, a));
  }
  EXPECT_FALSE(g.is_clique(nbrs));
}

TEST(CommonNeighbors, CompleteResidueGraph) {
  const CayleyGraph g(build_field(3, 2), GraphKind::residue_class(4, {0, 1, 2, 3}));
  const auto nbrs = g.common_neighbors(elems({0}));
  EXPECT_EQ(nbrs.size(), 8u);
  EXPECT_EQ(nbrs.front().code, 1u);
}

TEST(CommonNeighbors, SquareOrderPaleySubfieldHasNone) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 2}, {5, 2}, {7, 2}, {3, 4}}) {
    const CayleyGraph g(build_field(p, e), GraphKind::paley(2));
    EXPECT_TRUE(g.common_neighbors(g.field().subfield_elements(e / 2)).empty());
  }
}

TEST(IsMaximalClique, Examples) {
  const CayleyGraph g81(build_field(3, 4), GraphKind::peisert(4));
  const auto r81 = g81.is_maximal_clique(g81.field().subfield_elements(1));
  EXPECT_FALSE(r81.is_maximal);
  EXPECT_FALSE(r81.witnesses.empty());

  const CayleyGraph g9(build_field(3, 2), GraphKind::paley(2));
  const auto r9 = g9.is_maximal_clique(g9.field().subfield_elements(1));
  EXPECT_TRUE(r9.is_maximal);
  EXPECT_TRUE(r9.witnesses.empty());

  const CayleyGraph complete(build_field(5, 1), GraphKind::residue_class(2, {0, 1}));
  EXPECT_TRUE(complete.is_maximal_clique(complete.field().subfield_elements(1)).is_maximal);

  const CayleyGraph g5(build_field(5, 1), GraphKind::paley(2));
  EXPECT_EQ(code_of([&] { g5.is_maximal_clique(elems({0, 2})); }), Errc::kNotAClique);
}

TEST(Extend, ExactAndGreedy) {
  const CayleyGraph g81(build_field(3, 4), GraphKind::peisert(4));
  const auto f3 = g81.field().subfield_elements(1);
  const auto exact = g81.extend_to_maximal_clique(f3, ExtensionStrategy::kExact);
  EXPECT_EQ(exact.clique.size(), 9u);
  EXPECT_TRUE(exact.is_maximal);
  EXPECT_TRUE(exact.witnesses.empty());
  EXPECT_EQ(exact.method, ExtensionStrategy::kExact);
  EXPECT_TRUE(std::includes(exact.clique.begin(), exact.clique.end(), f3.begin(), f3.end()));

  const auto greedy = g81.extend_to_maximal_clique(f3, ExtensionStrategy::kGreedy);
  EXPECT_TRUE(greedy.is_maximal);
  EXPECT_LE(greedy.clique.size(), 9u);

  EXPECT_EQ(code_of([&] { g81.extend_to_maximal_clique(f3, ExtensionStrategy::kExact, 3); }),
            Errc::kExactBudgetExceeded);
  EXPECT_EQ(code_of([&] { g81.extend_to_maximal_clique(elems({0, 2, 4, 6}), ExtensionStrategy::kGreedy); }),
            Errc::kNotAClique);
}

TEST(Extend, AlreadyMaximalIsUnchanged) {
  const CayleyGraph g9(build_field(3, 2), GraphKind::paley(2));
  const auto f3 = g9.field().subfield_elements(1);
  for (auto s : {ExtensionStrategy::kExact, ExtensionStrategy::kGreedy}) {
    EXPECT_EQ(g9.extend_to_maximal_clique(f3, s).clique, f3);
  }
}

TEST(Extend, GreedyAlwaysMaximal) {
  std::mt19937 rng(99);
  for (const auto& g : small_graphs()) {
    std::uniform_int_distribution<std::uint32_t> pick(0, g.order() - 1);
    for (int i = 0; i < 50; ++i) {
      const std::vector<Element> start{Element{pick(rng)}};
      const auto r = g.extend_to_maximal_clique(start, ExtensionStrategy::kGreedy);
      EXPECT_TRUE(g.is_clique(r.clique));
      EXPECT_TRUE(g.is_maximal_clique(r.clique).is_maximal);
    }
  }
}

TEST(CliqueNumber, SquareOrderPaley) {
  EXPECT_EQ(clique_number(CayleyGraph(build_field(3, 2), GraphKind::paley(2))), 3u);
  EXPECT_EQ(clique_number(CayleyGraph(build_field(5, 2), GraphKind::paley(2))), 5u);
  EXPECT_EQ(clique_number(CayleyGraph(build_field(7, 2), GraphKind::paley(2))), 7u);
  EXPECT_EQ(clique_number(CayleyGraph(build_field(3, 4), GraphKind::paley(2))), 9u);
}

TEST(CliqueNumber, ThirteenCubicAgainstOracle) {
  const CayleyGraph g(build_field(13, 1), GraphKind::paley(3));
  const auto expected = oracle::exhaustive_clique_number(
      13, [&](std::uint32_t u, std::uint32_t v) { return g.adjacent(Element{u}, Element{v}); });
  EXPECT_EQ(clique_number(g), expected);
  EXPECT_EQ(expected, 2u);
}

TEST(CliqueNumber, CapExceeded) {
  const CayleyGraph g(build_field(5, 6), GraphKind::paley(2));
  EXPECT_EQ(code_of([&] { clique_number(g); }), Errc::kCapExceeded);
}

TEST(SubfieldClique, Examples) {
  const CayleyGraph g625(build_field(5, 4), GraphKind::paley(6));
  EXPECT_FALSE(paley_subfield_criterion(5, 4, 2, 6));
  EXPECT_FALSE(g625.subfield_is_clique(2));

  const CayleyGraph g81(build_field(3, 4), GraphKind::peisert(4));
  EXPECT_TRUE(g81.subfield_is_clique(1));
  EXPECT_FALSE(g81.subfield_is_clique(2));
  EXPECT_FALSE(g81.subfield_is_clique(4));
  EXPECT_TRUE(g81.is_maximal_subfield_clique(1));
  EXPECT_EQ(code_of([&] { g81.subfield_is_clique(3); }), Errc::kNotADivisor);
  EXPECT_EQ(code_of([&] { g81.is_maximal_subfield_clique(2); }), Errc::kNotAClique);

  const CayleyGraph complete(build_field(3, 4), GraphKind::residue_class(4, {0, 1, 2, 3}));
  EXPECT_TRUE(complete.subfield_is_clique(4));
  EXPECT_FALSE(complete.is_maximal_subfield_clique(1));
  EXPECT_FALSE(complete.is_maximal_subfield_clique(2));
  EXPECT_TRUE(complete.is_maximal_subfield_clique(4));
}

TEST(SubfieldClique, PeisertFifteenThousand) {
  const CayleyGraph g(build_field(5, 6), GraphKind::peisert(62));
  EXPECT_TRUE(g.subfield_is_clique(1));
  EXPECT_TRUE(g.is_maximal_subfield_clique(1));
}

TEST(SubfieldClique, DivisibilityCrossCheck) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 4}, {3, 6}, {5, 4}, {7, 2}, {7, 4}, {3, 8}, {5, 3}}) {
    const auto f = build_field(p, e);
    for (std::uint64_t d : divisors((f->order() - 1) / 2)) {
      if (d < 2) continue;
      const CayleyGraph g(f, GraphKind::paley(static_cast<std::uint32_t>(d)));
      for (std::uint32_t r = 1; r <= e; ++r) {
        if (e % r != 0) continue;
        ASSERT_EQ(g.subfield_is_clique(r), paley_subfield_criterion(p, e, r, static_cast<std::uint32_t>(d)))
            << p << "^" << e << " d=" << d << " r=" << r;
      }
    }
  }
}

}  // namespace
}  // namespace fieldclique::cayley
