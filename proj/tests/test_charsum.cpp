#include <gtest/gtest.h>

#include <functional>
#include <numbers>

#include "fieldclique/arith.hpp"
#include "fieldclique/charsum.hpp"
#include "fieldclique/error.hpp"
#include "oracles.hpp"

namespace fieldclique::charsum {
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

TEST(ChiClass, Examples) {
  const auto f = build_field(13, 1);
  const Character chi(f, 3);
  EXPECT_EQ(chi.chi_class(Element{1}), 0u);
  EXPECT_EQ(chi.chi_class(f->generator()), 1u);
  // 2^9 = 512 = 5 mod 13
  EXPECT_EQ(powmod(2, 9, 13), 5u);
  EXPECT_EQ(chi.chi_class(Element{5}), 0u);
  EXPECT_EQ(code_of([&] { chi.chi_class(Element{0}); }), Errc::kZeroArgument);
  EXPECT_EQ(code_of([&] { Character(f, 5); }), Errc::kInvalidArgument);
}

TEST(ChiClass, MultiplicativeExhaustive) {
  for (auto [p, e, d] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
           {13, 1, 3}, {3, 4, 4}, {3, 4, 10}, {5, 4, 13}, {7, 3, 19}}) {
    const auto f = build_field(p, e);
    const Character chi(f, d);
    for (std::uint32_t x = 1; x < f->order(); ++x) {
      for (std::uint32_t y = 1; y < f->order(); ++y) {
        ASSERT_EQ(chi.chi_class(f->mul(Element{x}, Element{y})),
                  (chi.chi_class(Element{x}) + chi.chi_class(Element{y})) % d);
      }
    }
  }
}

TEST(ChiClass, Orthogonality) {
  for (auto [p, e, d] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
           {13, 1, 3}, {3, 4, 8}, {5, 3, 31}}) {
    const auto f = build_field(p, e);
    const Character chi(f, d);
    RootOfUnitySum sum(d);
    for (std::uint32_t x = 1; x < f->order(); ++x) sum.add(chi.chi_class(Element{x}));
    for (auto c : sum.counts()) EXPECT_EQ(c, (f->order() - 1) / d);
    EXPECT_NEAR(sum.magnitude(), 0.0, 1e-9);
  }
}

TEST(LineSum, AllEqualSummands) {
  const auto f = build_field(3, 4);
  const Character quad(f, 2);
  const auto f3 = f->subfield_elements(1);
  bool found = false;
  for (std::uint32_t c = 0; c < f->order() && !found; ++c) {
    const Element theta{c};
    if (f->in_subfield(theta, 1)) continue;
    bool all_squares = true;
    for (auto a : f3) all_squares = all_squares && quad.chi_class(f->add(theta, a)) == 0;
    if (!all_squares) continue;
    found = true;
    const auto sum = line_sum(quad, theta, f3);
    EXPECT_EQ(sum.counts(), (std::vector<std::uint64_t>{3, 0}));
    EXPECT_NEAR(sum.magnitude(), 3.0, 1e-12);
  }
  EXPECT_TRUE(found);
}

TEST(LineSum, TriangleInequalityOnShortLines) {
  const auto f = build_field(3, 4);
  const Character chi(f, 4);
  const auto f3 = f->subfield_elements(1);
  for (std::uint32_t c = 0; c < f->order(); ++c) {
    const Element theta{c};
    if (f->in_subfield(theta, 1)) continue;
    const auto sum = line_sum(chi, theta, f3);
    EXPECT_EQ(sum.total(), 3u);
    EXPECT_LE(sum.magnitude(), 3.0 + 1e-12);
  }
}

TEST(LineSum, ZeroEncountered) {
  const auto f = build_field(3, 4);
  const Character chi(f, 4);
  EXPECT_EQ(code_of([&] { line_sum(chi, Element{1}, f->subfield_elements(1)); }), Errc::kZeroEncountered);
}

TEST(Katz, SmallFields) {
  const auto f81 = build_field(3, 4);
  const auto r1 = katz_bound_check(f81, 1, 4);
  EXPECT_TRUE(r1.within_bound());
  EXPECT_NEAR(r1.bound, 3.0 * std::sqrt(3.0), 1e-12);
  EXPECT_EQ(r1.thetas_checked, 72u);  // 81 - 9

  const auto r2 = katz_bound_check(f81, 2, 4);
  EXPECT_TRUE(r2.within_bound());
  EXPECT_NEAR(r2.bound, 3.0, 1e-12);
  EXPECT_EQ(r2.thetas_checked, 72u);

  EXPECT_EQ(code_of([] { katz_bound_check(build_field(13, 1), 1, 3); }), Errc::kNoValidTheta);
  EXPECT_EQ(code_of([&] { katz_bound_check(f81, 1, 1); }), Errc::kTrivialCharacter);
  EXPECT_EQ(code_of([&] { katz_bound_check(f81, 3, 4); }), Errc::kNotADivisor);
}

TEST(Katz, CubicExtensionOfTwentyFive) {
  // GF(5^6) over F_25: n = 3, bound 2 * 5 = 10 for every nontrivial order.
  const auto f = build_field(5, 6);
  for (std::uint32_t d : {2u, 3u, 4u, 7u, 31u, 62u, 124u}) {
    const auto r = katz_bound_check(f, 2, d);
    EXPECT_DOUBLE_EQ(r.bound, 10.0);
    EXPECT_LE(r.max_magnitude, 10.0 + 1e-9) << "d=" << d;
    EXPECT_EQ(r.thetas_checked, 15625u - 25u);
  }
}

TEST(Restrict, TrivialityDichotomy) {
  const auto f = build_field(3, 4);
  const Character chi(f, 4);
  EXPECT_FALSE(restrict_character(chi, 2).is_trivial());  // 80/8 = 10, 4 does not divide 10
  EXPECT_TRUE(restrict_character(chi, 1).is_trivial());   // 80/2 = 40
  EXPECT_EQ(restrict_character(chi, 2).cofactor(), 10u);
  EXPECT_EQ(restrict_character(chi, 2).order(), 2u);
  EXPECT_EQ(code_of([&] { restrict_character(chi, 3); }), Errc::kNotASubfield);
}

TEST(Restrict, MatchesDirectEvaluationOnSubfield) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 4}, {5, 4}, {3, 6}, {7, 2}}) {
    const auto f = build_field(p, e);
    for (std::uint64_t d : divisors(f->order() - 1)) {
      const Character chi(f, static_cast<std::uint32_t>(d));
      for (std::uint32_t sub = 1; sub <= e; ++sub) {
        if (e % sub != 0) continue;
        const auto res = restrict_character(chi, sub);
        bool all_zero = true;
        for (auto y : f->subfield_elements(sub)) {
          if (y.code == 0) continue;
          if (res.chi_class(y) != 0) all_zero = false;
        }
        ASSERT_EQ(res.is_trivial(), all_zero) << p << "^" << e << " d=" << d << " f=" << sub;
        const std::uint64_t step = d / res.order();
        for (std::uint64_t k = 0; k < 12; ++k) {
          const auto y = f->exp(k * res.cofactor());
          ASSERT_EQ(chi.chi_class(y), res.class_of_power(k) * step % d);
        }
      }
    }
  }
}

TEST(Epsilon, Examples) {
  const std::vector<std::complex<double>> one{{1.0, 0.0}};
  EXPECT_DOUBLE_EQ(epsilon_star(one).epsilon_star, 1.0);

  const std::vector<std::uint32_t> j01{0, 1};
  const auto quarter = epsilon_star(4, j01);
  EXPECT_NEAR(quarter.epsilon_star, std::sqrt(2.0) / 2.0, 1e-12);
  // Brute-force minimisation over convex combinations of 1 and i.
  double brute = 10.0;
  for (int k = 0; k <= 100000; ++k) {
    const double t = k / 100000.0;
    brute = std::min(brute, std::hypot(1.0 - t, t));
  }
  EXPECT_NEAR(quarter.epsilon_star, brute, 1e-9);

  const std::vector<std::complex<double>> pm{{1.0, 0.0}, {-1.0, 0.0}};
  const auto zero = epsilon_star(pm);
  EXPECT_NEAR(zero.epsilon_star, 0.0, 1e-15);
}

TEST(Epsilon, WeightsReproduceClosestPoint) {
  for (std::uint32_t d = 1; d <= 10; ++d) {
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
      std::vector<std::uint32_t> residues;
      for (std::uint32_t j = 0; j < d; ++j) {
        if (mask >> j & 1) residues.push_back(j);
      }
      const auto pts = roots_of_unity(d, residues);
      const auto r = epsilon_star(pts);
      double total = 0.0;
      std::complex<double> combo{0.0, 0.0};
      for (std::size_t i = 0; i < pts.size(); ++i) {
        ASSERT_GE(r.weights[i], 0.0);
        total += r.weights[i];
        combo += r.weights[i] * pts[i];
      }
      ASSERT_NEAR(total, 1.0, 1e-12);
      ASSERT_NEAR(std::abs(combo), r.epsilon_star, 1e-9) << "d=" << d << " mask=" << mask;
    }
  }
}

TEST(Epsilon, AddingPointsNeverIncreases) {
  for (std::uint32_t d = 2; d <= 9; ++d) {
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
      std::vector<std::uint32_t> residues;
      for (std::uint32_t j = 0; j < d; ++j) {
        if (mask >> j & 1) residues.push_back(j);
      }
      const double base = epsilon_star(d, residues).epsilon_star;
      for (std::uint32_t extra = 0; extra < d; ++extra) {
        if (mask >> extra & 1) continue;
        auto more = residues;
        more.push_back(extra);
        ASSERT_LE(epsilon_star(d, more).epsilon_star, base + 1e-12);
      }
    }
  }
}

TEST(Epsilon, DefinitionalSoundnessSmallMultisets) {
  for (std::uint32_t d = 2; d <= 8; ++d) {
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
      std::vector<std::uint32_t> residues;
      for (std::uint32_t j = 0; j < d; ++j) {
        if (mask >> j & 1) residues.push_back(j);
      }
      const auto pts = roots_of_unity(d, residues);
      const double eps = epsilon_star(pts).epsilon_star;
      ASSERT_GE(oracle::min_multiset_average(pts, 6), eps - 1e-9) << "d=" << d << " mask=" << mask;
    }
  }
}

TEST(Lemma, Examples) {
  const double pi = std::numbers::pi;
  const auto r4 = verify_lemma_bound(4);
  EXPECT_NEAR(r4.epsilon_star, 0.70711, 1e-5);
  EXPECT_NEAR(r4.lower_bound, 3 * pi / 16, 1e-12);
  EXPECT_TRUE(r4.holds());

  const auto r6 = verify_lemma_bound(6);
  EXPECT_NEAR(r6.epsilon_star, 0.5, 1e-12);
  EXPECT_NEAR(r6.lower_bound, 0.43633, 1e-5);
  EXPECT_TRUE(r6.holds());

  const auto r62 = verify_lemma_bound(62);
  EXPECT_NEAR(r62.epsilon_star, 0.05064, 1e-5);
  EXPECT_NEAR(r62.lower_bound, 0.04985, 1e-5);
  EXPECT_TRUE(r62.holds());

  EXPECT_EQ(code_of([] { verify_lemma_bound(5); }), Errc::kOddD);
  EXPECT_EQ(code_of([] { verify_lemma_bound(2); }), Errc::kInvalidArgument);
}

TEST(Epsilon, OriginInsideGivesZero) {
  const std::vector<std::uint32_t> all{0, 1, 2};
  const auto r = epsilon_star(3, all);
  EXPECT_NEAR(r.epsilon_star, 0.0, 1e-15);
  for (double w : r.weights) EXPECT_NEAR(w, 1.0 / 3.0, 1e-12);
}

}  // namespace
}  // namespace fieldclique::charsum
