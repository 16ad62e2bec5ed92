#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "fieldclique/arith.hpp"
#include "fieldclique/error.hpp"
#include "fieldclique/verify.hpp"

namespace fieldclique::verify {
namespace {

auto sort_key(const CaseParams& c) {
  return std::make_tuple(c.p, c.s, c.n, c.d(), static_cast<int>(c.kind.family()));
}

struct FieldSlot {
  std::once_flag once;
  ff::FieldPtr field;
  std::size_t remaining = 0;
};

}  // namespace

std::size_t SweepResult::violation_count() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) {
    return r.verdict == Verdict::kViolation;
  }));
}

std::vector<CaseParams> enumerate_cases(const SweepConfig& config) {
  const std::uint64_t cap = std::min(config.cap, ff::kMaxFieldCap);
  if (config.max_order > cap) {
    raise(Errc::kCapExceeded, "max_order " + std::to_string(config.max_order) +
                                  " exceeds the field cap " + std::to_string(cap));
  }
  if (config.n_min < 2 || config.n_min > config.n_max) {
    raise(Errc::kInvalidCase, "need 2 <= n_min <= n_max");
  }
  std::vector<CaseParams> cases;
  if (config.max_order < 9) return cases;

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(config.max_order))) + 1;
  for (std::uint64_t p : odd_primes_up_to(root)) {
    for (std::uint32_t s = 1;; ++s) {
      const auto q = checked_pow(p, s, config.max_order);
      if (!q) break;
      if (config.max_base && *q > *config.max_base) break;
      if (!checked_pow(*q, config.n_min, config.max_order)) break;
      for (std::uint32_t n = config.n_min; n <= config.n_max; ++n) {
        const auto order = checked_pow(*q, n, config.max_order);
        if (!order) break;
        for (std::uint64_t d64 : divisors((*order - 1) / 2)) {
          if (d64 < 2 || d64 < config.d_min || d64 > config.d_max) continue;
          const auto d = static_cast<std::uint32_t>(d64);
          std::vector<cayley::GraphKind> kinds;
          if (config.paley) kinds.push_back(cayley::GraphKind::paley(d));
          if (config.peisert && d % 2 == 0 && d >= 4) kinds.push_back(cayley::GraphKind::peisert(d));
          for (auto& kind : kinds) {
            CaseParams c{p, s, n, std::move(kind)};
            if (config.only_below_threshold &&
                check_hypotheses(c).regime != Regime::kBelowThreshold) {
              continue;
            }
            cases.push_back(std::move(c));
          }
        }
      }
    }
  }
  std::sort(cases.begin(), cases.end(),
            [](const CaseParams& a, const CaseParams& b) { return sort_key(a) < sort_key(b); });
  return cases;
}

SweepResult sweep(const SweepConfig& config) {
  const auto cases = enumerate_cases(config);
  SweepResult result;
  result.reports.resize(cases.size());
  if (cases.empty()) return result;

  // Cases sharing GF(p^E) reuse one table; work is handed out grouped by
  // field so at most a few tables are alive at once. Reports keep the sorted
  // case order regardless of which worker produced them.
  using FieldKey = std::pair<std::uint64_t, std::uint32_t>;
  std::map<FieldKey, FieldSlot> slots;
  std::vector<std::size_t> schedule(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    schedule[i] = i;
    ++slots[{cases[i].p, cases[i].s * cases[i].n}].remaining;
  }
  std::stable_sort(schedule.begin(), schedule.end(), [&](std::size_t a, std::size_t b) {
    return FieldKey{cases[a].p, cases[a].s * cases[a].n} < FieldKey{cases[b].p, cases[b].s * cases[b].n};
  });

  const VerifyOptions options{config.cap, config.exact_budget};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;

  auto work = [&] {
    for (;;) {
      const std::size_t slot_idx = next.fetch_add(1);
      if (slot_idx >= schedule.size()) return;
      {
        std::lock_guard lock(mu);
        if (failure) return;
      }
      const std::size_t idx = schedule[slot_idx];
      const CaseParams& c = cases[idx];
      FieldSlot& slot = slots.at({c.p, c.s * c.n});
      try {
        std::call_once(slot.once, [&] { slot.field = ff::build_field(c.p, c.s * c.n, config.cap); });
        ff::FieldPtr field;
        {
          std::lock_guard lock(mu);
          field = slot.field;
        }
        result.reports[idx] = verify_case(c, field, options);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      std::lock_guard lock(mu);
      if (--slot.remaining == 0) slot.field.reset();
    }
  };

  const unsigned workers = std::max(1u, config.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

CounterexampleScan find_counterexamples(const SweepConfig& config) {
  CounterexampleScan scan;
  for (auto& report : sweep(config).reports) {
    if (!report.maximal_subfield_clique || report.maximal_clique.value_or(true)) continue;
    if (report.regime.regime == Regime::kBelowThreshold) {
      scan.counterexamples.push_back(std::move(report));
    } else {
      scan.violations.push_back(std::move(report));
    }
  }
  return scan;
}

}  // namespace fieldclique::verify
