#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fieldclique/arith.hpp"
#include "fieldclique/cayley.hpp"
#include "fieldclique/charsum.hpp"
#include "fieldclique/error.hpp"
#include "fieldclique/ff.hpp"
#include "fieldclique/serialize.hpp"
#include "fieldclique/verify.hpp"

namespace fieldclique::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t cap_from_environment() {
  if (const char* env = std::getenv("CAYLEY_CLIQUE_CAP"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("CAYLEY_CLIQUE_CAP: not a positive integer: ") + env);
  }
  return ff::kDefaultFieldCap;
}

struct Common {
  std::string format = "json";
  std::string out_path;
  std::optional<std::uint64_t> cap;
  unsigned workers = 1;

  std::uint64_t field_cap() const { return cap ? *cap : cap_from_environment(); }
};

struct GraphFlags {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t s = 1;
  std::uint32_t n = 2;
  std::uint32_t d = 0;
  std::string kind = "paley";
  std::vector<std::uint32_t> j;
};

void add_common(CLI::App* cmd, Common& c, bool with_workers = false) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", c.out_path, "Write output to PATH instead of stdout");
  cmd->add_option("--cap", c.cap, "Field-size cap (default 2^24 or $CAYLEY_CLIQUE_CAP)");
  if (with_workers) {
    cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  }
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw UsageError("--p: p must be an odd prime, got " + std::to_string(p));
  }
}

cayley::GraphKind parse_kind(const GraphFlags& g) {
  if (g.kind == "paley") {
    if (g.d < 2) throw UsageError("--d: generalized Paley graphs need d > 1");
    return cayley::GraphKind::paley(g.d);
  }
  if (g.kind == "peisert") {
    if (g.d < 2 || g.d % 2 != 0) throw UsageError("--d: generalized Peisert graphs need an even d");
    return cayley::GraphKind::peisert(g.d);
  }
  if (g.j.empty()) throw UsageError("--j: residue graphs need a nonempty residue list");
  for (auto r : g.j) {
    if (r >= g.d) throw UsageError("--j: residue " + std::to_string(r) + " is not below d");
  }
  return cayley::GraphKind::residue_class(g.d, g.j);
}

class Output {
 public:
  Output(const Common& c, std::ostream& out) : out_(&out) {
    if (!c.out_path.empty()) {
      file_.open(c.out_path);
      if (!file_) throw UsageError("--out: cannot open " + c.out_path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void emit_report(const verify::TheoremReport& report, const Common& c, std::ostream& os,
                 std::optional<std::uint32_t> conjecture_r = std::nullopt) {
  if (c.format == "text") {
    os << to_text(report) << '\n';
  } else if (c.format == "csv") {
    os << csv_header() << '\n' << to_csv_row(report) << '\n';
  } else {
    json j = to_json(report);
    if (conjecture_r) j["conjecture_r"] = *conjecture_r;
    os << j.dump() << '\n';
  }
}

int exit_for(const verify::TheoremReport& report) {
  return report.verdict == verify::Verdict::kViolation ? kViolation : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Paley / Peisert graph clique verification over finite fields",
               "fieldclique"};
  app.require_subcommand(1);

  Common common;
  GraphFlags g;
  std::function<int()> action;

  // field
  auto* field_cmd = app.add_subcommand("field", "Build GF(p^e) and print its descriptor");
  field_cmd->add_option("--p", g.p, "Odd prime characteristic")->required();
  field_cmd->add_option("--e", g.e, "Extension degree")->required()->check(CLI::PositiveNumber);
  add_common(field_cmd, common);
  field_cmd->callback([&] {
    action = [&] {
      require_odd_prime(g.p);
      const auto f = ff::build_field(g.p, g.e, common.field_cap());
      Output o(common, out);
      o.stream() << field_descriptor(*f).dump() << '\n';
      return int{kOk};
    };
  });

  // graph-info
  bool want_omega = false;
  auto* info_cmd = app.add_subcommand("graph-info", "Describe a Cayley graph on GF(p^e)");
  info_cmd->add_option("--p", g.p)->required();
  info_cmd->add_option("--e", g.e)->required()->check(CLI::PositiveNumber);
  info_cmd->add_option("--d", g.d)->required();
  info_cmd->add_option("--kind", g.kind)->check(CLI::IsMember({"paley", "peisert", "residue"}));
  info_cmd->add_option("--j", g.j, "Residues J for --kind residue");
  info_cmd->add_flag("--clique-number", want_omega, "Also compute the exact clique number");
  add_common(info_cmd, common);
  info_cmd->callback([&] {
    action = [&] {
      require_odd_prime(g.p);
      const auto kind = parse_kind(g);
      const cayley::CayleyGraph graph(ff::build_field(g.p, g.e, common.field_cap()), kind);
      json j = graph_descriptor(graph);
      j["connection_set_size"] = graph.connection_set().size();
      if (want_omega) j["clique_number"] = cayley::clique_number(graph);
      Output o(common, out);
      o.stream() << j.dump() << '\n';
      return int{kOk};
    };
  });

  // verify
  std::size_t exact_budget = cayley::kDefaultExactBudget;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether F_q is a maximal clique in a graph on GF(q^n)");
  verify_cmd->add_option("--p", g.p)->required();
  verify_cmd->add_option("--s", g.s, "Base field exponent, q = p^s")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", g.n, "Extension degree over F_q")->required();
  verify_cmd->add_option("--d", g.d)->required();
  verify_cmd->add_option("--kind", g.kind)->check(CLI::IsMember({"paley", "peisert", "residue"}));
  verify_cmd->add_option("--j", g.j);
  verify_cmd->add_option("--exact-budget", exact_budget);
  add_common(verify_cmd, common);
  verify_cmd->callback([&] {
    action = [&] {
      require_odd_prime(g.p);
      if (g.n < 2) throw UsageError("--n: extension degree must be >= 2");
      if (g.kind == "peisert" && g.d < 4) throw UsageError("--d: Peisert cases need an even d >= 4");
      const verify::CaseParams params{g.p, g.s, g.n, parse_kind(g)};
      const auto report = verify::verify_case(params, {common.field_cap(), exact_budget});
      Output o(common, out);
      emit_report(report, common, o.stream());
      return exit_for(report);
    };
  });

  // conjecture
  auto* conj_cmd = app.add_subcommand("conjecture", "Check F_{p^r} for the largest qualifying r in GP(p^s, d)");
  conj_cmd->add_option("--p", g.p)->required();
  conj_cmd->add_option("--s", g.s)->required()->check(CLI::PositiveNumber);
  conj_cmd->add_option("--d", g.d)->required();
  add_common(conj_cmd, common);
  conj_cmd->callback([&] {
    action = [&] {
      require_odd_prime(g.p);
      const auto report = verify::verify_conjecture_case(g.p, g.s, g.d, {common.field_cap()});
      Output o(common, out);
      emit_report(report, common, o.stream(), report.params.s);
      return exit_for(report);
    };
  });

  // sweep
  verify::SweepConfig sweep_cfg;
  std::string sweep_kind = "paley";
  std::string summary_path;
  bool counterexamples_only = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run verify over every admissible case up to --max-order");
  sweep_cmd->add_option("--max-order", sweep_cfg.max_order, "Largest q^n")->required();
  sweep_cmd->add_option("--n-min", sweep_cfg.n_min);
  sweep_cmd->add_option("--n-max", sweep_cfg.n_max);
  sweep_cmd->add_option("--d-min", sweep_cfg.d_min);
  sweep_cmd->add_option("--d-max", sweep_cfg.d_max);
  sweep_cmd->add_option("--max-base", sweep_cfg.max_base, "Largest base field order q");
  sweep_cmd->add_option("--kind", sweep_kind)->check(CLI::IsMember({"paley", "peisert", "both"}));
  sweep_cmd->add_flag("--below-threshold", sweep_cfg.only_below_threshold,
                      "Only cases outside every hypothesis regime");
  sweep_cmd->add_flag("--counterexamples-only", counterexamples_only,
                      "Emit only maximal subfield cliques that are not maximal cliques");
  sweep_cmd->add_option("--summary", summary_path, "Also write a CSV summary to PATH");
  add_common(sweep_cmd, common, true);
  sweep_cmd->callback([&] {
    action = [&] {
      if (common.format == "text") throw UsageError("--format: sweep supports json or csv");
      if (sweep_cfg.n_min < 2 || sweep_cfg.n_min > sweep_cfg.n_max) {
        throw UsageError("--n-min/--n-max: need 2 <= n-min <= n-max");
      }
      sweep_cfg.paley = sweep_kind != "peisert";
      sweep_cfg.peisert = sweep_kind != "paley";
      sweep_cfg.workers = common.workers;
      sweep_cfg.cap = common.field_cap();
      if (sweep_cfg.max_order > std::min(sweep_cfg.cap, ff::kMaxFieldCap)) {
        throw UsageError("--max-order: exceeds the field cap " + std::to_string(sweep_cfg.cap));
      }
      auto result = verify::sweep(sweep_cfg);
      std::vector<const verify::TheoremReport*> selected;
      for (const auto& r : result.reports) {
        if (counterexamples_only &&
            (!r.maximal_subfield_clique || r.maximal_clique.value_or(true))) {
          continue;
        }
        selected.push_back(&r);
      }
      Output o(common, out);
      if (common.format == "csv") o.stream() << csv_header() << '\n';
      for (const auto* r : selected) {
        if (common.format == "csv") {
          o.stream() << to_csv_row(*r) << '\n';
        } else {
          o.stream() << to_json(*r).dump() << '\n';
        }
      }
      if (!summary_path.empty()) {
        std::ofstream summary(summary_path);
        if (!summary) throw UsageError("--summary: cannot open " + summary_path);
        summary << csv_header() << '\n';
        for (const auto* r : selected) summary << to_csv_row(*r) << '\n';
      }
      return result.violation_count() > 0 ? int{kViolation} : int{kOk};
    };
  });

  // katz
  std::uint32_t katz_r = 1;
  std::optional<std::uint32_t> katz_d;
  auto* katz_cmd = app.add_subcommand("katz", "Check the affine-line character sum bound on GF(p^e)");
  katz_cmd->add_option("--p", g.p)->required();
  katz_cmd->add_option("--e", g.e)->required()->check(CLI::PositiveNumber);
  katz_cmd->add_option("--r", katz_r, "Base subfield degree")->check(CLI::PositiveNumber);
  katz_cmd->add_option("--d", katz_d, "Character order (default: every nontrivial order)");
  add_common(katz_cmd, common);
  katz_cmd->callback([&] {
    action = [&] {
      require_odd_prime(g.p);
      const auto f = ff::build_field(g.p, g.e, common.field_cap());
      std::vector<std::uint32_t> orders;
      if (katz_d) {
        orders.push_back(*katz_d);
      } else {
        for (auto d : divisors(f->order() - 1)) {
          if (d > 1) orders.push_back(static_cast<std::uint32_t>(d));
        }
      }
      Output o(common, out);
      bool violated = false;
      for (auto d : orders) {
        const auto report = charsum::katz_bound_check(f, katz_r, d);
        violated = violated || !report.within_bound();
        o.stream() << to_json(report).dump() << '\n';
      }
      return violated ? int{kViolation} : int{kOk};
    };
  });

  // epsilon
  auto* eps_cmd = app.add_subcommand("epsilon", "Exact lower-boundedness constant of {zeta_d^j : j in J}");
  eps_cmd->add_option("--d", g.d)->required()->check(CLI::PositiveNumber);
  eps_cmd->add_option("--j", g.j, "Residues J (default: 0..d/2-1)");
  add_common(eps_cmd, common);
  eps_cmd->callback([&] {
    action = [&] {
      const bool half_circle = g.j.empty();
      std::vector<std::uint32_t> residues = g.j;
      if (half_circle) {
        if (g.d < 2) throw UsageError("--d: the half-circle set needs d >= 2");
        residues.resize(g.d / 2);
        std::iota(residues.begin(), residues.end(), 0u);
      }
      for (auto r : residues) {
        if (r >= g.d) throw UsageError("--j: residue " + std::to_string(r) + " is not below d");
      }
      const auto result = charsum::epsilon_star(g.d, residues);
      json j = to_json(g.d, residues, result);
      if (half_circle && g.d % 2 == 0 && g.d >= 4) {
        const auto lemma = charsum::verify_lemma_bound(g.d);
        j["paper_bound"] = lemma.lower_bound;
        j["analytic"] = lemma.analytic;
        j["holds"] = lemma.holds();
      }
      Output o(common, out);
      o.stream() << j.dump() << '\n';
      return int{kOk};
    };
  });

  // clique-extend
  std::optional<std::uint32_t> subfield_r;
  std::vector<std::uint32_t> clique_codes;
  std::string strategy = "exact";
  auto* ext_cmd = app.add_subcommand("clique-extend", "Extend a clique to a maximal clique");
  ext_cmd->add_option("--p", g.p)->required();
  ext_cmd->add_option("--e", g.e)->required()->check(CLI::PositiveNumber);
  ext_cmd->add_option("--d", g.d)->required();
  ext_cmd->add_option("--kind", g.kind)->check(CLI::IsMember({"paley", "peisert", "residue"}));
  ext_cmd->add_option("--j", g.j);
  auto* sub_opt = ext_cmd->add_option("--subfield", subfield_r, "Start from the subfield of this degree");
  auto* clique_opt = ext_cmd->add_option("--clique", clique_codes, "Start from these element codes");
  sub_opt->excludes(clique_opt);
  ext_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "exact"}));
  ext_cmd->add_option("--exact-budget", exact_budget);
  add_common(ext_cmd, common);
  ext_cmd->callback([&] {
    action = [&] {
      require_odd_prime(g.p);
      const cayley::CayleyGraph graph(ff::build_field(g.p, g.e, common.field_cap()), parse_kind(g));
      std::vector<ff::Element> start;
      if (subfield_r) {
        start = graph.field().subfield_elements(*subfield_r);
      } else {
        for (auto c : clique_codes) {
          if (c >= graph.order()) throw UsageError("--clique: code " + std::to_string(c) + " out of range");
          start.push_back(ff::Element{c});
        }
      }
      const auto report = graph.extend_to_maximal_clique(
          start, strategy == "exact" ? cayley::ExtensionStrategy::kExact : cayley::ExtensionStrategy::kGreedy,
          exact_budget);
      Output o(common, out);
      json j = to_json(report);
      j["size"] = report.clique.size();
      o.stream() << j.dump() << '\n';
      return int{kOk};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }

  try {
    return action ? action() : int{kInvalidConfig};
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
}

}  // namespace fieldclique::cli
