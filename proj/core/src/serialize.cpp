#include "fieldclique/serialize.hpp"

#include <cmath>
#include <sstream>

namespace fieldclique {
namespace {

nlohmann::json codes(std::span<const ff::Element> elements) {
  auto out = nlohmann::json::array();
  for (const auto& e : elements) out.push_back(e.code);
  return out;
}

nlohmann::json finite_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json field_descriptor(const ff::FieldTable& field) {
  return {{"p", field.characteristic()},
          {"e", field.degree()},
          {"modulus", field.params().modulus},
          {"g", field.generator().code}};
}

nlohmann::json graph_descriptor(const cayley::CayleyGraph& graph) {
  const auto& f = graph.field();
  return {{"p", f.characteristic()},
          {"E", f.degree()},
          {"d", graph.kind().d()},
          {"kind", cayley::to_string(graph.kind().family())},
          {"J", graph.kind().residues()},
          {"g", f.generator().code},
          {"modulus", f.params().modulus}};
}

nlohmann::json to_json(const cayley::CliqueReport& report) {
  return {{"clique", codes(report.clique)},
          {"is_maximal", report.is_maximal},
          {"witnesses", codes(report.witnesses)},
          {"method", cayley::to_string(report.method)}};
}

nlohmann::json to_json(const charsum::KatzReport& report) {
  return {{"p", report.p},
          {"E", report.E},
          {"r", report.r},
          {"d", report.d},
          {"max_ratio", report.max_ratio},
          {"worst_theta", report.worst_theta.code},
          {"bound", report.bound},
          {"max_magnitude", report.max_magnitude},
          {"thetas_checked", report.thetas_checked},
          {"within_bound", report.within_bound()}};
}

nlohmann::json to_json(std::uint32_t d, std::span<const std::uint32_t> residues,
                       const charsum::EpsilonResult& result) {
  return {{"d", d},
          {"J", std::vector<std::uint32_t>(residues.begin(), residues.end())},
          {"epsilon_star", result.epsilon_star},
          {"weights", result.weights}};
}

nlohmann::json to_json(const charsum::LemmaReport& report) {
  return {{"d", report.d},
          {"epsilon_star", report.epsilon_star},
          {"paper_bound", report.lower_bound},
          {"analytic", report.analytic},
          {"holds", report.holds()}};
}

nlohmann::json to_json(const verify::CaseParams& params) {
  return {{"p", params.p},
          {"s", params.s},
          {"n", params.n},
          {"d", params.d()},
          {"kind", cayley::to_string(params.kind.family())},
          {"J", params.kind.residues()}};
}

nlohmann::json to_json(const verify::TheoremReport& report) {
  nlohmann::json j;
  j["case"] = to_json(report.params);
  j["modulus"] = report.modulus;
  j["g"] = report.generator.code;
  j["hypothesis_regime"] = verify::to_string(report.regime.regime);
  j["epsilon"] = report.regime.epsilon;
  j["threshold"] = finite_or_null(report.regime.threshold);
  j["subfield_clique"] = report.subfield_clique;
  j["maximal_subfield_clique"] = report.maximal_subfield_clique;
  j["maximal_clique"] = report.maximal_clique ? nlohmann::json(*report.maximal_clique) : nlohmann::json(nullptr);
  j["witnesses"] = codes(report.witnesses);
  j["extended_clique"] = codes(report.extended_clique);
  j["extended_clique_size"] =
      report.extended_clique_size ? nlohmann::json(*report.extended_clique_size) : nlohmann::json(nullptr);
  j["extension_method"] = report.extension_method
                              ? nlohmann::json(cayley::to_string(*report.extension_method))
                              : nlohmann::json(nullptr);
  j["verdict"] = verify::to_string(report.verdict);
  return j;
}

std::string csv_header() { return "p,s,n,d,kind,verdict,extended_size"; }

std::string to_csv_row(const verify::TheoremReport& report) {
  std::ostringstream out;
  const auto& c = report.params;
  out << c.p << ',' << c.s << ',' << c.n << ',' << c.d() << ','
      << cayley::to_string(c.kind.family()) << ',' << verify::to_string(report.verdict) << ',';
  if (report.extended_clique_size) out << *report.extended_clique_size;
  return out.str();
}

std::string to_text(const verify::TheoremReport& report) {
  std::ostringstream out;
  const auto& c = report.params;
  out << "GF(" << c.p << "^" << c.s * c.n << ") " << cayley::to_string(c.kind.family())
      << " d=" << c.d() << " base=F_" << c.base_order() << " n=" << c.n
      << " regime=" << verify::to_string(report.regime.regime)
      << " subfield_clique=" << report.subfield_clique
      << " maximal_subfield_clique=" << report.maximal_subfield_clique;
  if (report.maximal_clique) out << " maximal_clique=" << *report.maximal_clique;
  if (report.extended_clique_size) out << " extended_clique_size=" << *report.extended_clique_size;
  out << " verdict=" << verify::to_string(report.verdict);
  return out.str();
}

}  // namespace fieldclique
