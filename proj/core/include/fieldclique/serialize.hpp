#pragma once

// JSON documents and CSV rows produced by the library. Schemas are described
// in docs/schemas.md.

#include <string>

#include <nlohmann/json.hpp>

#include "fieldclique/cayley.hpp"
#include "fieldclique/charsum.hpp"
#include "fieldclique/ff.hpp"
#include "fieldclique/verify.hpp"

namespace fieldclique {

nlohmann::json field_descriptor(const ff::FieldTable& field);
nlohmann::json graph_descriptor(const cayley::CayleyGraph& graph);
nlohmann::json to_json(const cayley::CliqueReport& report);
nlohmann::json to_json(const charsum::KatzReport& report);
nlohmann::json to_json(std::uint32_t d, std::span<const std::uint32_t> residues,
                       const charsum::EpsilonResult& result);
nlohmann::json to_json(const charsum::LemmaReport& report);
nlohmann::json to_json(const verify::CaseParams& params);
nlohmann::json to_json(const verify::TheoremReport& report);

std::string csv_header();
std::string to_csv_row(const verify::TheoremReport& report);

/// One-line human summary; always contains the verdict token.
std::string to_text(const verify::TheoremReport& report);

}  // namespace fieldclique
