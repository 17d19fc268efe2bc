#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicsym/distinguishing.hpp"
#include "cubicsym/graph.hpp"
#include "cubicsym/symmetry.hpp"
#include "cubicsym/verify.hpp"

namespace cubicsym {

/// Everything `analyze` prints. Fields are copied verbatim from library calls.
struct AnalysisReport {
  std::string graph6;
  std::string canonical_form;
  std::string digest;  // FNV-1a 64 of the canonical form, hex
  int order = 0;
  std::size_t size = 0;
  std::optional<int> girth;  // empty for forests
  bool connected = false;
  bool cubic = false;
  std::uint64_t aut_order = 0;
  std::vector<std::string> generators;  // cycle notation
  // Symmetry data needs a connected graph.
  std::optional<TransitivityProfile> transitivity;
  std::optional<StabilizerClass> stabilizer;
  std::optional<EdgeOrbitSummary> edge_orbits;
  std::size_t consistent_girth_cycles = 0;
  std::optional<int> distinguishing_number;  // empty past the color cap
  std::optional<CostResult> cost;            // empty when the budget ran out
  std::string cost_note;
};

struct AnalysisOptions {
  std::optional<std::uint64_t> budget;
};

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

std::string fnv1a_hex(std::string_view bytes);

Json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);
std::string to_text(const ClaimReport& report);

}  // namespace cubicsym
