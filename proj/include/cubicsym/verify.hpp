#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubicsym/graph.hpp"
#include "json.hpp"

namespace cubicsym {

using Json = nlohmann::ordered_json;

class UnknownClaim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ClaimHit {
  std::string graph6;  // canonical form
  int order = 0;
  std::string name;  // catalog name when recognized, else empty
  bool conclusion = false;
  Json details = Json::object();
};

struct ClaimReport {
  std::string claim;
  std::string statement;
  int n_min = 0;
  int n_max = 0;
  std::vector<std::string> inputs;  // supplied catalog inputs, if any
  std::uint64_t graphs_scanned = 0;
  std::vector<ClaimHit> hits;  // graphs satisfying the hypothesis
  bool pass = true;
  std::optional<std::string> counterexample;  // first failing hit, graph6
  std::vector<std::string> notes;
};

struct VerifyOptions {
  std::optional<int> max_n;  // per-claim default when absent
  int jobs = 1;
  std::vector<std::string> catalog_inputs;  // thm34 / cor33 only
};

std::vector<std::string> claim_ids();
int default_max_n(std::string_view claim);

ClaimReport verify_claim(std::string_view claim, const VerifyOptions& options = {});

/// Name of the catalog graph isomorphic to g, if any.
std::optional<std::string> recognize(const Graph& g);

inline constexpr int kReportSchemaVersion = 1;

Json to_json(const ClaimReport& report);

}  // namespace cubicsym
