#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "unimod/lattice.hpp"

namespace unimod {

struct ReportRow {
  std::string name;
  ThetaPrefix theta;
  std::optional<mpq_class> min_norm;
  std::uint64_t tau = 0;
  // Present for odd unimodular lattices.
  std::optional<std::uint64_t> alpha;
  std::optional<mpq_class> shadow_min;
  mpq_class shadow_search_limit = 0;
  // Present for odd unimodular lattices of dimension divisible by 4.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> n_counts;
};

struct AnalyzeOptions {
  mpq_class bound = 4;
  /// Largest norm searched for the shadow minimum.
  mpq_class shadow_limit = 9;
  EnumerationOptions enumeration;
};

ReportRow analyze(const std::string& name, const Lattice& lattice, const AnalyzeOptions& options = {});

nlohmann::json to_json(const ReportRow& row);

/// Kissing number and neighbor norm-3 counts listed for each dataset lattice.
struct ExpectedRow {
  std::string name;
  int modulus;
  std::uint64_t tau;
  std::pair<std::uint64_t, std::uint64_t> n_counts;
};
const std::vector<ExpectedRow>& table1_expected();
const ExpectedRow* find_expected(const std::string& name);
bool matches(const ReportRow& row, const ExpectedRow& expected);

/// Long-shadow lattice names and the dataset codes they are extracted from.
const std::vector<std::pair<std::string, std::string>>& long_shadow_sources();

std::string table1_markdown(const std::vector<ReportRow>& rows);

}  // namespace unimod
