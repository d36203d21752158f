#include "unimod/report.hpp"

#include <algorithm>
#include <sstream>

#include "unimod/glue.hpp"
#include "unimod/io.hpp"

namespace unimod {

namespace {

nlohmann::json rational_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return rational_to_string(q);
}

bool is_odd(const Lattice& lattice) {
  const IntMatrix g = gram_numerator(lattice);
  for (std::size_t i = 0; i < g.rows(); ++i)
    if ((g(i, i) / lattice.scale()) % 2 != 0) return true;
  return false;
}

}  // namespace

ReportRow analyze(const std::string& name, const Lattice& lattice, const AnalyzeOptions& options) {
  EnumerationOptions eo = options.enumeration;
  if (eo.label.empty()) eo.label = name;
  ReportRow row;
  row.name = name;
  row.theta = theta_prefix(lattice, options.bound, eo);
  row.min_norm = row.theta.min_norm();
  row.tau = row.theta.kissing();
  if (!is_unimodular(lattice) || !is_odd(lattice)) return row;

  const ShadowDecomposition d = shadow(lattice);
  const mpq_class low = 3;
  ThetaPrefix low_shadow(low);
  if (lattice.dimension() % 4 == 0) {
    // The two shadow cosets of L_0 are the norm-3 parts of the two neighbors.
    std::array<std::uint64_t, 2> c{};
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& t = d.coset_reps[static_cast<std::size_t>(d.shadow_indices()[k])];
      const ThetaPrefix part = short_vectors_in_coset(d.even_part, t, low, eo);
      c[k] = part.count(3);
      for (const auto& [norm, n] : part.counts()) low_shadow.add(norm, n);
    }
    if (c[0] > c[1]) std::swap(c[0], c[1]);
    row.n_counts = std::make_pair(c[0], c[1]);
  } else {
    low_shadow = shadow_prefix(d, low, eo);
  }
  row.alpha = low_shadow.count(1);
  row.shadow_search_limit = options.shadow_limit;
  if (!low_shadow.counts().empty()) row.shadow_min = low_shadow.counts().begin()->first;
  else row.shadow_min = shadow_minimum(d, options.shadow_limit, eo);
  return row;
}

nlohmann::json to_json(const ReportRow& row) {
  nlohmann::json j;
  j["name"] = row.name;
  j["bound"] = rational_json(row.theta.bound());
  j["theta"] = to_json(row.theta);
  j["min_norm"] = row.min_norm ? rational_json(*row.min_norm) : nlohmann::json(nullptr);
  j["tau"] = row.tau;
  j["kissing"] = row.tau;
  j["alpha"] = row.alpha ? nlohmann::json(*row.alpha) : nlohmann::json(nullptr);
  if (row.alpha) {
    j["shadow_min"] = row.shadow_min ? rational_json(*row.shadow_min) : nlohmann::json(nullptr);
    j["shadow_search_limit"] = rational_json(row.shadow_search_limit);
  } else {
    j["shadow_min"] = nullptr;
  }
  j["n_counts"] = row.n_counts ? nlohmann::json::array({row.n_counts->first, row.n_counts->second})
                               : nlohmann::json(nullptr);
  return j;
}

const std::vector<ExpectedRow>& table1_expected() {
  static const std::vector<ExpectedRow> rows = {
      {"C36_1", 4, 51032, {0, 840}},   {"C36_2", 4, 42840, {0, 960}},   {"C36_3", 4, 51032, {0, 840}},
      {"C36_4", 4, 51032, {0, 840}},   {"C36_5", 4, 51032, {0, 840}},   {"C36_6", 4, 42840, {0, 960}},
      {"C36_7", 4, 42840, {0, 960}},   {"C36_8", 4, 42840, {0, 960}},   {"C36_9", 4, 51032, {0, 840}},
      {"C36_10", 4, 51032, {0, 840}},  {"D36_1", 5, 42840, {144, 816}}, {"D36_2", 5, 42840, {456, 504}},
      {"D36_3", 6, 42840, {240, 720}}, {"D36_4", 6, 42840, {240, 720}}, {"D36_5", 7, 42840, {288, 672}},
      {"D36_6", 7, 42840, {144, 816}}, {"D36_7", 7, 42840, {144, 816}}, {"D36_8", 9, 42840, {384, 576}},
      {"D36_9", 19, 42840, {288, 672}}, {"E36_1", 5, 42840, {456, 504}}, {"E36_2", 6, 42840, {384, 576}},
  };
  return rows;
}

const ExpectedRow* find_expected(const std::string& name) {
  for (const auto& r : table1_expected())
    if (r.name == name) return &r;
  return nullptr;
}

bool matches(const ReportRow& row, const ExpectedRow& expected) {
  return row.min_norm == mpq_class(4) && row.tau == expected.tau && row.n_counts == expected.n_counts;
}

const std::vector<std::pair<std::string, std::string>>& long_shadow_sources() {
  static const std::vector<std::pair<std::string, std::string>> s = {
      {"N36_1", "C36_2"}, {"N36_2", "C36_6"}, {"N36_3", "C36_7"}, {"N36_4", "C36_8"}};
  return s;
}

std::string table1_markdown(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "| Lattice | k | min | tau | expected tau | {n1, n2} | expected {n1, n2} | alpha | match |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    const ExpectedRow* e = find_expected(row.name);
    auto pair = [](const std::pair<std::uint64_t, std::uint64_t>& p) {
      return "{" + std::to_string(p.first) + ", " + std::to_string(p.second) + "}";
    };
    out << "| A_" << (e ? std::to_string(e->modulus) : "?") << "(" << row.name << ") | " << (e ? e->modulus : 0)
        << " | " << (row.min_norm ? rational_to_string(*row.min_norm) : "-") << " | " << row.tau << " | "
        << (e ? std::to_string(e->tau) : "-") << " | " << (row.n_counts ? pair(*row.n_counts) : "-") << " | "
        << (e ? pair(e->n_counts) : "-") << " | " << (row.alpha ? std::to_string(*row.alpha) : "-") << " | "
        << (e && matches(row, *e) ? "yes" : "NO") << " |\n";
  }
  return out.str();
}

}  // namespace unimod
