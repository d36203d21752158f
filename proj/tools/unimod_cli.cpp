// Command-line front end: dataset lattices, kissing numbers and neighbor counts, long-shadow
// neighbors, frame graphs and the symbolic derivations.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <tuple>

#include "unimod/code.hpp"
#include "unimod/construction.hpp"
#include "unimod/errors.hpp"
#include "unimod/frames.hpp"
#include "unimod/glue.hpp"
#include "unimod/invariant_ring.hpp"
#include "unimod/io.hpp"
#include "unimod/report.hpp"

using namespace unimod;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Common {
  std::string bound = "4";
  std::uint64_t budget = 10'000'000'000ULL;
  unsigned threads = 0;
  bool markdown = false;
  bool quiet = false;

  EnumerationOptions enumeration(const std::string& label) const {
    EnumerationOptions o;
    o.node_budget = budget;
    o.threads = threads;
    o.label = label;
    if (!quiet) o.progress = [](const std::string& line) { std::cerr << line << std::endl; };
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_bound) {
  if (with_bound) cmd->add_option("--bound", c.bound, "Theta bound (rational)")->capture_default_str();
  cmd->add_option("--budget", c.budget, "Enumeration node budget per lattice")->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads, 0 for all cores")->capture_default_str();
  auto* md = cmd->add_flag("--md", c.markdown, "Markdown output");
  cmd->add_flag("--json", "JSON output (default)")->excludes(md);
  cmd->add_flag("-q,--quiet", c.quiet, "No progress lines on stderr");
}

bool is_dataset_name(const std::string& s) {
  const auto& names = dataset_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

Lattice long_shadow_lattice(const std::string& name, const Common& c) {
  for (const auto& [n, source] : long_shadow_sources())
    if (n == name) {
      auto l = long_shadow_extract(construction_a(dataset(source)), c.enumeration(source));
      if (!l) throw Error("no long-shadow neighbor could be extracted from " + source);
      return *l;
    }
  throw UnknownName("unknown lattice: " + name);
}

Lattice resolve(const std::string& source, const Common& c) {
  if (is_dataset_name(source)) return construction_a(dataset(source));
  if (source.rfind("N36_", 0) == 0) return long_shadow_lattice(source, c);
  if (std::filesystem::exists(source)) {
    if (std::filesystem::path(source).extension() == ".code") return construction_a(load_code_file(source));
    return load_lattice_file(source);
  }
  throw UnknownName("not a dataset name or readable file: " + source);
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const std::string& source, const std::string& file, const std::string& shadow_limit, const Common& c) {
  const std::string name = file.empty() ? source : file;
  if (name.empty()) throw InvalidArgument("analyze needs a source or --file");
  AnalyzeOptions opts;
  opts.bound = parse_rational(c.bound);
  opts.shadow_limit = parse_rational(shadow_limit);
  opts.enumeration = c.enumeration(name);
  const ReportRow row = analyze(name, resolve(name, c), opts);
  if (c.markdown) std::cout << table1_markdown({row});
  else std::cout << to_json(row).dump(2) << std::endl;
  return 0;
}

// --- table1 -----------------------------------------------------------------

int cmd_table1(std::vector<std::string> only, const Common& c) {
  if (only.empty())
    for (const auto& e : table1_expected()) only.push_back(e.name);
  std::vector<ReportRow> rows;
  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& name : only) {
    const ExpectedRow* e = find_expected(name);
    if (!e) throw UnknownName("not a dataset lattice: " + name);
    AnalyzeOptions opts;
    opts.bound = 4;
    opts.enumeration = c.enumeration(name);
    ReportRow row = analyze(name, construction_a(dataset(name)), opts);
    const bool m = matches(row, *e);
    ok = ok && m;
    nlohmann::json j = to_json(row);
    j.erase("theta");
    j["expected_tau"] = e->tau;
    j["expected_n_counts"] = {e->n_counts.first, e->n_counts.second};
    j["match"] = m;
    out.push_back(j);
    rows.push_back(std::move(row));
  }
  if (c.markdown) std::cout << table1_markdown(rows);
  else std::cout << out.dump(2) << std::endl;
  std::cerr << (ok ? "PASS" : "FAIL") << " table1: " << rows.size() << " rows" << std::endl;
  return ok ? 0 : kExitFail;
}

// --- long-shadow ------------------------------------------------------------

int cmd_long_shadow(std::vector<std::string> sources, const std::string& out_dir, const Common& c) {
  bool defaults = sources.empty();
  if (defaults)
    for (const auto& [n, s] : long_shadow_sources()) sources.push_back(s);
  bool ok = true;
  nlohmann::json report = nlohmann::json::array();
  for (const auto& source : sources) {
    std::string name = source + "_long_shadow";
    for (const auto& [n, s] : long_shadow_sources())
      if (s == source) name = n;
    const EnumerationOptions eo = c.enumeration(source);
    const auto lattice = long_shadow_extract(resolve(source, c), eo);
    nlohmann::json j{{"source", source}};
    if (!lattice) {
      j["extracted"] = false;
      if (defaults) ok = false;
      report.push_back(j);
      continue;
    }
    const ThetaPrefix theta = theta_prefix(*lattice, 3, eo);
    const ShadowDecomposition d = shadow(*lattice);
    const auto smin = shadow_minimum(d, 5, eo);
    j["extracted"] = true;
    j["name"] = name;
    j["min_norm"] = 3;
    j["kissing"] = theta.kissing();
    j["shadow_min"] = smin ? nlohmann::json(smin->get_num().get_si()) : nlohmann::json(nullptr);
    const bool good = theta.min_norm() == mpq_class(3) && theta.kissing() == 960 && smin == mpq_class(5);
    j["verified"] = good;
    ok = ok && good;
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      const std::string path = (std::filesystem::path(out_dir) / (name + ".lat")).string();
      save_lattice_file(path, *lattice);
      j["file"] = path;
    }
    report.push_back(j);
  }
  std::cout << report.dump(2) << std::endl;
  return ok ? 0 : kExitFail;
}

// --- derive -----------------------------------------------------------------

bool check(const std::string& what, bool ok) {
  std::cout << (ok ? "PASS " : "FAIL ") << what << std::endl;
  return ok;
}

int derive_residue_we(bool dim8) {
  WeightConstraints wc{36, dim8 ? 8 : 7, 4, 16, 4, AllOne::Unknown};
  const auto sols = solve_constrained_we(wc);
  for (const auto& s : sols) std::cout << "W(y) = " << s.to_string() << std::endl;
  const UnivariatePoly expected = dim8 ? UnivariatePoly{{0, 1}, {16, 153}, {20, 72}, {24, 30}}
                                       : UnivariatePoly{{0, 1}, {16, 63}, {20, 63}, {36, 1}};
  return check(std::string(dim8 ? "doubly even [36,8]" : "doubly even [36,7]") + " enumerator is unique and equals " +
                   expected.to_string(),
               sols.size() == 1 && sols[0] == expected)
             ? 0
             : kExitFail;
}

// One representative per coefficient; every permutation of the exponents
// carries the same coefficient.
const std::vector<std::tuple<int, int, int, long>>& cwe_listing_orbits() {
  static const std::vector<std::tuple<int, int, int, long>> o = {
      {36, 0, 0, 1},          {12, 12, 12, 78706260}, {18, 18, 0, 682},       {15, 15, 6, 7019232},
      {24, 6, 6, 29172},      {18, 9, 9, 10260316},   {12, 15, 9, 37995408},  {12, 18, 6, 3924756},
      {12, 21, 3, 58344},     {12, 24, 0, 102},       {15, 18, 3, 170544},    {21, 6, 9, 641784},
      {24, 3, 9, 6732},
  };
  return o;
}

TrivariatePoly expected_cwe() {
  TrivariatePoly w(36);
  for (auto [i, j, l, c] : cwe_listing_orbits()) {
    std::array<int, 3> e{i, j, l};
    std::sort(e.begin(), e.end());
    do w.set(e[0], e[1], e[2], c);
    while (std::next_permutation(e.begin(), e.end()));
  }
  return w;
}

int derive_cwe() {
  const CweFamily f = extremal_cwe_family();
  const std::map<int, std::pair<mpq_class, mpq_class>> expected = {
      {2, {mpq_class(3281, 13824), mpq_class(-1, 64)}}, {3, {mpq_class(203, 4608), mpq_class(-9, 256)}},
      {4, {mpq_class(1763, 13824), mpq_class(3, 128)}}, {5, {mpq_class(-277, 13824), mpq_class(-1, 256)}},
      {6, {mpq_class(1133, 1728), mpq_class(3, 64)}},   {7, {mpq_class(-77, 1728), mpq_class(-1, 64)}},
  };
  bool ok = true;
  for (const auto& [i, rel] : expected) {
    auto [c, s] = f.relation(i);
    c.canonicalize();
    s.canonicalize();
    std::cout << "a" << i << " = " << rational_to_string(c) << " + (" << rational_to_string(s) << ") a1" << std::endl;
    mpq_class ec = rel.first, es = rel.second;
    ec.canonicalize();
    es.canonicalize();
    ok = check("a" + std::to_string(i) + " relation", c == ec && s == es) && ok;
  }
  const auto [c0, c1] = f.coefficient(0, 15, 21);
  std::cout << "coefficient of y^15 z^21: " << rational_to_string(c0) << " + " << rational_to_string(c1) << " a1"
            << std::endl;
  ok = check("y^15 z^21 coefficient is 15180 + 2916 a1", c0 == 15180 && c1 == 2916) && ok;
  const mpq_class a1 = admissible_a1();
  std::cout << "a1 = " << rational_to_string(a1) << std::endl;
  mpq_class expected_a1(-15180, 2916);
  expected_a1.canonicalize();
  ok = check("a1 = -15180/2916", a1 == expected_a1) && ok;
  const TrivariatePoly w = admissible_cwe();
  std::cout << "W(x,y,z) = " << w.to_string() << std::endl;
  ok = check("complete weight enumerator matches the 58-term listing", w == expected_cwe()) && ok;
  ok = check("coefficients are nonnegative integers", w.has_nonnegative_integer_coefficients()) && ok;
  const auto odd = odd_ones_full_weight_terms(w);
  std::cout << "weight-36 monomials with an odd number of 1's: " << odd.size() << std::endl;
  return ok ? 0 : kExitFail;
}

int derive_gleason() {
  const UnivariatePoly w = gleason_ternary_we(36, 9, 33);
  std::cout << "W(y) = " << w.to_string() << std::endl;
  const UnivariatePoly expected{{0, 1},          {9, 888},         {12, 34848},     {15, 1432224},  {18, 18377688},
                                {21, 90482256},  {24, 162551592},  {27, 97883072},  {30, 16178688}, {33, 479232}};
  bool ok = check("ternary [36,18,9] enumerator without weight 36", w == expected);
  ok = check("coefficients sum to 3^18", w.coefficient_sum() == 387420489) && ok;
  return ok ? 0 : kExitFail;
}

int derive_theta() {
  bool ok = true;
  for (int a = 0; a <= 16; ++a) {
    const ThetaPair t = extremal_theta36(a);
    std::cout << "alpha=" << a << "  theta: 1 + " << t.theta.count(4) << "q^4 + " << t.theta.count(5)
              << "q^5  shadow: " << t.shadow.count(1) << "q + " << t.shadow.count(3) << "q^3 + " << t.shadow.count(5)
              << "q^5" << std::endl;
  }
  ok = check("alpha=0 gives kissing number 42840", extremal_theta36(0).theta.count(4) == 42840) && ok;
  ok = check("alpha=2 gives kissing number 51032", extremal_theta36(2).theta.count(4) == 51032) && ok;
  ok = check("alpha=0 shadow q^5 coefficient 3799296", extremal_theta36(0).shadow.count(5) == 3799296) && ok;
  const ThetaPair m = min3_theta36(0, 0);
  ok = check("minimum 3, alpha=beta=0: kissing 960, no shadow vectors below norm 5",
             m.theta.count(3) == 960 && m.shadow.count(1) == 0 && m.shadow.count(3) == 0) &&
       ok;
  const std::uint64_t sum = extremal_theta36(0).shadow.count(3);
  ok = check("ternary code lattice with kissing 72: neighbor counts {72, " + std::to_string(sum - 72) + "}",
             sum == 960 && sum - 72 == 888) &&
       ok;
  ok = check("extremal bound is 4 in dimension 36", extremal_bound(36) == 4) && ok;
  return ok ? 0 : kExitFail;
}

int cmd_derive(const std::string& target) {
  if (target == "lemma1") return derive_residue_we(false);
  if (target == "remark368") return derive_residue_we(true);
  if (target == "cwe") return derive_cwe();
  if (target == "gleason-b") return derive_gleason();
  if (target == "theta") return derive_theta();
  throw UnknownName("unknown derivation: " + target);
}

// --- frames -----------------------------------------------------------------

int cmd_frames(const std::string& source, bool dump_witness, const std::string& graph_out, const Common& c) {
  const Lattice lattice = resolve(source, c);
  const FrameGraph g = frame_graph(lattice, c.enumeration(source));
  if (!graph_out.empty()) {
    std::ofstream out(graph_out);
    if (!out) throw ParseError("cannot write " + graph_out);
    write_adjacency_list(g, out);
  }
  const CliqueResult clique = max_clique(g);
  const bool frame = clique.size >= static_cast<int>(lattice.dimension());
  nlohmann::json j{{"source", source},
                   {"dimension", lattice.dimension()},
                   {"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"valency", g.valency() ? nlohmann::json(*g.valency()) : nlohmann::json(nullptr)},
                   {"max_clique", clique.size},
                   {"has_3_frame", frame}};
  if (dump_witness) {
    nlohmann::json w = nlohmann::json::array();
    for (int v : clique.witness) {
      std::vector<Int> row(g.vertex_vectors().row(static_cast<std::size_t>(v)).begin(),
                           g.vertex_vectors().row(static_cast<std::size_t>(v)).end());
      w.push_back(row);
    }
    j["witness_scale"] = lattice.scale();
    j["witness"] = w;
  }
  if (c.markdown) {
    std::cout << "| source | vertices | valency | max clique | 3-frame |\n|---|---|---|---|---|\n"
              << "| " << source << " | " << g.vertex_count() << " | "
              << (g.valency() ? std::to_string(*g.valency()) : "-") << " | " << clique.size << " | "
              << (frame ? "yes" : "no") << " |\n";
  } else {
    std::cout << j.dump(2) << std::endl;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unimodular lattices in dimension 36: invariants, neighbors, frames and enumerators"};
  app.require_subcommand(1);

  Common common;
  std::string source, file, shadow_limit = "9";
  auto* analyze_cmd = app.add_subcommand("analyze", "Theta prefix, shadow and neighbor counts of one lattice");
  analyze_cmd->add_option("source", source, "Dataset name, N36_1..N36_4, or a .code/.lat file");
  analyze_cmd->add_option("--file", file, "Code (.code) or lattice file");
  analyze_cmd->add_option("--shadow-limit", shadow_limit, "Largest norm searched for the shadow minimum")
      ->capture_default_str();
  add_common(analyze_cmd, common, true);

  std::vector<std::string> only;
  auto* table_cmd = app.add_subcommand("table1", "Kissing numbers and neighbor counts of the 21 dataset lattices");
  table_cmd->add_option("names", only, "Restrict to these rows");
  add_common(table_cmd, common, false);

  std::vector<std::string> ls_sources;
  std::string out_dir;
  auto* ls_cmd = app.add_subcommand("long-shadow", "Extract the minimum-norm-3 neighbors with long shadow");
  ls_cmd->add_option("sources", ls_sources, "Source codes (default C36_2 C36_6 C36_7 C36_8)");
  ls_cmd->add_option("--out", out_dir, "Directory for the extracted lattice files");
  add_common(ls_cmd, common, false);

  std::string target;
  auto* derive_cmd = app.add_subcommand("derive", "Symbolic derivations with PASS/FAIL checks");
  derive_cmd->add_option("target", target, "lemma1 | remark368 | cwe | gleason-b | theta")
      ->required()
      ->check(CLI::IsMember({"lemma1", "remark368", "cwe", "gleason-b", "theta"}));

  bool dump_witness = false;
  std::string graph_out;
  auto* frames_cmd = app.add_subcommand("frames", "Norm-3 orthogonality graph, maximum clique and 3-frames");
  frames_cmd->add_option("source", source, "Dataset name, N36_1..N36_4, or a .code/.lat file")->required();
  frames_cmd->add_flag("--dump-witness", dump_witness, "Print the vectors of a maximum clique");
  frames_cmd->add_option("--graph", graph_out, "Write the graph as an adjacency list");
  add_common(frames_cmd, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(source, file, shadow_limit, common);
    if (*table_cmd) return cmd_table1(only, common);
    if (*ls_cmd) return cmd_long_shadow(ls_sources, out_dir, common);
    if (*derive_cmd) return cmd_derive(target);
    if (*frames_cmd) return cmd_frames(source, dump_witness, graph_out, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitInput;
  }
  return 0;
}
