#include "unimod/construction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "unimod/dataset_files.hpp"
#include "unimod/errors.hpp"

namespace unimod {

namespace {

Int mod(Int a, Int k) {
  const Int r = a % k;
  return r < 0 ? r + k : r;
}

const detail::EmbeddedFile* find_file(const std::string& fname) {
  for (const auto& f : detail::embedded_files())
    if (fname == f.name) return &f;
  return nullptr;
}

struct NegacirculantTable {
  std::vector<std::string> names;
  std::map<std::string, NegacirculantSpec> specs;
};

const NegacirculantTable& negacirculant_table() {
  static const NegacirculantTable table = [] {
    NegacirculantTable t;
    const auto* f = find_file("negacirculant.txt");
    if (!f) throw ParseError("embedded negacirculant.txt is missing");
    std::istringstream in(f->content);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string name;
      NegacirculantSpec spec;
      ls >> name >> spec.modulus;
      for (auto& v : spec.first_row_a) ls >> v;
      for (auto& v : spec.first_row_b) ls >> v;
      if (!ls) throw ParseError("bad negacirculant line: " + line);
      t.names.push_back(name);
      t.specs[name] = spec;
    }
    return t;
  }();
  return table;
}

}  // namespace

Lattice construction_a(const ZkCode& code) {
  if (!is_self_dual(code)) throw NotSelfDual("construction A needs a self-dual code");
  return Lattice(code.lattice_basis(), code.modulus());
}

IntMatrix negacirculant(std::span<const Int> first_row, Int modulus) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  const std::size_t m = first_row.size();
  IntMatrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) out(0, j) = mod(first_row[j], modulus);
  for (std::size_t i = 1; i < m; ++i) {
    out(i, 0) = mod(-out(i - 1, m - 1), modulus);
    for (std::size_t j = 1; j < m; ++j) out(i, j) = out(i - 1, j - 1);
  }
  return out;
}

ZkCode build_double_negacirculant(const NegacirculantSpec& spec) {
  const Int k = spec.modulus;
  if (k < 2) throw InvalidArgument("modulus must be at least 2");
  const IntMatrix a = negacirculant(spec.first_row_a, k);
  const IntMatrix b = negacirculant(spec.first_row_b, k);
  const IntMatrix s = a * a.transpose();
  const IntMatrix t = b * b.transpose();
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      const Int want = i == j ? k - 1 : 0;
      const Int got = mod(s(i, j) + t(i, j), k);
      if (got != want) {
        std::ostringstream msg;
        msg << "AA^T + BB^T differs from -I at (" << i << ", " << j << "): " << got << " mod " << k;
        throw NotSelfDual(msg.str());
      }
    }
  IntMatrix g(18, 36);
  for (std::size_t i = 0; i < 18; ++i) g(i, i) = 1;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      g(i, 18 + j) = a(i, j);
      g(i, 27 + j) = b(i, j);
      g(9 + i, 18 + j) = mod(-b(j, i), k);
      g(9 + i, 27 + j) = a(j, i);
    }
  ZkCode code(static_cast<int>(k), 36, g);
  if (!is_self_dual(code)) throw NotSelfDual("double negacirculant code is not self-dual");
  return code;
}

ZkCode build_z4(const Z4Seed& seed) {
  const std::size_t r = seed.rows.rows();
  const std::size_t n = r + seed.rows.cols();
  if (n == 0) throw InvalidArgument("empty seed");
  IntMatrix g(r, n);
  IntMatrix residue(r, n);
  for (std::size_t i = 0; i < r; ++i) {
    g(i, i) = 1;
    for (std::size_t j = 0; j < seed.rows.cols(); ++j) g(i, r + j) = mod(seed.rows(i, j), 4);
    for (std::size_t j = 0; j < n; ++j) residue(i, j) = g(i, j) % 2;
  }
  // A binary code is doubly even iff its generators have weights divisible
  // by 4 and are pairwise orthogonal.
  for (std::size_t i = 0; i < r; ++i) {
    if (hamming_weight(residue.row(i)) % 4 != 0) throw NotDoublyEven("residue row has weight not divisible by 4");
    for (std::size_t j = i + 1; j < r; ++j)
      if (checked_dot(residue.row(i), residue.row(j)) % 2 != 0)
        throw NotDoublyEven("residue rows are not orthogonal");
  }
  const ZkCode dual = r == 0 ? ZkCode(2, static_cast<int>(n), IntMatrix::identity(n))
                             : dual_code(ZkCode(2, static_cast<int>(n), residue));
  IntMatrix all = g;
  for (std::size_t i = 0; i < dual.generators().rows(); ++i) {
    std::vector<Int> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = 2 * dual.generators()(i, j);
    all.append_row(row);
  }
  ZkCode code(4, static_cast<int>(n), all);
  if (!is_self_dual(code)) throw CompletionFailed("completed Z4 code is not self-dual");
  return code;
}

const std::vector<std::string>& dataset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (int i = 1; i <= 10; ++i) out.push_back("C36_" + std::to_string(i));
    for (const auto& n : negacirculant_table().names) out.push_back(n);
    return out;
  }();
  return names;
}

NegacirculantSpec negacirculant_spec(const std::string& name) {
  const auto& t = negacirculant_table();
  auto it = t.specs.find(name);
  if (it == t.specs.end()) throw UnknownName("unknown negacirculant code: " + name);
  return it->second;
}

Z4Seed z4_seed(const std::string& name) {
  const auto* f = find_file(name + ".code");
  if (!f || name.rfind("C36_", 0) != 0) throw UnknownName("unknown Z4 code: " + name);
  std::istringstream in(f->content);
  Int k = 0, n = 0, r = 0;
  in >> k >> n >> r;
  if (!in || k != 4 || r <= 0 || n <= r) throw ParseError("bad header in " + std::string(f->name));
  Z4Seed seed{IntMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(n - r))};
  for (Int i = 0; i < r; ++i)
    for (Int j = 0; j < n; ++j) {
      Int v = 0;
      in >> v;
      if (!in) throw ParseError("truncated " + std::string(f->name));
      if (j >= r) seed.rows(i, j - r) = v;
      else if (v != (i == j ? 1 : 0)) throw ParseError("seed rows of " + name + " do not start with the identity");
    }
  return seed;
}

ZkCode dataset(const std::string& name) {
  if (name.rfind("C36_", 0) == 0) return build_z4(z4_seed(name));
  return build_double_negacirculant(negacirculant_spec(name));
}

std::uint64_t dataset_checksum() {
  std::vector<const detail::EmbeddedFile*> files;
  for (const auto& f : detail::embedded_files()) files.push_back(&f);
  std::sort(files.begin(), files.end(),
            [](const auto* a, const auto* b) { return std::string_view(a->name) < std::string_view(b->name); });
  std::uint64_t h = 14695981039346656037ULL;
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto* f : files) {
    feed(f->name);
    feed(f->content);
  }
  return h;
}

}  // namespace unimod
