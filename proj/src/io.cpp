#include "unimod/io.hpp"

#include <fstream>
#include <sstream>

#include "unimod/errors.hpp"

namespace unimod {

namespace {

Int read_int(std::istream& in, const char* what) {
  Int v = 0;
  if (!(in >> v)) throw ParseError(std::string("expected an integer for ") + what);
  return v;
}

void expect_end(std::istream& in) {
  std::string rest;
  if (in >> rest) throw ParseError("unexpected trailing data: " + rest);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace

ZkCode read_code(std::istream& in) {
  const Int k = read_int(in, "modulus");
  const Int n = read_int(in, "length");
  const Int r = read_int(in, "row count");
  if (k < 2 || n < 1 || r < 0) throw ParseError("bad code header");
  IntMatrix g(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = read_int(in, "code entry");
  expect_end(in);
  return ZkCode(static_cast<int>(k), static_cast<int>(n), g);
}

void write_code(std::ostream& out, const ZkCode& code) {
  const IntMatrix& g = code.generators();
  out << code.modulus() << ' ' << code.length() << ' ' << g.rows() << '\n';
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? " " : "") << g(i, j);
    out << '\n';
  }
}

ZkCode load_code_file(const std::string& path) {
  auto in = open_input(path);
  return read_code(in);
}

Lattice read_lattice(std::istream& in) {
  const Int m = read_int(in, "dimension");
  const Int s = read_int(in, "scale");
  if (m < 1 || s < 1) throw ParseError("bad lattice header");
  IntMatrix b(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = read_int(in, "basis entry");
  expect_end(in);
  try {
    return Lattice(std::move(b), s);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

void write_lattice(std::ostream& out, const Lattice& lattice) {
  const IntMatrix& b = lattice.basis();
  out << lattice.dimension() << ' ' << lattice.scale() << '\n';
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out << (j ? " " : "") << b(i, j);
    out << '\n';
  }
}

Lattice load_lattice_file(const std::string& path) {
  auto in = open_input(path);
  return read_lattice(in);
}

void save_lattice_file(const std::string& path, const Lattice& lattice) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_lattice(out, lattice);
  if (!out) throw ParseError("failed writing " + path);
}

std::string rational_key(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) throw ParseError("not a rational: " + s);
  q.canonicalize();
  return q;
}

nlohmann::json to_json(const UnivariatePoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rational_key(c);
  return j;
}

UnivariatePoly univariate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("polynomial JSON must be an object");
  UnivariatePoly p;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size() || e < 0) throw ParseError("bad exponent " + k);
    } catch (const std::logic_error&) {
      throw ParseError("bad exponent " + k);
    }
    if (!v.is_string()) throw ParseError("coefficient must be a string");
    p.add(e, parse_rational(v.get<std::string>()));
  }
  return p;
}

nlohmann::json to_json(const ThetaPrefix& t) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [norm, c] : t.counts()) j[rational_key(norm)] = c;
  return j;
}

ThetaPrefix theta_from_json(const nlohmann::json& j, const mpq_class& bound) {
  if (!j.is_object()) throw ParseError("theta JSON must be an object");
  ThetaPrefix t(bound);
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_unsigned()) throw ParseError("theta count must be a nonnegative integer");
    t.add(parse_rational(k), v.get<std::uint64_t>());
  }
  return t;
}

}  // namespace unimod
