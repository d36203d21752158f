#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "unimod/code.hpp"
#include "unimod/lattice.hpp"
#include "unimod/poly.hpp"

namespace unimod {

/// Code file: "k n r", then r rows of n integers.
ZkCode read_code(std::istream& in);
void write_code(std::ostream& out, const ZkCode& code);
ZkCode load_code_file(const std::string& path);

/// Lattice file: "m s", then m rows of m integers.
Lattice read_lattice(std::istream& in);
void write_lattice(std::ostream& out, const Lattice& lattice);
Lattice load_lattice_file(const std::string& path);
void save_lattice_file(const std::string& path, const Lattice& lattice);

/// "num/den"; parse also accepts a bare integer.
std::string rational_key(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

/// {"exponent": "num/den"}
nlohmann::json to_json(const UnivariatePoly& p);
UnivariatePoly univariate_from_json(const nlohmann::json& j);

/// {"num/den": count}; the bound is not part of the map.
nlohmann::json to_json(const ThetaPrefix& t);
ThetaPrefix theta_from_json(const nlohmann::json& j, const mpq_class& bound);

}  // namespace unimod
