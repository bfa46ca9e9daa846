#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "zerolab/lfun.hpp"

namespace zerolab::lfun {

// Coefficients file:
//   conductor <real> root <+1|-1> [arith <q>] [horizon <n>]
//   <p> <theta>
//   <p> ramified
// One line per prime, ascending. Without `arith`, the arithmetic conductor is the
// product of the ramified primes; without `horizon`, it is the last listed prime.
// Blank lines and lines starting with '#' are skipped.
AutoRep parse_coefficients(std::istream& in, const std::string& source = "<coefficients>");
AutoRep load_coefficients(const std::filesystem::path& path);
std::string dump_coefficients(const AutoRep& rep);

// Zeros file:
//   conductor <real>
//   <gamma>
// Ordinates must be real; anything else is a parse error.
ZerosRecord parse_zeros(std::istream& in, const std::string& source = "<zeros>");
ZerosRecord load_zeros(const std::filesystem::path& path);
std::string dump_zeros(const ZerosRecord& zeros);

}  // namespace zerolab::lfun
