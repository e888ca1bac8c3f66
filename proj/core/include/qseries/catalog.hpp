#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qseries/identity.hpp"

namespace qseries {

/// Line-oriented catalog, one candidate per line:
///
///   id | exact | label | printed | lhs | linear | 72 * lambert(1, 1); -96 * lambert(1, 2)
///   id | approx 35 | label | reconstructed | lhs | product | F(1/8)^36; F(1/12)^-36
///
/// Lines sharing an id are candidates of one identity, in order. Blank lines
/// and lines starting with '#' are ignored.
std::string serialize_catalog(const std::vector<Identity>& identities);
void write_catalog(std::ostream& out, const std::vector<Identity>& identities);

/// Throws InvalidArgument with the offending line number on malformed input.
std::vector<Identity> parse_catalog(std::istream& in);
std::vector<Identity> parse_catalog(const std::string& text);
std::vector<Identity> load_catalog(const std::string& path);

}  // namespace qseries
