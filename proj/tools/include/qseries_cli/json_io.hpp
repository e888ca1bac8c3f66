#pragma once

#include <json.hpp>

#include "qseries/hunt.hpp"
#include "qseries/pslq.hpp"
#include "qseries/verify.hpp"

namespace qseries {

// Long numbers travel as strings: reals as {"decimal", "bits"} with enough
// digits to reproduce the binary value, integers and rationals as text.

void to_json(nlohmann::json& j, const Real& x);
void from_json(const nlohmann::json& j, Real& x);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

void to_json(nlohmann::json& j, const NearHit& h);
void from_json(const nlohmann::json& j, NearHit& h);

void to_json(nlohmann::json& j, const Relation& r);
void from_json(const nlohmann::json& j, Relation& r);

void to_json(nlohmann::json& j, const NoRelation& r);
void from_json(const nlohmann::json& j, NoRelation& r);

namespace cli {

struct PartitionRow {
  long n = 0;
  BigInt value;

  friend bool operator==(const PartitionRow&, const PartitionRow&) = default;
};

void to_json(nlohmann::json& j, const PartitionRow& row);
void from_json(const nlohmann::json& j, PartitionRow& row);

/// Rounds to `places` decimals so the value prints with few significant digits.
double round_to(double value, int places);

}  // namespace cli

}  // namespace qseries
