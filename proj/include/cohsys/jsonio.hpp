#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cohsys/intpoly.hpp"
#include "cohsys/moduli.hpp"
#include "cohsys/poincare.hpp"
#include "cohsys/report.hpp"

namespace cohsys {

using nlohmann::json;

// Integers serialize as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; rationals as {"num","den"} pairs, never
// floats.
json json_of(const BigInt& v);
BigInt bigint_from_json(const json& j);

json json_of(const Rational& r);
Rational rational_from_json(const json& j);

json json_of(const SystemType& s);

json json_of(const WallPattern& p);
WallPattern wall_pattern_from_json(const json& j);

json json_of(const std::vector<WallGroup>& groups);
std::vector<WallGroup> wall_groups_from_json(const json& j);

json json_of(const GroupDesc& g);

// Payloads of the CLI subcommands.
json info_payload(const SystemType& s);
json poincare_payload(const SystemType& s, const IntPoly& p);
json report_payload(const TopologyReport& r);

// Betti numbers flattened to b0..b_{deg} columns: a header line and a
// value line.
std::string poincare_csv(const IntPoly& p);

}  // namespace cohsys
