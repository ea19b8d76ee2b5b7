#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lattopt/instances.hpp"
#include "lattopt/optimize.hpp"

namespace lattopt::io {

// Ordered JSON keeps field order stable, which the byte-identical-output
// guarantee depends on.
using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Process exit codes shared by the CLI and its tests.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitInfeasible = 3,
  kExitUnbounded = 4,
  kExitDegenerate = 5,
  kExitBudget = 6,
  kExitUnconverged = 7,
};

// Instance files are JSON with keys: dimension; constraints (rows of
// coefficients, relation "<="/">=", rhs); objective (monomials of
// coefficient + exponents); optional metadata. Numbers are JSON integers or
// exact strings ("123", "-4", "1/2"); floating-point literals are rejected
// so no value ever passes through binary floating point.
InstanceBundle parse_instance(const std::string& text);
InstanceBundle load_instance(const std::string& path);

// Canonical serialization: integer-cleared "<=" rows, canonical monomial
// order, fixed key order. format(parse(format(x))) == format(x).
std::string format_instance(const InstanceBundle& bundle);

// FNV-1a 64 over the canonical serialization, as fixed-width hex.
std::string instance_digest(const InstanceBundle& bundle);

// Big integers that fit a JSON number are emitted as numbers, the rest as
// decimal strings; parsing accepts both forms.
Json integer_json(const BigInt& value);

Json point_json(const LatticePoint& x);
Json root_interval_json(const RootInterval& iv, unsigned digits);
Json bounds_row_json(const BoundsReport& rep, unsigned digits);
Json shift_info_json(const ShiftInfo& info);
Json instance_summary_json(const InstanceBundle& bundle);

// Single stable rendering used for every document the CLI prints.
std::string render_document(const Json& doc);

}  // namespace lattopt::io
