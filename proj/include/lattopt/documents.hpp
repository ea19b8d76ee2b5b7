#pragma once

#include <vector>

#include "lattopt/io.hpp"
#include "lattopt/oracle.hpp"

namespace lattopt::io {

// Result documents shared by the CLI and the language bindings: each builder
// runs one pipeline operation on a parsed instance and returns the complete
// JSON document that gets printed on stdout. Deterministic: identical inputs
// produce byte-identical renderings.

Json count_document(const InstanceBundle& inst);

// k rungs of the bound table for the (sense-adjusted) objective. force_shift
// runs on the shifted objective even when the instance vouches nonnegativity.
Json bounds_document(const InstanceBundle& inst, unsigned k, bool force_shift, unsigned digits);

// Exact optimization with the integer-gap stopping rule; doc["converged"]
// tells callers whether the ladder closed within k_max.
Json optimize_document(const InstanceBundle& inst, unsigned k_max, unsigned digits);

// (1 - epsilon)-approximation; requires a nonnegative maximization objective
// unless force_shift is set (the guarantee then applies in the shifted
// scale). Throws std::invalid_argument otherwise.
Json fptas_document(const InstanceBundle& inst, const BigRat& epsilon, bool recover,
                    bool force_shift, unsigned digits);

// Brute-force reference: count plus the sense-correct optimum.
// doc["status"] is "infeasible" when the instance has no lattice points.
Json oracle_document(const InstanceBundle& inst, long budget);

// Grid-refinement sequence for mixed instances.
Json mixed_document(const InstanceBundle& inst, const std::vector<size_t>& integer_vars,
                    const std::vector<long>& grid, const BigRat& epsilon, bool exact_mode,
                    bool assert_nonnegative, unsigned digits);

// Root-extraction precision used by the documents: 10^-(digits+3), so the
// rendered decimals are correct to the last digit.
BigRat document_precision(unsigned digits);

}  // namespace lattopt::io
