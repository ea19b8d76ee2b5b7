#include "lattopt/documents.hpp"

#include <tuple>
#include <utility>

namespace lattopt::io {

namespace {

// Objective as maximized by the pipeline: minimization instances are negated
// on the way in and their reported values negated on the way out.
Polynomial solver_objective(const InstanceBundle& inst) {
  if (inst.metadata.maximize) return inst.objective;
  return poly_scale(inst.objective, BigInt(-1));
}

BigInt sense_value(const InstanceBundle& inst, const BigInt& maximized) {
  return inst.metadata.maximize ? maximized : BigInt(-maximized);
}

Json base_document(const InstanceBundle& inst, const char* command) {
  Json doc;
  doc["command"] = command;
  doc["instance"] = instance_summary_json(inst);
  return doc;
}

}  // namespace

BigRat document_precision(unsigned digits) {
  return make_rat(BigInt(1), int_pow(BigInt(10), digits + 3));
}

Json count_document(const InstanceBundle& inst) {
  Json doc = base_document(inst, "count");
  doc["count"] = integer_json(count_lattice_points(inst.polytope));
  return doc;
}

Json bounds_document(const InstanceBundle& inst, unsigned k, bool force_shift, unsigned digits) {
  Polynomial f = solver_objective(inst);
  bool nonneg = inst.metadata.nonnegative && inst.metadata.maximize && !force_shift;
  auto [fbar, info] = normalize(inst.polytope, f, nonneg);
  auto table = bounds_sequence(inst.polytope, fbar, k, document_precision(digits));
  Json doc = base_document(inst, "bounds");
  doc["objective_scale"] = info.shifted ? "shifted" : "original";
  doc["shift"] = shift_info_json(info);
  Json rows = Json::array();
  for (const auto& rep : table) rows.push_back(bounds_row_json(rep, digits));
  doc["table"] = std::move(rows);
  doc["status"] = table.back().converged ? "converged" : "open";
  return doc;
}

Json optimize_document(const InstanceBundle& inst, unsigned k_max, unsigned digits) {
  Polynomial f = solver_objective(inst);
  bool nonneg = inst.metadata.nonnegative && inst.metadata.maximize;
  auto res = optimize_exact(inst.polytope, f, nonneg, k_max, document_precision(digits));
  Json doc = base_document(inst, "optimize");
  doc["shift"] = shift_info_json(res.shift);
  Json rows = Json::array();
  for (const auto& rep : res.trace) rows.push_back(bounds_row_json(rep, digits));
  doc["table"] = std::move(rows);
  doc["k_max"] = k_max;
  doc["converged"] = res.converged;
  if (res.converged) {
    doc["status"] = "converged";
    doc["optimum"] = integer_json(sense_value(inst, res.value));
  } else {
    doc["status"] = "unconverged";
    // Honest bracket in the instance's own sense: for maximization the
    // optimum lies in [best_lower, best_upper]; minimization swaps the ends.
    BigInt a = sense_value(inst, res.value);
    BigInt c = sense_value(inst, res.lower);
    doc["best_upper"] = integer_json(inst.metadata.maximize ? a : c);
    doc["best_lower"] = integer_json(inst.metadata.maximize ? c : a);
  }
  return doc;
}

Json fptas_document(const InstanceBundle& inst, const BigRat& epsilon, bool recover,
                    bool force_shift, unsigned digits) {
  Polynomial f = solver_objective(inst);
  Json doc = base_document(inst, "fptas");
  doc["epsilon"] = rat_to_string(epsilon);
  ShiftInfo info;
  Polynomial fbar = f;
  if (force_shift) {
    std::tie(fbar, info) = normalize(inst.polytope, f, false);
  } else if (!inst.metadata.nonnegative || !inst.metadata.maximize) {
    throw std::invalid_argument(
        "fptas requires an instance with a non-negative maximization objective; use the shift "
        "option to run on the shifted objective (the guarantee then applies in the shifted "
        "scale)");
  }
  doc["objective_scale"] = info.shifted ? "shifted" : "original";
  doc["shift"] = shift_info_json(info);
  auto res = fptas(inst.polytope, fbar, epsilon, recover, document_precision(digits));
  doc["count"] = integer_json(res.count);
  doc["k_used"] = res.k_used;
  doc["lower_bound"] = root_interval_json(res.lower_bound, digits);
  if (res.certified_point) {
    doc["certified_point"] = point_json(*res.certified_point);
    doc["certified_value"] = integer_json(*res.certified_value);
  }
  doc["status"] = "ok";
  return doc;
}

Json oracle_document(const InstanceBundle& inst, long budget) {
  Json doc = base_document(inst, "oracle");
  doc["count"] =
      integer_json(BigInt(static_cast<long>(enumerate_lattice_points(inst.polytope, budget).size())));
  auto best = inst.metadata.maximize ? brute_max(inst.polytope, inst.objective, budget)
                                     : brute_min(inst.polytope, inst.objective, budget);
  if (best) {
    doc["optimum"] = integer_json(best->value);
    doc["argopt"] = point_json(best->argopt);
    doc["status"] = "ok";
  } else {
    doc["status"] = "infeasible";
  }
  return doc;
}

Json mixed_document(const InstanceBundle& inst, const std::vector<size_t>& integer_vars,
                    const std::vector<long>& grid, const BigRat& epsilon, bool exact_mode,
                    bool assert_nonnegative, unsigned digits) {
  Polynomial f = solver_objective(inst);
  bool nonneg = assert_nonnegative || (inst.metadata.nonnegative && inst.metadata.maximize);
  auto seq = mixed_integer_sequence(inst.polytope, f, integer_vars, grid, epsilon, exact_mode,
                                    nonneg);
  Json doc = base_document(inst, "mixed");
  doc["epsilon"] = rat_to_string(epsilon);
  doc["mode"] = exact_mode ? "exact" : "fptas";
  Json rows = Json::array();
  for (const auto& e : seq) {
    Json row;
    row["n"] = integer_json(e.n);
    row["scale"] = integer_json(e.scale);
    // Shifted entries live in the normalized maximization scale (flagged
    // below); sense negation only applies to unshifted values.
    bool flip = !inst.metadata.maximize && !e.shifted;
    BigRat value = flip ? BigRat(-e.value) : e.value;
    row["raw_value"] = integer_json(flip ? BigInt(-e.raw_value) : e.raw_value);
    row["value"] = rat_to_string(value);
    row["value_decimal"] = decimal_string(value, digits);
    row["shifted"] = e.shifted;
    if (e.shifted) row["shift_lower_bound"] = integer_json(e.shift_L);
    row["exact"] = e.exact;
    row["converged"] = e.converged;
    rows.push_back(std::move(row));
  }
  doc["table"] = std::move(rows);
  doc["status"] = "ok";
  return doc;
}

}  // namespace lattopt::io
