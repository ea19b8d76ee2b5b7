#include "lattopt/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "lattopt/linalg.hpp"

namespace lattopt::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

// nlohmann reports a byte offset; turn it into line/column for diagnostics.
std::pair<size_t, size_t> line_column(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

BigRat parse_exact_number(const Json& v, const std::string& what) {
  if (v.is_number_float())
    fail(what + ": floating-point literals are not accepted; write exact values as \"p/q\"");
  if (v.is_number_unsigned()) return BigRat(BigInt(std::to_string(v.get<std::uint64_t>())));
  if (v.is_number_integer()) return BigRat(BigInt(std::to_string(v.get<std::int64_t>())));
  if (v.is_string()) {
    auto q = rat_from_string(v.get<std::string>());
    if (!q) fail(what + ": not an exact integer or fraction: \"" + v.get<std::string>() + "\"");
    return *q;
  }
  fail(what + ": expected an integer or an exact \"p/q\" string");
}

BigInt parse_exact_integer(const Json& v, const std::string& what) {
  BigRat q = parse_exact_number(v, what);
  if (!is_integer(q)) fail(what + ": expected an integer, got " + rat_to_string(q));
  return q.get_num();
}

unsigned long parse_small_unsigned(const Json& v, const std::string& what, unsigned long max) {
  BigInt n = parse_exact_integer(v, what);
  if (n < 0 || n > BigInt(max)) fail(what + ": out of range [0, " + std::to_string(max) + "]");
  return n.get_ui();
}

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing required key \"") + key + "\"");
  return *it;
}

}  // namespace

InstanceBundle parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    fail("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col) +
         ": " + e.what());
  }
  if (!j.is_object()) fail("instance file must be a JSON object");

  size_t d = parse_small_unsigned(require(j, "dimension"), "dimension", 64);
  if (d == 0) fail("dimension: must be positive");

  const Json& rows = require(j, "constraints");
  if (!rows.is_array()) fail("constraints: expected an array");
  linalg::RatMat A;
  linalg::RatVec b;
  for (size_t i = 0; i < rows.size(); ++i) {
    const std::string ctx = "constraints[" + std::to_string(i) + "]";
    const Json& row = rows[i];
    if (!row.is_object()) fail(ctx + ": expected an object");
    const Json& coeffs = require(row, "coefficients");
    if (!coeffs.is_array() || coeffs.size() != d)
      fail(ctx + ".coefficients: expected an array of length " + std::to_string(d));
    linalg::RatVec a(d);
    for (size_t c = 0; c < d; ++c)
      a[c] = parse_exact_number(coeffs[c], ctx + ".coefficients[" + std::to_string(c) + "]");
    BigRat rhs = parse_exact_number(require(row, "rhs"), ctx + ".rhs");
    const Json& rel = require(row, "relation");
    if (!rel.is_string() || (rel != "<=" && rel != ">="))
      fail(ctx + ".relation: expected \"<=\" or \">=\"");
    if (rel == ">=") {  // a.x >= r  <=>  -a.x <= -r
      for (auto& x : a) x = -x;
      rhs = -rhs;
    }
    A.push_back(std::move(a));
    b.push_back(std::move(rhs));
  }

  const Json& objective = require(j, "objective");
  if (!objective.is_array()) fail("objective: expected an array of monomials");
  std::vector<Monomial> monomials;
  for (size_t i = 0; i < objective.size(); ++i) {
    const std::string ctx = "objective[" + std::to_string(i) + "]";
    const Json& mono = objective[i];
    if (!mono.is_object()) fail(ctx + ": expected an object");
    Monomial m;
    m.coeff = parse_exact_integer(require(mono, "coefficient"), ctx + ".coefficient");
    const Json& exps = require(mono, "exponents");
    if (!exps.is_array() || exps.size() != d)
      fail(ctx + ".exponents: expected an array of length " + std::to_string(d));
    m.exponents.resize(d);
    for (size_t c = 0; c < d; ++c)
      m.exponents[c] = static_cast<unsigned>(parse_small_unsigned(
          exps[c], ctx + ".exponents[" + std::to_string(c) + "]", 1u << 20));
    monomials.push_back(std::move(m));
  }

  InstanceBundle out{Polytope::from_rational_rows(d, A, b), Polynomial(d, std::move(monomials)),
                     {}};

  if (auto it = j.find("metadata"); it != j.end()) {
    const Json& md = *it;
    if (!md.is_object()) fail("metadata: expected an object");
    if (auto f = md.find("name"); f != md.end()) {
      if (!f->is_string()) fail("metadata.name: expected a string");
      out.metadata.name = f->get<std::string>();
    }
    if (auto f = md.find("note"); f != md.end()) {
      if (!f->is_string()) fail("metadata.note: expected a string");
      out.metadata.note = f->get<std::string>();
    }
    if (auto f = md.find("nonnegative"); f != md.end()) {
      if (!f->is_boolean()) fail("metadata.nonnegative: expected a boolean");
      out.metadata.nonnegative = f->get<bool>();
    }
    if (auto f = md.find("sense"); f != md.end()) {
      if (!f->is_string() || (*f != "min" && *f != "max"))
        fail("metadata.sense: expected \"min\" or \"max\"");
      out.metadata.maximize = (*f == "max");
    }
    if (auto f = md.find("known_optimum"); f != md.end())
      out.metadata.known_optimum = parse_exact_integer(*f, "metadata.known_optimum");
    if (auto f = md.find("seed"); f != md.end())
      out.metadata.seed = parse_small_unsigned(*f, "metadata.seed",
                                               std::numeric_limits<unsigned long>::max());
  }
  return out;
}

InstanceBundle load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

Json integer_json(const BigInt& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(value.get_str());
}

std::string format_instance(const InstanceBundle& bundle) {
  const Polytope& p = bundle.polytope;
  Json j;
  j["dimension"] = p.dim;
  Json rows = Json::array();
  for (size_t i = 0; i < p.A.size(); ++i) {
    Json row;
    Json coeffs = Json::array();
    for (const auto& a : p.A[i]) coeffs.push_back(integer_json(a));
    row["coefficients"] = std::move(coeffs);
    row["relation"] = "<=";
    row["rhs"] = integer_json(p.b[i]);
    rows.push_back(std::move(row));
  }
  j["constraints"] = std::move(rows);
  Json monos = Json::array();
  for (const auto& m : bundle.objective.monomials) {
    Json mono;
    mono["coefficient"] = integer_json(m.coeff);
    mono["exponents"] = m.exponents;
    monos.push_back(std::move(mono));
  }
  j["objective"] = std::move(monos);
  Json md;
  md["name"] = bundle.metadata.name;
  md["sense"] = bundle.metadata.maximize ? "max" : "min";
  md["nonnegative"] = bundle.metadata.nonnegative;
  if (!bundle.metadata.note.empty()) md["note"] = bundle.metadata.note;
  if (bundle.metadata.known_optimum) md["known_optimum"] = integer_json(*bundle.metadata.known_optimum);
  if (bundle.metadata.seed) md["seed"] = *bundle.metadata.seed;
  j["metadata"] = std::move(md);
  return render_document(j);
}

std::string instance_digest(const InstanceBundle& bundle) {
  std::string canon = format_instance(bundle);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json point_json(const LatticePoint& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(integer_json(c));
  return out;
}

Json root_interval_json(const RootInterval& iv, unsigned digits) {
  Json out;
  out["lower"] = rat_to_string(iv.lower);
  out["upper"] = rat_to_string(iv.upper);
  out["decimal"] = decimal_string(iv.lower, digits);
  return out;
}

Json bounds_row_json(const BoundsReport& rep, unsigned digits) {
  Json row;
  row["k"] = rep.k;
  row["count"] = integer_json(rep.count);
  row["power_sum"] = integer_json(rep.power_sum);
  row["lower"] = root_interval_json(rep.lower, digits);
  row["upper"] = root_interval_json(rep.upper, digits);
  row["ceil_lower"] = integer_json(rep.ceil_lower);
  row["floor_upper"] = integer_json(rep.floor_upper);
  row["converged"] = rep.converged;
  return row;
}

Json shift_info_json(const ShiftInfo& info) {
  Json out;
  out["shifted"] = info.shifted;
  out["lower_bound_used"] = integer_json(info.L);
  out["upper_bound_used"] = integer_json(info.U);
  return out;
}

Json instance_summary_json(const InstanceBundle& bundle) {
  Json out;
  out["name"] = bundle.metadata.name;
  out["dimension"] = bundle.polytope.dim;
  out["constraints"] = bundle.polytope.A.size();
  out["sense"] = bundle.metadata.maximize ? "max" : "min";
  out["digest"] = instance_digest(bundle);
  return out;
}

std::string render_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace lattopt::io
