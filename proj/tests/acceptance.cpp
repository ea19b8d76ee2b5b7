// Acceptance gate: one PASS/FAIL line per release criterion, exit status 0
// only when every gating criterion holds. Checks run against independent
// oracles (brute-force enumeration, frozen externally verified constants,
// exact algebraic identities), never against the library's own intermediate
// output. All comparisons are exact rational/integer comparisons except where
// a stated decimal tolerance is part of the criterion itself.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lattopt/cones.hpp"
#include "lattopt/documents.hpp"
#include "lattopt/genfun.hpp"
#include "lattopt/instances.hpp"
#include "lattopt/io.hpp"
#include "lattopt/optimize.hpp"
#include "lattopt/oracle.hpp"
#include "lattopt/polynomial.hpp"
#include "lattopt/polytope.hpp"
#include "lattopt/rational.hpp"
#include "lattopt/roots.hpp"

namespace {

using namespace lattopt;

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;
  std::vector<std::string> notes;
  bool pass() const { return failures.empty(); }
};

void expect(Outcome& out, bool cond, const std::string& msg) {
  if (!cond) out.failures.push_back(msg);
}

// Exact rational from a decimal literal ("7817.279750" -> 781727975/100000).
BigRat dec(const std::string& text) {
  bool neg = !text.empty() && text[0] == '-';
  std::string s = neg ? text.substr(1) : text;
  auto dot = s.find('.');
  BigInt num;
  BigInt den = 1;
  if (dot == std::string::npos) {
    num = BigInt(s, 10);
  } else {
    num = BigInt(s.substr(0, dot) + s.substr(dot + 1), 10);
    den = int_pow(BigInt(10), static_cast<unsigned long>(s.size() - dot - 1));
  }
  BigRat q = make_rat(num, den);
  if (neg) q = -q;
  return q;
}

// Every point of the bracket lies within tol of target.
bool interval_within(const RootInterval& iv, const BigRat& target, const BigRat& tol) {
  return iv.lower >= target - tol && iv.upper <= target + tol;
}

const BigRat kPrec12 = make_rat(1, int_pow(BigInt(10), 12));

// ---------------------------------------------------------------------------
// Criterion 1: golden run on the thin-sliver instance.
Outcome criterion1() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  auto inst = example1();

  BigInt n = count_lattice_points(inst.polytope);
  expect(out, n == 2, "count: expected 2, got " + int_to_string(n));

  auto rows = bounds_sequence(inst.polytope, inst.objective, 30, kPrec12);
  expect(out, rows.size() == 30, "bound ladder must have 30 rungs");
  if (rows.size() == 30) {
    expect(out, rows[0].power_sum == 8001, "S_1: expected 8001");
    expect(out, rows[0].lower.is_exact() && rows[0].lower.lower == make_rat(8001, BigInt(2)),
           "L_1 must equal 8001/2 exactly");
    expect(out, rows[0].upper.is_exact() && rows[0].upper.lower == 8001,
           "U_1 must equal 8001 exactly");
    expect(out, rows[29].power_sum == BigInt(1) + int_pow(BigInt(8000), 30),
           "S_30 must equal 1 + 8000^30 exactly");
    expect(out, interval_within(rows[29].lower, dec("7817.279750"), make_rat(5, int_pow(BigInt(10), 6))),
           "L_30 must be within 5e-6 of the golden print 7817.279750");
    expect(out,
           interval_within(rows[29].lower, dec("7817.279747473967"), make_rat(1, int_pow(BigInt(10), 9))),
           "L_30 must be within 1e-9 of the exact constant 7817.279747473967");
    expect(out, rows[29].floor_upper == 8000, "floor(U_30): expected 8000");
    expect(out, rows[29].ceil_lower == 7818, "ceil(L_30): expected 7818");
  }

  auto opt = optimize_exact(inst.polytope, inst.objective, inst.metadata.nonnegative, 30);
  expect(out, opt.value == 8000, "optimize value: expected 8000, got " + int_to_string(opt.value));
  expect(out, opt.lower == 7818, "optimize certified lower: expected 7818");
  expect(out, !opt.converged,
         "the integer-gap rule cannot close [7818, 8000] at k <= 30; converged must be false");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  expect(out, secs < 120.0, "golden run must finish in under 120 s");

  std::ostringstream s;
  s << "count=2, L1=8001/2, U1=8001, L30 golden/exact digits, floor(U30)=8000, "
    << "optimize value 8000 (honest open bracket [7818, 8000])";
  out.summary = s.str();
  out.notes.push_back(
      "the golden table prints L_30 = 7817.279750, which carries ~2.5e-6 of print rounding; "
      "the exact value is ((1+8000^30)/2)^(1/30) = 7817.279747473967... Both are asserted: "
      "5e-6 against the print, 1e-9 against the exact constant.");
  out.notes.push_back(
      "the exact stopping rule cannot close the bracket before k ~ 5545 (need (1+8000^k)/2 > "
      "7999^k), so the returned value 8000 = floor(U_30) is reported with converged=false.");
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 2: golden run on the scaled box instance.
Outcome criterion2() {
  Outcome out;
  auto inst = nvs04();

  BigInt n = count_lattice_points(inst.polytope);
  expect(out, n == 40401, "count: expected 40401, got " + int_to_string(n));

  auto om = brute_max(inst.polytope, inst.objective);
  expect(out, om.has_value(), "oracle found no lattice points");
  const BigInt fstar = om ? om->value : BigInt(0);
  expect(out, fstar == BigInt("16499999999928"),
         "oracle optimum: expected 16499999999928, got " + int_to_string(fstar));
  expect(out, om && om->argopt == LatticePoint{BigInt(1), BigInt(2)}, "oracle argmax: expected (1, 2)");
  expect(out,
         inst.metadata.known_optimum.has_value() && *inst.metadata.known_optimum == fstar,
         "recorded known_optimum must equal the oracle optimum");

  auto rows = bounds_sequence(inst.polytope, inst.objective, 5, kPrec12);
  expect(out, rows.size() == 5, "bound ladder must have 5 rungs");
  const BigRat tol = make_rat(1, int_pow(BigInt(10), 7));  // 1e-9 in the 1/100 golden scale
  if (rows.size() == 5) {
    expect(out,
           interval_within(rows[1].lower, dec("139463892042.292155534") * BigRat(100), tol),
           "exponent-2 lower bound must reproduce golden digits 139463892042.292155534 (x100 scale)");
    expect(out,
           interval_within(rows[1].upper, dec("28032242300500.723262442") * BigRat(100), tol),
           "exponent-2 upper bound must reproduce golden digits 28032242300500.723262442 (x100 scale)");
    for (const auto& row : rows) {
      expect(out, row.ceil_lower <= fstar && fstar <= row.floor_upper,
             "sandwich ceil(L_k) <= optimum <= floor(U_k) failed at k=" + std::to_string(row.k));
    }
  }

  if (std::getenv("LATTOPT_ACCEPT_EXTENDED") != nullptr) {
    auto deep = bounds_sequence(inst.polytope, inst.objective, 30, kPrec12);
    bool okL = interval_within(deep[29].lower, dec("159892899430.641709327") * BigRat(100), tol);
    bool okU = interval_within(deep[29].upper, dec("227706580627.153110880") * BigRat(100), tol);
    out.notes.push_back(std::string("EXTENDED (non-gating): exponent-30 digits ") +
                        ((okL && okU) ? "reproduced" : "NOT reproduced") + " -- L30/100 = " +
                        decimal_string(deep[29].lower.lower / BigRat(100), 9) + ", U30/100 = " +
                        decimal_string(deep[29].upper.upper / BigRat(100), 9));
  } else {
    out.notes.push_back(
        "extended non-gating exponent-30 digit reproduction skipped; set LATTOPT_ACCEPT_EXTENDED=1 "
        "to run it");
  }

  out.summary =
      "count=40401, exponent-2 bounds reproduce the golden row-1 digits on the documented 1/100 "
      "scale, k=1..5 sandwich around oracle optimum 16499999999928";
  out.notes.push_back(
      "the golden bound table indexes rows by squaring count, so its row 1 is the exponent-2 "
      "bound pair; its values live on the 1/100 objective scale of this instance's integer form.");
  out.notes.push_back(
      "the criterion's sandwich constant \"164999999928\" drops two digits of the true optimum "
      "16499999999928 = 100*(165*10^9 - 0.72); the sandwich is asserted around the "
      "oracle-verified optimum.");
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 3: generating-function counts equal brute-force counts.
Outcome criterion3() {
  Outcome out;
  int cases = 0;
  for (size_t d = 1; d <= 3; ++d) {
    for (unsigned long s = 1; s <= 70; ++s) {
      long radius = 2 + static_cast<long>(s % 5);
      auto inst = random_instance(d, 1, radius, 1000 * d + s);
      BigInt via_gf = specialize_count(generating_function(inst.polytope));
      auto pts = enumerate_lattice_points(inst.polytope);
      ++cases;
      if (via_gf != BigInt(static_cast<unsigned long>(pts.size()))) {
        out.failures.push_back("count mismatch at d=" + std::to_string(d) + " seed=" +
                               std::to_string(1000 * d + s) + ": gf=" + int_to_string(via_gf) +
                               ", oracle=" + std::to_string(pts.size()));
      }
    }
  }
  out.summary = std::to_string(cases) + " random polytopes (d in {1,2,3}, radius 2..6): " +
                "specialized count == enumerated count, exact";
  return out;
}

// Shared corpus for criteria 4 and 5: >= 100 random (P, f) with deg f <= 3.
std::vector<InstanceBundle> power_corpus() {
  std::vector<InstanceBundle> v;
  for (unsigned long s = 1; s <= 48; ++s)
    v.push_back(random_instance(1, static_cast<unsigned>(1 + s % 3), 3 + static_cast<long>(s % 4),
                                40000 + s));
  for (unsigned long s = 1; s <= 44; ++s)
    v.push_back(random_instance(2, static_cast<unsigned>(1 + s % 3), 2 + static_cast<long>(s % 3),
                                50000 + s));
  for (unsigned long s = 1; s <= 12; ++s)
    v.push_back(random_instance(3, static_cast<unsigned>(1 + s % 2), 2, 60000 + s));
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 4: specialized power sums equal brute-force power sums.
Outcome criterion4() {
  Outcome out;
  auto corpus = power_corpus();
  int checks = 0;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& inst = corpus[i];
    auto gf = generating_function(inst.polytope);
    PowerEngine engine(gf, inst.objective);
    for (unsigned k = 1; k <= 4; ++k) {
      const BigRat& s = engine.sum(k);
      BigInt brute = brute_power_sum(inst.polytope, inst.objective, k);
      ++checks;
      if (!is_integer(s) || rat_num(s) != brute) {
        out.failures.push_back("power sum mismatch at corpus index " + std::to_string(i) +
                               ", k=" + std::to_string(k) + ": engine=" + rat_to_string(s) +
                               ", oracle=" + int_to_string(brute));
      }
    }
  }
  out.summary = std::to_string(corpus.size()) + " instances x k=1..4 (" + std::to_string(checks) +
                " sums): specialization == brute force, exact";
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 5: ladder laws, exact plus 1e-12-precision gap inequality.
Outcome criterion5() {
  Outcome out;
  auto corpus = power_corpus();
  int checks = 0;
  const BigRat slack = BigRat(2) * kPrec12;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& inst = corpus[i];
    auto norm = normalize(inst.polytope, inst.objective, false);
    const Polynomial& fbar = norm.first;
    auto om = brute_max(inst.polytope, fbar);
    if (!om) {
      out.failures.push_back("oracle found no lattice points at corpus index " + std::to_string(i));
      continue;
    }
    const BigInt fstar = om->value;  // max of fbar, nonnegative by construction
    auto rows = bounds_sequence(inst.polytope, fbar, 10, kPrec12);
    const BigInt N = rows.empty() ? BigInt(0) : rows[0].count;
    auto note = [&](unsigned k, const std::string& what) {
      return what + " failed at corpus index " + std::to_string(i) + ", k=" + std::to_string(k);
    };
    for (size_t j = 0; j < rows.size(); ++j) {
      const unsigned k = rows[j].k;
      const BigInt& S = rows[j].power_sum;
      ++checks;
      // Exact sandwich L_k <= fbar* <= U_k via k-th powers.
      expect(out, int_pow(fstar, k) * N >= S, note(k, "exact lower sandwich"));
      expect(out, int_pow(fstar, k) <= S, note(k, "exact upper sandwich"));
      // Radicand identities tie the reported intervals to S_k exactly.
      expect(out, rows[j].lower.radicand == make_rat(S, N), note(k, "lower radicand identity"));
      expect(out, rows[j].upper.radicand == rows[j].lower.radicand * BigRat(N),
             note(k, "mean identity radicand(U) = radicand(L) * N"));
      if (j + 1 < rows.size()) {
        const BigInt& S2 = rows[j + 1].power_sum;
        // L_k <= L_{k+1}  <=>  (S_k/N)^{k+1} <= (S_{k+1}/N)^k, exact.
        expect(out, rat_pow(make_rat(S, N), k + 1) <= rat_pow(make_rat(S2, N), k),
               note(k, "lower bound monotonicity"));
        // U_{k+1} <= U_k  <=>  S_{k+1}^k <= S_k^{k+1}, exact.
        expect(out, int_pow(S2, k) <= int_pow(S, k + 1), note(k, "upper bound monotonicity"));
      }
      // Gap law U_k - L_k <= fbar* (N^{1/k} - 1), at root precision 1e-12.
      auto root = rational_kth_root_interval(BigRat(N), k, kPrec12);
      expect(out,
             rows[j].upper.upper - rows[j].lower.lower <=
                 BigRat(fstar) * (root.upper - BigRat(1)) + slack,
             note(k, "gap law"));
    }
  }
  out.summary = std::to_string(corpus.size()) + " instances x k=1..10 (" + std::to_string(checks) +
                " rungs): sandwich, monotonicity, mean identity, gap law all hold";
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 6: approximation guarantee with recovered points.
Outcome criterion6() {
  Outcome out;
  std::vector<InstanceBundle> raw;
  for (unsigned long s = 1; s <= 20; ++s)
    raw.push_back(random_instance(1, static_cast<unsigned>(1 + s % 3), 3 + static_cast<long>(s % 3),
                                  70000 + s));
  for (unsigned long s = 1; s <= 20; ++s)
    raw.push_back(random_instance(2, static_cast<unsigned>(1 + s % 2), 3 + static_cast<long>(s % 3),
                                  80000 + s));
  for (unsigned long s = 1; s <= 12; ++s)
    raw.push_back(random_instance(2, 3, 2 + static_cast<long>(s % 2), 90000 + s));

  const std::vector<BigRat> epsilons = {make_rat(1, BigInt(2)), make_rat(1, BigInt(4)),
                                        make_rat(1, BigInt(10))};
  int runs = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto norm = normalize(raw[i].polytope, raw[i].objective, false);
    const Polynomial& fbar = norm.first;
    auto om = brute_max(raw[i].polytope, fbar);
    if (!om) {
      out.failures.push_back("oracle found no lattice points at corpus index " + std::to_string(i));
      continue;
    }
    const BigInt fstar = om->value;
    for (const BigRat& eps : epsilons) {
      auto res = fptas(raw[i].polytope, fbar, eps, /*recover=*/true);
      ++runs;
      auto note = [&](const std::string& what) {
        return what + " failed at corpus index " + std::to_string(i) + ", eps=" +
               rat_to_string(eps);
      };
      expect(out, res.k_used == fptas_schedule_k(res.count, eps), note("schedule k"));
      const BigRat target = (BigRat(1) - eps) * BigRat(fstar);
      // L_k >= (1-eps) fbar*  <=>  S_k/N >= ((1-eps) fbar*)^k, exact.
      expect(out, res.lower_bound.radicand >= rat_pow(target, res.k_used),
             note("exact (1-eps) guarantee"));
      expect(out, res.certified_point.has_value() && res.certified_value.has_value(),
             note("recovered point"));
      if (res.certified_point) {
        expect(out, contains_lattice(raw[i].polytope, *res.certified_point),
               note("recovered point feasibility"));
        expect(out, BigRat(*res.certified_value) >= target, note("recovered point guarantee"));
      }
    }
  }
  out.summary = std::to_string(raw.size()) + " nonnegative instances x eps in {1/2, 1/4, 1/10} (" +
                std::to_string(runs) +
                " runs): exact (1-eps) lower bound and feasible recovered points";
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 7: quartic decision family vs direct modular arithmetic.
Outcome criterion7() {
  Outcome out;
  int cases = 0;
  for (unsigned long b = 2; b <= 10; ++b) {
    for (unsigned long a = 1; a < b; ++a) {
      for (unsigned long c = 2; c <= 10; ++c) {
        auto inst = an1_instance(a, b, c);
        auto m = brute_min(inst.polytope, inst.objective);
        bool min_is_zero = m.has_value() && m->value == 0;
        bool realizable = false;
        for (long x = 1; x < static_cast<long>(c); ++x) {
          long r = (x * x - static_cast<long>(a)) % static_cast<long>(b);
          if (r < 0) r += static_cast<long>(b);
          if (r == 0) realizable = true;
        }
        ++cases;
        if (min_is_zero != realizable) {
          out.failures.push_back("mismatch at (a,b,c)=(" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + "): oracle min " +
                                 (m ? int_to_string(m->value) : std::string("(infeasible)")) +
                                 ", residue realizable=" + (realizable ? "true" : "false"));
        }
      }
    }
  }
  out.summary = std::to_string(cases) +
                " (a,b,c) cases, b,c <= 10, a < b: oracle min == 0 iff x^2 = a (mod b) has a "
                "solution with 0 < x < c";
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 8: mixed grid sequence and the all-integer collapse.
Outcome criterion8() {
  Outcome out;
  // P = {0 <= y <= 1} continuous, f = y - y^2.
  Polytope p01(1, {{BigInt(1)}, {BigInt(-1)}}, {BigInt(1), BigInt(0)});
  Polynomial f01(1, {Monomial{BigInt(1), {1}}, Monomial{BigInt(-1), {2}}});
  // k_max 40: the n=8 subproblem's integer gap closes at k=31, just past the
  // default ladder cap, and certified subsolves make the value check strict.
  auto entries = mixed_integer_sequence(p01, f01, {}, {1, 2, 4, 8}, make_rat(1, BigInt(10)),
                                        /*exact_mode=*/true, /*known_nonnegative=*/true,
                                        /*k_max=*/40);
  expect(out, entries.size() == 4, "grid sequence must have 4 entries");
  if (entries.size() == 4) {
    const BigRat quarter = make_rat(1, BigInt(4));
    expect(out, entries[0].n == 1 && entries[0].value == 0, "n=1 grid optimum must be 0");
    for (size_t i = 1; i < 4; ++i) {
      expect(out, entries[i].value == quarter,
             "even-n grid optimum must be 1/4 at n=" + int_to_string(entries[i].n));
    }
    expect(out, entries[0].value != entries[1].value, "sequence must be non-trivial");
    for (const auto& e : entries) {
      expect(out, e.exact && e.converged,
             "every grid subproblem must solve exactly (n=" + int_to_string(e.n) + ")");
      expect(out, !e.shifted, "nonnegative instance must not be shifted");
    }
    expect(out, entries[3].scale == 64 && entries[3].raw_value == 16,
           "n=8 entry must report raw 16 on scale 64");
  }

  // All-integer instances collapse to the exact optimizer's output.
  Polytope seg(1, {{BigInt(1)}, {BigInt(-1)}}, {BigInt(2), BigInt(0)});
  Polynomial lin(1, {Monomial{BigInt(1), {1}}});
  auto opt_seg = optimize_exact(seg, lin, /*known_nonnegative=*/true);
  auto ai_seg = mixed_integer_sequence(seg, lin, {0}, {1, 2, 4}, make_rat(1, BigInt(10)), true, true);
  expect(out, opt_seg.converged && opt_seg.value == 2, "segment optimum must be 2 (converged)");
  expect(out, ai_seg.size() == 1, "all-integer sequence must collapse to one entry");
  if (ai_seg.size() == 1) {
    expect(out,
           ai_seg[0].exact && ai_seg[0].scale == 1 && ai_seg[0].raw_value == opt_seg.value &&
               ai_seg[0].converged == opt_seg.converged,
           "all-integer entry must equal the exact optimizer's output");
  }

  auto ex = example1();
  auto opt_ex = optimize_exact(ex.polytope, ex.objective, ex.metadata.nonnegative);
  auto ai_ex = mixed_integer_sequence(ex.polytope, ex.objective, {0, 1}, {1},
                                      make_rat(1, BigInt(10)), true, ex.metadata.nonnegative);
  expect(out, ai_ex.size() == 1, "all-integer sliver sequence must collapse to one entry");
  if (ai_ex.size() == 1) {
    expect(out,
           ai_ex[0].exact && ai_ex[0].scale == 1 && ai_ex[0].raw_value == opt_ex.value &&
               ai_ex[0].converged == opt_ex.converged,
           "all-integer sliver entry must equal the exact optimizer's output (value and status)");
  }

  out.summary =
      "grid values 0, 1/4, 1/4, 1/4 with 1/4 at every even n (all exact subsolves); all-integer "
      "instances reproduce the exact optimizer's output";
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 9: byte-identical result documents across repeated runs.
Outcome criterion9() {
  Outcome out;
  int pairs = 0;
  auto check_pair = [&](const std::string& label, const std::string& x, const std::string& y) {
    ++pairs;
    if (x != y) out.failures.push_back("document differs between runs: " + label);
    if (x.empty() || x.back() != '\n')
      out.failures.push_back("rendering must end with a newline: " + label);
  };

  const std::string sliver_text = io::format_instance(example1());
  auto a = io::parse_instance(sliver_text);
  auto b = io::parse_instance(sliver_text);
  const BigRat q14 = make_rat(1, BigInt(4));
  const BigRat q110 = make_rat(1, BigInt(10));

  expect(out, io::instance_digest(a) == io::instance_digest(b), "instance digests must agree");
  check_pair("count", io::render_document(io::count_document(a)),
             io::render_document(io::count_document(b)));
  check_pair("bounds", io::render_document(io::bounds_document(a, 2, false, 6)),
             io::render_document(io::bounds_document(b, 2, false, 6)));
  check_pair("optimize", io::render_document(io::optimize_document(a, 5, 6)),
             io::render_document(io::optimize_document(b, 5, 6)));
  check_pair("fptas", io::render_document(io::fptas_document(a, q14, true, false, 6)),
             io::render_document(io::fptas_document(b, q14, true, false, 6)));
  check_pair("oracle", io::render_document(io::oracle_document(a, kDefaultOracleBudget)),
             io::render_document(io::oracle_document(b, kDefaultOracleBudget)));
  check_pair("mixed", io::render_document(io::mixed_document(a, {0, 1}, {1, 2}, q110, true, true, 6)),
             io::render_document(io::mixed_document(b, {0, 1}, {1, 2}, q110, true, true, 6)));

  const std::string rand_text = io::format_instance(random_instance(2, 2, 3, 5));
  auto c = io::parse_instance(rand_text);
  auto d = io::parse_instance(rand_text);
  check_pair("count/random", io::render_document(io::count_document(c)),
             io::render_document(io::count_document(d)));
  check_pair("bounds/random(shifted)", io::render_document(io::bounds_document(c, 2, true, 6)),
             io::render_document(io::bounds_document(d, 2, true, 6)));
  check_pair("optimize/random", io::render_document(io::optimize_document(c, 8, 6)),
             io::render_document(io::optimize_document(d, 8, 6)));

  out.summary = std::to_string(pairs) + " command documents re-rendered byte-identically";
  out.notes.push_back(
      "process-level reruns of the CLI binary are additionally byte-compared by the CLI test "
      "script in the regular test suite");
  return out;
}

}  // namespace

int main() {
  using Fn = Outcome (*)();
  struct Row {
    int id;
    const char* title;
    Fn fn;
  };
  const std::vector<Row> table = {
      {1, "thin-sliver golden run", &criterion1},
      {2, "scaled-box golden run", &criterion2},
      {3, "oracle equivalence: lattice point counts", &criterion3},
      {4, "oracle equivalence: power sums", &criterion4},
      {5, "bound ladder laws", &criterion5},
      {6, "approximation guarantee with point recovery", &criterion6},
      {7, "quadratic-residue reduction soundness", &criterion7},
      {8, "mixed-integer grid convergence", &criterion8},
      {9, "byte-identical result documents", &criterion9},
  };

  int passed = 0;
  for (const auto& row : table) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = row.fn();
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("unexpected exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (out.pass() ? "PASS" : "FAIL") << " criterion " << row.id << ": " << row.title;
    if (!out.summary.empty()) std::cout << " -- " << out.summary;
    std::cout << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
    const size_t shown = std::min<size_t>(out.failures.size(), 8);
    for (size_t i = 0; i < shown; ++i) std::cout << "       ! " << out.failures[i] << "\n";
    if (out.failures.size() > shown)
      std::cout << "       ! (+" << out.failures.size() - shown << " more)\n";
    for (const auto& note : out.notes) std::cout << "       NOTE: " << note << "\n";
    if (out.pass()) ++passed;
  }
  std::cout << "ACCEPTANCE: " << passed << "/" << table.size() << " criteria passed" << std::endl;
  return passed == static_cast<int>(table.size()) ? 0 : 1;
}
