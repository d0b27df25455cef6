// Acceptance suite. Runs every gate criterion at its stated bound and prints
// one pass/fail line per criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "catalog.hpp"
#include "enumerate.hpp"
#include "fixtures.hpp"
#include "laws.hpp"
#include "report.hpp"
#include "set_classes.hpp"

using namespace sigma;

namespace {

int failures = 0;

void verdict(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%d] %-34s %s%s%s\n", criterion, name.c_str(), pass ? "PASS" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// 1. Fast and brute enumerations agree exactly as canonical multisets for
//    n = 1..4, with the frozen labeled/unlabeled counts; under 10 seconds.
void criterion_enumeration() {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t labeled_expected[] = {1, 4, 29, 355};
  const std::uint64_t unlabeled_expected[] = {1, 3, 9, 33};
  bool pass = true;
  std::string detail;

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto fast = enum_fast(n);
    const auto brute = enum_brute(n);
    std::map<CanonicalForm, int> fast_forms, brute_forms;
    for (const auto& s : fast.spaces) ++fast_forms[canonicalize(s)];
    for (const auto& s : brute.spaces) ++brute_forms[canonicalize(s)];
    const auto deduped = dedupe(fast);
    if (fast.labeled_count != labeled_expected[n - 1] ||
        brute.labeled_count != labeled_expected[n - 1] || fast_forms != brute_forms ||
        deduped.unlabeled_count != unlabeled_expected[n - 1]) {
      pass = false;
      detail = "mismatch at n = " + std::to_string(n);
      break;
    }
  }
  const double elapsed = seconds_since(start);
  if (pass && elapsed >= 10.0) {
    pass = false;
    detail = "too slow: " + fmt_seconds(elapsed);
  }
  if (pass)
    detail = "labeled 1,4,29,355; classes 1,3,9,33; " + fmt_seconds(elapsed);
  verdict(1, "enumeration oracle equality", pass, detail);
}

// 2. Every registered law holds over all labeled spaces with up to 4 points;
//    under 60 seconds; any failure prints its minimal witness.
void criterion_law_suite() {
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = verify_all(4, std::nullopt, 0);
  const double elapsed = seconds_since(start);
  bool pass = report.all_hold() && report.total_spaces == 389 && elapsed < 60.0;
  std::string detail = std::to_string(report.laws.size()) + " laws, " +
                       std::to_string(report.total_spaces) + " spaces, " + fmt_seconds(elapsed);
  if (!report.all_hold()) {
    for (const auto& v : report.laws)
      if (!v.holds) detail = v.id + " failed; witness in report below";
  }
  verdict(2, "full law suite (n <= 4)", pass, detail);
  if (!report.all_hold()) std::fputs(render_verify(report, ReportFormat::human).c_str(), stdout);
}

// 3. Paired characterizations agree on every space with up to 4 points and
//    every subset: g*-closed, g*-open, lambda*-closed, lambda*-open, and the
//    T0 / T1 / Tw4 axiom routes.
void criterion_cross_formulations() {
  bool pass = true;
  std::string detail;
  std::uint64_t checks = 0;
  for (std::size_t n = 1; n <= 4 && pass; ++n) {
    for (const auto& space : enum_fast(n).spaces) {
      for (Mask a = 0; a <= space.full(); ++a) {
        ++checks;
        if (is_gstar_closed(space, a) != is_gstar_closed_alt(space, a) ||
            is_gstar_open(space, a) != is_gstar_open_alt(space, a) ||
            is_lambda_star_closed(space, a) != is_lambda_star_closed_decomp(space, a) ||
            is_lambda_star_open(space, a) != is_lambda_star_closed(space, space.full() & ~a)) {
          pass = false;
          detail = "set-level disagreement on " + space.ground->format_subset(a);
          break;
        }
      }
      if (t0_definitional(space) != t0_via_lambda(space) ||
          t1_definitional(space) != t1_via_wedge(space) ||
          tw4_definitional(space) != tw4_via_lambda(space)) {
        pass = false;
        detail = "axiom-route disagreement";
      }
      if (!pass) break;
    }
  }
  if (pass) detail = std::to_string(checks) + " subset checks";
  verdict(3, "cross-formulation agreement", pass, detail);
}

// 4. The implication lattice at desk scale: the Tw chain plus the
//    equivalences and implications among T1, T0, R0, weak R0, SS, C = C*.
void criterion_implication_lattice() {
  bool pass = true;
  std::string detail;
  std::uint64_t spaces = 0;
  for (std::size_t n = 1; n <= 4 && pass; ++n) {
    for (const auto& space : enum_fast(n).spaces) {
      ++spaces;
      const AxiomFlags f = build_tables(space).axioms;
      const bool chain = (!f.t_w || f.t_5w8) && (!f.t_5w8 || f.t_3w8) &&
                         (!f.t_3w8 || f.t_w4) && (!f.t_w4 || f.t0);
      const bool thm_6_14 = f.t1 == (f.t0 && f.r0);
      const bool thm_6_17 = !f.r0 || f.weak_r0;
      const bool thm_6_25 = f.t1 == (f.t0 && f.weak_r0);
      const bool thm_6_26 = !(f.strongly_symmetric && f.t1 && f.c_eq_cstar) || f.t_w;
      bool thm_6_27 = true;
      if (f.strongly_symmetric && f.weak_r0 && f.c_eq_cstar) {
        const bool v[] = {f.t0, f.t1, f.t_w, f.t_5w8, f.t_3w8, f.t_w4};
        for (bool x : v) thm_6_27 = thm_6_27 && x == v[0];
      }
      if (!(chain && thm_6_14 && thm_6_17 && thm_6_25 && thm_6_26 && thm_6_27)) {
        pass = false;
        detail = "violated on a " + std::to_string(n) + "-point space";
        break;
      }
    }
  }
  if (pass) detail = std::to_string(spaces) + " spaces, zero exceptions";
  verdict(4, "implication lattice (n <= 4)", pass, detail);
}

// 5. Counterexample search returns the frozen minimal witnesses.
void criterion_search() {
  const auto r1 = search_property("T0 & !TW4", 3, 0);
  const bool w_found = r1.witness && r1.witness->size() == 3 &&
                       canonicalize(*r1.witness) == canonicalize(fixtures::witness_w());
  const auto r2 = search_property("TW & !T1", 2, 0);
  const bool s_found =
      r2.witness && canonicalize(*r2.witness) == canonicalize(fixtures::sierpinski());
  const auto r3 = search_property("T1 & !T0", 4, 0);
  const bool none_found = !r3.witness.has_value();
  verdict(5, "counterexample search", w_found && s_found && none_found,
          w_found && s_found && none_found
              ? "witnesses: W space, Sierpinski, none (as expected)"
              : "unexpected search outcome");
}

// 6. Catalog: every claim passes and the frozen values are reproduced;
//    under 1 second.
void criterion_catalog() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_all_claims();
  std::size_t passed = 0;
  for (const auto& c : results)
    if (c.pass) ++passed;
  bool pass = passed == results.size() && results.size() == 17;

  // spot-check the frozen values named in the gate
  {
    const Schema* blind = nullptr;
    const Schema* anchored = nullptr;
    const Schema* pinned = nullptr;
    const Schema* unit = nullptr;
    for (const Schema* s : schema_registry()) {
      if (s->name().find("reals with countable-irrational opens") != std::string::npos)
        blind = s;
      if (s->name().find("anchored") != std::string::npos) anchored = s;
      if (s->name().find("countable opens through sqrt2") != std::string::npos) pinned = s;
      if (s->name().find("unit interval block") != std::string::npos) unit = s;
    }
    pass = pass && blind && anchored && pinned && unit;
    if (pass) {
      // ker and cl of the irrationals are both X
      pass = pass && sym_kernel(blind->set({"irr"})) == blind->full_set();
      pass = pass && sym_closure(blind->set({"irr"})) == blind->full_set();
      // {s2} | {s3} is not lambda*-closed
      pass = pass && !sym_is_lambda_closed(anchored->set({"s2", "s3"}));
      // uncountable B through s2 has kernel X
      pass = pass && sym_kernel(pinned->set({"s2", "u1"})) == pinned->full_set();
      // the irrationals of (0,1) have kernel X and are no wedge set
      pass = pass && sym_kernel(unit->set({"blk"})) == unit->full_set();
      pass = pass && !sym_is_wedge(unit->set({"blk"}));
    }
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) pass = false;
  verdict(6, "catalog claims", pass,
          std::to_string(passed) + "/" + std::to_string(results.size()) + " pass, " +
              fmt_seconds(elapsed));
  if (passed != results.size())
    std::fputs(render_catalog(results, true, ReportFormat::human).c_str(), stdout);
}

// 7. Byte-identical verify and search reports for different worker counts.
void criterion_determinism() {
  const auto v1 = render_verify(verify_all(3, std::nullopt, 1), ReportFormat::json);
  const auto v4 = render_verify(verify_all(3, std::nullopt, 4), ReportFormat::json);
  const auto s1 = render_search(search_property("T0 & !TW4", 3, 1), ReportFormat::json);
  const auto s3 = render_search(search_property("T0 & !TW4", 3, 3), ReportFormat::json);
  const auto h1 = render_verify(verify_all(2, std::nullopt, 1), ReportFormat::human);
  const auto h2 = render_verify(verify_all(2, std::nullopt, 2), ReportFormat::human);
  const bool pass = v1 == v4 && s1 == s3 && h1 == h2;
  verdict(7, "determinism across workers", pass,
          pass ? "verify and search reports byte-identical" : "report drift detected");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_enumeration();
  criterion_law_suite();
  criterion_cross_formulations();
  criterion_implication_lattice();
  criterion_search();
  criterion_catalog();
  criterion_determinism();
  if (failures == 0) {
    std::printf("all acceptance criteria pass\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
