// sigma-lab command line front end. Talks to the core exclusively through
// the C API in sigma_lab.h.
//
// Exit codes: 0 success, 1 law/claim failure, 2 usage/parse/validation error.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "sigma_lab.h"

namespace {

int exit_code(slab_status status) {
  switch (status) {
    case SLAB_OK:
      return 0;
    case SLAB_CHECK_FAILED:
      return 1;
    default:
      return 2;
  }
}

int finish(slab_status status, char* report, char* error) {
  if (report) {
    std::fputs(report, stdout);
    slab_string_free(report);
  }
  if (error) {
    std::fprintf(stderr, "error: %s\n", error);
    slab_string_free(error);
  }
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-lab: a verification laboratory for finite spaces and their separation "
               "axioms"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --format after the subcommand name as well

  std::string format = "human";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json"}));

  std::string classify_path;
  bool classify_sets = false;
  auto* classify = app.add_subcommand("classify", "classify a space file");
  classify->add_option("file", classify_path, "path to a .space file")->required();
  classify->add_flag("--sets", classify_sets, "include the per-subset class table");

  unsigned enum_points = 0;
  bool enum_iso = false, enum_count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate all spaces on n points");
  enumerate->add_option("--points", enum_points, "number of points")->required();
  enumerate->add_flag("--up-to-iso", enum_iso, "deduplicate up to homeomorphism");
  enumerate->add_flag("--count-only", enum_count_only, "print counts without listing spaces");

  unsigned verify_points = 0;
  std::string verify_law;
  auto* verify = app.add_subcommand("verify", "run the law registry over all small spaces");
  verify->add_option("--max-points", verify_points, "largest point count (max 5)")->required();
  verify->add_option("--law", verify_law, "run a single law id");

  std::string search_expr;
  unsigned search_points = 0;
  auto* search = app.add_subcommand("search", "search for a space satisfying a property");
  search->add_option("--property", search_expr, "boolean property over the axiom atoms")
      ->required();
  search->add_option("--max-points", search_points, "largest point count to try")->required();

  std::string catalog_claim;
  auto* catalog = app.add_subcommand("catalog", "run the symbolic catalog claims");
  catalog->add_option("--claim", catalog_claim, "run a single claim id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const slab_format fmt = format == "json" ? SLAB_FORMAT_JSON : SLAB_FORMAT_HUMAN;
  char* report = nullptr;
  char* error = nullptr;

  if (classify->parsed()) {
    slab_space* space = nullptr;
    slab_status status = slab_space_read(classify_path.c_str(), &space, &error);
    if (status != SLAB_OK) return finish(status, report, error);
    status = slab_classify(space, classify_sets ? 1 : 0, fmt, &report, &error);
    slab_space_free(space);
    return finish(status, report, error);
  }
  if (enumerate->parsed()) {
    const slab_status status = slab_enumerate(enum_points, enum_iso ? 1 : 0,
                                              enum_count_only ? 1 : 0, fmt, &report, &error);
    return finish(status, report, error);
  }
  if (verify->parsed()) {
    const slab_status status = slab_verify(
        verify_points, verify_law.empty() ? nullptr : verify_law.c_str(), 0, fmt, &report,
        &error);
    return finish(status, report, error);
  }
  if (search->parsed()) {
    const slab_status status =
        slab_search(search_expr.c_str(), search_points, 0, fmt, &report, &error);
    return finish(status, report, error);
  }
  if (catalog->parsed()) {
    const slab_status status = slab_catalog(
        catalog_claim.empty() ? nullptr : catalog_claim.c_str(), fmt, &report, &error);
    return finish(status, report, error);
  }
  return 2;
}
