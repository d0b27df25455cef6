#include "sigma_lab.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "catalog.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "laws.hpp"
#include "report.hpp"
#include "spacefile.hpp"

struct slab_space {
  sigma::ParsedSpace parsed;
};

namespace {

constexpr std::size_t kMaxVerifyPoints = 5;

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** slot, const std::string& value) {
  if (slot) *slot = dup_string(value);
}

slab_status status_of(const sigma::Error& e) {
  switch (e.code()) {
    case sigma::Errc::parse_error:
      return SLAB_ERR_PARSE;
    case sigma::Errc::too_large:
      return SLAB_ERR_TOO_LARGE;
    case sigma::Errc::unknown_law:
      return SLAB_ERR_UNKNOWN_LAW;
    case sigma::Errc::unknown_claim:
      return SLAB_ERR_UNKNOWN_CLAIM;
    case sigma::Errc::missing_empty_or_full:
    case sigma::Errc::not_closed_under_union:
    case sigma::Errc::not_closed_under_intersection:
    case sigma::Errc::validation_error:
    case sigma::Errc::schema_mismatch:
      return SLAB_ERR_VALIDATION;
  }
  return SLAB_ERR_INTERNAL;
}

template <typename Fn>
slab_status guarded(char** error, Fn&& fn) {
  try {
    return fn();
  } catch (const sigma::Error& e) {
    set_out(error, e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_out(error, e.what());
    return SLAB_ERR_INTERNAL;
  } catch (...) {
    set_out(error, "unknown error");
    return SLAB_ERR_INTERNAL;
  }
}

sigma::ReportFormat to_format(slab_format f) {
  return f == SLAB_FORMAT_JSON ? sigma::ReportFormat::json : sigma::ReportFormat::human;
}

}  // namespace

extern "C" {

const char* slab_version(void) { return "1.0.0"; }

const char* slab_status_name(slab_status status) {
  switch (status) {
    case SLAB_OK: return "ok";
    case SLAB_CHECK_FAILED: return "check-failed";
    case SLAB_ERR_PARSE: return "parse-error";
    case SLAB_ERR_VALIDATION: return "validation-error";
    case SLAB_ERR_TOO_LARGE: return "too-large";
    case SLAB_ERR_UNKNOWN_LAW: return "unknown-law";
    case SLAB_ERR_UNKNOWN_CLAIM: return "unknown-claim";
    case SLAB_ERR_USAGE: return "usage-error";
    case SLAB_ERR_INTERNAL: return "internal-error";
  }
  return "?";
}

void slab_string_free(char* s) { delete[] s; }

slab_status slab_space_parse(const char* text, slab_space** out, char** error) {
  if (!text || !out) {
    set_out(error, "null argument");
    return SLAB_ERR_USAGE;
  }
  *out = nullptr;
  return guarded(error, [&]() {
    auto parsed = sigma::parse_space_file(text);
    *out = new slab_space{std::move(parsed)};
    return SLAB_OK;
  });
}

slab_status slab_space_read(const char* path, slab_space** out, char** error) {
  if (!path || !out) {
    set_out(error, "null argument");
    return SLAB_ERR_USAGE;
  }
  *out = nullptr;
  return guarded(error, [&]() {
    auto parsed = sigma::load_space_file(path);
    *out = new slab_space{std::move(parsed)};
    return SLAB_OK;
  });
}

void slab_space_free(slab_space* space) { delete space; }

slab_status slab_classify(const slab_space* space, int include_sets, slab_format format,
                          char** report, char** error) {
  if (!space || !report) {
    set_out(error, "null argument");
    return SLAB_ERR_USAGE;
  }
  return guarded(error, [&]() {
    set_out(report, sigma::render_classify(space->parsed, include_sets != 0, to_format(format)));
    return SLAB_OK;
  });
}

slab_status slab_enumerate(unsigned points, int up_to_iso, int count_only, slab_format format,
                           char** report, char** error) {
  if (!report) {
    set_out(error, "null argument");
    return SLAB_ERR_USAGE;
  }
  return guarded(error, [&]() {
    sigma::EnumerationResult result = up_to_iso
                                          ? sigma::enum_up_to_iso(points, count_only == 0)
                                          : sigma::enum_fast(points, count_only == 0);
    set_out(report,
            sigma::render_enumerate(result, up_to_iso != 0, count_only != 0, to_format(format)));
    return SLAB_OK;
  });
}

slab_status slab_verify(unsigned max_points, const char* law_id, unsigned threads,
                        slab_format format, char** report, char** error) {
  if (!report) {
    set_out(error, "null argument");
    return SLAB_ERR_USAGE;
  }
  if (max_points < 1 || max_points > kMaxVerifyPoints) {
    set_out(error, "verify supports between 1 and 5 points");
    return SLAB_ERR_USAGE;
  }
  return guarded(error, [&]() {
    std::optional<std::string> id;
    if (law_id) id = std::string(law_id);
    const sigma::VerifyReport result = sigma::verify_all(max_points, id, threads);
    set_out(report, sigma::render_verify(result, to_format(format)));
    return result.all_hold() ? SLAB_OK : SLAB_CHECK_FAILED;
  });
}

slab_status slab_search(const char* property, unsigned max_points, unsigned threads,
                        slab_format format, char** report, char** error) {
  if (!property || !report) {
    set_out(error, "null argument");
    return SLAB_ERR_USAGE;
  }
  return guarded(error, [&]() {
    const sigma::SearchResult result = sigma::search_property(property, max_points, threads);
    set_out(report, sigma::render_search(result, to_format(format)));
    return SLAB_OK;
  });
}

slab_status slab_catalog(const char* claim_id, slab_format format, char** report, char** error) {
  if (!report) {
    set_out(error, "null argument");
    return SLAB_ERR_USAGE;
  }
  return guarded(error, [&]() {
    std::vector<sigma::ClaimResult> claims;
    bool with_steps = false;
    if (claim_id) {
      claims.push_back(sigma::run_claim(claim_id));
      with_steps = true;
    } else {
      claims = sigma::run_all_claims();
    }
    bool all_pass = true;
    for (const auto& c : claims)
      if (!c.pass) all_pass = false;
    set_out(report, sigma::render_catalog(claims, with_steps, to_format(format)));
    return all_pass ? SLAB_OK : SLAB_CHECK_FAILED;
  });
}

}  // extern "C"
