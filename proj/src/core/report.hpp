#pragma once
// Deterministic report rendering. The machine format is JSON with stable key
// order; reports are byte-identical across runs and worker counts.

#include <string>
#include <vector>

#include "axioms.hpp"
#include "catalog.hpp"
#include "enumerate.hpp"
#include "laws.hpp"
#include "spacefile.hpp"

namespace sigma {

enum class ReportFormat { human, json };

std::string render_classify(const ParsedSpace& parsed, bool include_sets, ReportFormat format);
std::string render_enumerate(const EnumerationResult& result, bool up_to_iso, bool count_only,
                             ReportFormat format);
std::string render_verify(const VerifyReport& report, ReportFormat format);
std::string render_search(const SearchResult& result, ReportFormat format);
std::string render_catalog(const std::vector<ClaimResult>& claims, bool with_steps,
                           ReportFormat format);

}  // namespace sigma
