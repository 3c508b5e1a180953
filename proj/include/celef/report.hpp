#pragma once

#include <optional>
#include <string>
#include <vector>

#include "celef/catalog.hpp"
#include "celef/model_file.hpp"
#include "json.hpp"

namespace celef {

using Json = nlohmann::ordered_json;

enum class LefschetzMode { DeRham, Basic, Contact, All };

Json model_summary(const ModelFile& f);
/// Invariant-model caveat, nilpotency flag, duality scope and omega normalization.
std::vector<std::string> caveats(const ModelFile& f);

/// Never throws ValidationError: failures are recorded under "validation".
Json validate_report(const ModelFile& f);
/// `basic_fields`: "U", "V" (l.c.s.), "xi" (contact) or generator names
/// standing for the dual frame vector. Empty: full complex only.
Json cohomology_report(const ModelFile& f, const std::vector<std::string>& basic_fields);
/// `k` empty: all 0 <= k <= n. Throws DegreeError, ValidationError,
/// PreconditionError (mode not applicable to the file).
Json lefschetz_report(const ModelFile& f, LefschetzMode mode, std::optional<int> k);
/// Runs every entry (in parallel when threads > 1) and compares against
/// the stored expectations. "passed" is false on any mismatch.
Json suite_report(const std::vector<CatalogEntry>& entries, unsigned threads);

/// Human-readable rendering of any of the reports above.
std::string render_text(const Json& report);

}  // namespace celef
