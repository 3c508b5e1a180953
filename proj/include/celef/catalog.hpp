#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "celef/model.hpp"

namespace celef {

enum class Provenance { Trivial, Derived };

std::string to_string(Provenance p);

struct ExpectedVerdict {
  std::string value;
  Provenance provenance = Provenance::Derived;
  std::string oracle;  ///< how the value was obtained
};

struct CatalogEntry {
  std::string name;
  std::string group;  ///< "a".."e"
  std::string description;
  StructureModel model;
  std::optional<Form> omega;  ///< absent for contact entries
  std::optional<Form> eta;
  bool nilpotent = false;
  bool unimodular = false;
  std::map<std::string, ExpectedVerdict> expected;
  /// FNV-1a digest of the dense oracle summary that produced the verdicts,
  /// for entries whose Lefschetz verdicts were not derived by hand.
  std::optional<std::uint64_t> oracle_digest;

  bool is_lcs() const { return omega.has_value(); }
};

const std::vector<CatalogEntry>& builtin_entries();
/// nullptr when absent.
const CatalogEntry* find_entry(const std::string& name);

/// Runs every check applicable to the entry and renders each verdict in
/// the same vocabulary as `expected`:
///   validate        "valid" or the ValidationKind name
///   betti, basic_betti, contact_betti   comma-separated dimensions
///   derham, basic, contact              per-k codes, e.g. "TFIS,TF--"
///                                       (Total, Functional, Injective, Surjective)
///   equivalence     "agree" / "disagree"
///   parity          "even" / "odd"
///   split           "holds" / "fails"
///   psi             "ok" / "fails" / "n/a"
///   gysin           "pass" / "fail"
///   uv_lefschetz    per-k "inv" / "sing"
///   t_inverse       "identity" / "fails" / "n/a"
///   duality         "holds" / "fails" (unimodular entries only)
///   obstruction     "none" / "found"
///   roundtrip       "holds" / "fails" (contact: quotient of the product)
std::map<std::string, std::string> run_checks(const CatalogEntry& e);

}  // namespace celef
