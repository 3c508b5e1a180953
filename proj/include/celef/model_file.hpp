#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "celef/catalog.hpp"
#include "celef/model.hpp"
#include "json.hpp"

namespace celef {

/// A model plus the designated forms: both omega and eta for an l.c.s.
/// candidate, eta alone for a contact candidate.
struct ModelFile {
  StructureModel model;
  std::optional<Form> omega;
  std::optional<Form> eta;

  friend bool operator==(const ModelFile& a, const ModelFile& b) {
    return a.model.name() == b.model.name() && a.model == b.model && a.omega == b.omega && a.eta == b.eta;
  }
};

/// Line-oriented text format:
///
///   # comment
///   name = kt4
///   dim = 4
///   generators = e1 e2 e3 e4     (optional, defaults to e1..e<dim>)
///   d e3 = e1^e2                  (unlisted differentials are zero)
///   omega = e4
///   eta = e3
///
/// A form is a signed sum of terms `[p[/q]] [*] x^y^...`; `0` is the zero
/// form. Throws ParseError with 1-based line and column.
ModelFile parse_model_file(std::string_view text);
/// Reads and parses a file; IO failures raise ParseError at 0:0.
ModelFile load_model_file(const std::string& path);
std::string serialize(const ModelFile& f);

/// Parses a form expression over the given generator names.
Form parse_form(std::string_view text, const std::vector<std::string>& names, int degree);

nlohmann::ordered_json to_json(const ModelFile& f);
/// Inverse of to_json; ParseError carries the JSON key path in the message.
ModelFile model_file_from_json(const nlohmann::json& j);

ModelFile from_catalog(const CatalogEntry& e);

}  // namespace celef
