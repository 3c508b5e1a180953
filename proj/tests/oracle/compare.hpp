#pragma once

#include <optional>
#include <string>

#include "celef/catalog.hpp"
#include "celef/lefschetz.hpp"
#include "dense_oracle.hpp"

namespace oracle {

inline Dense for_entry(const celef::CatalogEntry& e) {
  std::optional<Vec> omega;
  if (e.omega) omega = e.omega->coords();
  return Dense(e.model, omega, e.eta->coords());
}

/// Lifts the library's relation (class coordinates over its own
/// representatives) back to forms and compares the resulting subspace of
/// forms x forms, modulo coboundaries, with the oracle's.
inline bool same_relation(const Dense& d, Mode mode, int k, const celef::CohomologyRelation& r) {
  std::vector<std::pair<Vec, Vec>> pairs;
  const std::size_t a = r.source_dim();
  for (std::size_t i = 0; i < r.span.rows(); ++i) {
    celef::Coords row = r.span.dense_row(i);
    celef::Coords x(row.begin(), row.begin() + static_cast<long>(a));
    celef::Coords y(row.begin() + static_cast<long>(a), row.end());
    pairs.emplace_back(d.coords_of(r.source.representative(x)), d.coords_of(r.target.representative(y)));
  }
  return d.closure(mode, k, pairs) == d.relation(mode, k).span;
}

inline bool same_verdict(const Verdict& o, const celef::LefschetzVerdict& v) {
  return o.total == v.is_total && o.functional == v.is_functional && o.injective == v.is_injective &&
         o.surjective == v.is_surjective;
}

}  // namespace oracle
