#pragma once

#include <memory>
#include <string>
#include <vector>

#include "celef/complex.hpp"
#include "celef/exterior.hpp"
#include "celef/model.hpp"

namespace celef {

/// Validated l.c.s. structure of the first kind (omega, eta) on a model of
/// dimension 2n+2, with its Lee field U, anti-Lee field V and
/// Omega = d eta + eta ^ omega. Built only by validate_lcs.
class LcsStructure {
 public:
  const StructureModel& model() const { return model_; }
  const Form& omega() const { return omega_; }
  const Form& eta() const { return eta_; }
  int n() const { return n_; }
  const Vector& lee_field() const { return lee_; }
  const Vector& anti_lee_field() const { return anti_lee_; }
  const Form& big_omega() const { return big_omega_; }
  /// d eta, the symplectic part of the structure.
  const Form& d_eta() const { return d_eta_; }

  // Complexes used by the Lefschetz machinery, built on first use.
  const Subcomplex& full() const;
  const Subcomplex& basic_u() const;   ///< basic w.r.t. U
  const Subcomplex& basic_v() const;   ///< basic w.r.t. V
  const Subcomplex& basic_uv() const;  ///< basic w.r.t. U and V
  const Subcomplex& basic_vu() const;  ///< same space as basic_uv, fields listed V first

 private:
  friend LcsStructure validate_lcs(const StructureModel&, const Form&, const Form&);
  struct Cache;

  StructureModel model_;
  Form omega_;
  Form eta_;
  int n_ = 0;
  Vector lee_;
  Vector anti_lee_;
  Form big_omega_;
  Form d_eta_;
  std::shared_ptr<Cache> cache_;
};

/// Contact form eta on a model of dimension 2n+1 with Reeb field xi.
class ContactStructure {
 public:
  const StructureModel& model() const { return model_; }
  const Form& eta() const { return eta_; }
  int n() const { return n_; }
  const Vector& reeb_field() const { return reeb_; }
  const Form& d_eta() const { return d_eta_; }
  const Subcomplex& full() const;

 private:
  friend ContactStructure validate_contact(const StructureModel&, const Form&);
  struct Cache;

  StructureModel model_;
  Form eta_;
  int n_ = 0;
  Vector reeb_;
  Form d_eta_;
  std::shared_ptr<Cache> cache_;
};

/// Throws ValidationError (NotClosed, RankDefect, NotVolume,
/// NonUniqueLeeField, WrongDimension).
LcsStructure validate_lcs(const StructureModel& m, const Form& omega, const Form& eta);

/// Throws ValidationError (NotVolume, NonUniqueReeb, WrongDimension).
ContactStructure validate_contact(const StructureModel& m, const Form& eta);

/// N x S^1 with omega = the new closed generator and eta pulled back.
LcsStructure product_with_circle(const ContactStructure& c);

/// Contact structure on the orbit space of U when U is a split central
/// generator direction. Throws ValidationError(NotProjectable).
ContactStructure quotient_contact(const LcsStructure& s);

/// Index (1-based) of the generator that U splits off, or 0 when the
/// quotient preconditions fail.
int quotient_generator(const LcsStructure& s);

struct Condition {
  std::string name;
  std::string anchor;
  bool holds = false;
};

struct VaismanReport {
  std::vector<Condition> conditions;  ///< necessary Lie-derivative / bracket identities
  bool parity_ok = false;
  bool lefschetz = false;
  bool basic_lefschetz = false;
  std::vector<std::string> obstructions;
  bool obstruction_found = false;
  std::vector<std::string> notes;
};

VaismanReport vaisman_candidate_report(const LcsStructure& s);

}  // namespace celef
