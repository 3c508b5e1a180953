#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "celef/linalg.hpp"
#include "celef/model.hpp"

namespace celef {

/// One degree of the cohomology of a (sub)complex: a basis of classes given
/// by closed representatives, plus the linear map sending a closed form of
/// the complex to its coordinates in that basis.
class CohomologySpace {
 public:
  CohomologySpace() = default;

  int degree() const { return degree_; }
  std::size_t dimension() const { return representatives_.size(); }
  const std::vector<Form>& representatives() const { return representatives_; }

  /// Coordinates of [f]. Throws ConsistencyError when f is not a closed
  /// form of the owning complex.
  Coords class_of(const Form& f) const;
  std::optional<Coords> try_class_of(const Form& f) const;

  /// Form sum_j c_j * representatives[j].
  Form representative(const Coords& c) const;

 private:
  friend class Subcomplex;

  int n_gen_ = 0;
  int degree_ = 0;
  std::vector<Form> representatives_;
  BasisSolver space_;    // monomial coordinates -> complex coordinates
  BasisSolver classes_;  // complex coordinates -> [boundaries | representatives]
  std::size_t boundary_rank_ = 0;
};

/// A d-closed graded subspace of the invariant forms, stored degree by
/// degree as a basis (columns in monomial coordinates) together with the
/// restricted differential. Cohomology is computed on construction.
class Subcomplex {
 public:
  /// `bases[k]` has C(n_gen, k) rows. Throws ConsistencyError when the span
  /// is not closed under d or a basis is dependent.
  Subcomplex(StructureModel model, std::vector<Vector> fields, std::vector<Matrix> bases);

  const StructureModel& model() const { return model_; }
  /// Fields whose basic forms this complex consists of (empty: all forms).
  const std::vector<Vector>& fields() const { return fields_; }
  int top_degree() const { return model_.n_gen(); }

  std::size_t dimension(int k) const;
  const Matrix& basis(int k) const { return bases_.at(checked(k)); }
  /// Restricted d : degree k -> degree k+1 in complex coordinates.
  const Matrix& differential(int k) const { return differentials_.at(checked(k)); }

  std::optional<Coords> coordinates(const Form& f) const;
  bool contains(const Form& f) const { return f.is_zero() || coordinates(f).has_value(); }
  Form form_from(int k, const Coords& x) const;
  std::vector<Form> basis_forms(int k) const;

  const CohomologySpace& cohomology(int k) const;
  /// Dimensions of H^0 .. H^{n_gen}.
  std::vector<std::size_t> betti_numbers() const;

 private:
  std::size_t checked(int k) const;
  CohomologySpace compute_cohomology(int k) const;

  StructureModel model_;
  std::vector<Vector> fields_;
  std::vector<Matrix> bases_;
  std::vector<BasisSolver> solvers_;
  std::vector<Matrix> differentials_;
  std::vector<CohomologySpace> cohomology_;
};

using SubcomplexPtr = std::shared_ptr<const Subcomplex>;

SubcomplexPtr full_complex(const StructureModel& m);
/// Forms killed by i_v and L_v for every listed field.
SubcomplexPtr basic_complex(const StructureModel& m, const std::vector<Vector>& fields);

/// Throws DegreeError for k outside [0, n_gen].
const CohomologySpace& cohomology(const Subcomplex& c, int k);

/// ([b], [b']) -> [b + w ^ b'] from H^k(outer) + H^{k-1}(outer) to H^k(inner).
struct SplittingMap {
  int degree = 0;
  std::size_t outer_k = 0;        ///< dim H^k(outer), the first block of columns
  std::size_t outer_k_minus_1 = 0;
  std::size_t inner_k = 0;
  Matrix matrix;                  ///< inner_k x (outer_k + outer_k_minus_1)
};

/// `outer` must be basic for inner's fields plus one more field W, with
/// w(W) = 1, w vanishing on inner's fields and dw = 0 (PreconditionError).
SplittingMap splitting_map(const StructureModel& m, const Form& w, const Subcomplex& inner, const Subcomplex& outer,
                           int k);

struct SplittingDegree {
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  bool isomorphism = false;
};

struct SplittingReport {
  std::vector<SplittingDegree> degrees;
  bool passed = false;
};

SplittingReport splitting_check(const StructureModel& m, const Form& w, const Subcomplex& inner,
                                const Subcomplex& outer);

}  // namespace celef
