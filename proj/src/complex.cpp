#include "celef/complex.hpp"

#include <algorithm>

#include "celef/error.hpp"

namespace celef {

std::optional<Coords> CohomologySpace::try_class_of(const Form& f) const {
  if (f.n_gen() != n_gen_) throw ModelMismatch("class_of: form over another model");
  if (f.is_zero()) return Coords(dimension());
  if (f.degree() != degree_) return std::nullopt;
  auto x = space_.coordinates(f.coords());
  if (!x) return std::nullopt;
  auto c = classes_.coordinates(*x);
  if (!c) return std::nullopt;  // not closed
  return Coords(c->begin() + static_cast<std::ptrdiff_t>(boundary_rank_), c->end());
}

Coords CohomologySpace::class_of(const Form& f) const {
  auto c = try_class_of(f);
  if (!c) {
    throw ConsistencyError("form " + f.to_string() + " is not a closed element of the complex in degree " +
                           std::to_string(degree_));
  }
  return *c;
}

Form CohomologySpace::representative(const Coords& c) const {
  if (c.size() != dimension()) throw PreconditionError("class coordinates have wrong length");
  Form out(n_gen_, degree_);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) out += c[j] * representatives_[j];
  }
  return out;
}

Subcomplex::Subcomplex(StructureModel model, std::vector<Vector> fields, std::vector<Matrix> bases)
    : model_(std::move(model)), fields_(std::move(fields)), bases_(std::move(bases)) {
  const int n = model_.n_gen();
  if (static_cast<int>(bases_.size()) != n + 1) throw PreconditionError("subcomplex needs a basis for every degree");
  for (int k = 0; k <= n; ++k) {
    if (bases_[static_cast<std::size_t>(k)].rows() != monomials(n, k).size()) {
      throw PreconditionError("subcomplex basis has the wrong ambient dimension in degree " + std::to_string(k));
    }
    solvers_.emplace_back(bases_[static_cast<std::size_t>(k)]);
  }
  for (int k = 0; k <= n; ++k) {
    const Matrix& b = bases_[static_cast<std::size_t>(k)];
    if (k == n) {
      differentials_.emplace_back(0, b.cols());
      continue;
    }
    Matrix image = model_.differential_matrix(k) * b;
    std::vector<Coords> cols;
    for (const auto& col : image.columns()) {
      auto x = solvers_[static_cast<std::size_t>(k + 1)].coordinates(col);
      if (!x) {
        throw ConsistencyError("subcomplex is not closed under d in degree " + std::to_string(k) +
                               " (the listed fields do not define a foliation with a basic subcomplex here)");
      }
      cols.push_back(std::move(*x));
    }
    differentials_.push_back(Matrix::from_columns(solvers_[static_cast<std::size_t>(k + 1)].dimension(), cols));
  }
  for (int k = 0; k <= n; ++k) cohomology_.push_back(compute_cohomology(k));
}

std::size_t Subcomplex::checked(int k) const {
  if (k < 0 || k > model_.n_gen()) {
    throw DegreeError("degree " + std::to_string(k) + " outside [0, " + std::to_string(model_.n_gen()) + "]");
  }
  return static_cast<std::size_t>(k);
}

std::size_t Subcomplex::dimension(int k) const { return basis(k).cols(); }

std::optional<Coords> Subcomplex::coordinates(const Form& f) const {
  if (f.n_gen() != model_.n_gen()) throw ModelMismatch("form over another model");
  if (f.degree() < 0 || f.degree() > model_.n_gen()) return std::nullopt;
  return solvers_[static_cast<std::size_t>(f.degree())].coordinates(f.coords());
}

Form Subcomplex::form_from(int k, const Coords& x) const {
  return Form::from_coords(model_.n_gen(), k, basis(k).apply(x));
}

std::vector<Form> Subcomplex::basis_forms(int k) const {
  std::vector<Form> out;
  for (const auto& col : basis(k).columns()) out.push_back(Form::from_coords(model_.n_gen(), k, col));
  return out;
}

const CohomologySpace& Subcomplex::cohomology(int k) const { return cohomology_.at(checked(k)); }

std::vector<std::size_t> Subcomplex::betti_numbers() const {
  std::vector<std::size_t> out;
  for (const auto& h : cohomology_) out.push_back(h.dimension());
  return out;
}

CohomologySpace Subcomplex::compute_cohomology(int k) const {
  const std::size_t dim = dimension(k);
  Matrix cycles = nullspace(differential(k));
  Matrix boundaries = k > 0 ? column_space(differential(k - 1)) : Matrix(dim, 0);

  // Complete the boundary basis to a cycle basis, scanning the canonical
  // cycle basis in order.
  Echelon e = rref(boundaries.hstack(cycles));
  std::vector<std::size_t> chosen;
  for (auto p : e.pivots) {
    if (p >= boundaries.cols()) chosen.push_back(p - boundaries.cols());
  }
  if (boundaries.cols() + chosen.size() != cycles.cols()) {
    throw ConsistencyError("image of d is not contained in the kernel in degree " + std::to_string(k));
  }
  Matrix reps = cycles.select_columns(chosen);

  CohomologySpace h;
  h.n_gen_ = model_.n_gen();
  h.degree_ = k;
  h.space_ = solvers_[static_cast<std::size_t>(k)];
  h.classes_ = BasisSolver(boundaries.hstack(reps));
  h.boundary_rank_ = boundaries.cols();
  for (const auto& col : reps.columns()) h.representatives_.push_back(form_from(k, col));
  return h;
}

SubcomplexPtr full_complex(const StructureModel& m) {
  std::vector<Matrix> bases;
  for (int k = 0; k <= m.n_gen(); ++k) bases.push_back(Matrix::identity(monomials(m.n_gen(), k).size()));
  return std::make_shared<const Subcomplex>(m, std::vector<Vector>{}, std::move(bases));
}

SubcomplexPtr basic_complex(const StructureModel& m, const std::vector<Vector>& fields) {
  for (const auto& v : fields) {
    if (v.n_gen() != m.n_gen()) throw ModelMismatch("basic_complex: field over another model");
  }
  std::vector<Matrix> bases;
  for (int k = 0; k <= m.n_gen(); ++k) {
    Matrix constraints(0, monomials(m.n_gen(), k).size());
    for (const auto& v : fields) {
      constraints = constraints.vstack(contraction_matrix(v, k)).vstack(lie_derivative_matrix(m, v, k));
    }
    bases.push_back(nullspace(constraints));
  }
  return std::make_shared<const Subcomplex>(m, fields, std::move(bases));
}

const CohomologySpace& cohomology(const Subcomplex& c, int k) { return c.cohomology(k); }

SplittingMap splitting_map(const StructureModel& m, const Form& w, const Subcomplex& inner, const Subcomplex& outer,
                           int k) {
  if (!inner.model().same_algebra(m) || !outer.model().same_algebra(m) || w.n_gen() != m.n_gen()) {
    throw ModelMismatch("splitting_map: complexes and form must share the model");
  }
  if (w.degree() != 1) throw PreconditionError("splitting form must have degree 1");
  if (!extend_differential(m, w).is_zero()) throw PreconditionError("splitting form is not closed");
  const auto& fi = inner.fields();
  const auto& fo = outer.fields();
  if (fo.size() != fi.size() + 1 || !std::equal(fi.begin(), fi.end(), fo.begin())) {
    throw PreconditionError("outer fields must extend the inner fields by exactly one field");
  }
  if (evaluate(w, fo.back()) != 1) throw PreconditionError("splitting form must evaluate to 1 on the added field");
  for (const auto& v : fi) {
    if (evaluate(w, v) != 0) throw PreconditionError("splitting form must vanish on the inner fields");
  }
  if (k < 0 || k > m.n_gen()) throw DegreeError("splitting degree out of range");

  SplittingMap out;
  out.degree = k;
  const CohomologySpace& target = inner.cohomology(k);
  out.inner_k = target.dimension();
  std::vector<Coords> cols;
  for (const auto& b : outer.cohomology(k).representatives()) cols.push_back(target.class_of(b));
  out.outer_k = cols.size();
  if (k >= 1) {
    for (const auto& b : outer.cohomology(k - 1).representatives()) cols.push_back(target.class_of(wedge(w, b)));
  }
  out.outer_k_minus_1 = cols.size() - out.outer_k;
  out.matrix = Matrix::from_columns(out.inner_k, cols);
  return out;
}

SplittingReport splitting_check(const StructureModel& m, const Form& w, const Subcomplex& inner,
                                const Subcomplex& outer) {
  SplittingReport report;
  report.passed = true;
  for (int k = 0; k <= m.n_gen(); ++k) {
    SplittingMap s = splitting_map(m, w, inner, outer, k);
    SplittingDegree d;
    d.degree = k;
    d.rows = s.matrix.rows();
    d.cols = s.matrix.cols();
    d.rank = rank(s.matrix);
    d.isomorphism = d.rows == d.cols && d.rank == d.rows;
    report.passed = report.passed && d.isomorphism;
    report.degrees.push_back(d);
  }
  return report;
}

}  // namespace celef
