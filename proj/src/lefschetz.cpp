#include "celef/lefschetz.hpp"

namespace celef {

namespace {

void check_range(int k, int n, const char* what) {
  if (k < 0 || k > n) {
    throw DegreeError(std::string(what) + ": degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
}

std::vector<Form> forms_from_columns(int n_gen, int k, const Matrix& columns) {
  std::vector<Form> out;
  for (const auto& c : columns.columns()) out.push_back(Form::from_coords(n_gen, k, c));
  return out;
}

Form require_closed(const StructureModel& m, Form f) {
  Form df = extend_differential(m, f);
  if (!df.is_zero()) {
    throw ConsistencyError("Lefschetz image " + f.to_string(m.generator_names()) + " is not closed");
  }
  return f;
}

}  // namespace

std::string LefschetzVerdict::first_failure() const {
  if (!is_total) return "not total";
  if (!is_functional) return "not functional";
  if (!is_injective) return "not injective";
  if (!is_surjective) return "not surjective";
  return {};
}

CohomologyRelation relation_from_forms(const CohomologySpace& source, const CohomologySpace& target,
                                       const std::vector<Form>& admissible,
                                       const std::function<Form(const Form&)>& map) {
  const std::size_t a = source.dimension();
  const std::size_t b = target.dimension();
  std::vector<Coords> rows;
  for (const auto& f : admissible) {
    Coords x = source.class_of(f);
    Coords y = target.class_of(map(f));
    x.insert(x.end(), y.begin(), y.end());
    rows.push_back(std::move(x));
  }
  return CohomologyRelation{source, target, row_space(Matrix::from_rows(a + b, rows))};
}

std::vector<Form> derham_admissible_forms(const LcsStructure& s, int k) {
  check_range(k, s.n(), "de Rham Lefschetz relation");
  const StructureModel& m = s.model();
  const int n = s.n();
  Matrix constraints = m.differential_matrix(k)
                           .vstack(lie_derivative_matrix(m, s.lee_field(), k))
                           .vstack(contraction_matrix(s.anti_lee_field(), k))
                           .vstack(wedge_matrix(wedge_power(s.d_eta(), n - k + 2), k))
                           .vstack(wedge_matrix(wedge(wedge_power(s.d_eta(), n - k + 1), s.omega()), k));
  return forms_from_columns(m.n_gen(), k, nullspace(constraints));
}

std::vector<Form> basic_admissible_forms(const LcsStructure& s, int k) {
  check_range(k, s.n(), "basic Lefschetz relation");
  const Subcomplex& c = s.basic_u();
  const Matrix& basis = c.basis(k);
  Matrix constraints = c.differential(k)
                           .vstack(contraction_matrix(s.anti_lee_field(), k) * basis)
                           .vstack(wedge_matrix(wedge_power(s.d_eta(), s.n() - k + 1), k) * basis);
  std::vector<Form> out;
  for (const auto& x : nullspace(constraints).columns()) out.push_back(c.form_from(k, x));
  return out;
}

std::vector<Form> contact_admissible_forms(const ContactStructure& c, int k) {
  check_range(k, c.n(), "contact Lefschetz relation");
  const StructureModel& m = c.model();
  Matrix constraints = m.differential_matrix(k)
                           .vstack(contraction_matrix(c.reeb_field(), k))
                           .vstack(wedge_matrix(wedge_power(c.d_eta(), c.n() - k + 1), k));
  return forms_from_columns(m.n_gen(), k, nullspace(constraints));
}

Form derham_lefschetz_image(const LcsStructure& s, int k, const Form& gamma) {
  Form inner = wedge(s.d_eta(), contract(s.lee_field(), gamma)) - wedge(s.omega(), gamma);
  return wedge(s.eta(), wedge(wedge_power(s.d_eta(), s.n() - k), inner));
}

Form basic_lefschetz_image(const Form& eta, const Form& d_eta, int n, int k, const Form& beta) {
  return wedge(eta, wedge(wedge_power(d_eta, n - k), beta));
}

CohomologyRelation deRham_lefschetz_relation(const LcsStructure& s, int k) {
  auto admissible = derham_admissible_forms(s, k);
  const Subcomplex& c = s.full();
  return relation_from_forms(c.cohomology(k), c.cohomology(2 * s.n() + 2 - k), admissible,
                             [&](const Form& g) { return require_closed(s.model(), derham_lefschetz_image(s, k, g)); });
}

CohomologyRelation basic_lefschetz_relation(const LcsStructure& s, int k) {
  auto admissible = basic_admissible_forms(s, k);
  const Subcomplex& c = s.basic_u();
  return relation_from_forms(c.cohomology(k), c.cohomology(2 * s.n() + 1 - k), admissible, [&](const Form& b) {
    return require_closed(s.model(), basic_lefschetz_image(s.eta(), s.d_eta(), s.n(), k, b));
  });
}

CohomologyRelation contact_lefschetz_relation(const ContactStructure& c, int k) {
  auto admissible = contact_admissible_forms(c, k);
  const Subcomplex& full = c.full();
  return relation_from_forms(full.cohomology(k), full.cohomology(2 * c.n() + 1 - k), admissible,
                             [&](const Form& b) {
                               return require_closed(c.model(), basic_lefschetz_image(c.eta(), c.d_eta(), c.n(), k, b));
                             });
}

LefschetzVerdict is_graph_of_isomorphism(const CohomologyRelation& r) {
  const std::size_t a = r.source_dim();
  const std::size_t b = r.target_dim();
  const std::size_t all = rank(r.span);
  const std::size_t first = rank(r.span.block(0, 0, r.span.rows(), a));
  const std::size_t second = rank(r.span.block(0, a, r.span.rows(), b));
  LefschetzVerdict v;
  v.degree = r.source.degree();
  v.is_total = first == a;
  v.is_functional = all == first;
  v.is_injective = all == second;
  v.is_surjective = second == b;
  if (v.is_total && v.is_functional) {
    // span is in rref with pivots exactly in the first a columns: rows (e_i | M e_i).
    v.matrix = r.span.block(0, a, a, b).transpose();
  }
  return v;
}

Matrix lefschetz_map_deRham(const LcsStructure& s, int k) {
  LefschetzVerdict v = is_graph_of_isomorphism(deRham_lefschetz_relation(s, k));
  if (!v.is_graph_of_isomorphism()) throw NotLefschetz(k, v);
  return *v.matrix;
}

Matrix lefschetz_map_basic(const LcsStructure& s, int k) {
  LefschetzVerdict v = is_graph_of_isomorphism(basic_lefschetz_relation(s, k));
  if (!v.is_graph_of_isomorphism()) throw NotLefschetz(k, v);
  return *v.matrix;
}

Matrix contraction_class_map(const Vector& v, const Subcomplex& from, const Subcomplex& to, int k) {
  const CohomologySpace& src = from.cohomology(k);
  if (k == 0) return Matrix(0, src.dimension());
  const CohomologySpace& dst = to.cohomology(k - 1);
  std::vector<Coords> cols;
  for (const auto& rep : src.representatives()) cols.push_back(dst.class_of(contract(v, rep)));
  return Matrix::from_columns(dst.dimension(), cols);
}

Matrix inclusion_class_map(const Subcomplex& from, const Subcomplex& to, int k) {
  const CohomologySpace& src = from.cohomology(k);
  const CohomologySpace& dst = to.cohomology(k);
  std::vector<Coords> cols;
  for (const auto& rep : src.representatives()) cols.push_back(dst.class_of(rep));
  return Matrix::from_columns(dst.dimension(), cols);
}

Matrix wedge_class_map(const Form& a, const Subcomplex& c, int k) {
  const CohomologySpace& src = c.cohomology(k);
  const int target = k + a.degree();
  if (target > c.top_degree()) return Matrix(0, src.dimension());
  const CohomologySpace& dst = c.cohomology(target);
  std::vector<Coords> cols;
  for (const auto& rep : src.representatives()) cols.push_back(dst.class_of(wedge(a, rep)));
  return Matrix::from_columns(dst.dimension(), cols);
}

UvLefschetz uv_basic_lefschetz(const LcsStructure& s, int k) {
  check_range(k, s.n(), "transversal Lefschetz map");
  UvLefschetz out;
  out.degree = k;
  out.matrix = wedge_class_map(wedge_power(s.d_eta(), s.n() - k), s.basic_uv(), k);
  out.invertible = out.matrix.rows() == out.matrix.cols() && rank(out.matrix) == out.matrix.rows();
  return out;
}

Matrix t_map(const LcsStructure& s, int k) {
  check_range(k, s.n(), "T map");
  const int n = s.n();
  Matrix contraction = contraction_class_map(s.anti_lee_field(), s.basic_u(), s.basic_uv(), 2 * n + 1 - k);
  UvLefschetz lef = uv_basic_lefschetz(s, k);
  auto inv = inverse(lef.matrix);
  if (!lef.invertible || !inv) {
    throw PreconditionError("transversal Lefschetz map is not invertible in degree " + std::to_string(k));
  }
  Matrix inclusion = inclusion_class_map(s.basic_uv(), s.basic_u(), k);
  return inclusion * (*inv) * contraction;
}

PsiResult pairing_psi(const LcsStructure& s, int k) {
  if (k < 1 || k > s.n()) {
    throw DegreeError("pairing psi: degree " + std::to_string(k) + " outside [1, " + std::to_string(s.n()) + "]");
  }
  Matrix lef = lefschetz_map_basic(s, k);
  const Subcomplex& c = s.basic_u();
  const auto& source = c.cohomology(k);
  const auto& target = c.cohomology(2 * s.n() + 1 - k);
  const std::size_t dim = source.dimension();
  PsiResult out;
  out.degree = k;
  out.matrix = Matrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Form image = target.representative(lef.column(i));
    Form left = wedge(s.omega(), image);
    for (std::size_t j = 0; j < dim; ++j) {
      out.matrix.set(i, j, top_coefficient(wedge(left, source.representatives()[j])));
    }
  }
  out.determinant = determinant(out.matrix);
  out.nondegenerate = out.determinant != 0;
  Matrix t = out.matrix.transpose();
  out.symmetric = t == out.matrix;
  out.skew = t == -out.matrix;
  out.parity_ok = (k % 2 == 0) ? out.symmetric : out.skew;
  return out;
}

ParityReport betti_parity_check(const LcsStructure& s) {
  ParityReport r;
  r.betti = s.full().betti_numbers();
  r.basic_betti = s.basic_u().betti_numbers();
  r.basic_betti.pop_back();  // degree 2n+2 of a U-basic complex is always zero
  r.passed = true;
  for (int k = 1; k <= s.n(); k += 2) {
    long diff = static_cast<long>(r.betti[static_cast<std::size_t>(k)]) -
                static_cast<long>(r.betti[static_cast<std::size_t>(k - 1)]);
    bool even = diff % 2 == 0;
    r.parity.push_back({k, diff, even});
    r.passed = r.passed && even;
  }
  r.split_holds = true;
  for (int k = 0; k < static_cast<int>(r.betti.size()); ++k) {
    std::size_t c_k = k < static_cast<int>(r.basic_betti.size()) ? r.basic_betti[static_cast<std::size_t>(k)] : 0;
    std::size_t c_prev = k >= 1 ? r.basic_betti[static_cast<std::size_t>(k - 1)] : 0;
    SplitRow row{k, r.betti[static_cast<std::size_t>(k)], c_k + c_prev, false};
    row.holds = row.b == row.c_sum;
    r.split_holds = r.split_holds && row.holds;
    r.split.push_back(row);
  }
  return r;
}

std::vector<LefschetzVerdict> contact_lefschetz_verdicts(const ContactStructure& c) {
  std::vector<LefschetzVerdict> out;
  for (int k = 0; k <= c.n(); ++k) out.push_back(is_graph_of_isomorphism(contact_lefschetz_relation(c, k)));
  return out;
}

EquivalenceReport lefschetz_equivalence_report(const LcsStructure& s) {
  EquivalenceReport r;
  std::optional<ContactStructure> quotient;
  if (quotient_generator(s) != 0) {
    quotient = quotient_contact(s);
    r.quotient_applies = true;
  }
  std::vector<LefschetzVerdict> contact;
  if (quotient) contact = contact_lefschetz_verdicts(*quotient);

  r.derham_all = true;
  r.basic_all = true;
  bool contact_all = true;
  for (int k = 0; k <= s.n(); ++k) {
    EquivalenceRow row;
    row.k = k;
    row.derham = is_graph_of_isomorphism(deRham_lefschetz_relation(s, k));
    row.basic = is_graph_of_isomorphism(basic_lefschetz_relation(s, k));
    r.derham_all = r.derham_all && row.derham.is_graph_of_isomorphism();
    r.basic_all = r.basic_all && row.basic.is_graph_of_isomorphism();
    if (quotient) {
      row.contact = contact[static_cast<std::size_t>(k)];
      contact_all = contact_all && row.contact->is_graph_of_isomorphism();
    }
    r.rows.push_back(std::move(row));
  }
  if (quotient) r.contact_all = contact_all;
  r.agree = r.derham_all == r.basic_all && (!r.contact_all || *r.contact_all == r.derham_all);
  if (r.agree) {
    r.note = "verdicts agree";
  } else {
    r.note =
        "model-assumption violation: Lefschetz, basic Lefschetz and quotient contact Lefschetz verdicts "
        "disagree (the invariant model does not reflect the manifold-level hypotheses)";
  }
  return r;
}

}  // namespace celef
