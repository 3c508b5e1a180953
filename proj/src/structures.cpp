#include "celef/structures.hpp"

#include <mutex>

#include "celef/error.hpp"
#include "celef/lefschetz.hpp"

namespace celef {

struct LcsStructure::Cache {
  std::once_flag full_once, u_once, v_once, uv_once, vu_once;
  SubcomplexPtr full, u, v, uv, vu;
};

struct ContactStructure::Cache {
  std::once_flag once;
  SubcomplexPtr full;
};

const Subcomplex& LcsStructure::full() const {
  std::call_once(cache_->full_once, [&] { cache_->full = full_complex(model_); });
  return *cache_->full;
}

const Subcomplex& LcsStructure::basic_u() const {
  std::call_once(cache_->u_once, [&] { cache_->u = basic_complex(model_, {lee_}); });
  return *cache_->u;
}

const Subcomplex& LcsStructure::basic_v() const {
  std::call_once(cache_->v_once, [&] { cache_->v = basic_complex(model_, {anti_lee_}); });
  return *cache_->v;
}

const Subcomplex& LcsStructure::basic_uv() const {
  std::call_once(cache_->uv_once, [&] { cache_->uv = basic_complex(model_, {lee_, anti_lee_}); });
  return *cache_->uv;
}

const Subcomplex& LcsStructure::basic_vu() const {
  std::call_once(cache_->vu_once, [&] { cache_->vu = basic_complex(model_, {anti_lee_, lee_}); });
  return *cache_->vu;
}

const Subcomplex& ContactStructure::full() const {
  std::call_once(cache_->once, [&] { cache_->full = full_complex(model_); });
  return *cache_->full;
}

namespace {

void require_one_form(const StructureModel& m, const Form& f, const char* what) {
  if (f.n_gen() != m.n_gen()) throw ModelMismatch(std::string(what) + " lives over another model");
  if (f.degree() != 1 && !f.is_zero()) throw DegreeError(std::string(what) + " must be a 1-form");
}

Form as_one_form(const Form& f) { return f.degree() == 1 ? f : Form::zero(f.n_gen(), 1); }

// Unique x with a(x) = 1, b(x) = 0 and i_x beta = 0, if it exists.
std::optional<Vector> solve_characteristic_field(const Form& a, const Form& b, const Form& beta) {
  const int n = a.n_gen();
  std::vector<Coords> rows;
  rows.push_back(a.coords());
  if (b.n_gen() == n && b.degree() == 1) rows.push_back(b.coords());
  Matrix contraction(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Coords c = contract(Vector::basis(n, i), beta).coords();
    for (std::size_t j = 0; j < c.size(); ++j) contraction.set(j, static_cast<std::size_t>(i - 1), c[j]);
  }
  Matrix system = Matrix::from_rows(static_cast<std::size_t>(n), rows).vstack(contraction);
  Coords rhs(system.rows());
  rhs[0] = 1;
  if (rank(system) != static_cast<std::size_t>(n)) return std::nullopt;
  auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  return Vector(std::move(*x));
}

std::string fresh_generator_name(const std::vector<std::string>& names) {
  auto taken = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
  std::string candidate = "e" + std::to_string(names.size() + 1);
  if (!taken(candidate)) return candidate;
  candidate = "t";
  for (int i = 1; taken(candidate); ++i) candidate = "t" + std::to_string(i);
  return candidate;
}

}  // namespace

LcsStructure validate_lcs(const StructureModel& m, const Form& omega_in, const Form& eta_in) {
  require_one_form(m, omega_in, "omega");
  require_one_form(m, eta_in, "eta");
  const Form omega = as_one_form(omega_in);
  const Form eta = as_one_form(eta_in);
  const int dim = m.n_gen();
  if (dim < 2 || dim % 2 != 0) {
    throw ValidationError(ValidationKind::WrongDimension,
                          "an l.c.s. structure needs an even dimension 2n+2 >= 2, got " + std::to_string(dim));
  }
  const int n = (dim - 2) / 2;

  Form d_omega = extend_differential(m, omega);
  if (!d_omega.is_zero()) {
    throw ValidationError(ValidationKind::NotClosed, "d omega = " + d_omega.to_string(m.generator_names()) + " != 0");
  }
  Form d_eta = extend_differential(m, eta);
  int r = d_eta.is_zero() ? 0 : form_rank(d_eta);
  if (r != 2 * n) {
    throw ValidationError(ValidationKind::RankDefect,
                          "rank d eta = " + std::to_string(r) + ", expected 2n = " + std::to_string(2 * n), r);
  }
  Form volume = wedge(wedge(omega, eta), wedge_power(d_eta, n));
  if (top_coefficient(volume) == 0) {
    throw ValidationError(ValidationKind::NotVolume, "omega ^ eta ^ (d eta)^n vanishes");
  }

  auto lee = solve_characteristic_field(omega, eta, d_eta);
  auto anti_lee = solve_characteristic_field(eta, omega, d_eta);
  if (!lee || !anti_lee) {
    throw ValidationError(ValidationKind::NonUniqueLeeField, "characterizing linear system is singular");
  }

  LcsStructure s;
  s.model_ = m;
  s.omega_ = omega;
  s.eta_ = eta;
  s.n_ = n;
  s.lee_ = *lee;
  s.anti_lee_ = *anti_lee;
  s.d_eta_ = d_eta;
  s.big_omega_ = d_eta + wedge(eta, omega);
  s.cache_ = std::make_shared<LcsStructure::Cache>();

  if (!(extend_differential(m, s.big_omega_) == wedge(omega, s.big_omega_))) {
    throw ConsistencyError("d Omega != omega ^ Omega");
  }
  return s;
}

ContactStructure validate_contact(const StructureModel& m, const Form& eta_in) {
  require_one_form(m, eta_in, "eta");
  const Form eta = as_one_form(eta_in);
  const int dim = m.n_gen();
  if (dim < 1 || dim % 2 != 1) {
    throw ValidationError(ValidationKind::WrongDimension,
                          "a contact structure needs an odd dimension 2n+1, got " + std::to_string(dim));
  }
  const int n = (dim - 1) / 2;
  Form d_eta = extend_differential(m, eta);
  if (top_coefficient(wedge(eta, wedge_power(d_eta, n))) == 0) {
    throw ValidationError(ValidationKind::NotVolume, "eta ^ (d eta)^n vanishes");
  }
  auto reeb = solve_characteristic_field(eta, Form(), d_eta);
  if (!reeb) throw ValidationError(ValidationKind::NonUniqueReeb, "Reeb system is singular");

  ContactStructure c;
  c.model_ = m;
  c.eta_ = eta;
  c.n_ = n;
  c.reeb_ = *reeb;
  c.d_eta_ = d_eta;
  c.cache_ = std::make_shared<ContactStructure::Cache>();
  return c;
}

LcsStructure product_with_circle(const ContactStructure& c) {
  const StructureModel& base = c.model();
  const int n = base.n_gen();
  auto lift = [&](const Form& f) {
    Form out(n + 1, f.degree());
    for (const auto& [mask, coef] : f.terms()) out += Form::from_mask(n + 1, mask, coef);
    return out;
  };
  std::vector<Form> d;
  for (const auto& f : base.differentials()) d.push_back(lift(f));
  d.push_back(Form::zero(n + 1, 2));
  std::vector<std::string> names = base.generator_names();
  names.push_back(fresh_generator_name(names));
  StructureModel m(base.name() + "xS1", std::move(d), std::move(names));
  return validate_lcs(m, Form::generator(n + 1, n + 1), lift(c.eta()));
}

int quotient_generator(const LcsStructure& s) {
  const StructureModel& m = s.model();
  const int dim = m.n_gen();
  for (int u = 1; u <= dim; ++u) {
    if (!(s.lee_field() == Vector::basis(dim, u))) continue;
    const Mask bit = Mask{1} << (u - 1);
    if (!m.differential(u).is_zero()) return 0;
    for (const auto& d : m.differentials()) {
      for (const auto& [mask, c] : d.terms()) {
        if (mask & bit) return 0;
      }
    }
    if (s.eta().coefficient(bit) != 0) return 0;
    return u;
  }
  return 0;
}

ContactStructure quotient_contact(const LcsStructure& s) {
  const int u = quotient_generator(s);
  if (u == 0) {
    throw ValidationError(ValidationKind::NotProjectable,
                          "the Lee field is not a split central generator direction (U = E_u with d e_u = 0, "
                          "e_u absent from every differential and from eta)");
  }
  const StructureModel& m = s.model();
  const int dim = m.n_gen();
  const Mask low = (Mask{1} << (u - 1)) - 1;
  auto drop = [&](const Form& f) {
    Form out(dim - 1, f.degree());
    for (const auto& [mask, c] : f.terms()) {
      Mask reduced = (mask & low) | ((mask >> 1) & ~low);
      out += Form::from_mask(dim - 1, reduced, c);
    }
    return out;
  };
  std::vector<Form> d;
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i) {
    if (i == u) continue;
    d.push_back(drop(m.differential(i)));
    names.push_back(m.generator_names()[static_cast<std::size_t>(i - 1)]);
  }
  std::string name = m.name();
  if (name.size() > 3 && name.ends_with("xS1")) {
    name.resize(name.size() - 3);
  } else {
    name += "/U";
  }
  ContactStructure c = validate_contact(StructureModel(name, std::move(d), std::move(names)), drop(s.eta()));

  Coords projected;
  for (int i = 1; i <= dim; ++i) {
    if (i != u) projected.push_back(s.anti_lee_field()[i - 1]);
  }
  if (!(Vector(projected) == c.reeb_field())) {
    throw ConsistencyError("projection of the anti-Lee field is not the Reeb field of the quotient");
  }
  return c;
}

VaismanReport vaisman_candidate_report(const LcsStructure& s) {
  const StructureModel& m = s.model();
  const Vector& u = s.lee_field();
  const Vector& v = s.anti_lee_field();
  VaismanReport r;
  auto add = [&](std::string name, bool holds) {
    r.conditions.push_back({std::move(name), "Lee/anti-Lee field identities", holds});
  };
  add("L_U eta = 0", lie_derivative(m, u, s.eta()).is_zero());
  add("L_U omega = 0", lie_derivative(m, u, s.omega()).is_zero());
  add("L_V omega = 0", lie_derivative(m, v, s.omega()).is_zero());
  add("L_U Omega = 0", lie_derivative(m, u, s.big_omega()).is_zero());
  add("[U, V] = 0", m.bracket(u, v).is_zero());
  for (const auto& c : r.conditions) {
    if (!c.holds) r.obstructions.push_back("condition fails: " + c.name);
  }

  ParityReport parity = betti_parity_check(s);
  r.parity_ok = parity.passed;
  if (!parity.passed) r.obstructions.push_back("Betti parity: b_k - b_{k-1} is odd for some odd k <= n");

  EquivalenceReport eq = lefschetz_equivalence_report(s);
  r.lefschetz = eq.derham_all;
  r.basic_lefschetz = eq.basic_all;
  if (!eq.derham_all) r.obstructions.push_back("Lefschetz relation is not the graph of an isomorphism");
  if (!eq.basic_all) r.obstructions.push_back("U-basic Lefschetz relation is not the graph of an isomorphism");

  r.obstruction_found = !r.obstructions.empty();
  r.notes.push_back(
      "metric conditions (parallel Lee form, compatible complex structure) are not representable in the "
      "invariant model; only their algebraic consequences are checked");
  r.notes.push_back("normalization |omega| = 1 needs a metric and is not enforced");
  return r;
}

}  // namespace celef
