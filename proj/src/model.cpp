#include "celef/model.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>

#include "celef/error.hpp"

namespace celef {

struct StructureModel::Cache {
  explicit Cache(int n_gen)
      : flags(std::make_unique<std::once_flag[]>(static_cast<std::size_t>(n_gen) + 1)),
        matrices(static_cast<std::size_t>(n_gen) + 1) {}
  std::unique_ptr<std::once_flag[]> flags;
  std::vector<Matrix> matrices;
};

namespace {

// d of a monomial via the antiderivation rule, given d on generators.
Form differential_of_monomial(const std::vector<Form>& d1, int n_gen, Mask m) {
  Form out(n_gen, popcount(m) + 1);
  int position = 0;
  for (Mask rest = m; rest; rest &= rest - 1, ++position) {
    int i = std::countr_zero(rest);
    Mask bit = Mask{1} << i;
    Mask prefix = m & (bit - 1);
    Mask suffix = m & ~(prefix | bit);
    for (const auto& [q, c] : d1[static_cast<std::size_t>(i)].terms()) {
      int s1 = wedge_sign(prefix, q);
      if (s1 == 0) continue;
      int s2 = wedge_sign(prefix | q, suffix);
      if (s2 == 0) continue;
      int sign = s1 * s2 * ((position & 1) ? -1 : 1);
      out += Form::from_mask(n_gen, prefix | q | suffix, sign > 0 ? c : Scalar(-c));
    }
  }
  return out;
}

}  // namespace

StructureModel::StructureModel(std::string name, std::vector<Form> differentials,
                               std::vector<std::string> generator_names)
    : name_(std::move(name)), differentials_(std::move(differentials)), names_(std::move(generator_names)) {
  const int n = static_cast<int>(differentials_.size());
  if (n > kMaxGenerators) {
    throw PreconditionError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  }
  if (names_.empty()) {
    for (int i = 1; i <= n; ++i) names_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != n) throw PreconditionError("generator name count does not match dimension");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != n) throw PreconditionError("generator names must be distinct");

  for (int i = 0; i < n; ++i) {
    const Form& d = differentials_[static_cast<std::size_t>(i)];
    if (d.n_gen() != n) {
      throw ModelMismatch("differential of " + names_[static_cast<std::size_t>(i)] + " lives over the wrong generator set");
    }
    if (d.degree() != 2) {
      if (d.is_zero()) {
        differentials_[static_cast<std::size_t>(i)] = Form::zero(n, 2);
      } else {
        throw DegreeError("differential of " + names_[static_cast<std::size_t>(i)] + " must be a 2-form");
      }
    }
  }
  cache_ = std::make_shared<Cache>(n);

  for (int i = 1; i <= n; ++i) {
    Form dd = extend_differential(*this, differential(i));
    if (!dd.is_zero()) {
      throw ConsistencyError("d^2 != 0 on generator " + names_[static_cast<std::size_t>(i - 1)] + ": d(d " +
                             names_[static_cast<std::size_t>(i - 1)] + ") = " + dd.to_string(names_) +
                             " (structure equations violate the Jacobi identity)");
    }
  }
}

StructureModel StructureModel::from_brackets(std::string name, int n_gen,
                                             const std::map<std::pair<int, int>, Vector>& brackets,
                                             std::vector<std::string> generator_names) {
  std::vector<Form> d(static_cast<std::size_t>(n_gen), Form::zero(n_gen, 2));
  for (const auto& [ij, value] : brackets) {
    auto [i, j] = ij;
    if (i < 1 || j > n_gen || i >= j) throw PreconditionError("bracket keys must satisfy 1 <= i < j <= n_gen");
    if (value.n_gen() != n_gen) throw ModelMismatch("bracket value has wrong dimension");
    for (int k = 1; k <= n_gen; ++k) {
      const Scalar& c = value[k - 1];
      if (c != 0) d[static_cast<std::size_t>(k - 1)] -= Form::monomial(n_gen, {i, j}, c);
    }
  }
  return StructureModel(std::move(name), std::move(d), std::move(generator_names));
}

int StructureModel::generator_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? 0 : static_cast<int>(it - names_.begin()) + 1;
}

Vector StructureModel::bracket(const Vector& x, const Vector& y) const {
  if (x.n_gen() != n_gen() || y.n_gen() != n_gen()) throw ModelMismatch("bracket of vectors over another model");
  // (a ^ b)(x, y) = i_y i_x (a ^ b), and e_k([x, y]) = -d e_k(x, y).
  Coords out(static_cast<std::size_t>(n_gen()));
  for (int k = 0; k < n_gen(); ++k) {
    Form value = contract(y, contract(x, differentials_[static_cast<std::size_t>(k)]));
    out[static_cast<std::size_t>(k)] = -value.coefficient(0);
  }
  return Vector(std::move(out));
}

bool StructureModel::is_nilpotent() const {
  const int n = n_gen();
  // Lower central series g^1 = g, g^{j+1} = [g, g^j].
  std::vector<Vector> current;
  for (int i = 1; i <= n; ++i) current.push_back(Vector::basis(n, i));
  for (int step = 0; step <= n; ++step) {
    std::vector<Coords> next;
    for (int i = 1; i <= n; ++i) {
      for (const auto& y : current) {
        Vector b = bracket(Vector::basis(n, i), y);
        if (!b.is_zero()) next.push_back(b.coeffs());
      }
    }
    if (next.empty()) return true;
    Matrix span = column_space(Matrix::from_columns(static_cast<std::size_t>(n), next));
    if (span.cols() == current.size()) return false;  // series stabilised at a nonzero ideal
    current.clear();
    for (auto& c : span.columns()) current.emplace_back(std::move(c));
  }
  return false;
}

bool StructureModel::is_unimodular() const {
  const int n = n_gen();
  for (int a = 1; a <= n; ++a) {
    Scalar trace(0);
    for (int b = 1; b <= n; ++b) trace += bracket(Vector::basis(n, a), Vector::basis(n, b))[b - 1];
    if (trace != 0) return false;
  }
  return true;
}

const Matrix& StructureModel::differential_matrix(int k) const {
  if (!cache_) throw PreconditionError("empty structure model");
  if (k < 0 || k > n_gen()) throw DegreeError("differential degree out of range");
  auto idx = static_cast<std::size_t>(k);
  std::call_once(cache_->flags[idx], [&] {
    const auto& src = monomials(n_gen(), k);
    const auto& dst = monomials(n_gen(), k + 1);
    Matrix d(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      Form img = differential_of_monomial(differentials_, n_gen(), src[j]);
      for (const auto& [m, c] : img.terms()) d.set(monomial_index(n_gen(), m), j, c);
    }
    cache_->matrices[idx] = std::move(d);
  });
  return cache_->matrices[idx];
}

Form extend_differential(const StructureModel& m, const Form& a) {
  if (a.n_gen() != m.n_gen()) throw ModelMismatch("form and model have different generator sets");
  Form out(m.n_gen(), a.degree() + 1);
  for (const auto& [mask, c] : a.terms()) {
    out += c * differential_of_monomial(m.differentials(), m.n_gen(), mask);
  }
  return out;
}

Form lie_derivative(const StructureModel& m, const Vector& v, const Form& a) {
  if (v.n_gen() != m.n_gen()) throw ModelMismatch("vector and model have different generator sets");
  Form out = contract(v, extend_differential(m, a));
  if (a.degree() > 0) out += extend_differential(m, contract(v, a));
  return out;
}

Matrix contraction_matrix(const Vector& v, int k) {
  const int n = v.n_gen();
  const auto& src = monomials(n, k);
  const auto& dst = monomials(n, k - 1);
  Matrix out(dst.size(), src.size());
  if (k <= 0) return out;
  for (std::size_t j = 0; j < src.size(); ++j) {
    Form img = contract(v, Form::from_mask(n, src[j]));
    for (const auto& [m, c] : img.terms()) out.set(monomial_index(n, m), j, c);
  }
  return out;
}

Matrix wedge_matrix(const Form& a, int k) {
  const int n = a.n_gen();
  const auto& src = monomials(n, k);
  const auto& dst = monomials(n, k + a.degree());
  Matrix out(dst.size(), src.size());
  if (dst.empty()) return out;
  for (std::size_t j = 0; j < src.size(); ++j) {
    Form img = wedge(a, Form::from_mask(n, src[j]));
    for (const auto& [m, c] : img.terms()) out.set(monomial_index(n, m), j, c);
  }
  return out;
}

Matrix lie_derivative_matrix(const StructureModel& m, const Vector& v, int k) {
  const int n = m.n_gen();
  const auto& src = monomials(n, k);
  Matrix out(src.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Form img = lie_derivative(m, v, Form::from_mask(n, src[j]));
    for (const auto& [mask, c] : img.terms()) out.set(monomial_index(n, mask), j, c);
  }
  return out;
}

}  // namespace celef
