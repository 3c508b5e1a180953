#include "celef/exterior.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "celef/error.hpp"
#include "celef/linalg.hpp"

namespace celef {

namespace {

struct MonomialTable {
  // by_degree[n][k]: monomial masks; index[n][mask]: position within its degree.
  std::array<std::vector<std::vector<Mask>>, kMaxGenerators + 1> by_degree;
  std::array<std::vector<std::uint32_t>, kMaxGenerators + 1> index;

  MonomialTable() {
    for (int n = 0; n <= kMaxGenerators; ++n) {
      by_degree[n].resize(static_cast<std::size_t>(n) + 1);
      index[n].assign(std::size_t{1} << n, 0);
      for (int k = 0; k <= n; ++k) {
        // lexicographic combinations of {0..n-1}
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[i] = i;
        auto& list = by_degree[n][k];
        while (true) {
          Mask m = 0;
          for (int i : idx) m |= Mask{1} << i;
          index[n][m] = static_cast<std::uint32_t>(list.size());
          list.push_back(m);
          int pos = k - 1;
          while (pos >= 0 && idx[pos] == n - k + pos) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
      }
    }
  }
};

const MonomialTable& table() {
  static const MonomialTable t;
  return t;
}

void check_n_gen(int n_gen) {
  if (n_gen < 0 || n_gen > kMaxGenerators) {
    throw PreconditionError("number of generators must lie in [0, " + std::to_string(kMaxGenerators) + "]");
  }
}

void require_same_model(int a, int b) {
  if (a != b) {
    throw ModelMismatch("operands live over " + std::to_string(a) + " and " + std::to_string(b) + " generators");
  }
}

std::string default_name(int i) { return "e" + std::to_string(i); }

}  // namespace

int popcount(Mask m) { return std::popcount(m); }

const std::vector<Mask>& monomials(int n_gen, int k) {
  check_n_gen(n_gen);
  static const std::vector<Mask> kEmpty;
  if (k < 0 || k > n_gen) return kEmpty;
  return table().by_degree[n_gen][k];
}

std::size_t monomial_index(int n_gen, Mask m) {
  check_n_gen(n_gen);
  return table().index[n_gen].at(m);
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Mask above = j >= 31 ? Mask{0} : ~((Mask{2} << j) - 1);
    swaps += std::popcount(a & above);
  }
  return (swaps & 1) ? -1 : 1;
}

Form::Form(int n_gen, int degree) : n_gen_(n_gen), degree_(degree) { check_n_gen(n_gen); }

Form Form::one(int n_gen) { return from_mask(n_gen, 0); }

Form Form::generator(int n_gen, int index) {
  if (index < 1 || index > n_gen) throw PreconditionError("generator index out of range");
  return from_mask(n_gen, Mask{1} << (index - 1));
}

Form Form::monomial(int n_gen, std::initializer_list<int> indices, const Scalar& c) {
  Form out = Form::one(n_gen);
  for (int i : indices) out = wedge(out, generator(n_gen, i));
  out *= c;
  return out;
}

Form Form::from_mask(int n_gen, Mask m, const Scalar& c) {
  Form f(n_gen, popcount(m));
  if ((m >> n_gen) != 0) throw PreconditionError("mask uses generators beyond n_gen");
  f.add_term(m, c);
  return f;
}

Form Form::from_coords(int n_gen, int degree, const Coords& c) {
  const auto& basis = monomials(n_gen, degree);
  if (c.size() != basis.size()) throw PreconditionError("coordinate vector has wrong length for degree");
  Form f(n_gen, degree);
  for (std::size_t i = 0; i < c.size(); ++i) f.add_term(basis[i], c[i]);
  return f;
}

Scalar Form::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Coords Form::coords() const {
  Coords out(monomials(n_gen_, degree_).size());
  for (const auto& [m, c] : terms_) out[monomial_index(n_gen_, m)] = c;
  return out;
}

void Form::add_term(Mask m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& rhs) {
  require_same_model(n_gen_, rhs.n_gen_);
  if (degree_ != rhs.degree_) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    throw DegreeError("cannot add forms of degree " + std::to_string(degree_) + " and " +
                      std::to_string(rhs.degree_));
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& rhs) { return *this += -rhs; }

Form& Form::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string Form::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<Mask> order;
  order.reserve(terms_.size());
  for (const auto& [m, c] : terms_) order.push_back(m);
  std::sort(order.begin(), order.end(),
            [&](Mask a, Mask b) { return monomial_index(n_gen_, a) < monomial_index(n_gen_, b); });
  std::ostringstream os;
  bool first = true;
  for (Mask m : order) {
    Scalar c = terms_.at(m);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Scalar a = abs(c);
    std::string mono;
    for (int i = 0; i < n_gen_; ++i) {
      if (!(m & (Mask{1} << i))) continue;
      if (!mono.empty()) mono += "^";
      mono += i < static_cast<int>(names.size()) ? names[i] : default_name(i + 1);
    }
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << " ";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

Vector Vector::basis(int n_gen, int index) {
  if (index < 1 || index > n_gen) throw PreconditionError("basis vector index out of range");
  Vector v(n_gen);
  v.coeffs_[static_cast<std::size_t>(index - 1)] = 1;
  return v;
}

std::string Vector::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_gen(); ++i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Scalar a = abs(c);
    if (a != 1) os << a.get_str() << " ";
    std::string name = i < static_cast<int>(names.size()) ? names[i] : default_name(i + 1);
    // E_i is the frame vector dual to the generator e_i.
    if (!name.empty()) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    os << name;
    first = false;
  }
  return first ? "0" : os.str();
}

Form wedge(const Form& a, const Form& b) {
  require_same_model(a.n_gen_, b.n_gen_);
  Form out(a.n_gen_, a.degree_ + b.degree_);
  if (out.degree_ > out.n_gen_) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  }
  return out;
}

Form wedge_power(const Form& a, int p) {
  if (p < 0) throw DegreeError("negative wedge power");
  Form out = Form::one(a.n_gen());
  for (int i = 0; i < p; ++i) out = wedge(out, a);
  return out;
}

Form contract(const Vector& v, const Form& a) {
  require_same_model(v.n_gen(), a.n_gen());
  Form out(a.n_gen(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    for (Mask rest = m; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      const Scalar& vi = v[i];
      if (vi == 0) continue;
      int before = std::popcount(m & ((Mask{1} << i) - 1));
      Scalar t = vi * c;
      if (before & 1) t = -t;
      out += Form::from_mask(a.n_gen(), m & ~(Mask{1} << i), t);
    }
  }
  return out;
}

Scalar top_coefficient(const Form& a) {
  if (a.degree() != a.n_gen()) {
    throw DegreeError("top coefficient needs a form of degree " + std::to_string(a.n_gen()) + ", got " +
                      std::to_string(a.degree()));
  }
  return a.coefficient((Mask{1} << a.n_gen()) - 1);
}

Scalar evaluate(const Form& one_form, const Vector& v) {
  require_same_model(one_form.n_gen(), v.n_gen());
  if (one_form.degree() != 1) throw DegreeError("evaluate expects a 1-form");
  Scalar s(0);
  for (const auto& [m, c] : one_form.terms()) s += c * v[std::countr_zero(m)];
  return s;
}

int form_rank(const Form& two_form) {
  if (two_form.degree() != 2) throw DegreeError("form_rank expects a 2-form");
  const auto n = static_cast<std::size_t>(two_form.n_gen());
  Matrix a(n, n);
  for (const auto& [m, c] : two_form.terms()) {
    auto i = static_cast<std::size_t>(std::countr_zero(m));
    auto j = static_cast<std::size_t>(31 - std::countl_zero(m));
    a.set(i, j, c);
    a.set(j, i, -c);
  }
  return static_cast<int>(rank(a));
}

}  // namespace celef
