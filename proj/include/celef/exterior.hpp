#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "celef/scalar.hpp"

namespace celef {

/// Subset of generators; bit i-1 set means e_i is a factor.
using Mask = std::uint32_t;

inline constexpr int kMaxGenerators = 16;

int popcount(Mask m);

/// Degree-k monomial masks in lexicographic order of their ascending index
/// lists (e12 < e13 < ... < e23 < ...). Shared per (n_gen, k).
const std::vector<Mask>& monomials(int n_gen, int k);

/// Position of `m` inside monomials(n_gen, popcount(m)).
std::size_t monomial_index(int n_gen, Mask m);

/// Sign of e_a ^ e_b relative to e_{a|b} in ascending order (0 if a & b != 0).
int wedge_sign(Mask a, Mask b);

/// Homogeneous element of the exterior algebra on n_gen degree-1 generators
/// with exact rational coefficients. Canonical: no zero terms stored.
class Form {
 public:
  Form() = default;
  Form(int n_gen, int degree);

  static Form zero(int n_gen, int degree) { return Form(n_gen, degree); }
  static Form one(int n_gen);
  /// e_i for 1-based i.
  static Form generator(int n_gen, int index);
  /// c * e_{i1} ^ ... ^ e_{ik} for the given 1-based indices, in the given
  /// order (the sign of the permutation is applied).
  static Form monomial(int n_gen, std::initializer_list<int> indices, const Scalar& c = Scalar(1));
  static Form from_mask(int n_gen, Mask m, const Scalar& c = Scalar(1));
  /// Inverse of coords(): coefficients over monomials(n_gen, degree).
  static Form from_coords(int n_gen, int degree, const Coords& c);

  int n_gen() const { return n_gen_; }
  int degree() const { return degree_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Mask m) const;

  /// Dense coefficient vector over monomials(n_gen, degree).
  Coords coords() const;

  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);
  Form& operator*=(const Scalar& s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& s, Form a) { return a *= s; }
  Form operator-() const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.n_gen_ == b.n_gen_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Human-readable rendering, e.g. "e1^e2 - 1/2 e3^e4". Monomials appear in
  /// lexicographic index order; the zero form renders as "0".
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(Mask m, const Scalar& c);

  int n_gen_ = 0;
  int degree_ = 0;
  std::map<Mask, Scalar> terms_;

  friend Form wedge(const Form& a, const Form& b);
};

/// Constant-coefficient vector in the frame dual to the generators.
class Vector {
 public:
  Vector() = default;
  explicit Vector(int n_gen) : coeffs_(static_cast<std::size_t>(n_gen)) {}
  explicit Vector(Coords coeffs) : coeffs_(std::move(coeffs)) {}
  /// E_i for 1-based i.
  static Vector basis(int n_gen, int index);

  int n_gen() const { return static_cast<int>(coeffs_.size()); }
  const Coords& coeffs() const { return coeffs_; }
  const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  bool is_zero() const { return celef::is_zero(coeffs_); }

  friend bool operator==(const Vector& a, const Vector& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Coords coeffs_;
};

Form wedge(const Form& a, const Form& b);
/// a ^ a ^ ... (p factors); p == 0 gives the constant 1.
Form wedge_power(const Form& a, int p);
/// Interior product i_v a. The contraction of a 0-form is the zero form of
/// degree -1, so gradings stay additive.
Form contract(const Vector& v, const Form& a);
/// Coefficient of e1 ^ ... ^ e_{n_gen}. Throws DegreeError otherwise.
Scalar top_coefficient(const Form& a);
/// Pairing of a 1-form with a vector.
Scalar evaluate(const Form& one_form, const Vector& v);

/// Rank of a 2-form as a skew-symmetric matrix.
int form_rank(const Form& two_form);

}  // namespace celef
