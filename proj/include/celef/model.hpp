#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "celef/exterior.hpp"
#include "celef/linalg.hpp"

namespace celef {

/// Left-invariant model of a Lie group given by the differentials of its
/// degree-1 generators (Salamon-style structure equations). Construction
/// checks that the antiderivation extension squares to zero.
class StructureModel {
 public:
  StructureModel() = default;
  StructureModel(std::string name, std::vector<Form> differentials, std::vector<std::string> generator_names = {});

  /// Structure constants [X_i, X_j] = sum_k c^k_ij X_k for 1-based i < j,
  /// converted with d e_k(X_i, X_j) = -e_k([X_i, X_j]).
  static StructureModel from_brackets(std::string name, int n_gen,
                                      const std::map<std::pair<int, int>, Vector>& brackets,
                                      std::vector<std::string> generator_names = {});

  const std::string& name() const { return name_; }
  int n_gen() const { return static_cast<int>(differentials_.size()); }
  const std::vector<Form>& differentials() const { return differentials_; }
  /// d e_i for 1-based i.
  const Form& differential(int index) const { return differentials_.at(static_cast<std::size_t>(index - 1)); }
  const std::vector<std::string>& generator_names() const { return names_; }
  int generator_index(const std::string& name) const;  // 1-based, 0 if absent

  /// Lie bracket of constant vectors, read off from the differentials.
  Vector bracket(const Vector& x, const Vector& y) const;
  bool is_nilpotent() const;
  bool is_unimodular() const;

  /// Matrix of d : degree k -> degree k+1 in monomial coordinates.
  const Matrix& differential_matrix(int k) const;

  /// Same differentials (names are presentation only).
  bool same_algebra(const StructureModel& other) const { return differentials_ == other.differentials_; }
  friend bool operator==(const StructureModel& a, const StructureModel& b) {
    return a.name_ == b.name_ && a.names_ == b.names_ && a.differentials_ == b.differentials_;
  }

 private:
  struct Cache;

  std::string name_;
  std::vector<Form> differentials_;
  std::vector<std::string> names_;
  std::shared_ptr<Cache> cache_;
};

Form extend_differential(const StructureModel& m, const Form& a);
/// Cartan formula L_v = i_v d + d i_v.
Form lie_derivative(const StructureModel& m, const Vector& v, const Form& a);

/// Matrix of i_v : degree k -> degree k-1.
Matrix contraction_matrix(const Vector& v, int k);
/// Matrix of a ^ (.) : degree k -> degree k + deg a (zero rows past the top degree).
Matrix wedge_matrix(const Form& a, int k);
/// Matrix of L_v : degree k -> degree k.
Matrix lie_derivative_matrix(const StructureModel& m, const Vector& v, int k);

}  // namespace celef
