#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "celef/complex.hpp"
#include "celef/error.hpp"
#include "celef/structures.hpp"

namespace celef {

/// Linear subspace of H^a x H^b, stored as the reduced row echelon basis of
/// its rows (x | y).
struct CohomologyRelation {
  CohomologySpace source;
  CohomologySpace target;
  Matrix span;  ///< rows: generators (x | y), canonical rref form

  std::size_t source_dim() const { return source.dimension(); }
  std::size_t target_dim() const { return target.dimension(); }
  friend bool operator==(const CohomologyRelation& a, const CohomologyRelation& b) { return a.span == b.span; }
};

struct LefschetzVerdict {
  int degree = 0;
  bool is_total = false;       ///< first projection is all of H^a
  bool is_functional = false;  ///< no pair (0, y != 0)
  bool is_injective = false;   ///< no pair (x != 0, 0)
  bool is_surjective = false;  ///< second projection is all of H^b
  std::optional<Matrix> matrix;  ///< induced map H^a -> H^b when total and functional

  bool is_graph_of_isomorphism() const { return is_total && is_functional && is_injective && is_surjective; }
  /// Name of the first failing condition, empty when the relation is an isomorphism.
  std::string first_failure() const;
};

class NotLefschetz : public Error {
 public:
  NotLefschetz(int k, LefschetzVerdict verdict)
      : Error("relation in degree " + std::to_string(k) + " is not the graph of an isomorphism (" +
              verdict.first_failure() + ")"),
        degree_(k),
        verdict_(std::move(verdict)) {}
  int degree() const { return degree_; }
  const LefschetzVerdict& verdict() const { return verdict_; }

 private:
  int degree_;
  LefschetzVerdict verdict_;
};

/// Span of ([a], [map(a)]) over the given admissible closed forms. Each
/// image is checked to be closed in the target complex before projecting.
CohomologyRelation relation_from_forms(const CohomologySpace& source, const CohomologySpace& target,
                                       const std::vector<Form>& admissible,
                                       const std::function<Form(const Form&)>& map);

/// Admissible forms gamma of degree k (closed, L_U gamma = 0, i_V gamma = 0,
/// L^{n-k+2} gamma = 0, L^{n-k+1}(omega ^ gamma) = 0), as a canonical basis.
std::vector<Form> derham_admissible_forms(const LcsStructure& s, int k);
/// U-basic closed beta with i_V beta = 0 and L^{n-k+1} beta = 0.
std::vector<Form> basic_admissible_forms(const LcsStructure& s, int k);
/// Closed beta with i_xi beta = 0 and L^{n-k+1} beta = 0.
std::vector<Form> contact_admissible_forms(const ContactStructure& c, int k);

/// gamma -> eta ^ L^{n-k} (L i_U gamma - omega ^ gamma)
Form derham_lefschetz_image(const LcsStructure& s, int k, const Form& gamma);
/// beta -> eta ^ L^{n-k} beta
Form basic_lefschetz_image(const Form& eta, const Form& d_eta, int n, int k, const Form& beta);

CohomologyRelation deRham_lefschetz_relation(const LcsStructure& s, int k);
CohomologyRelation basic_lefschetz_relation(const LcsStructure& s, int k);
CohomologyRelation contact_lefschetz_relation(const ContactStructure& c, int k);

LefschetzVerdict is_graph_of_isomorphism(const CohomologyRelation& r);

/// Induced maps; throw NotLefschetz when the relation is not an isomorphism.
Matrix lefschetz_map_deRham(const LcsStructure& s, int k);
Matrix lefschetz_map_basic(const LcsStructure& s, int k);

struct UvLefschetz {
  int degree = 0;
  Matrix matrix;  ///< H^k_B(<U,V>) -> H^{2n-k}_B(<U,V>)
  bool invertible = false;
};

UvLefschetz uv_basic_lefschetz(const LcsStructure& s, int k);

/// Class-level maps between the complexes (columns indexed by source reps).
Matrix contraction_class_map(const Vector& v, const Subcomplex& from, const Subcomplex& to, int k);
Matrix inclusion_class_map(const Subcomplex& from, const Subcomplex& to, int k);
Matrix wedge_class_map(const Form& a, const Subcomplex& c, int k);

/// T_k = [Id] o (Lef^{UV}_k)^{-1} o [i_V] : H^{2n+1-k}_B(U) -> H^k_B(U).
Matrix t_map(const LcsStructure& s, int k);

struct ExactnessNode {
  std::string label;
  std::size_t dimension = 0;
  std::size_t rank_in = 0;   ///< rank of the incoming map
  std::size_t rank_out = 0;  ///< rank of the outgoing map
  bool composition_zero = false;
  bool exact = false;
};

struct CommutingSquare {
  std::string label;
  int degree = 0;
  bool commutes = false;
};

struct GysinReport {
  std::vector<ExactnessNode> top;     ///< H_B(V) -> H_B(V) -> H(M) -> H_B(V) -> ...
  std::vector<ExactnessNode> bottom;  ///< H_B(UV) -> H_B(UV) -> H_B(U) -> H_B(UV) -> ...
  SplittingReport split_full;         ///< (Id, eps_omega): H_B(U) + H_B(U) -> H(M)
  SplittingReport split_v;            ///< (Id, eps_omega): H_B(VU) + H_B(VU) -> H_B(V)
  std::vector<CommutingSquare> squares;
  bool compositions_vanish = false;
  bool top_exact = false;
  bool bottom_exact = false;
  bool squares_commute = false;
  bool passed = false;
};

GysinReport gysin_sequence_check(const LcsStructure& s);

struct PsiResult {
  int degree = 0;
  Matrix matrix;
  Scalar determinant;
  bool nondegenerate = false;
  bool symmetric = false;       ///< psi^T == psi
  bool skew = false;            ///< psi^T == -psi
  bool parity_ok = false;       ///< symmetric for even k, skew for odd k
};

/// psi_ij = top(omega ^ Lef^U_k(beta_i) ^ beta_j) on the representative basis
/// of H^k_B(U); 1 <= k <= n. Throws NotLefschetz.
PsiResult pairing_psi(const LcsStructure& s, int k);

struct ParityRow {
  int k = 0;
  long difference = 0;  ///< b_k - b_{k-1}
  bool even = false;
};

struct SplitRow {
  int k = 0;
  std::size_t b = 0;
  std::size_t c_sum = 0;  ///< c_k + c_{k-1}
  bool holds = false;
};

struct ParityReport {
  std::vector<std::size_t> betti;        ///< b_0 .. b_{2n+2}
  std::vector<std::size_t> basic_betti;  ///< c_0 .. c_{2n+1}
  std::vector<ParityRow> parity;         ///< odd k <= n
  std::vector<SplitRow> split;           ///< b_k = c_k + c_{k-1}
  bool passed = false;                   ///< every parity row even
  bool split_holds = false;
};

ParityReport betti_parity_check(const LcsStructure& s);

struct EquivalenceRow {
  int k = 0;
  LefschetzVerdict derham;
  LefschetzVerdict basic;
  std::optional<LefschetzVerdict> contact;
};

struct EquivalenceReport {
  std::vector<EquivalenceRow> rows;
  bool derham_all = false;
  bool basic_all = false;
  bool quotient_applies = false;
  std::optional<bool> contact_all;
  bool agree = false;
  std::string note;
};

EquivalenceReport lefschetz_equivalence_report(const LcsStructure& s);

/// Contact Lefschetz verdicts for k = 0..n.
std::vector<LefschetzVerdict> contact_lefschetz_verdicts(const ContactStructure& c);

}  // namespace celef
