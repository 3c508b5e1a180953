#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "celef/lefschetz.hpp"
#include "support.hpp"

using namespace celef;
using support::e;

namespace {

LcsStructure kt4() { return validate_lcs(support::kt4(), e(4, 4), e(4, 3)); }
LcsStructure h5s1() { return validate_lcs(support::h5s1(), e(6, 6), e(6, 5)); }
LcsStructure n5s1() { return validate_lcs(support::n5s1(), e(6, 6), e(6, 5)); }

}  // namespace

TEST_CASE("kt4 de Rham Lefschetz snapshot") {
  LcsStructure s = kt4();
  Matrix lef0 = lefschetz_map_deRham(s, 0);
  CHECK(lef0.rows() == 1);
  CHECK(lef0.at(0, 0) != 0);

  Matrix lef1 = lefschetz_map_deRham(s, 1);
  const auto& target = s.full().cohomology(3).representatives();
  REQUIRE(target.size() == 3);
  CHECK(target[0] == Form::monomial(4, {1, 2, 3}));
  CHECK(target[1] == Form::monomial(4, {1, 3, 4}));
  CHECK(target[2] == Form::monomial(4, {2, 3, 4}));
  // columns: [e1] -> -[e134], [e2] -> -[e234], [e4] -> [e123]
  CHECK(lef1 == Matrix::from_rows(3, {{0, 0, 1}, {-1, 0, 0}, {0, -1, 0}}));
}

TEST_CASE("kt4 basic Lefschetz snapshot") {
  LcsStructure s = kt4();
  Matrix lef1 = lefschetz_map_basic(s, 1);
  const auto& source = s.basic_u().cohomology(1).representatives();
  REQUIRE(source.size() == 2);
  CHECK(source[0] == e(4, 1));
  CHECK(s.basic_u().cohomology(2).representative(lef1.column(0)) == -Form::monomial(4, {1, 3}));
  CHECK(rank(lef1) == 2);
}

TEST_CASE("transversal Lefschetz and T maps on kt4") {
  LcsStructure s = kt4();
  UvLefschetz uv0 = uv_basic_lefschetz(s, 0);
  CHECK(uv0.invertible);
  CHECK(uv0.matrix == Matrix::from_rows(1, {{1}}));
  CHECK(s.basic_uv().cohomology(2).representatives()[0] == Form::monomial(4, {1, 2}));
  CHECK(uv_basic_lefschetz(s, 1).matrix == Matrix::identity(2));

  CHECK(s.basic_u().cohomology(3).representatives()[0] == Form::monomial(4, {1, 2, 3}));
  CHECK(t_map(s, 0) == Matrix::from_rows(1, {{1}}));
  for (int k = 0; k <= 1; ++k) {
    Matrix lef = lefschetz_map_basic(s, k);
    Matrix t = t_map(s, k);
    CHECK(t * lef == Matrix::identity(lef.cols()));
    CHECK(lef * t == Matrix::identity(lef.rows()));
  }
  CHECK_THROWS_AS(uv_basic_lefschetz(s, 2), DegreeError);
}

TEST_CASE("psi on kt4") {
  PsiResult p = pairing_psi(kt4(), 1);
  CHECK(p.matrix == Matrix::from_rows(2, {{0, -1}, {1, 0}}));
  CHECK(p.skew);
  CHECK(p.parity_ok);
  CHECK(p.nondegenerate);
  CHECK_THROWS_AS(pairing_psi(kt4(), 0), DegreeError);
}

TEST_CASE("psi parity on h5s1") {
  LcsStructure s = h5s1();
  for (int k = 1; k <= 2; ++k) {
    PsiResult p = pairing_psi(s, k);
    CHECK(p.parity_ok);
    CHECK(p.nondegenerate);
    CHECK((k % 2 ? p.skew : p.symmetric));
  }
}

TEST_CASE("Gysin sequence and parity") {
  for (const auto& s : {kt4(), h5s1(), n5s1()}) {
    GysinReport g = gysin_sequence_check(s);
    CHECK(g.compositions_vanish);
    CHECK(g.top_exact);
    CHECK(g.bottom_exact);
    CHECK(g.squares_commute);
    CHECK(g.passed);
  }
  ParityReport p = betti_parity_check(kt4());
  REQUIRE(p.parity.size() == 1);
  CHECK(p.parity[0].difference == 2);
  CHECK(p.passed);
  CHECK(p.split_holds);
  CHECK_FALSE(betti_parity_check(n5s1()).passed);
}

TEST_CASE("non-Lefschetz entry") {
  LcsStructure s = n5s1();
  LefschetzVerdict v1 = is_graph_of_isomorphism(deRham_lefschetz_relation(s, 1));
  CHECK(v1.is_total);
  CHECK(v1.is_functional);
  CHECK_FALSE(v1.is_injective);
  CHECK(v1.first_failure() == "not injective");
  try {
    lefschetz_map_deRham(s, 2);
    FAIL("expected NotLefschetz");
  } catch (const NotLefschetz& err) {
    CHECK(err.degree() == 2);
    CHECK((!err.verdict().is_total || !err.verdict().is_functional));
  }
  CHECK_THROWS_AS(pairing_psi(s, 1), NotLefschetz);
  EquivalenceReport eq = lefschetz_equivalence_report(s);
  CHECK_FALSE(eq.derham_all);
  CHECK_FALSE(eq.basic_all);
  REQUIRE(eq.contact_all);
  CHECK_FALSE(*eq.contact_all);
  CHECK(eq.agree);
}

TEST_CASE("equivalence on Vaisman models") {
  for (const auto& s : {kt4(), h5s1()}) {
    EquivalenceReport eq = lefschetz_equivalence_report(s);
    CHECK(eq.derham_all);
    CHECK(eq.basic_all);
    CHECK(eq.contact_all.value_or(false));
    CHECK(eq.agree);
    // admissible forms reach every class
    for (const auto& row : eq.rows) CHECK(row.derham.is_total);
  }
}

TEST_CASE("relations do not depend on the admissible basis") {
  std::mt19937 rng(3);
  LcsStructure s = n5s1();
  for (int k = 0; k <= s.n(); ++k) {
    std::vector<Form> a = derham_admissible_forms(s, k);
    std::vector<Form> mixed;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Form f = a[i];
      for (std::size_t j = i + 1; j < a.size(); ++j) f += support::random_scalar(rng) * a[j];
      mixed.push_back(Scalar(i + 2) * f);
    }
    std::reverse(mixed.begin(), mixed.end());
    const int target = 2 * s.n() + 2 - k;
    CohomologyRelation r = relation_from_forms(s.full().cohomology(k), s.full().cohomology(target), mixed,
                                               [&](const Form& g) { return derham_lefschetz_image(s, k, g); });
    CHECK(r == deRham_lefschetz_relation(s, k));
  }
}

TEST_CASE("relation images must be closed") {
  LcsStructure s = kt4();
  auto admissible = derham_admissible_forms(s, 1);
  CHECK_THROWS_AS(relation_from_forms(s.full().cohomology(1), s.full().cohomology(1), admissible,
                                      [](const Form&) { return e(4, 3); }),
                  ConsistencyError);
  CHECK_THROWS_AS(deRham_lefschetz_relation(s, 2), DegreeError);
  CHECK_THROWS_AS(deRham_lefschetz_relation(s, -1), DegreeError);
}

TEST_CASE("contact Lefschetz on h3") {
  ContactStructure c = validate_contact(support::h3(), e(3, 3));
  auto v = contact_lefschetz_verdicts(c);
  REQUIRE(v.size() == 2);
  CHECK(v[0].is_graph_of_isomorphism());
  CHECK(v[1].is_graph_of_isomorphism());
}
