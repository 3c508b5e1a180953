#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "celef/error.hpp"
#include "celef/structures.hpp"
#include "support.hpp"

using namespace celef;
using support::e;

namespace {

ValidationKind lcs_failure(const StructureModel& m, const Form& omega, const Form& eta) {
  try {
    validate_lcs(m, omega, eta);
  } catch (const ValidationError& err) {
    return err.kind();
  }
  FAIL("expected a validation error");
  return ValidationKind::NotClosed;
}

}  // namespace

TEST_CASE("kt4 structure") {
  StructureModel m = support::kt4();
  LcsStructure s = validate_lcs(m, e(4, 4), e(4, 3));
  CHECK(s.n() == 1);
  CHECK(s.lee_field() == Vector::basis(4, 4));
  CHECK(s.anti_lee_field() == Vector::basis(4, 3));
  CHECK(s.big_omega() == Form::monomial(4, {1, 2}) + Form::monomial(4, {3, 4}));
  CHECK(extend_differential(m, s.big_omega()) == wedge(s.omega(), s.big_omega()));
  CHECK(s.eta() == -contract(s.lee_field(), s.big_omega()));
  CHECK(s.d_eta() == Form::monomial(4, {1, 2}));
}

TEST_CASE("validator failures") {
  CHECK(lcs_failure(support::kt4(), e(4, 3), e(4, 4)) == ValidationKind::NotClosed);
  CHECK(lcs_failure(support::salamon("a4", {{}, {}, {}, {}}), e(4, 4), e(4, 3)) == ValidationKind::RankDefect);
  CHECK(lcs_failure(support::kt4(), e(4, 1), e(4, 3)) == ValidationKind::NotVolume);
  CHECK(lcs_failure(support::salamon("a3", {{}, {}, {}}), e(3, 3), e(3, 2)) == ValidationKind::WrongDimension);
  CHECK_THROWS_AS(validate_lcs(support::kt4(), Form::monomial(4, {1, 2}), e(4, 3)), DegreeError);
  try {
    validate_lcs(support::salamon("h3r3", {{}, {}, {{1, 2}}, {}, {}, {}}), e(6, 4), e(6, 3));
    FAIL("expected RankDefect");
  } catch (const ValidationError& err) {
    CHECK(err.kind() == ValidationKind::RankDefect);
    CHECK(err.rank() == 2);
  }
  CHECK_THROWS_AS(validate_contact(support::salamon("a3", {{}, {}, {}}), e(3, 1)), ValidationError);
  CHECK_THROWS_AS(validate_contact(support::kt4(), e(4, 3)), ValidationError);
}

TEST_CASE("contact structures, products and quotients") {
  ContactStructure c = validate_contact(support::h3(), e(3, 3));
  CHECK(c.n() == 1);
  CHECK(c.reeb_field() == Vector::basis(3, 3));

  LcsStructure p = product_with_circle(c);
  CHECK(p.model().n_gen() == 4);
  CHECK(p.model().same_algebra(support::kt4()));
  CHECK(p.lee_field() == Vector::basis(4, 4));
  CHECK(quotient_generator(p) == 4);
  ContactStructure back = quotient_contact(p);
  CHECK(back.model().same_algebra(c.model()));
  CHECK(back.eta() == c.eta());
  CHECK(back.model().name() == "h3");

  // eta = e3 + e4 tilts the Lee field to E4 - E3, which is not a generator direction
  LcsStructure kt = validate_lcs(support::kt4(), e(4, 4), e(4, 3) + e(4, 4));
  CHECK(kt.lee_field() == Vector(Coords{0, 0, -1, 1}));
  CHECK(quotient_generator(kt) == 0);
  CHECK_THROWS_AS(quotient_contact(kt), ValidationError);
}

TEST_CASE("Vaisman candidate report") {
  VaismanReport good = vaisman_candidate_report(validate_lcs(support::kt4(), e(4, 4), e(4, 3)));
  CHECK_FALSE(good.obstruction_found);
  for (const auto& c : good.conditions) CHECK(c.holds);
  VaismanReport bad = vaisman_candidate_report(validate_lcs(support::n5s1(), e(6, 6), e(6, 5)));
  CHECK(bad.obstruction_found);
  CHECK_FALSE(bad.parity_ok);
  CHECK_FALSE(bad.lefschetz);
}
