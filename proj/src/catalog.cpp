#include "celef/catalog.hpp"

#include <sstream>

#include "celef/lefschetz.hpp"

namespace celef {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Form two_form(int n, const Pairs& pairs) {
  Form f = Form::zero(n, 2);
  for (auto [a, b] : pairs) f += Form::monomial(n, {a, b});
  return f;
}

// Salamon-style model: one list of pairs per generator.
StructureModel salamon(const std::string& name, const std::vector<Pairs>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<Form> forms;
  for (const auto& p : d) forms.push_back(two_form(n, p));
  return StructureModel(name, std::move(forms));
}

ExpectedVerdict trivial(std::string value, std::string oracle) {
  return {std::move(value), Provenance::Trivial, std::move(oracle)};
}
ExpectedVerdict derived(std::string value, std::string oracle) {
  return {std::move(value), Provenance::Derived, std::move(oracle)};
}

const char* kDense = "dense oracle (tests/oracle)";
const char* kHand = "hand computation, cross-checked by the dense oracle";

CatalogEntry lcs(std::string name, std::string group, std::string description, StructureModel m, int omega, int eta) {
  CatalogEntry e;
  const int n = m.n_gen();
  e.name = std::move(name);
  e.group = std::move(group);
  e.description = std::move(description);
  e.omega = Form::generator(n, omega);
  e.eta = Form::generator(n, eta);
  e.nilpotent = m.is_nilpotent();
  e.unimodular = m.is_unimodular();
  e.model = std::move(m);
  return e;
}

CatalogEntry contact(std::string name, std::string group, std::string description, StructureModel m, int eta) {
  CatalogEntry e;
  e.name = std::move(name);
  e.group = std::move(group);
  e.description = std::move(description);
  e.eta = Form::generator(m.n_gen(), eta);
  e.nilpotent = m.is_nilpotent();
  e.unimodular = m.is_unimodular();
  e.model = std::move(m);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e = lcs("kt4", "a", "Heisenberg-3 x circle (Kodaira-Thurston), Vaisman model",
                         salamon("kt4", {{}, {}, {{1, 2}}, {}}), 4, 3);
    e.expected = {
        {"validate", derived("valid", "U = E4, V = E3, Omega = e1^e2 + e3^e4 by hand")},
        {"betti", derived("1,3,4,3,1", kHand)},
        {"basic_betti", derived("1,2,2,1", kHand)},
        {"derham", derived("TFIS,TFIS", kHand)},
        {"basic", derived("TFIS,TFIS", kHand)},
        {"contact", derived("TFIS,TFIS", "quotient is h3; dense oracle")},
        {"equivalence", derived("agree", kDense)},
        {"parity", derived("even", "b1 - b0 = 2")},
        {"split", derived("holds", "b_k = c_k + c_{k-1} on the tables above")},
        {"psi", derived("ok", "skew 2x2 with nonzero determinant")},
        {"gysin", derived("pass", "finite rank check")},
        {"uv_lefschetz", derived("inv,inv", "UV-basic complex is the exterior algebra on e1, e2")},
        {"t_inverse", derived("identity", "composition of class maps")},
        {"duality", trivial("holds", "unimodular model")},
        {"obstruction", derived("none", "Vaisman model")},
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = lcs("h5s1", "b", "Heisenberg-5 x circle, Vaisman model",
                         salamon("h5s1", {{}, {}, {}, {}, {{1, 2}, {3, 4}}, {}}), 6, 5);
    e.expected = {
        {"validate", derived("valid", "U = E6, V = E5")},
        {"betti", derived("1,5,9,10,9,5,1", kDense)},
        {"basic_betti", derived("1,4,5,5,4,1", kDense)},
        {"derham", derived("TFIS,TFIS,TFIS", kDense)},
        {"basic", derived("TFIS,TFIS,TFIS", kDense)},
        {"contact", derived("TFIS,TFIS,TFIS", "quotient is h5; dense oracle")},
        {"equivalence", derived("agree", kDense)},
        {"parity", derived("even", "b1 - b0 = 4")},
        {"split", derived("holds", kDense)},
        {"psi", derived("ok", "exact matrix check")},
        {"gysin", derived("pass", "finite rank check")},
        {"uv_lefschetz", derived("inv,inv,inv", "UV-basic complex is the exterior algebra on e1..e4 with L = e12 + e34")},
        {"t_inverse", derived("identity", "composition of class maps")},
        {"duality", trivial("holds", "unimodular model")},
        {"obstruction", derived("none", "Vaisman model")},
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = contact("h3", "c", "Heisenberg-3 with its standard contact form", salamon("h3", {{}, {}, {{1, 2}}}), 3);
    e.expected = {
        {"validate", derived("valid", "xi = E3")},
        {"betti", derived("1,2,2,1", kHand)},
        {"contact", derived("TFIS,TFIS", kDense)},
        {"duality", trivial("holds", "unimodular model")},
        {"roundtrip", trivial("holds", "quotient of the product with a circle")},
        {"equivalence", derived("agree", "on the product with a circle; dense oracle")},
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = contact("h5", "c", "Heisenberg-5 with its standard contact form",
                             salamon("h5", {{}, {}, {}, {}, {{1, 2}, {3, 4}}}), 5);
    e.expected = {
        {"validate", derived("valid", "xi = E5")},
        {"betti", derived("1,4,5,5,4,1", kDense)},
        {"contact", derived("TFIS,TFIS,TFIS", kDense)},
        {"duality", trivial("holds", "unimodular model")},
        {"roundtrip", trivial("holds", "quotient of the product with a circle")},
        {"equivalence", derived("agree", "on the product with a circle; dense oracle")},
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = contact("n5", "d",
                             "5-dim nilpotent contact candidate (0,0,0,12,13+24); oracle-verified, not a "
                             "reproduction of any externally cited example",
                             salamon("n5", {{}, {}, {}, {{1, 2}}, {{1, 3}, {2, 4}}}), 5);
    e.expected = {
        {"validate", derived("valid", "xi = E5")},
        {"betti", derived("1,3,4,4,3,1", kDense)},
        {"contact", derived("TFIS,TF--,--IS", kDense)},
        {"duality", trivial("holds", "unimodular model")},
        {"roundtrip", trivial("holds", "quotient of the product with a circle")},
        {"equivalence", derived("agree", "on the product with a circle; dense oracle")},
    };
    e.oracle_digest = 0xcadc62d17f1cb670ull;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = lcs("n5s1", "d",
                         "n5 x circle: l.c.s. of the first kind with no compatible Vaisman structure "
                         "(odd b1 - b0); oracle-verified candidate",
                         salamon("n5s1", {{}, {}, {}, {{1, 2}}, {{1, 3}, {2, 4}}, {}}), 6, 5);
    e.expected = {
        {"validate", derived("valid", "U = E6, V = E5")},
        {"betti", derived("1,4,7,8,7,4,1", kDense)},
        {"basic_betti", derived("1,3,4,4,3,1", kDense)},
        {"derham", derived("TFIS,TF--,----", kDense)},
        {"basic", derived("TFIS,TF--,--IS", kDense)},
        {"contact", derived("TFIS,TF--,--IS", "quotient is n5; dense oracle")},
        {"equivalence", derived("agree", kDense)},
        {"parity", derived("odd", "b1 - b0 = 3")},
        {"split", derived("holds", kDense)},
        {"psi", trivial("n/a", "no Lefschetz isomorphism in degree 1")},
        {"gysin", derived("pass", "finite rank check")},
        {"uv_lefschetz", derived("inv,sing,inv", "finite rank check")},
        {"t_inverse", trivial("n/a", "no Lefschetz isomorphism")},
        {"duality", trivial("holds", "unimodular model")},
        {"obstruction", derived("found", "Betti parity and Lefschetz relation")},
    };
    e.oracle_digest = 0x892f1acfed90711bull;
    out.push_back(std::move(e));
  }

  auto negative = [&](CatalogEntry e, ValidationKind kind, const std::string& why) {
    e.expected = {{"validate", trivial(to_string(kind), why)}};
    out.push_back(std::move(e));
  };
  negative(lcs("abelian4-flat", "e", "abelian R^4 with omega = e4, eta = e3", salamon("abelian4", {{}, {}, {}, {}}), 4, 3),
           ValidationKind::RankDefect, "d eta = 0 has rank 0 < 2");
  negative(lcs("kt4-open-omega", "e", "kt4 with omega = e3 (not closed)", salamon("kt4", {{}, {}, {{1, 2}}, {}}), 3, 4),
           ValidationKind::NotClosed, "d e3 = e12");
  negative(lcs("kt4-degenerate", "e", "kt4 with omega = e1: omega ^ eta ^ d eta = 0",
               salamon("kt4", {{}, {}, {{1, 2}}, {}}), 1, 3),
           ValidationKind::NotVolume, "e1 ^ e3 ^ e1^e2 = 0");
  negative(lcs("h3xR3-lowrank", "e", "(0,0,12,0,0,0) with omega = e4, eta = e3",
               salamon("h3xR3", {{}, {}, {{1, 2}}, {}, {}, {}}), 4, 3),
           ValidationKind::RankDefect, "d eta = e12 has rank 2 < 4");
  negative(lcs("abelian3-odd", "e", "abelian R^3 as an l.c.s. candidate", salamon("abelian3", {{}, {}, {}}), 3, 2),
           ValidationKind::WrongDimension, "l.c.s. models need even dimension");
  negative(contact("abelian3-contact", "e", "abelian R^3 with eta = e1", salamon("abelian3", {{}, {}, {}}), 1),
           ValidationKind::NotVolume, "d eta = 0");
  negative(contact("abelian4-contact", "e", "abelian R^4 as a contact candidate", salamon("abelian4", {{}, {}, {}, {}}),
                   1),
           ValidationKind::WrongDimension, "contact models need odd dimension");
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string verdict_codes(const std::vector<LefschetzVerdict>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& v = vs[i];
    if (i) out += ',';
    out += v.is_total ? 'T' : '-';
    out += v.is_functional ? 'F' : '-';
    out += v.is_injective ? 'I' : '-';
    out += v.is_surjective ? 'S' : '-';
  }
  return out;
}

bool dual(const std::vector<std::size_t>& b) {
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] != b[b.size() - 1 - k]) return false;
  }
  return true;
}

void lcs_checks(const LcsStructure& s, bool unimodular, std::map<std::string, std::string>& out) {
  out["betti"] = join(s.full().betti_numbers());
  ParityReport parity = betti_parity_check(s);
  out["basic_betti"] = join(parity.basic_betti);
  out["parity"] = parity.passed ? "even" : "odd";
  out["split"] = parity.split_holds ? "holds" : "fails";

  EquivalenceReport eq = lefschetz_equivalence_report(s);
  std::vector<LefschetzVerdict> dr, ba, co;
  for (const auto& row : eq.rows) {
    dr.push_back(row.derham);
    ba.push_back(row.basic);
    if (row.contact) co.push_back(*row.contact);
  }
  out["derham"] = verdict_codes(dr);
  out["basic"] = verdict_codes(ba);
  if (eq.quotient_applies) out["contact"] = verdict_codes(co);
  out["equivalence"] = eq.agree ? "agree" : "disagree";

  if (eq.basic_all) {
    bool ok = true;
    for (int k = 1; k <= s.n(); ++k) {
      PsiResult psi = pairing_psi(s, k);
      ok = ok && psi.parity_ok && psi.nondegenerate;
    }
    out["psi"] = ok ? "ok" : "fails";
  } else {
    out["psi"] = "n/a";
  }

  out["gysin"] = gysin_sequence_check(s).passed ? "pass" : "fail";
  std::string uv;
  bool all_invertible = true;
  for (int k = 0; k <= s.n(); ++k) {
    bool inv = uv_basic_lefschetz(s, k).invertible;
    all_invertible = all_invertible && inv;
    uv += (k ? "," : "") + std::string(inv ? "inv" : "sing");
  }
  out["uv_lefschetz"] = uv;

  if (eq.basic_all && all_invertible) {
    bool ok = true;
    for (int k = 0; k <= s.n(); ++k) {
      Matrix lef = lefschetz_map_basic(s, k);
      Matrix t = t_map(s, k);
      ok = ok && t * lef == Matrix::identity(lef.cols()) && lef * t == Matrix::identity(lef.rows());
    }
    out["t_inverse"] = ok ? "identity" : "fails";
  } else {
    out["t_inverse"] = "n/a";
  }
  if (unimodular) out["duality"] = dual(s.full().betti_numbers()) ? "holds" : "fails";
  out["obstruction"] = vaisman_candidate_report(s).obstruction_found ? "found" : "none";
}

void contact_checks(const ContactStructure& c, bool unimodular, std::map<std::string, std::string>& out) {
  std::vector<std::size_t> betti = c.full().betti_numbers();
  out["betti"] = join(betti);
  out["contact"] = verdict_codes(contact_lefschetz_verdicts(c));
  if (unimodular) out["duality"] = dual(betti) ? "holds" : "fails";
  LcsStructure product = product_with_circle(c);
  ContactStructure back = quotient_contact(product);
  out["roundtrip"] = back.model().same_algebra(c.model()) && back.eta() == c.eta() ? "holds" : "fails";
  out["equivalence"] = lefschetz_equivalence_report(product).agree ? "agree" : "disagree";
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::Trivial ? "TRIVIAL" : "DERIVED"; }

const std::vector<CatalogEntry>& builtin_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : builtin_entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::map<std::string, std::string> run_checks(const CatalogEntry& e) {
  std::map<std::string, std::string> out;
  try {
    if (e.is_lcs()) {
      LcsStructure s = validate_lcs(e.model, *e.omega, *e.eta);
      out["validate"] = "valid";
      lcs_checks(s, e.unimodular, out);
    } else {
      ContactStructure c = validate_contact(e.model, *e.eta);
      out["validate"] = "valid";
      contact_checks(c, e.unimodular, out);
    }
  } catch (const ValidationError& err) {
    out["validate"] = to_string(err.kind());
  }
  return out;
}

}  // namespace celef
