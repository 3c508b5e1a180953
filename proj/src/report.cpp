#include "celef/report.hpp"

#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "celef/lefschetz.hpp"

namespace celef {

namespace {

constexpr const char* kInvariantCaveat =
    "invariant-model assumption: all cohomology is computed on left-invariant forms; it agrees with de Rham "
    "and basic cohomology of a compact quotient only under the usual nilpotent (Nomizu-type) hypotheses";
constexpr const char* kBasicCaveat =
    "invariant basic cohomology is not known to equal the basic cohomology of the foliated manifold in general";

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json forms_json(const std::vector<Form>& forms, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(f.to_string(names));
  return out;
}

Json verdict_json(const LefschetzVerdict& v, const CohomologyRelation& r, const std::string& anchor,
                  const std::vector<std::string>& names) {
  Json j;
  j["anchor"] = anchor;
  j["source_degree"] = r.source.degree();
  j["target_degree"] = r.target.degree();
  j["total"] = v.is_total;
  j["functional"] = v.is_functional;
  j["injective"] = v.is_injective;
  j["surjective"] = v.is_surjective;
  j["isomorphism"] = v.is_graph_of_isomorphism();
  j["first_failure"] = v.is_graph_of_isomorphism() ? Json(nullptr) : Json(v.first_failure());
  j["admissible_surjects"] = v.is_total;
  j["source_basis"] = forms_json(r.source.representatives(), names);
  j["target_basis"] = forms_json(r.target.representatives(), names);
  j["matrix"] = v.matrix ? matrix_json(*v.matrix) : Json(nullptr);
  return j;
}

Json sizes_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json lcs_structure_json(const LcsStructure& s) {
  const auto& names = s.model().generator_names();
  Json j;
  j["kind"] = "lcs";
  j["anchor"] = "l.c.s. structure of the first kind";
  j["n"] = s.n();
  j["omega"] = s.omega().to_string(names);
  j["eta"] = s.eta().to_string(names);
  j["lee_field"] = s.lee_field().to_string(names);
  j["anti_lee_field"] = s.anti_lee_field().to_string(names);
  j["big_omega"] = s.big_omega().to_string(names);
  j["d_big_omega_equals_omega_wedge_big_omega"] =
      extend_differential(s.model(), s.big_omega()) == wedge(s.omega(), s.big_omega());
  j["eta_equals_minus_i_U_big_omega"] = s.eta() == -contract(s.lee_field(), s.big_omega());
  return j;
}

Json contact_structure_json(const ContactStructure& c) {
  const auto& names = c.model().generator_names();
  Json j;
  j["kind"] = "contact";
  j["anchor"] = "contact structure";
  j["n"] = c.n();
  j["eta"] = c.eta().to_string(names);
  j["reeb_field"] = c.reeb_field().to_string(names);
  return j;
}

Json equivalence_json(const EquivalenceReport& eq) {
  Json j;
  j["anchor"] = "Lefschetz equivalence (de Rham, U-basic, contact quotient)";
  j["derham_all"] = eq.derham_all;
  j["basic_all"] = eq.basic_all;
  j["quotient_applies"] = eq.quotient_applies;
  j["contact_all"] = eq.contact_all ? Json(*eq.contact_all) : Json(nullptr);
  j["agree"] = eq.agree;
  j["note"] = eq.note;
  return j;
}

Json nodes_json(const std::vector<ExactnessNode>& nodes) {
  Json out = Json::array();
  for (const auto& n : nodes) {
    out.push_back({{"space", n.label},
                   {"dimension", n.dimension},
                   {"rank_in", n.rank_in},
                   {"rank_out", n.rank_out},
                   {"composition_zero", n.composition_zero},
                   {"exact", n.exact}});
  }
  return out;
}

Json gysin_json(const GysinReport& g) {
  Json j;
  j["anchor"] = "Gysin sequence and its split lower row";
  j["compositions_vanish"] = g.compositions_vanish;
  j["top_exact"] = g.top_exact;
  j["bottom_exact"] = g.bottom_exact;
  j["splitting_full"] = g.split_full.passed;
  j["splitting_v"] = g.split_v.passed;
  j["squares_commute"] = g.squares_commute;
  j["passed"] = g.passed;
  j["top"] = nodes_json(g.top);
  j["bottom"] = nodes_json(g.bottom);
  return j;
}

Json parity_json(const ParityReport& p) {
  Json j;
  j["anchor"] = "Betti parity for Vaisman candidates";
  j["betti"] = sizes_json(p.betti);
  j["basic_betti"] = sizes_json(p.basic_betti);
  Json rows = Json::array();
  for (const auto& r : p.parity) rows.push_back({{"k", r.k}, {"difference", r.difference}, {"even", r.even}});
  j["rows"] = rows;
  j["passed"] = p.passed;
  Json split = Json::array();
  for (const auto& r : p.split) split.push_back({{"k", r.k}, {"b", r.b}, {"c_sum", r.c_sum}, {"holds", r.holds}});
  j["split"] = {{"anchor", "basic splitting b_k = c_k + c_{k-1}"}, {"rows", split}, {"holds", p.split_holds}};
  return j;
}

Json vaisman_json(const VaismanReport& v) {
  Json j;
  j["anchor"] = "Vaisman obstructions";
  Json conds = Json::array();
  for (const auto& c : v.conditions) conds.push_back({{"condition", c.name}, {"holds", c.holds}});
  j["conditions"] = conds;
  j["obstruction_found"] = v.obstruction_found;
  j["obstructions"] = v.obstructions;
  j["notes"] = v.notes;
  return j;
}

std::vector<int> degrees(std::optional<int> k, int n) {
  if (k) {
    if (*k < 0 || *k > n) {
      throw DegreeError("degree " + std::to_string(*k) + " outside [0, " + std::to_string(n) + "]");
    }
    return {*k};
  }
  std::vector<int> out;
  for (int i = 0; i <= n; ++i) out.push_back(i);
  return out;
}

bool wants(LefschetzMode mode, LefschetzMode which) { return mode == LefschetzMode::All || mode == which; }

Json base(const char* command, const ModelFile& f) {
  Json j;
  j["command"] = command;
  j["model"] = model_summary(f);
  return j;
}

Vector field_by_token(const ModelFile& f, const std::string& token) {
  const StructureModel& m = f.model;
  if (token == "U" || token == "V") {
    if (!f.omega || !f.eta) throw PreconditionError("field '" + token + "' needs an l.c.s. file (omega and eta)");
    LcsStructure s = validate_lcs(m, *f.omega, *f.eta);
    return token == "U" ? s.lee_field() : s.anti_lee_field();
  }
  if (token == "xi") {
    if (f.omega || !f.eta) throw PreconditionError("field 'xi' needs a contact file (eta only)");
    return validate_contact(m, *f.eta).reeb_field();
  }
  int idx = m.generator_index(token);
  if (idx == 0) throw PreconditionError("unknown field '" + token + "' (use U, V, xi or a generator name)");
  return Vector::basis(m.n_gen(), idx);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json model_summary(const ModelFile& f) {
  Json j = to_json(f);
  j["nilpotent"] = f.model.is_nilpotent();
  j["unimodular"] = f.model.is_unimodular();
  return j;
}

std::vector<std::string> caveats(const ModelFile& f) {
  const StructureModel& m = f.model;
  std::vector<std::string> out{kInvariantCaveat, kBasicCaveat};
  if (m.is_nilpotent()) {
    out.push_back("nilpotency flag: nilpotent");
  } else {
    out.push_back(
        "nilpotency flag: NOT nilpotent; invariant cohomology may differ from the cohomology of any compact "
        "quotient, treat every verdict as a statement about the model only");
  }
  if (!m.is_unimodular()) out.push_back("model is not unimodular: Poincare duality is not asserted");
  if (f.omega) out.push_back("omega is used as given: the model carries no metric, so |omega| = 1 is not imposed");
  return out;
}

Json validate_report(const ModelFile& f) {
  Json j = base("validate", f);
  Json v;
  try {
    if (!f.eta) throw PreconditionError("file declares neither omega nor eta");
    if (f.omega) {
      v = lcs_structure_json(validate_lcs(f.model, *f.omega, *f.eta));
    } else {
      v = contact_structure_json(validate_contact(f.model, *f.eta));
    }
    v["status"] = "valid";
  } catch (const ValidationError& e) {
    v["kind"] = f.omega ? "lcs" : "contact";
    v["status"] = "invalid";
    v["error"] = to_string(e.kind());
    v["message"] = e.what();
    v["rank"] = e.rank() >= 0 ? Json(e.rank()) : Json(nullptr);
  }
  j["validation"] = v;
  j["caveats"] = caveats(f);
  return j;
}

Json cohomology_report(const ModelFile& f, const std::vector<std::string>& basic_fields) {
  Json j = base("cohomology", f);
  SubcomplexPtr full = full_complex(f.model);
  const auto& names = f.model.generator_names();
  std::vector<std::size_t> b = full->betti_numbers();
  j["betti"] = {{"anchor", "de Rham cohomology of the model"}, {"dimensions", sizes_json(b)}};
  Json reps = Json::array();
  for (int k = 0; k <= f.model.n_gen(); ++k) reps.push_back(forms_json(full->cohomology(k).representatives(), names));
  j["betti"]["representatives"] = reps;
  if (f.model.is_unimodular()) {
    bool dual = true;
    for (std::size_t k = 0; k < b.size(); ++k) dual = dual && b[k] == b[b.size() - 1 - k];
    j["duality"] = {{"anchor", "Poincare duality of a unimodular model"}, {"holds", dual}};
  }
  if (!basic_fields.empty()) {
    std::vector<Vector> fields;
    for (const auto& t : basic_fields) fields.push_back(field_by_token(f, t));
    SubcomplexPtr basic = basic_complex(f.model, fields);
    std::vector<Coords> columns;
    for (const auto& v : fields) columns.push_back(v.coeffs());
    // forms killed by r independent contractions vanish above degree n_gen - r
    const std::size_t top = static_cast<std::size_t>(f.model.n_gen()) -
                            rank(Matrix::from_columns(static_cast<std::size_t>(f.model.n_gen()), columns));
    std::vector<std::size_t> c = basic->betti_numbers();
    c.resize(top + 1);
    Json bj;
    bj["anchor"] = "basic cohomology";
    bj["fields"] = basic_fields;
    bj["dimensions"] = sizes_json(c);
    Json breps = Json::array();
    for (std::size_t k = 0; k <= top; ++k) {
      breps.push_back(forms_json(basic->cohomology(static_cast<int>(k)).representatives(), names));
    }
    bj["representatives"] = breps;
    if (basic_fields == std::vector<std::string>{"U"}) {
      Json rows = Json::array();
      bool holds = true;
      for (std::size_t k = 0; k < b.size(); ++k) {
        std::size_t sum = (k < c.size() ? c[k] : 0) + (k >= 1 ? c[k - 1] : 0);
        rows.push_back({{"k", k}, {"b", b[k]}, {"c_sum", sum}, {"holds", b[k] == sum}});
        holds = holds && b[k] == sum;
      }
      bj["split"] = {{"anchor", "basic splitting b_k = c_k + c_{k-1}"}, {"rows", rows}, {"holds", holds}};
    }
    j["basic"] = bj;
  }
  j["caveats"] = caveats(f);
  return j;
}

Json lefschetz_report(const ModelFile& f, LefschetzMode mode, std::optional<int> k) {
  if (!f.eta) throw PreconditionError("file declares neither omega nor eta");
  Json j = base("lefschetz", f);
  const auto& names = f.model.generator_names();
  static const char* mode_names[] = {"deRham", "basic", "contact", "all"};
  j["mode"] = mode_names[static_cast<int>(mode)];

  if (!f.omega) {
    if (mode != LefschetzMode::Contact && mode != LefschetzMode::All) {
      throw PreconditionError("mode needs an l.c.s. file; this file declares a contact form only");
    }
    ContactStructure c = validate_contact(f.model, *f.eta);
    std::vector<int> ks = degrees(k, c.n());
    j["structure"] = contact_structure_json(c);
    j["betti"] = sizes_json(c.full().betti_numbers());
    Json rows = Json::array();
    for (int d : ks) {
      CohomologyRelation r = contact_lefschetz_relation(c, d);
      rows.push_back({{"k", d}, {"contact", verdict_json(is_graph_of_isomorphism(r), r, "contact Lefschetz relation", names)}});
    }
    j["lefschetz"] = rows;
    if (mode == LefschetzMode::All) {
      LcsStructure product = product_with_circle(c);
      j["product_equivalence"] = equivalence_json(lefschetz_equivalence_report(product));
    }
    j["caveats"] = caveats(f);
    return j;
  }

  LcsStructure s = validate_lcs(f.model, *f.omega, *f.eta);
  std::vector<int> ks = degrees(k, s.n());
  j["structure"] = lcs_structure_json(s);
  j["betti"] = sizes_json(s.full().betti_numbers());
  std::optional<ContactStructure> quotient;
  if (wants(mode, LefschetzMode::Contact)) {
    if (quotient_generator(s) != 0) {
      quotient = quotient_contact(s);
    } else if (mode == LefschetzMode::Contact) {
      throw PreconditionError("the Lee field is not a split generator direction; no contact quotient");
    }
  }
  Json rows = Json::array();
  for (int d : ks) {
    Json row;
    row["k"] = d;
    if (wants(mode, LefschetzMode::DeRham)) {
      CohomologyRelation r = deRham_lefschetz_relation(s, d);
      row["deRham"] = verdict_json(is_graph_of_isomorphism(r), r, "de Rham Lefschetz relation", names);
    }
    if (wants(mode, LefschetzMode::Basic)) {
      CohomologyRelation r = basic_lefschetz_relation(s, d);
      row["basic"] = verdict_json(is_graph_of_isomorphism(r), r, "U-basic Lefschetz relation", names);
    }
    if (quotient) {
      CohomologyRelation r = contact_lefschetz_relation(*quotient, d);
      row["contact"] = verdict_json(is_graph_of_isomorphism(r), r, "contact Lefschetz relation on the quotient",
                                    quotient->model().generator_names());
    }
    rows.push_back(std::move(row));
  }
  j["lefschetz"] = rows;

  if (mode == LefschetzMode::All) {
    j["basic_betti"] = sizes_json(betti_parity_check(s).basic_betti);
    j["equivalence"] = equivalence_json(lefschetz_equivalence_report(s));

    Json psi = Json::array();
    for (int d : ks) {
      if (d < 1) continue;
      try {
        PsiResult p = pairing_psi(s, d);
        psi.push_back({{"k", d},
                       {"anchor", "pairing psi on basic cohomology"},
                       {"matrix", matrix_json(p.matrix)},
                       {"determinant", to_string(p.determinant)},
                       {"symmetric", p.symmetric},
                       {"skew", p.skew},
                       {"parity_ok", p.parity_ok},
                       {"nondegenerate", p.nondegenerate}});
      } catch (const NotLefschetz&) {
        psi.push_back({{"k", d}, {"anchor", "pairing psi on basic cohomology"}, {"available", false}});
      }
    }
    j["psi"] = psi;
    j["parity"] = parity_json(betti_parity_check(s));

    Json uv = Json::array();
    Json tmaps = Json::array();
    for (int d : ks) {
      UvLefschetz u = uv_basic_lefschetz(s, d);
      uv.push_back({{"k", d},
                    {"anchor", "transversal Lefschetz map on UV-basic cohomology"},
                    {"invertible", u.invertible},
                    {"matrix", matrix_json(u.matrix)}});
      Json t;
      t["k"] = d;
      t["anchor"] = "T map inverse to the basic Lefschetz map";
      try {
        Matrix tm = t_map(s, d);
        t["matrix"] = matrix_json(tm);
        try {
          Matrix lef = lefschetz_map_basic(s, d);
          t["inverts_basic_lefschetz"] =
              tm * lef == Matrix::identity(lef.cols()) && lef * tm == Matrix::identity(lef.rows());
        } catch (const NotLefschetz&) {
          t["inverts_basic_lefschetz"] = nullptr;
        }
      } catch (const PreconditionError&) {
        t["matrix"] = nullptr;
        t["inverts_basic_lefschetz"] = nullptr;
      }
      tmaps.push_back(std::move(t));
    }
    j["uv_lefschetz"] = uv;
    j["t_map"] = tmaps;
    j["gysin"] = gysin_json(gysin_sequence_check(s));
    j["vaisman"] = vaisman_json(vaisman_candidate_report(s));
  }
  j["caveats"] = caveats(f);
  return j;
}

Json suite_report(const std::vector<CatalogEntry>& entries, unsigned threads) {
  std::vector<std::map<std::string, std::string>> results(entries.size());
  std::vector<std::string> failures(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        results[i] = run_checks(entries[i]);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(entries.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Json j;
  j["command"] = "suite";
  Json list = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    Json ej;
    ej["name"] = e.name;
    ej["group"] = e.group;
    ej["description"] = e.description;
    ej["kind"] = e.is_lcs() ? "lcs" : "contact";
    ej["nilpotent"] = e.nilpotent;
    ej["unimodular"] = e.unimodular;
    if (e.oracle_digest) {
      std::ostringstream os;
      os << "0x" << std::hex << std::setw(16) << std::setfill('0') << *e.oracle_digest;
      ej["oracle_digest"] = os.str();
    } else {
      ej["oracle_digest"] = nullptr;
    }
    Json checks = Json::array();
    bool passed = failures[i].empty() && e.nilpotent == e.model.is_nilpotent() && e.unimodular == e.model.is_unimodular();
    for (const auto& [name, want] : e.expected) {
      auto it = results[i].find(name);
      std::string got = it == results[i].end() ? "<missing>" : it->second;
      bool match = got == want.value;
      passed = passed && match;
      checks.push_back({{"check", name},
                        {"expected", want.value},
                        {"actual", got},
                        {"match", match},
                        {"provenance", to_string(want.provenance)},
                        {"oracle", want.oracle}});
    }
    ej["checks"] = checks;
    ej["error"] = failures[i].empty() ? Json(nullptr) : Json(failures[i]);
    ej["passed"] = passed;
    all = all && passed;
    list.push_back(std::move(ej));
  }
  j["entries"] = list;
  j["passed"] = all;
  j["caveats"] = {kInvariantCaveat, kBasicCaveat,
                  "group (d) entries are oracle-verified nilpotent candidates, not reproductions of externally "
                  "cited manifolds"};
  return j;
}

namespace {

std::string join_json(const Json& arr, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

void render_matrix(std::ostringstream& os, const Json& m, const std::string& indent) {
  if (m.is_null()) return;
  for (const auto& row : m) os << indent << "[ " << join_json(row, "  ") << " ]\n";
}

void render_model(std::ostringstream& os, const Json& m) {
  os << "model " << m["name"].get<std::string>() << "  dim " << m["dim"] << "  generators "
     << join_json(m["generators"], " ") << "\n";
  for (const auto& [gen, expr] : m["differentials"].items()) os << "  d " << gen << " = " << expr.get<std::string>() << "\n";
  if (m.contains("omega")) os << "  omega = " << m["omega"].get<std::string>() << "\n";
  if (m.contains("eta")) os << "  eta = " << m["eta"].get<std::string>() << "\n";
  os << "  nilpotent: " << yes(m["nilpotent"]) << "  unimodular: " << yes(m["unimodular"]) << "\n";
}

void render_structure(std::ostringstream& os, const Json& s) {
  if (s.contains("status") && s["status"] == "invalid") {
    os << "[" << s["kind"].get<std::string>() << "] INVALID " << s["error"].get<std::string>() << ": "
       << s["message"].get<std::string>() << "\n";
    return;
  }
  os << "[" << s["anchor"].get<std::string>() << "] valid, n = " << s["n"] << "\n";
  if (s["kind"] == "lcs") {
    os << "  U = " << s["lee_field"].get<std::string>() << "\n";
    os << "  V = " << s["anti_lee_field"].get<std::string>() << "\n";
    os << "  Omega = " << s["big_omega"].get<std::string>() << "\n";
    os << "  d Omega = omega ^ Omega: " << yes(s["d_big_omega_equals_omega_wedge_big_omega"]) << "\n";
    os << "  eta = -i_U Omega: " << yes(s["eta_equals_minus_i_U_big_omega"]) << "\n";
  } else {
    os << "  xi = " << s["reeb_field"].get<std::string>() << "\n";
  }
}

void render_verdict(std::ostringstream& os, const std::string& label, const Json& v) {
  os << "  " << label << " [" << v["anchor"].get<std::string>() << "] H^" << v["source_degree"] << " -> H^"
     << v["target_degree"] << ": " << (v["isomorphism"].get<bool>() ? "ISOMORPHISM" : "FAILS");
  if (!v["first_failure"].is_null()) os << " (" << v["first_failure"].get<std::string>() << ")";
  os << "\n    total " << yes(v["total"]) << ", functional " << yes(v["functional"]) << ", injective "
     << yes(v["injective"]) << ", surjective " << yes(v["surjective"]) << "\n";
  if (!v["admissible_surjects"].get<bool>()) {
    os << "    admissible forms miss some classes (model limitation, reported not skipped)\n";
  }
  os << "    source basis: " << join_json(v["source_basis"]) << "\n";
  os << "    target basis: " << join_json(v["target_basis"]) << "\n";
  if (!v["matrix"].is_null()) {
    os << "    matrix:\n";
    render_matrix(os, v["matrix"], "      ");
  }
}

void render_equivalence(std::ostringstream& os, const Json& e) {
  os << "[" << e["anchor"].get<std::string>() << "] de Rham " << yes(e["derham_all"]) << ", basic "
     << yes(e["basic_all"]) << ", contact "
     << (e["contact_all"].is_null() ? std::string("n/a") : yes(e["contact_all"])) << ": "
     << e["note"].get<std::string>() << "\n";
}

void render_caveats(std::ostringstream& os, const Json& c) {
  os << "caveats:\n";
  for (const auto& line : c) os << "  - " << line.get<std::string>() << "\n";
}

}  // namespace

std::string render_text(const Json& r) {
  std::ostringstream os;
  const std::string command = r["command"];
  if (r.contains("model")) render_model(os, r["model"]);

  if (command == "validate") {
    render_structure(os, r["validation"]);
  } else if (command == "cohomology") {
    const Json& b = r["betti"];
    os << "[" << b["anchor"].get<std::string>() << "] b = (" << join_json(b["dimensions"]) << ")\n";
    for (std::size_t k = 0; k < b["representatives"].size(); ++k) {
      os << "  H^" << k << ": " << join_json(b["representatives"][k]) << "\n";
    }
    if (r.contains("duality")) {
      os << "[" << r["duality"]["anchor"].get<std::string>() << "] " << yes(r["duality"]["holds"]) << "\n";
    }
    if (r.contains("basic")) {
      const Json& c = r["basic"];
      os << "[" << c["anchor"].get<std::string>() << " w.r.t. " << join_json(c["fields"]) << "] c = ("
         << join_json(c["dimensions"]) << ")\n";
      for (std::size_t k = 0; k < c["representatives"].size(); ++k) {
        os << "  H_B^" << k << ": " << join_json(c["representatives"][k]) << "\n";
      }
      if (c.contains("split")) {
        os << "[" << c["split"]["anchor"].get<std::string>() << "] " << yes(c["split"]["holds"]) << "\n";
        os << "  k  b  c_k+c_{k-1}\n";
        for (const auto& row : c["split"]["rows"]) {
          os << "  " << row["k"] << "  " << row["b"] << "  " << row["c_sum"] << "\n";
        }
      }
    }
  } else if (command == "lefschetz") {
    render_structure(os, r["structure"]);
    os << "betti: (" << join_json(r["betti"]) << ")\n";
    if (r.contains("basic_betti")) os << "basic betti: (" << join_json(r["basic_betti"]) << ")\n";
    for (const auto& row : r["lefschetz"]) {
      os << "k = " << row["k"] << "\n";
      if (row.contains("deRham")) render_verdict(os, "deRham", row["deRham"]);
      if (row.contains("basic")) render_verdict(os, "basic", row["basic"]);
      if (row.contains("contact")) render_verdict(os, "contact", row["contact"]);
    }
    if (r.contains("equivalence")) render_equivalence(os, r["equivalence"]);
    if (r.contains("product_equivalence")) {
      os << "product with a circle: ";
      render_equivalence(os, r["product_equivalence"]);
    }
    if (r.contains("psi")) {
      for (const auto& p : r["psi"]) {
        os << "[" << p["anchor"].get<std::string>() << "] k = " << p["k"] << ": ";
        if (p.contains("available")) {
          os << "not available (no Lefschetz isomorphism)\n";
          continue;
        }
        os << "det " << p["determinant"].get<std::string>() << ", "
           << (p["symmetric"].get<bool>() ? "symmetric" : p["skew"].get<bool>() ? "skew" : "neither")
           << ", parity " << (p["parity_ok"].get<bool>() ? "ok" : "WRONG") << ", nondegenerate "
           << yes(p["nondegenerate"]) << "\n";
        render_matrix(os, p["matrix"], "    ");
      }
    }
    if (r.contains("parity")) {
      const Json& p = r["parity"];
      os << "[" << p["anchor"].get<std::string>() << "] " << (p["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
      for (const auto& row : p["rows"]) {
        os << "  b_" << row["k"] << " - b_" << row["k"].get<int>() - 1 << " = " << row["difference"] << " ("
           << (row["even"].get<bool>() ? "even" : "odd") << ")\n";
      }
      os << "[" << p["split"]["anchor"].get<std::string>() << "] " << yes(p["split"]["holds"]) << "\n";
    }
    if (r.contains("uv_lefschetz")) {
      for (const auto& u : r["uv_lefschetz"]) {
        os << "[" << u["anchor"].get<std::string>() << "] k = " << u["k"] << ": "
           << (u["invertible"].get<bool>() ? "invertible" : "singular") << "\n";
      }
      for (const auto& t : r["t_map"]) {
        os << "[" << t["anchor"].get<std::string>() << "] k = " << t["k"] << ": ";
        if (t["matrix"].is_null()) {
          os << "undefined\n";
        } else if (t["inverts_basic_lefschetz"].is_null()) {
          os << "defined, no basic Lefschetz map to compare\n";
        } else {
          os << (t["inverts_basic_lefschetz"].get<bool>() ? "inverse of basic Lefschetz" : "NOT an inverse") << "\n";
        }
      }
    }
    if (r.contains("gysin")) {
      const Json& g = r["gysin"];
      os << "[" << g["anchor"].get<std::string>() << "] " << (g["passed"].get<bool>() ? "pass" : "FAIL")
         << " (compositions vanish " << yes(g["compositions_vanish"]) << ", top exact " << yes(g["top_exact"])
         << ", bottom exact " << yes(g["bottom_exact"]) << ", splittings " << yes(g["splitting_full"]) << "/"
         << yes(g["splitting_v"]) << ", squares commute " << yes(g["squares_commute"]) << ")\n";
    }
    if (r.contains("vaisman")) {
      const Json& v = r["vaisman"];
      os << "[" << v["anchor"].get<std::string>() << "] "
         << (v["obstruction_found"].get<bool>() ? "obstruction found" : "none found") << "\n";
      for (const auto& c : v["conditions"]) {
        os << "  " << c["condition"].get<std::string>() << ": " << yes(c["holds"]) << "\n";
      }
      for (const auto& o : v["obstructions"]) os << "  obstruction: " << o.get<std::string>() << "\n";
      for (const auto& n : v["notes"]) os << "  note: " << n.get<std::string>() << "\n";
    }
  } else if (command == "suite") {
    for (const auto& e : r["entries"]) {
      os << (e["passed"].get<bool>() ? "PASS " : "FAIL ") << "(" << e["group"].get<std::string>() << ") "
         << e["name"].get<std::string>() << ": " << e["description"].get<std::string>() << "\n";
      if (!e["error"].is_null()) os << "  error: " << e["error"].get<std::string>() << "\n";
      for (const auto& c : e["checks"]) {
        if (c["match"].get<bool>()) continue;
        os << "  --- " << c["check"].get<std::string>() << " [" << c["provenance"].get<std::string>() << ", "
           << c["oracle"].get<std::string>() << "]\n";
        os << "  - expected: " << c["expected"].get<std::string>() << "\n";
        os << "  + actual:   " << c["actual"].get<std::string>() << "\n";
      }
    }
    os << "suite: " << (r["passed"].get<bool>() ? "all expected verdicts reproduced" : "MISMATCH") << "\n";
  }
  if (r.contains("caveats")) render_caveats(os, r["caveats"]);
  return os.str();
}

}  // namespace celef
