#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "celef/cli.hpp"
#include "celef/error.hpp"
#include "celef/report.hpp"

using namespace celef;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "celef_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const std::string kModels = std::string(CELEF_SOURCE_DIR) + "/models/";

}  // namespace

TEST_CASE("validate") {
  Run ok = run({"validate", kModels + "kt4.model"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("U = E4") != std::string::npos);
  CHECK(ok.out.find("V = E3") != std::string::npos);
  CHECK(ok.out.find("Omega = e1^e2 + e3^e4") != std::string::npos);
  CHECK(ok.out.find("invariant-model assumption") != std::string::npos);
  CHECK(ok.out.find("nilpotency flag") != std::string::npos);
  CHECK(ok.out.find("|omega| = 1 is not imposed") != std::string::npos);

  std::string defect = write_temp("defect.model", "name = flat\ndim = 4\nomega = e4\neta = e3\n");
  Run bad = run({"validate", defect});
  CHECK(bad.code == kExitValidation);
  CHECK(bad.out.find("RankDefect") != std::string::npos);

  std::string broken = write_temp("broken.model", "name = a\ndim = 3\nd e3 = e1^e2 $\n");
  Run parse = run({"validate", broken});
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err.find("broken.model:3:14:") != std::string::npos);

  CHECK(run({"validate", kModels + "missing.model"}).code == kExitUsage);
  CHECK(run({"validate", "catalog:h5"}).code == kExitOk);
  CHECK(run({"validate", "catalog:kt4-open-omega"}).code == kExitValidation);
}

TEST_CASE("non-nilpotent models carry a warning") {
  std::string file = write_temp("r3.model", "name = r3\ndim = 3\nd e2 = e1^e2\nd e3 = e1^e3\n");
  Run r = run({"cohomology", file});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("NOT nilpotent") != std::string::npos);
  CHECK(r.out.find("not unimodular") != std::string::npos);
  CHECK(r.out.find("b = (1, 1, 0, 0)") != std::string::npos);
}

TEST_CASE("cohomology") {
  Run r = run({"cohomology", kModels + "kt4.model", "--basic", "U"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("b = (1, 3, 4, 3, 1)") != std::string::npos);
  CHECK(r.out.find("c = (1, 2, 2, 1)") != std::string::npos);
  CHECK(r.out.find("basic splitting b_k = c_k + c_{k-1}] yes") != std::string::npos);
  CHECK(run({"cohomology", kModels + "h5.model", "--basic", "xi"}).code == kExitOk);
  CHECK(run({"cohomology", kModels + "h5.model", "--basic", "U"}).code == kExitUsage);
}

TEST_CASE("lefschetz") {
  Run all = run({"lefschetz", kModels + "kt4.model", "--mode", "all"});
  CHECK(all.code == kExitOk);
  CHECK(all.out.find("verdicts agree") != std::string::npos);
  CHECK(all.out.find("FAILS") == std::string::npos);

  Run bad = run({"lefschetz", "catalog:n5s1"});
  CHECK(bad.code == kExitOk);
  CHECK(bad.out.find("FAILS (not injective)") != std::string::npos);
  CHECK(bad.out.find("obstruction found") != std::string::npos);

  Run deg = run({"lefschetz", kModels + "kt4.model", "--k", "99"});
  CHECK(deg.code == kExitUsage);
  CHECK(deg.err.find("degree") != std::string::npos);
  CHECK(run({"lefschetz", kModels + "kt4.model", "--k", "x"}).code == kExitUsage);
  CHECK(run({"lefschetz", kModels + "kt4.model", "--mode", "sideways"}).code == kExitUsage);
  CHECK(run({"lefschetz", kModels + "h5.model", "--mode", "deRham"}).code == kExitUsage);
  CHECK(run({"lefschetz", kModels + "h5.model", "--mode", "contact", "--k", "2"}).code == kExitOk);
  CHECK(run({"lefschetz", "catalog:abelian4-flat"}).code == kExitValidation);
}

TEST_CASE("suite and determinism") {
  Run a = run({"suite", "--catalog", "--json", "-"});
  Run b = run({"suite", "--catalog", "--json", "-"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["passed"] == true);

  Run l1 = run({"lefschetz", "catalog:h5s1", "--json", "-"});
  Run l2 = run({"lefschetz", "catalog:h5s1", "--json", "-"});
  CHECK(l1.out == l2.out);

  std::string path = (fs::temp_directory_path() / "celef_cli_test" / "suite.json").string();
  Run t = run({"suite", "--json", path});
  CHECK(t.out.find("all expected verdicts reproduced") != std::string::npos);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.out);

  CHECK(run({"suite", "--entry", "nope"}).code == kExitUsage);
  CHECK(run({"suite", "--entry", "kt4", "--entry", "n5"}).code == kExitOk);
}

TEST_CASE("suite mismatch produces a diff block") {
  CatalogEntry e = builtin_entries().front();
  e.expected["betti"].value = "1,2,3";
  Json r = suite_report({e}, 1);
  CHECK(r["passed"] == false);
  std::string text = render_text(r);
  CHECK(text.find("- expected: 1,2,3") != std::string::npos);
  CHECK(text.find("+ actual:   1,3,4,3,1") != std::string::npos);
  CHECK(text.find("MISMATCH") != std::string::npos);
}

TEST_CASE("export") {
  Run r = run({"export", "kt4"});
  CHECK(r.code == kExitOk);
  std::string file = write_temp("kt4_export.model", r.out);
  Run v = run({"validate", file});
  CHECK(v.code == kExitOk);
  Run j = run({"export", "h5s1", "--format", "json"});
  std::string jf = write_temp("h5s1.json", j.out);
  CHECK(run({"lefschetz", jf, "--mode", "basic"}).code == kExitOk);
  Run list = run({"export", "--list"});
  CHECK(list.out.find("n5s1\n") != std::string::npos);
  CHECK(run({"export", "nope"}).code == kExitUsage);
  CHECK(run({"export"}).code == kExitUsage);
}

TEST_CASE("exit-code matrix") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(exit_code_for(ParseError(1, 2, "x")) == kExitUsage);
  CHECK(exit_code_for(DegreeError("x")) == kExitUsage);
  CHECK(exit_code_for(PreconditionError("x")) == kExitUsage);
  CHECK(exit_code_for(ValidationError(ValidationKind::NotVolume, "x")) == kExitValidation);
  CHECK(exit_code_for(ConsistencyError("x")) == kExitInternal);
  CHECK(exit_code_for(ModelMismatch("x")) == kExitInternal);
  CHECK(describe_error(ParseError(4, 7, "bad"), "f.model") == "parse error: f.model:4:7: bad");

  setenv("CELEF_THREADS", "zero", 1);
  CHECK(run({"suite"}).code == kExitUsage);
  setenv("CELEF_THREADS", "1", 1);
  CHECK(run({"suite", "--entry", "kt4"}).code == kExitOk);
  setenv("CELEF_THREADS", "4", 1);
}
