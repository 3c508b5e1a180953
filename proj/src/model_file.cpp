#include "celef/model_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "celef/error.hpp"

namespace celef {

namespace {

const std::set<std::string> kKeywords = {"name", "dim", "generators", "d", "omega", "eta"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t column0) : text_(text), line_(line), col0_(column0) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) fail("expected " + what);
  }
  std::string identifier(const std::string& what) {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected " + what);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  Scalar number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    std::string num(text_.substr(start, pos_ - start));
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t ds = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == ds) fail("expected a denominator");
      den = std::string(text_.substr(ds, pos_ - ds));
    }
    mpz_class q(den);
    if (q == 0) {
      pos_ = start;
      fail("zero denominator");
    }
    Scalar s(mpz_class(num), q);
    s.canonicalize();
    return s;
  }
  std::string rest() {
    skip_space();
    std::string out(text_.substr(pos_));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    pos_ = text_.size();
    return out;
  }
  std::size_t column() const { return col0_ + pos_ + 1; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

Form parse_expression(Cursor& c, const std::vector<std::string>& names, int degree) {
  const int n = static_cast<int>(names.size());
  Form out = Form::zero(n, degree);
  if (c.peek() == '0') {
    // a bare 0 is the zero form; anything else starting with 0 is a coefficient
    Cursor probe = c;
    Scalar z = probe.number();
    if (z == 0 && probe.done()) {
      c = probe;
      return out;
    }
  }
  bool first = true;
  while (true) {
    Scalar sign = 1;
    if (c.accept('-')) {
      sign = -1;
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    Scalar coef = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = c.number();
      c.accept('*');
    }
    std::vector<int> indices;
    do {
      c.skip_space();
      std::size_t col = c.column();
      std::string id = c.identifier("a generator name");
      int idx = 0;
      for (int i = 0; i < n; ++i) {
        if (names[static_cast<std::size_t>(i)] == id) idx = i + 1;
      }
      if (idx == 0) throw ParseError(0, col, "unknown generator '" + id + "'");
      indices.push_back(idx);
    } while (c.accept('^'));
    if (static_cast<int>(indices.size()) != degree) {
      c.fail("term has degree " + std::to_string(indices.size()) + ", expected " + std::to_string(degree));
    }
    Mask mask = 0;
    bool repeated = false;
    for (int i : indices) {
      if (mask & (Mask{1} << (i - 1))) repeated = true;
      mask |= Mask{1} << (i - 1);
    }
    if (!repeated) {
      // sign of the permutation sorting the indices
      int inversions = 0;
      for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) inversions += indices[a] > indices[b];
      }
      Scalar value = sign * coef;
      if (inversions % 2) value = -value;
      out += Form::from_mask(n, mask, value);
    }
    if (c.done()) break;
  }
  return out;
}

// Rejects stray characters and unknown names before the structural parse.
Form parse_expression_checked(Cursor& c, const std::vector<std::string>& names, int degree) {
  Cursor scan = c;
  while (!scan.done()) {
    char p = scan.peek();
    if (ident_start(p)) {
      std::size_t col = scan.column();
      std::string id = scan.identifier("a generator name");
      bool known = false;
      for (const auto& nm : names) known = known || nm == id;
      if (!known) throw ParseError(0, col, "unknown generator '" + id + "'");
    } else if (std::isdigit(static_cast<unsigned char>(p))) {
      scan.number();
    } else if (p == '+' || p == '-' || p == '^' || p == '*') {
      scan.accept(p);
    } else {
      scan.fail(std::string("unexpected character '") + p + "'");
    }
  }
  return parse_expression(c, names, degree);
}

struct Draft {
  std::optional<std::string> name;
  std::optional<int> dim;
  std::optional<std::vector<std::string>> generators;
  std::map<int, Form> differentials;
  std::optional<Form> omega;
  std::optional<Form> eta;
  std::size_t first_d_line = 0;
};

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

}  // namespace

Form parse_form(std::string_view text, const std::vector<std::string>& names, int degree) {
  Cursor c(text, 1, 0);
  if (c.done()) c.fail("expected a form");
  return parse_expression_checked(c, names, degree);
}

ModelFile parse_model_file(std::string_view text) {
  Draft draft;
  std::vector<std::string> names;
  std::set<std::string> seen;
  auto need_names = [&](std::size_t line, std::size_t column) {
    if (!draft.dim) throw ParseError(line, column, "'dim' or 'generators' must be declared before forms");
    if (names.empty()) names = draft.generators ? *draft.generators : default_names(*draft.dim);
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    Cursor c(line, line_no, 0);
    if (!c.done()) {
      c.skip_space();
      std::size_t key_col = c.column();
      std::string key = c.identifier("a key");
      std::string full_key = key;
      int target = 0;
      if (key == "d") {
        need_names(line_no, key_col);
        c.skip_space();
        std::size_t gcol = c.column();
        std::string gen = c.identifier("a generator after 'd'");
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i] == gen) target = static_cast<int>(i) + 1;
        }
        if (target == 0) throw ParseError(line_no, gcol, "unknown generator '" + gen + "'");
        full_key = "d " + gen;
      } else if (!kKeywords.contains(key)) {
        throw ParseError(line_no, key_col, "unknown key '" + key + "'");
      }
      if (seen.contains(full_key)) throw ParseError(line_no, key_col, "duplicate key '" + full_key + "'");
      seen.insert(full_key);
      c.expect('=', "'='");

      try {
        if (key == "name") {
          std::size_t vcol = c.column();
          std::string v = c.rest();
          if (v.empty() || v.find_first_of(" \t") != std::string::npos) {
            throw ParseError(line_no, vcol, "name must be a single non-empty word");
          }
          draft.name = v;
        } else if (key == "dim") {
          if (!names.empty()) c.fail("'dim' must precede forms");
          Scalar v = c.number();
          if (v.get_den() != 1 || v < 1 || v > kMaxGenerators) {
            c.fail("dim must be an integer in [1, " + std::to_string(kMaxGenerators) + "]");
          }
          if (!c.done()) c.fail("unexpected trailing text");
          draft.dim = static_cast<int>(v.get_num().get_si());
          if (draft.generators && static_cast<int>(draft.generators->size()) != *draft.dim) {
            c.fail("dim disagrees with the generator list");
          }
        } else if (key == "generators") {
          if (!names.empty()) c.fail("'generators' must precede forms");
          std::vector<std::string> gens;
          std::set<std::string> unique;
          while (!c.done()) {
            c.skip_space();
            std::size_t gcol = c.column();
            std::string g = c.identifier("a generator name");
            if (kKeywords.contains(g)) throw ParseError(line_no, gcol, "generator name '" + g + "' is reserved");
            if (!unique.insert(g).second) throw ParseError(line_no, gcol, "duplicate generator '" + g + "'");
            gens.push_back(g);
          }
          if (gens.empty()) c.fail("expected generator names");
          if (draft.dim && static_cast<int>(gens.size()) != *draft.dim) c.fail("dim disagrees with the generator list");
          if (static_cast<int>(gens.size()) > kMaxGenerators) c.fail("too many generators");
          draft.generators = gens;
          if (!draft.dim) draft.dim = static_cast<int>(gens.size());
        } else if (key == "d") {
          if (c.done()) c.fail("expected a form");
          draft.differentials[target] = parse_expression_checked(c, names, 2);
          if (!draft.first_d_line) draft.first_d_line = line_no;
        } else {
          need_names(line_no, key_col);
          if (c.done()) c.fail("expected a form");
          Form f = parse_expression_checked(c, names, 1);
          (key == "omega" ? draft.omega : draft.eta) = f;
        }
      } catch (const ParseError& e) {
        if (e.line() == 0) throw ParseError(line_no, e.column(), e.detail());
        throw;
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  if (!draft.name) throw ParseError(1, 1, "missing 'name'");
  if (!draft.dim) throw ParseError(1, 1, "missing 'dim' or 'generators'");
  if (names.empty()) names = draft.generators ? *draft.generators : default_names(*draft.dim);
  if (draft.omega && !draft.eta) throw ParseError(1, 1, "'omega' requires 'eta'");

  std::vector<Form> d;
  for (int i = 1; i <= *draft.dim; ++i) {
    auto it = draft.differentials.find(i);
    d.push_back(it == draft.differentials.end() ? Form::zero(*draft.dim, 2) : it->second);
  }
  try {
    return ModelFile{StructureModel(*draft.name, std::move(d), names), draft.omega, draft.eta};
  } catch (const Error& e) {
    throw ParseError(draft.first_d_line ? draft.first_d_line : 1, 1, std::string("structure equations: ") + e.what());
  }
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_file(buf.str());
}

std::string serialize(const ModelFile& f) {
  const auto& names = f.model.generator_names();
  std::ostringstream os;
  os << "name = " << f.model.name() << "\n";
  os << "dim = " << f.model.n_gen() << "\n";
  os << "generators =";
  for (const auto& n : names) os << ' ' << n;
  os << "\n";
  for (int i = 1; i <= f.model.n_gen(); ++i) {
    const Form& d = f.model.differential(i);
    if (!d.is_zero()) os << "d " << names[static_cast<std::size_t>(i - 1)] << " = " << d.to_string(names) << "\n";
  }
  if (f.omega) os << "omega = " << f.omega->to_string(names) << "\n";
  if (f.eta) os << "eta = " << f.eta->to_string(names) << "\n";
  return os.str();
}

nlohmann::ordered_json to_json(const ModelFile& f) {
  const auto& names = f.model.generator_names();
  nlohmann::ordered_json j;
  j["name"] = f.model.name();
  j["dim"] = f.model.n_gen();
  j["generators"] = names;
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (int i = 1; i <= f.model.n_gen(); ++i) {
    const Form& form = f.model.differential(i);
    if (!form.is_zero()) d[names[static_cast<std::size_t>(i - 1)]] = form.to_string(names);
  }
  j["differentials"] = d;
  if (f.omega) j["omega"] = f.omega->to_string(names);
  if (f.eta) j["eta"] = f.eta->to_string(names);
  return j;
}

ModelFile model_file_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& where, const std::string& what) -> ParseError {
    return ParseError(0, 0, where + ": " + what);
  };
  try {
    if (!j.is_object()) throw fail("$", "expected an object");
    std::string name = j.at("name").get<std::string>();
    int dim = j.at("dim").get<int>();
    if (dim < 1 || dim > kMaxGenerators) throw fail("$.dim", "out of range");
    std::vector<std::string> names = j.contains("generators") ? j.at("generators").get<std::vector<std::string>>()
                                                               : default_names(dim);
    if (static_cast<int>(names.size()) != dim) throw fail("$.generators", "length differs from dim");
    std::vector<Form> d(static_cast<std::size_t>(dim), Form::zero(dim, 2));
    if (j.contains("differentials")) {
      for (const auto& [gen, expr] : j.at("differentials").items()) {
        auto it = std::find(names.begin(), names.end(), gen);
        if (it == names.end()) throw fail("$.differentials." + gen, "unknown generator");
        try {
          d[static_cast<std::size_t>(it - names.begin())] = parse_form(expr.get<std::string>(), names, 2);
        } catch (const ParseError& e) {
          throw fail("$.differentials." + gen, e.detail());
        }
      }
    }
    auto form = [&](const char* key) -> std::optional<Form> {
      if (!j.contains(key)) return std::nullopt;
      try {
        return parse_form(j.at(key).get<std::string>(), names, 1);
      } catch (const ParseError& e) {
        throw fail(std::string("$.") + key, e.detail());
      }
    };
    std::optional<Form> omega = form("omega");
    std::optional<Form> eta = form("eta");
    try {
      return ModelFile{StructureModel(name, std::move(d), names), omega, eta};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw fail("$.differentials", e.what());
    }
  } catch (const nlohmann::json::exception& e) {
    throw fail("$", e.what());
  }
}

ModelFile from_catalog(const CatalogEntry& e) { return ModelFile{e.model, e.omega, e.eta}; }

}  // namespace celef
