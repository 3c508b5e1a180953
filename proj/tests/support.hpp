#pragma once

#include <random>
#include <utility>
#include <vector>

#include "celef/exterior.hpp"
#include "celef/model.hpp"

namespace support {

using celef::Form;
using celef::Scalar;
using celef::StructureModel;

using Pairs = std::vector<std::pair<int, int>>;

inline Form two_form(int n, const Pairs& pairs) {
  Form f = Form::zero(n, 2);
  for (auto [a, b] : pairs) f += Form::monomial(n, {a, b});
  return f;
}

inline StructureModel salamon(const char* name, const std::vector<Pairs>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<Form> forms;
  for (const auto& p : d) forms.push_back(two_form(n, p));
  return StructureModel(name, std::move(forms));
}

inline StructureModel kt4() { return salamon("kt4", {{}, {}, {{1, 2}}, {}}); }
inline StructureModel h5s1() { return salamon("h5s1", {{}, {}, {}, {}, {{1, 2}, {3, 4}}, {}}); }
inline StructureModel n5s1() { return salamon("n5s1", {{}, {}, {}, {{1, 2}}, {{1, 3}, {2, 4}}, {}}); }
inline StructureModel h3() { return salamon("h3", {{}, {}, {{1, 2}}}); }

inline Form e(int n, int i) { return Form::generator(n, i); }

/// Small random rational in [-3, 3] with denominators up to 3.
inline Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Scalar s(num(rng), den(rng));
  s.canonicalize();
  return s;
}

inline Form random_form(std::mt19937& rng, int n, int k, int max_terms = 4) {
  const auto& monos = celef::monomials(n, k);
  Form f = Form::zero(n, k);
  if (monos.empty()) return f;
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> count(0, max_terms);
  for (int t = count(rng); t > 0; --t) f += Form::from_mask(n, monos[pick(rng)], random_scalar(rng));
  return f;
}

inline celef::Vector random_vector(std::mt19937& rng, int n) {
  celef::Coords c;
  for (int i = 0; i < n; ++i) c.push_back(random_scalar(rng));
  return celef::Vector(c);
}

}  // namespace support
