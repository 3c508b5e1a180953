#include "dense_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace {

Mat stack(std::initializer_list<Mat> parts) {
  Mat out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Mat multiply(const Mat& a, const Mat& b, std::size_t b_width) {
  Mat out(a.size(), Vec(b_width));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t l = 0; l < a[i].size(); ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < b_width; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  }
  return out;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::size_t projected_rank(const Mat& rows, std::size_t from, std::size_t width) {
  Mat part;
  for (const auto& r : rows) part.emplace_back(r.begin() + static_cast<long>(from), r.begin() + static_cast<long>(from + width));
  return rank_of(part, width);
}

}  // namespace

Mat rref_rows(Mat rows, std::size_t width) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Q inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Q f = rows[i][c];
      for (std::size_t j = 0; j < width; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank_of(const Mat& rows, std::size_t width) { return rref_rows(rows, width).size(); }

Mat kernel(const Mat& rows, std::size_t width) {
  Mat r = rref_rows(rows, width);
  std::vector<long> pivot_of(width, -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t c = 0; c < width; ++c) {
      if (r[i][c] != 0) {
        pivot_of[c] = static_cast<long>(i);
        break;
      }
    }
  }
  Mat out;
  for (std::size_t f = 0; f < width; ++f) {
    if (pivot_of[f] >= 0) continue;
    Vec v(width);
    v[f] = 1;
    for (std::size_t c = 0; c < width; ++c) {
      if (pivot_of[c] >= 0) v[c] = -r[static_cast<std::size_t>(pivot_of[c])][f];
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string Verdict::code() const {
  std::string s;
  s += total ? 'T' : '-';
  s += functional ? 'F' : '-';
  s += injective ? 'I' : '-';
  s += surjective ? 'S' : '-';
  return s;
}

Dense::Dense(const celef::StructureModel& m, std::optional<Vec> omega, Vec eta)
    : n_(m.n_gen()), contact_(!omega), eta_(std::move(eta)) {
  basis_.resize(static_cast<std::size_t>(n_) + 1);
  position_.resize(static_cast<std::size_t>(n_) + 1);
  for (int k = 0; k <= n_; ++k) {
    std::vector<int> cur;
    subsets(n_, k, 0, cur, basis_[static_cast<std::size_t>(k)]);
    for (std::size_t i = 0; i < basis_[static_cast<std::size_t>(k)].size(); ++i) {
      position_[static_cast<std::size_t>(k)][basis_[static_cast<std::size_t>(k)][i]] = i;
    }
  }
  for (int i = 1; i <= n_; ++i) d_gen_.push_back(coords_of(m.differential(i)));
  half_ = contact_ ? (n_ - 1) / 2 : (n_ - 2) / 2;

  d_eta_ = Vec(dim(2));
  for (int i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < d_gen_[static_cast<std::size_t>(i)].size(); ++j) {
      d_eta_[j] += eta_[static_cast<std::size_t>(i)] * d_gen_[static_cast<std::size_t>(i)][j];
    }
  }
  if (contact_) {
    anti_lee_ = solve_field(eta_, {});
  } else {
    omega_ = *omega;
    lee_ = solve_field(omega_, eta_);
    anti_lee_ = solve_field(eta_, omega_);
  }
}

std::size_t Dense::dim(int k) const {
  if (k < 0 || k > n_) return 0;
  return basis_[static_cast<std::size_t>(k)].size();
}

Vec Dense::coords_of(const celef::Form& f) const {
  Vec out(dim(f.degree()));
  for (const auto& [mask, c] : f.terms()) {
    Index idx;
    for (int i = 0; i < n_; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    out[position_[static_cast<std::size_t>(f.degree())].at(idx)] = c;
  }
  return out;
}

Vec Dense::wedge(const Vec& a, int ka, const Vec& b, int kb) const {
  Vec out(dim(ka + kb));
  if (ka + kb > n_) return out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const Index& ia = basis_[static_cast<std::size_t>(ka)][i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const Index& ib = basis_[static_cast<std::size_t>(kb)][j];
      Index all = ia;
      all.insert(all.end(), ib.begin(), ib.end());
      int inversions = 0;
      bool repeated = false;
      for (std::size_t p = 0; p < all.size(); ++p) {
        for (std::size_t q = p + 1; q < all.size(); ++q) {
          if (all[p] == all[q]) repeated = true;
          if (all[p] > all[q]) ++inversions;
        }
      }
      if (repeated) continue;
      std::sort(all.begin(), all.end());
      Q term = a[i] * b[j];
      if (inversions % 2) term = -term;
      out[position_[static_cast<std::size_t>(ka + kb)].at(all)] += term;
    }
  }
  return out;
}

Vec Dense::power(const Vec& a, int ka, int p) const {
  Vec out{Q(1)};
  int deg = 0;
  for (int i = 0; i < p; ++i) {
    out = wedge(out, deg, a, ka);
    deg += ka;
  }
  return out;
}

Mat Dense::d_matrix(int k) const {
  Mat out(dim(k + 1), Vec(dim(k)));
  for (std::size_t col = 0; col < dim(k); ++col) {
    const Index& idx = basis_[static_cast<std::size_t>(k)][col];
    for (std::size_t p = 0; p < idx.size(); ++p) {
      Vec prefix(dim(static_cast<int>(p)));
      prefix[position_[p].at(Index(idx.begin(), idx.begin() + static_cast<long>(p)))] = 1;
      Index rest(idx.begin() + static_cast<long>(p) + 1, idx.end());
      Vec suffix(dim(static_cast<int>(rest.size())));
      suffix[position_[rest.size()].at(rest)] = 1;
      Vec term = wedge(wedge(prefix, static_cast<int>(p), d_gen_[static_cast<std::size_t>(idx[p])], 2),
                       static_cast<int>(p) + 2, suffix, static_cast<int>(rest.size()));
      for (std::size_t r = 0; r < term.size(); ++r) {
        if (p % 2) out[r][col] -= term[r];
        else out[r][col] += term[r];
      }
    }
  }
  return out;
}

Mat Dense::contraction(const Vec& x, int k) const {
  Mat out(dim(k - 1), Vec(dim(k)));
  for (std::size_t col = 0; col < dim(k); ++col) {
    const Index& idx = basis_[static_cast<std::size_t>(k)][col];
    for (std::size_t p = 0; p < idx.size(); ++p) {
      Index rest = idx;
      rest.erase(rest.begin() + static_cast<long>(p));
      Q c = x[static_cast<std::size_t>(idx[p])];
      if (p % 2) c = -c;
      out[position_[static_cast<std::size_t>(k - 1)].at(rest)][col] += c;
    }
  }
  return out;
}

Mat Dense::lie(const Vec& x, int k) const {
  Mat out = multiply(contraction(x, k + 1), d_matrix(k), dim(k));
  if (k > 0) {
    Mat second = multiply(d_matrix(k - 1), contraction(x, k), dim(k));
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < dim(k); ++j) out[i][j] += second[i][j];
    }
  }
  return out;
}

Mat Dense::wedge_matrix(const Vec& a, int ka, int k) const {
  Mat out(dim(k + ka), Vec(dim(k)));
  for (std::size_t col = 0; col < dim(k); ++col) {
    Vec e(dim(k));
    e[col] = 1;
    Vec img = wedge(a, ka, e, k);
    for (std::size_t r = 0; r < img.size(); ++r) out[r][col] = img[r];
  }
  return out;
}

Vec Dense::solve_field(const Vec& a, const Vec& b) const {
  // unknown X (n entries) plus right-hand side column
  Mat rows;
  auto add = [&](const Vec& coeffs, const Q& rhs) {
    Vec r = coeffs;
    r.push_back(rhs);
    rows.push_back(std::move(r));
  };
  add(a, 1);
  if (!b.empty()) add(b, 0);
  // (i_X d eta) = sum_i X_i i_{E_i} d eta
  Mat columns;
  for (int i = 0; i < n_; ++i) {
    Vec e(static_cast<std::size_t>(n_));
    e[static_cast<std::size_t>(i)] = 1;
    columns.push_back(mat_vec(contraction(e, 2), d_eta_));
  }
  for (std::size_t j = 0; j < dim(1); ++j) {
    Vec r(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) r[static_cast<std::size_t>(i)] = columns[static_cast<std::size_t>(i)][j];
    add(r, 0);
  }
  Mat red = rref_rows(rows, static_cast<std::size_t>(n_) + 1);
  if (red.size() != static_cast<std::size_t>(n_)) throw std::runtime_error("oracle: characteristic field not unique");
  Vec x(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < red.size(); ++i) {
    for (int c = 0; c < n_; ++c) {
      if (red[i][static_cast<std::size_t>(c)] != 0) {
        x[static_cast<std::size_t>(c)] = red[i][static_cast<std::size_t>(n_)];
        break;
      }
    }
  }
  return x;
}

Mat Dense::basic_basis(int k) const { return kernel(stack({contraction(lee_, k), lie(lee_, k)}), dim(k)); }

Mat Dense::cocycles(Mode mode, int k) const {
  if (mode == Mode::Basic) return kernel(stack({contraction(lee_, k), lie(lee_, k), d_matrix(k)}), dim(k));
  return kernel(d_matrix(k), dim(k));
}

Mat Dense::coboundaries(Mode mode, int k) const {
  if (k <= 0) return {};
  Mat d = d_matrix(k - 1);
  Mat sources;
  if (mode == Mode::Basic) {
    sources = basic_basis(k - 1);
  } else {
    for (std::size_t j = 0; j < dim(k - 1); ++j) {
      Vec e(dim(k - 1));
      e[j] = 1;
      sources.push_back(std::move(e));
    }
  }
  Mat out;
  for (const auto& s : sources) out.push_back(mat_vec(d, s));
  return rref_rows(out, dim(k));
}

Mat Dense::admissible(Mode mode, int k) const {
  const int h = half_;
  switch (mode) {
    case Mode::DeRham:
      return kernel(stack({d_matrix(k), lie(lee_, k), contraction(anti_lee_, k),
                           wedge_matrix(power(d_eta_, 2, h - k + 2), 2 * (h - k + 2), k),
                           wedge_matrix(wedge(power(d_eta_, 2, h - k + 1), 2 * (h - k + 1), omega_, 1),
                                        2 * (h - k + 1) + 1, k)}),
                    dim(k));
    case Mode::Basic:
      return kernel(stack({contraction(lee_, k), lie(lee_, k), d_matrix(k), contraction(anti_lee_, k),
                           wedge_matrix(power(d_eta_, 2, h - k + 1), 2 * (h - k + 1), k)}),
                    dim(k));
    case Mode::Contact:
      return kernel(stack({d_matrix(k), contraction(anti_lee_, k),
                           wedge_matrix(power(d_eta_, 2, h - k + 1), 2 * (h - k + 1), k)}),
                    dim(k));
  }
  return {};
}

Vec Dense::image(Mode mode, int k, const Vec& g) const {
  const int h = half_;
  Vec inner;
  int inner_deg = k;
  if (mode == Mode::DeRham) {
    Vec a = wedge(d_eta_, 2, mat_vec(contraction(lee_, k), g), k - 1);
    Vec b = wedge(omega_, 1, g, k);
    inner = a;
    if (k == 0) inner = Vec(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) inner[i] -= b[i];
    inner_deg = k + 1;
  } else {
    inner = g;
  }
  Vec lifted = wedge(power(d_eta_, 2, h - k), 2 * (h - k), inner, inner_deg);
  return wedge(eta_, 1, lifted, 2 * (h - k) + inner_deg);
}

Mat Dense::closure(Mode mode, int k, const std::vector<std::pair<Vec, Vec>>& pairs) const {
  const int a = k;
  const int b = (mode == Mode::DeRham ? 2 * half_ + 2 : 2 * half_ + 1) - k;
  const std::size_t wa = dim(a), wb = dim(b);
  Mat rows;
  for (const auto& [x, y] : pairs) {
    Vec r = x;
    r.insert(r.end(), y.begin(), y.end());
    rows.push_back(std::move(r));
  }
  for (const auto& x : coboundaries(mode, a)) {
    Vec r = x;
    r.resize(wa + wb);
    rows.push_back(std::move(r));
  }
  for (const auto& y : coboundaries(mode, b)) {
    Vec r(wa);
    r.insert(r.end(), y.begin(), y.end());
    rows.push_back(std::move(r));
  }
  return rref_rows(rows, wa + wb);
}

Relation Dense::relation(Mode mode, int k) const {
  Relation r;
  r.source_degree = k;
  r.target_degree = (mode == Mode::DeRham ? 2 * half_ + 2 : 2 * half_ + 1) - k;
  std::vector<std::pair<Vec, Vec>> pairs;
  for (const auto& g : admissible(mode, k)) {
    Vec t = image(mode, k, g);
    if (rank_of(Mat{mat_vec(d_matrix(r.target_degree), t)}, dim(r.target_degree + 1)) != 0) {
      throw std::runtime_error("oracle: Lefschetz image not closed");
    }
    pairs.emplace_back(g, t);
  }
  r.span = closure(mode, k, pairs);
  const std::size_t wa = dim(r.source_degree), wb = dim(r.target_degree);
  const std::size_t w = r.span.size();
  const std::size_t p1 = projected_rank(r.span, 0, wa);
  const std::size_t p2 = projected_rank(r.span, wa, wb);
  const std::size_t za = cocycles(mode, r.source_degree).size();
  const std::size_t zb = cocycles(mode, r.target_degree).size();
  const std::size_t ba = coboundaries(mode, r.source_degree).size();
  const std::size_t bb = coboundaries(mode, r.target_degree).size();
  r.verdict.total = p1 == za;
  r.verdict.functional = w - p1 == bb;
  r.verdict.injective = w - p2 == ba;
  r.verdict.surjective = p2 == zb;
  return r;
}

std::vector<std::size_t> Dense::betti() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= n_; ++k) {
    std::size_t z = dim(k) - rank_of(d_matrix(k), dim(k));
    std::size_t b = k > 0 ? rank_of(d_matrix(k - 1), dim(k - 1)) : 0;
    out.push_back(z - b);
  }
  return out;
}

std::vector<std::size_t> Dense::basic_betti() const {
  std::vector<std::size_t> out;
  for (int k = 0; k < n_; ++k) {
    out.push_back(cocycles(Mode::Basic, k).size() - coboundaries(Mode::Basic, k).size());
  }
  return out;
}

std::string Dense::summary(const std::string& name) const {
  std::ostringstream os;
  os << name << " betti";
  for (auto b : betti()) os << ' ' << b;
  if (!contact_) {
    os << " basic";
    for (auto b : basic_betti()) os << ' ' << b;
  }
  std::vector<Mode> modes = contact_ ? std::vector<Mode>{Mode::Contact} : std::vector<Mode>{Mode::DeRham, Mode::Basic};
  for (Mode m : modes) {
    os << (m == Mode::DeRham ? " derham" : m == Mode::Basic ? " basic-lef" : " contact");
    for (int k = 0; k <= half_; ++k) os << ' ' << relation(m, k).verdict.code();
  }
  return os.str();
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace oracle
