#include "celef/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "celef/error.hpp"

namespace celef {

namespace {

const Scalar kZero(0);

// target += factor * source
void axpy(SparseRow& target, const Scalar& factor, const SparseRow& source) {
  if (factor == 0 || source.empty()) return;
  SparseRow out;
  out.reserve(target.size() + source.size());
  auto t = target.begin();
  auto s = source.begin();
  while (t != target.end() || s != source.end()) {
    if (s == source.end() || (t != target.end() && t->col < s->col)) {
      out.push_back(std::move(*t));
      ++t;
    } else if (t == target.end() || s->col < t->col) {
      out.push_back({s->col, factor * s->value});
      ++s;
    } else {
      Scalar v = t->value + factor * s->value;
      if (v != 0) out.push_back({t->col, std::move(v)});
      ++t;
      ++s;
    }
  }
  target = std::move(out);
}

const Scalar* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it == row.end() || it->col != col) return nullptr;
  return &it->value;
}

// Strict "better pivot" ordering used by rref and determinant.
bool better_pivot(const Scalar& a, std::size_t a_nnz, const Scalar& b, std::size_t b_nnz) {
  int c = mpz_cmpabs(a.get_num_mpz_t(), b.get_num_mpz_t());
  if (c != 0) return c < 0;
  c = mpz_cmp(a.get_den_mpz_t(), b.get_den_mpz_t());
  if (c != 0) return c < 0;
  return a_nnz < b_nnz;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(1)});
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Coords>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw PreconditionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (columns[j][i] != 0) m.data_[i].push_back({j, columns[j][i]});
    }
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Coords>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != 0) m.data_[i].push_back({j, rows[i][j]});
    }
  }
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  const Scalar* v = find_entry(data_.at(i), j);
  return v ? *v : kZero;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  auto& row = data_.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == j) {
    if (value == 0) {
      row.erase(it);
    } else {
      it->value = value;
    }
  } else if (value != 0) {
    row.insert(it, Entry{j, value});
  }
}

void Matrix::add(std::size_t i, std::size_t j, const Scalar& value) {
  if (value == 0) return;
  set(i, j, at(i, j) + value);
}

void Matrix::set_row(std::size_t i, SparseRow row) {
  std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::erase_if(row, [](const Entry& e) { return e.value == 0; });
  data_.at(i) = std::move(row);
}

Coords Matrix::dense_row(std::size_t i) const {
  Coords out(cols_);
  for (const auto& e : data_.at(i)) out[e.col] = e.value;
  return out;
}

Coords Matrix::column(std::size_t j) const {
  Coords out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (const Scalar* v = find_entry(data_[i], j)) out[i] = *v;
  }
  return out;
}

std::vector<Coords> Matrix::columns() const {
  std::vector<Coords> out(cols_, Coords(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) out[e.col][i] = e.value;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.value});
  }
  return t;
}

Coords Matrix::apply(const Coords& x) const {
  if (x.size() != cols_) throw PreconditionError("matrix-vector size mismatch");
  Coords y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) y[i] += e.value * x[e.col];
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix product size mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    SparseRow acc;
    for (const auto& e : data_[i]) axpy(acc, e.value, rhs.data_[e.col]);
    out.data_[i] = std::move(acc);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix sum size mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) axpy(out.data_[i], Scalar(1), rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const { return scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& factor) const {
  if (factor == 0) return Matrix(rows_, cols_);
  Matrix out = *this;
  for (auto& row : out.data_) {
    for (auto& e : row) e.value *= factor;
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw PreconditionError("hstack row mismatch");
  Matrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out.data_[i] = data_[i];
    for (const auto& e : rhs.data_[i]) out.data_[i].push_back({e.col + cols_, e.value});
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
  if (cols_ != rhs.cols_) throw PreconditionError("vstack column mismatch");
  Matrix out(rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(rows_));
  return out;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw PreconditionError("block out of range");
  Matrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (const auto& e : data_[row0 + i]) {
      if (e.col >= col0 && e.col < col0 + ncols) out.data_[i].push_back({e.col - col0, e.value});
    }
  }
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (const Scalar* v = find_entry(data_[i], cols[j])) out.data_[i].push_back({j, *v});
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& ra = a.data_[i];
    const auto& rb = b.data_[i];
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k) {
      if (ra[k].col != rb[k].col || ra[k].value != rb[k].value) return false;
    }
  }
  return true;
}

Echelon rref(Matrix m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (rows[i].empty() || rows[i].front().col != c) continue;
      if (best == rows.size() ||
          better_pivot(rows[i].front().value, rows[i].size(), rows[best].front().value, rows[best].size())) {
        best = i;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    SparseRow& p = rows[next];
    Scalar inv = 1 / p.front().value;
    for (auto& e : p) e.value *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next) continue;
      const Scalar* v = find_entry(rows[i], c);
      if (v) {
        Scalar f = -*v;
        axpy(rows[i], f, p);
      }
    }
    pivots.push_back(c);
    ++next;
  }

  // Zero rows last: pivot rows already occupy [0, next); the rest are zero.
  Echelon out{Matrix(m.rows(), m.cols()), std::move(pivots)};
  for (std::size_t i = 0; i < rows.size(); ++i) out.reduced.set_row(i, std::move(rows[i]));
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Coords> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Coords v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      Scalar x = e.reduced.at(r, f);
      if (x != 0) v[e.pivots[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.cols(), basis);
}

Matrix column_space(const Matrix& m) { return m.select_columns(rref(m).pivots); }

Matrix row_space(const Matrix& m) {
  Echelon e = rref(m);
  return e.reduced.block(0, 0, e.pivots.size(), m.cols());
}

std::optional<Coords> solve(const Matrix& a, const Coords& b) {
  if (b.size() != a.rows()) throw PreconditionError("solve: right-hand side size mismatch");
  Matrix aug = a.hstack(Matrix::from_columns(a.rows(), {b}));
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Coords x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.at(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Echelon e = rref(a.hstack(Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Scalar determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<SparseRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = a.row(i);
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t i = c; i < n; ++i) {
      if (rows[i].empty() || rows[i].front().col != c) continue;
      if (best == n || better_pivot(rows[i].front().value, rows[i].size(), rows[best].front().value,
                                    rows[best].size())) {
        best = i;
      }
    }
    if (best == n) return Scalar(0);
    if (best != c) {
      std::swap(rows[c], rows[best]);
      det = -det;
    }
    const Scalar pivot = rows[c].front().value;
    det *= pivot;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (!rows[i].empty() && rows[i].front().col == c) {
        Scalar f = -rows[i].front().value / pivot;
        axpy(rows[i], f, rows[c]);
      }
    }
  }
  return det;
}

BasisSolver::BasisSolver(const Matrix& basis) : dim_(basis.cols()), ambient_(basis.rows()) {
  // rref([B | I]) = [E | T] with T B = E. The first dim_ rows of E are the
  // identity when B has full column rank; the remaining rows of T annihilate
  // the column space of B.
  Echelon e = rref(basis.hstack(Matrix::identity(ambient_)));
  std::size_t basis_pivots = 0;
  while (basis_pivots < e.pivots.size() && e.pivots[basis_pivots] < dim_) ++basis_pivots;
  if (basis_pivots != dim_) throw ConsistencyError("BasisSolver: basis columns are linearly dependent");
  solve_ = e.reduced.block(0, dim_, dim_, ambient_);
  residual_ = e.reduced.block(dim_, dim_, ambient_ - dim_, ambient_);
}

std::optional<Coords> BasisSolver::coordinates(const Coords& v) const {
  if (v.size() != ambient_) throw PreconditionError("BasisSolver: ambient size mismatch");
  if (!is_zero(residual_.apply(v))) return std::nullopt;
  return solve_.apply(v);
}

bool BasisSolver::contains(const Coords& v) const {
  if (v.size() != ambient_) throw PreconditionError("BasisSolver: ambient size mismatch");
  return is_zero(residual_.apply(v));
}

}  // namespace celef
