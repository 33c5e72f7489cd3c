#include "smith/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace smith {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

std::uint32_t Field::reduce(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<std::uint32_t>(m);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  return from_rows(field, rows.size(), ncols, rows);
}

Matrix Matrix::from_rows(Field field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(field, v);
}

Matrix Matrix::from_rows(Field field, std::size_t nrows, std::size_t ncols,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.size() != nrows)
    throw ShapeError("expected " + std::to_string(nrows) + " rows, got " +
                     std::to_string(rows.size()));
  Matrix m(field, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (rows[r].size() != ncols)
      throw ShapeError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(ncols));
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("set_block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("add_block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      (*this)(r0 + r, c0 + c) = field_.add((*this)(r0 + r, c0 + c), m(r, c));
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::scaled(std::uint32_t k) const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_.mul(v, k);
  return out;
}

static void check_same(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field())) throw ShapeError(std::string(op) + ": field mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(*this, o, "add");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same(*this, o, "sub");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_.neg(v);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(field_ == o.field_)) throw ShapeError("mat_mul: field mismatch");
  if (cols_ != o.rows_)
    throw ShapeError("mat_mul: dimension mismatch " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                     std::to_string(o.cols_));
  Matrix out(field_, rows_, o.cols_);
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      const std::uint32_t* brow = &o.data_[k * o.cols_];
      for (std::size_t c = 0; c < o.cols_; ++c) acc[c] = (acc[c] + a * brow[c]) % p;
    }
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) = static_cast<std::uint32_t>(acc[c]);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix hstack(const std::vector<Matrix>& blocks, Field field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeError("hstack: row mismatch");
    cols += b.cols();
  }
  Matrix out(field, rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c0, b);
    c0 += b.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& blocks, Field field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix out(field, rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    out.set_block(r0, 0, b);
    r0 += b.rows();
  }
  return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks, Field field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(field, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw ShapeError("kron: field mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::uint32_t v = a(i, j);
      if (v == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(v, b(k, l));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

RowEchelon rref(const Matrix& a) {
  const Field& f = a.field();
  const std::uint64_t p = f.p();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    std::uint32_t inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      std::uint64_t factor = m(r, col);
      if (factor == 0) continue;
      std::uint64_t nf = p - factor;
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = static_cast<std::uint32_t>((m(r, c) + nf * m(row, c)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix kernel_basis(const Matrix& a) {
  const Field& f = a.field();
  auto [m, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(f, a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = f.neg(m(r, fc));
  }
  return basis;
}

Matrix column_basis(const Matrix& a) {
  auto pivots = rref(a).pivots;
  Matrix out(a.field(), a.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, k) = a(r, pivots[k]);
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw ShapeError("solve: a has " + std::to_string(a.rows()) + " rows, b has " +
                     std::to_string(b.rows()));
  if (!(a.field() == b.field())) throw ShapeError("solve: field mismatch");
  const Field& f = a.field();
  Matrix aug = hstack({a, b}, f, a.rows());
  auto [m, pivots] = rref(aug);
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[r], c) = m(r, a.cols() + c);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.field(), a.rows()));
}

bool is_injective(const Matrix& a) { return rank(a) == a.cols(); }
bool is_surjective(const Matrix& a) { return rank(a) == a.rows(); }
bool is_invertible(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

bool is_signed_permutation(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  const std::uint32_t minus_one = a.field().neg(1);
  std::vector<int> col_count(a.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    int row_count = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      std::uint32_t v = a(r, c);
      if (v == 0) continue;
      if (v != 1 && v != minus_one) return false;
      ++row_count;
      ++col_count[c];
    }
    if (row_count != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int k) { return k == 1; });
}

bool is_permutation(const Matrix& a) {
  if (!is_signed_permutation(a)) return false;
  return std::all_of(a.data().begin(), a.data().end(),
                     [](std::uint32_t v) { return v == 0 || v == 1; });
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(Field field, std::size_t length)
    : field_(field), length_(length), row_of_pivot_(length, -1) {}

std::size_t EchelonBasis::reduce(std::vector<std::uint32_t>& v) const {
  const std::uint64_t p = field_.p();
  for (std::size_t c = 0; c < length_; ++c) {
    if (v[c] == 0) continue;
    std::ptrdiff_t r = row_of_pivot_[c];
    if (r < 0) return c;
    const auto& row = rows_[static_cast<std::size_t>(r)];
    std::uint64_t nf = p - v[c];
    for (std::size_t k = c; k < length_; ++k)
      if (row[k] != 0) v[k] = static_cast<std::uint32_t>((v[k] + nf * row[k]) % p);
  }
  return length_;
}

bool EchelonBasis::insert(std::vector<std::uint32_t> v) {
  if (v.size() != length_) throw ShapeError("EchelonBasis: vector length mismatch");
  std::size_t lead = reduce(v);
  if (lead == length_) return false;
  std::uint32_t inv = field_.inv(v[lead]);
  for (std::size_t k = lead; k < length_; ++k) v[k] = field_.mul(v[k], inv);
  row_of_pivot_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  pivot_of_row_.push_back(lead);
  rows_.push_back(std::move(v));
  return true;
}

bool EchelonBasis::contains(std::vector<std::uint32_t> v) const {
  if (v.size() != length_) throw ShapeError("EchelonBasis: vector length mismatch");
  return reduce(v) == length_;
}

std::vector<std::size_t> complement_indices(const Matrix& image) {
  EchelonBasis basis(image.field(), image.rows());
  for (std::size_t c = 0; c < image.cols(); ++c) {
    std::vector<std::uint32_t> v(image.rows());
    for (std::size_t r = 0; r < image.rows(); ++r) v[r] = image(r, c);
    basis.insert(std::move(v));
  }
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < image.rows() && basis.rank() < image.rows(); ++r) {
    std::vector<std::uint32_t> e(image.rows(), 0);
    e[r] = 1;
    if (basis.insert(std::move(e))) chosen.push_back(r);
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// LinearSystem

LinearSystem::LinearSystem(Field field) : field_(field) {}

std::size_t LinearSystem::add_unknown(std::size_t rows, std::size_t cols) {
  if (!rows_.empty() || !consistent_)
    throw Error("LinearSystem: declare all unknowns before adding equations");
  shapes_.emplace_back(rows, cols);
  offsets_.push_back(total_);
  total_ += rows * cols;
  row_of_pivot_.assign(total_, -1);
  return shapes_.size() - 1;
}

void LinearSystem::add_row(std::vector<std::uint32_t> row) {
  const std::uint64_t p = field_.p();
  const std::size_t n = total_;
  for (std::size_t c = 0; c < n; ++c) {
    if (row[c] == 0) continue;
    std::ptrdiff_t r = row_of_pivot_[c];
    if (r < 0) {
      std::uint32_t inv = field_.inv(row[c]);
      for (std::size_t k = c; k <= n; ++k) row[k] = field_.mul(row[k], inv);
      row_of_pivot_[c] = static_cast<std::ptrdiff_t>(rows_.size());
      pivot_of_row_.push_back(c);
      rows_.push_back(std::move(row));
      return;
    }
    const auto& prow = rows_[static_cast<std::size_t>(r)];
    std::uint64_t nf = p - row[c];
    for (std::size_t k = c; k <= n; ++k)
      if (prow[k] != 0) row[k] = static_cast<std::uint32_t>((row[k] + nf * prow[k]) % p);
  }
  if (row[n] != 0) consistent_ = false;
}

void LinearSystem::add_equation(const std::vector<Term>& terms, const Matrix& rhs) {
  const std::size_t er = rhs.rows(), ec = rhs.cols();
  const std::uint64_t p = field_.p();
  // One coefficient row per entry of the equation; accumulate as dense rows.
  std::vector<std::vector<std::uint64_t>> coeff(er * ec);
  auto row_at = [&](std::size_t idx) -> std::vector<std::uint64_t>& {
    if (coeff[idx].empty()) coeff[idx].assign(total_, 0);
    return coeff[idx];
  };
  for (const auto& t : terms) {
    if (t.unknown >= shapes_.size()) throw ShapeError("LinearSystem: unknown index out of range");
    auto [xr, xc] = shapes_[t.unknown];
    const std::size_t off = offsets_[t.unknown];
    const std::size_t m = t.shape == Shape::Plain ? 1 : t.kron_dim;
    const std::size_t tr = xr * m, tc = xc * m;  // shape of T(X)
    Matrix left = t.left.rows() == 0 && t.left.cols() == 0 && er == tr
                      ? Matrix::identity(field_, tr)
                      : t.left;
    Matrix right = t.right.rows() == 0 && t.right.cols() == 0 && ec == tc
                       ? Matrix::identity(field_, tc)
                       : t.right;
    if (left.rows() != er || left.cols() != tr || right.rows() != tc || right.cols() != ec)
      throw ShapeError("LinearSystem: term shape inconsistent with equation");
    // result[r][c] += sum_{u,v} left[r][u] * T(X)[u][v] * right[v][c]
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> lcol(tr), rrow(tc);
    for (std::size_t r = 0; r < er; ++r)
      for (std::size_t u = 0; u < tr; ++u)
        if (left(r, u) != 0) lcol[u].emplace_back(r, left(r, u));
    for (std::size_t v = 0; v < tc; ++v)
      for (std::size_t c = 0; c < ec; ++c)
        if (right(v, c) != 0) rrow[v].emplace_back(c, right(v, c));
    auto accumulate = [&](std::size_t u, std::size_t v, std::size_t var) {
      for (auto [r, l] : lcol[u])
        for (auto [c, rv] : rrow[v]) {
          auto& row = row_at(r * ec + c);
          row[var] = (row[var] + l * rv) % p;
        }
    };
    for (std::size_t u = 0; u < tr; ++u) {
      if (lcol[u].empty()) continue;
      if (t.shape == Shape::Plain) {
        for (std::size_t v = 0; v < tc; ++v)
          if (!rrow[v].empty()) accumulate(u, v, off + u * xc + v);
      } else if (t.shape == Shape::KronRight) {  // kron(X, I_m): entry (a*m+s, b*m+s) = X[a][b]
        const std::size_t a = u / m, s = u % m;
        for (std::size_t b = 0; b < xc; ++b) {
          const std::size_t v = b * m + s;
          if (!rrow[v].empty()) accumulate(u, v, off + a * xc + b);
        }
      } else {  // kron(I_m, X): entry (s*xr+a, s*xc+b) = X[a][b]
        const std::size_t s = u / xr, a = u % xr;
        for (std::size_t b = 0; b < xc; ++b) {
          const std::size_t v = s * xc + b;
          if (!rrow[v].empty()) accumulate(u, v, off + a * xc + b);
        }
      }
    }
  }
  for (std::size_t idx = 0; idx < er * ec; ++idx) {
    std::uint32_t b = rhs.data()[idx];
    if (coeff[idx].empty()) {
      if (b != 0) consistent_ = false;
      continue;
    }
    std::vector<std::uint32_t> row(total_ + 1);
    for (std::size_t k = 0; k < total_; ++k) row[k] = static_cast<std::uint32_t>(coeff[idx][k]);
    row[total_] = b;
    add_row(std::move(row));
  }
}

void LinearSystem::fix(std::size_t unknown, const Matrix& value) {
  auto [xr, xc] = shapes_.at(unknown);
  if (value.rows() != xr || value.cols() != xc) throw ShapeError("LinearSystem::fix: shape");
  add_equation({Term{Matrix(), unknown, Matrix(), Shape::Plain, 1}}, value);
}

std::vector<Matrix> LinearSystem::unflatten(const std::vector<std::uint32_t>& x) const {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < shapes_.size(); ++k) {
    Matrix m(field_, shapes_[k].first, shapes_[k].second);
    std::copy(x.begin() + static_cast<std::ptrdiff_t>(offsets_[k]),
              x.begin() + static_cast<std::ptrdiff_t>(offsets_[k] + m.rows() * m.cols()),
              m.data().begin());
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<std::vector<Matrix>> LinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  const std::uint64_t p = field_.p();
  std::vector<std::uint32_t> x(total_, 0);
  // Rows are echelon with leading entry 1 and zeros left of it; back-substitute by
  // decreasing pivot column.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] > pivot_of_row_[b]; });
  for (std::size_t r : order) {
    const auto& row = rows_[r];
    std::size_t c = pivot_of_row_[r];
    std::uint64_t acc = row[total_];
    for (std::size_t k = c + 1; k < total_; ++k)
      if (row[k] != 0 && x[k] != 0) acc = (acc + (p - row[k]) * x[k]) % p;
    x[c] = static_cast<std::uint32_t>(acc);
  }
  return unflatten(x);
}

std::vector<std::vector<Matrix>> LinearSystem::nullspace() const {
  const std::uint64_t p = field_.p();
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] > pivot_of_row_[b]; });
  std::vector<std::vector<Matrix>> basis;
  for (std::size_t fcol = 0; fcol < total_; ++fcol) {
    if (row_of_pivot_[fcol] >= 0) continue;
    std::vector<std::uint32_t> x(total_, 0);
    x[fcol] = 1;
    for (std::size_t r : order) {
      const auto& row = rows_[r];
      std::size_t c = pivot_of_row_[r];
      std::uint64_t acc = 0;
      for (std::size_t k = c + 1; k < total_; ++k)
        if (row[k] != 0 && x[k] != 0) acc = (acc + (p - row[k]) * x[k]) % p;
      x[c] = static_cast<std::uint32_t>(acc);
    }
    basis.push_back(unflatten(x));
  }
  return basis;
}

std::optional<std::vector<Matrix>> solve_linear_constraints(const LinearSystem& system) {
  return system.solve();
}

}  // namespace smith
