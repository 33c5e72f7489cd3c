#include "smith/complex.hpp"

#include <algorithm>
#include <sstream>

namespace smith {

namespace {

void require_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw ShapeError(std::string(what) + ": field mismatch");
}

Matrix zeros(const Field& f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

}  // namespace

// ---------------------------------------------------------------------------
// ChainComplex

ChainComplex::ChainComplex() : ChainComplex(Field(2), 0, 0, {0}, {Matrix(Field(2), 0, 0)}) {}

ChainComplex::ChainComplex(Field field, int lo, int hi, std::vector<std::size_t> dims,
                           std::vector<Matrix> diffs) {
  if (lo > hi) throw ShapeError("complex: empty window");
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  if (dims.size() != len || diffs.size() != len) throw ShapeError("complex: window/data length mismatch");
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t below = k == 0 ? 0 : dims[k - 1];
    const Matrix& d = diffs[k];
    if (d.rows() != below || d.cols() != dims[k]) {
      std::ostringstream os;
      os << "complex: d_" << (lo + static_cast<int>(k)) << " has shape " << d.rows() << "x" << d.cols()
         << ", expected " << below << "x" << dims[k];
      throw ShapeError(os.str());
    }
    if (!(d.field() == field)) throw ShapeError("complex: differential over wrong field");
  }
  auto data = std::make_shared<Data>();
  data->field = field;
  data->lo = lo;
  data->hi = hi;
  data->dims = std::move(dims);
  data->diffs = std::move(diffs);
  data_ = std::move(data);
}

ChainComplex ChainComplex::from_maps(Field field, int lo, int hi, const std::map<int, std::size_t>& dims,
                                     const std::map<int, Matrix>& diffs) {
  if (lo > hi) throw ShapeError("complex: empty window");
  std::vector<std::size_t> ds;
  for (int n = lo; n <= hi; ++n) {
    auto it = dims.find(n);
    ds.push_back(it == dims.end() ? 0 : it->second);
  }
  for (auto& [n, d] : dims)
    if ((n < lo || n > hi) && d != 0) throw ShapeError("complex: nonzero dimension outside window");
  std::vector<Matrix> dd;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t below = n == lo ? 0 : ds[static_cast<std::size_t>(n - 1 - lo)];
    auto it = diffs.find(n);
    dd.push_back(it == diffs.end() ? Matrix(field, below, ds[static_cast<std::size_t>(n - lo)]) : it->second);
  }
  for (auto& [n, d] : diffs)
    if ((n < lo || n > hi) && !d.empty()) throw ShapeError("complex: differential outside window");
  return ChainComplex(field, lo, hi, std::move(ds), std::move(dd));
}

ChainComplex ChainComplex::zero(Field field, int lo, int hi) {
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  return ChainComplex(field, lo, hi, std::vector<std::size_t>(len, 0),
                      std::vector<Matrix>(len, Matrix(field, 0, 0)));
}

ChainComplex ChainComplex::unit(Field field) { return sphere(field, 0); }

ChainComplex ChainComplex::sphere(Field field, int n) {
  return ChainComplex(field, n, n, {1}, {Matrix(field, 0, 1)});
}

ChainComplex ChainComplex::disk(Field field, int n) {
  return ChainComplex(field, n - 1, n, {1, 1}, {Matrix(field, 0, 1), Matrix::identity(field, 1)});
}

std::size_t ChainComplex::dim(int n) const {
  if (n < lo() || n > hi()) return 0;
  return data_->dims[static_cast<std::size_t>(n - lo())];
}

Matrix ChainComplex::diff(int n) const {
  if (n < lo() || n > hi()) return Matrix(field(), dim(n - 1), dim(n));
  return data_->diffs[static_cast<std::size_t>(n - lo())];
}

std::size_t ChainComplex::total_dim() const {
  std::size_t s = 0;
  for (auto d : data_->dims) s += d;
  return s;
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  if (a.data_ == b.data_) return true;
  return a.field() == b.field() && a.lo() == b.lo() && a.hi() == b.hi() && a.data_->dims == b.data_->dims &&
         a.data_->diffs == b.data_->diffs;
}

bool same_graded_data(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.field() == b.field())) return false;
  if (a == b) return true;
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n)
    if (a.dim(n) != b.dim(n)) return false;
  for (int n = lo; n <= hi; ++n)
    if (!(a.diff(n) == b.diff(n))) return false;
  return true;
}

Verdict validate_complex(const ChainComplex& c) {
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    if (!(c.diff(n - 1) * c.diff(n)).is_zero()) {
      std::ostringstream os;
      os << "d^2 != 0 at degree " << n << " (d_" << n - 1 << " d_" << n << ")";
      return Verdict::fail(os.str());
    }
  }
  return Verdict::pass();
}

std::string describe(const ChainComplex& c) {
  std::ostringstream os;
  os << "complex over F_" << c.field().p() << " [" << c.lo() << "," << c.hi() << "] dims";
  for (int n = c.hi(); n >= c.lo(); --n) os << " " << n << ":" << c.dim(n);
  return os.str();
}

// ---------------------------------------------------------------------------
// ChainMap

ChainMap::ChainMap(ChainComplex src, ChainComplex dst, const std::map<int, Matrix>& comps)
    : src_(std::move(src)), dst_(std::move(dst)) {
  require_field(src_.field(), dst_.field(), "chain map");
  for (auto& [n, m] : comps) {
    if (m.rows() != dst_.dim(n) || m.cols() != src_.dim(n)) {
      std::ostringstream os;
      os << "chain map: component " << n << " has shape " << m.rows() << "x" << m.cols() << ", expected "
         << dst_.dim(n) << "x" << src_.dim(n);
      throw ShapeError(os.str());
    }
    if (!(m.field() == src_.field())) throw ShapeError("chain map: component over wrong field");
  }
  for (int n = lo(); n <= hi(); ++n) {
    auto it = comps.find(n);
    comps_.emplace(n, it == comps.end() ? zeros(src_.field(), dst_.dim(n), src_.dim(n)) : it->second);
  }
}

ChainMap ChainMap::zero(const ChainComplex& src, const ChainComplex& dst) { return ChainMap(src, dst); }

ChainMap ChainMap::identity(const ChainComplex& x) {
  std::map<int, Matrix> c;
  for (int n = x.lo(); n <= x.hi(); ++n) c.emplace(n, Matrix::identity(x.field(), x.dim(n)));
  return ChainMap(x, x, c);
}

Matrix ChainMap::comp(int n) const {
  auto it = comps_.find(n);
  if (it != comps_.end()) return it->second;
  return zeros(src_.field(), dst_.dim(n), src_.dim(n));
}

namespace {

void require_parallel(const ChainMap& a, const ChainMap& b, const char* what) {
  if (!same_graded_data(a.src(), b.src()) || !same_graded_data(a.dst(), b.dst()))
    throw ShapeError(std::string(what) + ": maps are not parallel");
}

}  // namespace

ChainMap ChainMap::operator+(const ChainMap& o) const {
  require_parallel(*this, o, "sum");
  std::map<int, Matrix> c;
  for (int n = lo(); n <= hi(); ++n) c.emplace(n, comp(n) + o.comp(n));
  return ChainMap(src_, dst_, c);
}

ChainMap ChainMap::operator-(const ChainMap& o) const {
  require_parallel(*this, o, "difference");
  std::map<int, Matrix> c;
  for (int n = lo(); n <= hi(); ++n) c.emplace(n, comp(n) - o.comp(n));
  return ChainMap(src_, dst_, c);
}

ChainMap ChainMap::operator-() const {
  std::map<int, Matrix> c;
  for (auto& [n, m] : comps_) c.emplace(n, -m);
  return ChainMap(src_, dst_, c);
}

ChainMap ChainMap::scaled(std::uint32_t k) const {
  std::map<int, Matrix> c;
  for (auto& [n, m] : comps_) c.emplace(n, m.scaled(k));
  return ChainMap(src_, dst_, c);
}

bool ChainMap::is_zero() const {
  for (auto& [n, m] : comps_)
    if (!m.is_zero()) return false;
  return true;
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  return a.src_ == b.src_ && a.dst_ == b.dst_ && a.comps_ == b.comps_;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!same_graded_data(f.dst(), g.src())) throw ShapeError("compose: target of f differs from source of g");
  std::map<int, Matrix> c;
  const int lo = std::max(f.src().lo(), g.dst().lo()), hi = std::min(f.src().hi(), g.dst().hi());
  for (int n = lo; n <= hi; ++n) c.emplace(n, g.comp(n) * f.comp(n));
  return ChainMap(f.src(), g.dst(), c);
}

ChainMap compose(const std::vector<ChainMap>& chain) {
  if (chain.empty()) throw ShapeError("compose: empty chain");
  ChainMap acc = chain.front();
  for (std::size_t k = 1; k < chain.size(); ++k) acc = compose(chain[k], acc);
  return acc;
}

Verdict validate_map(const ChainMap& f) {
  const int lo = std::min(f.src().lo(), f.dst().lo()), hi = std::max(f.src().hi(), f.dst().hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    if (!(f.dst().diff(n) * f.comp(n) == f.comp(n - 1) * f.src().diff(n))) {
      std::ostringstream os;
      os << "map does not commute with differentials at degree " << n;
      return Verdict::fail(os.str());
    }
  }
  return Verdict::pass();
}

bool same_graded_data(const ChainMap& a, const ChainMap& b) {
  if (!same_graded_data(a.src(), b.src()) || !same_graded_data(a.dst(), b.dst())) return false;
  const int lo = std::min(a.src().lo(), b.src().lo()), hi = std::max(a.src().hi(), b.src().hi());
  for (int n = lo; n <= hi; ++n)
    if (!(a.comp(n) == b.comp(n))) return false;
  return true;
}

bool is_degreewise_injective(const ChainMap& f) {
  for (int n = f.src().lo(); n <= f.src().hi(); ++n)
    if (!is_injective(f.comp(n))) return false;
  return true;
}

bool is_degreewise_surjective(const ChainMap& f) {
  for (int n = f.dst().lo(); n <= f.dst().hi(); ++n)
    if (!is_surjective(f.comp(n))) return false;
  return true;
}

bool is_isomorphism(const ChainMap& f) { return is_degreewise_injective(f) && is_degreewise_surjective(f); }

ChainMap inverse_iso(const ChainMap& f) {
  std::map<int, Matrix> c;
  const int lo = std::min(f.src().lo(), f.dst().lo()), hi = std::max(f.src().hi(), f.dst().hi());
  for (int n = lo; n <= hi; ++n) {
    if (f.src().dim(n) != f.dst().dim(n)) throw Error("inverse_iso: not an isomorphism");
    if (f.src().dim(n) == 0) continue;
    auto inv = inverse(f.comp(n));
    if (!inv) throw Error("inverse_iso: not an isomorphism");
    c.emplace(n, *inv);
  }
  return ChainMap(f.dst(), f.src(), c);
}

ChainMap retype(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst) {
  if (!same_graded_data(f.src(), src) || !same_graded_data(f.dst(), dst))
    throw ShapeError("retype: graded data differ");
  std::map<int, Matrix> c;
  for (int n = std::max(src.lo(), dst.lo()); n <= std::min(src.hi(), dst.hi()); ++n) c.emplace(n, f.comp(n));
  return ChainMap(src, dst, c);
}

// ---------------------------------------------------------------------------
// Homology

std::size_t HomologyReport::dim(int n) const {
  auto it = dims.find(n);
  return it == dims.end() ? 0 : it->second;
}

std::size_t HomologyReport::total() const {
  std::size_t s = 0;
  for (auto& [n, d] : dims) s += d;
  return s;
}

HomologyReport homology(const ChainComplex& c) {
  HomologyReport h;
  h.lo = c.lo();
  h.hi = c.hi();
  const Field& f = c.field();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const std::size_t dn = c.dim(n);
    Matrix z = kernel_basis(c.diff(n));
    Matrix b = column_basis(c.diff(n + 1));
    EchelonBasis eb(f, dn);
    for (std::size_t k = 0; k < b.cols(); ++k) eb.insert(b.column(k).data());
    std::vector<Matrix> reps;
    for (std::size_t k = 0; k < z.cols(); ++k)
      if (eb.insert(z.column(k).data())) reps.push_back(z.column(k));
    h.dims[n] = reps.size();
    h.cycles.emplace(n, z);
    h.boundaries.emplace(n, b);
    h.representatives.emplace(n, hstack(reps, f, dn));
  }
  return h;
}

bool is_acyclic(const ChainComplex& c) { return homology(c).total() == 0; }

Matrix induced_on_homology(const ChainMap& f, int n, const HomologyReport& src, const HomologyReport& dst) {
  const Field& fld = f.field();
  const std::size_t hs = src.dim(n), ht = dst.dim(n);
  Matrix out(fld, ht, hs);
  if (hs == 0 || ht == 0) return out;
  const Matrix& b = dst.boundaries.at(n);
  const Matrix& r = dst.representatives.at(n);
  Matrix basis = hstack({b, r}, fld, f.dst().dim(n));
  Matrix images = f.comp(n) * src.representatives.at(n);
  auto coords = solve(basis, images);
  if (!coords) throw Error("induced_on_homology: image of a cycle is not a cycle");
  return coords->block(b.cols(), 0, ht, hs);
}

bool is_quasi_iso(const ChainMap& f) {
  HomologyReport hs = homology(f.src()), ht = homology(f.dst());
  const int lo = std::min(f.src().lo(), f.dst().lo()), hi = std::max(f.src().hi(), f.dst().hi());
  for (int n = lo; n <= hi; ++n) {
    if (hs.dim(n) != ht.dim(n)) return false;
    if (hs.dim(n) == 0) continue;
    if (!is_invertible(induced_on_homology(f, n, hs, ht))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Tensor product

std::size_t tensor_offset(const ChainComplex& a, const ChainComplex& b, int n, int i) {
  std::size_t off = 0;
  for (int k = a.hi(); k > i && k >= a.lo(); --k) off += a.dim(k) * b.dim(n - k);
  return off;
}

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b) {
  require_field(a.field(), b.field(), "tensor");
  const Field& f = a.field();
  const int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
  std::vector<std::size_t> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(tensor_offset(a, b, n, a.lo() - 1));
  auto dim_at = [&](int n) { return n < lo || n > hi ? 0 : dims[static_cast<std::size_t>(n - lo)]; };
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    Matrix d(f, dim_at(n - 1), dim_at(n));
    for (int i = a.lo(); i <= a.hi(); ++i) {
      const int j = n - i;
      const std::size_t ai = a.dim(i), bj = b.dim(j);
      if (ai * bj == 0) continue;
      const std::size_t col = tensor_offset(a, b, n, i);
      if (a.dim(i - 1) > 0)
        d.add_block(tensor_offset(a, b, n - 1, i - 1), col, kron(a.diff(i), Matrix::identity(f, bj)));
      if (b.dim(j - 1) > 0)
        d.add_block(tensor_offset(a, b, n - 1, i), col,
                    kron(Matrix::identity(f, ai), b.diff(j)).scaled(f.sign(i)));
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(f, lo, hi, std::move(dims), std::move(diffs));
}

ChainMap tensor_map(const ChainMap& f, const ChainMap& g) {
  require_field(f.field(), g.field(), "tensor_map");
  const Field& fld = f.field();
  ChainComplex src = tensor_complex(f.src(), g.src());
  ChainComplex dst = tensor_complex(f.dst(), g.dst());
  std::map<int, Matrix> c;
  const int ilo = std::max(f.src().lo(), f.dst().lo()), ihi = std::min(f.src().hi(), f.dst().hi());
  for (int n = std::max(src.lo(), dst.lo()); n <= std::min(src.hi(), dst.hi()); ++n) {
    Matrix m(fld, dst.dim(n), src.dim(n));
    for (int i = ilo; i <= ihi; ++i) {
      const int j = n - i;
      Matrix blk = kron(f.comp(i), g.comp(j));
      if (blk.empty()) continue;
      m.set_block(tensor_offset(f.dst(), g.dst(), n, i), tensor_offset(f.src(), g.src(), n, i), blk);
    }
    c.emplace(n, std::move(m));
  }
  return ChainMap(src, dst, c);
}

ChainMap symmetry_iso(const ChainComplex& a, const ChainComplex& b) {
  require_field(a.field(), b.field(), "symmetry");
  const Field& f = a.field();
  ChainComplex ab = tensor_complex(a, b), ba = tensor_complex(b, a);
  std::map<int, Matrix> c;
  for (int n = ab.lo(); n <= ab.hi(); ++n) {
    Matrix m(f, ba.dim(n), ab.dim(n));
    for (int i = a.lo(); i <= a.hi(); ++i) {
      const int j = n - i;
      const std::size_t ai = a.dim(i), bj = b.dim(j);
      if (ai * bj == 0) continue;
      const std::size_t so = tensor_offset(a, b, n, i), to = tensor_offset(b, a, n, j);
      const std::uint32_t s = f.sign(static_cast<long long>(i) * j);
      for (std::size_t ra = 0; ra < ai; ++ra)
        for (std::size_t rb = 0; rb < bj; ++rb) m(to + rb * ai + ra, so + ra * bj + rb) = s;
    }
    c.emplace(n, std::move(m));
  }
  return ChainMap(ab, ba, c);
}

ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c) {
  const Field& f = a.field();
  require_field(f, b.field(), "associator");
  require_field(f, c.field(), "associator");
  ChainComplex ab = tensor_complex(a, b), bc = tensor_complex(b, c);
  ChainComplex src = tensor_complex(ab, c), dst = tensor_complex(a, bc);
  std::map<int, Matrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    Matrix m(f, dst.dim(n), src.dim(n));
    for (int i = a.lo(); i <= a.hi(); ++i)
      for (int j = b.lo(); j <= b.hi(); ++j) {
        const int k = n - i - j;
        const std::size_t ai = a.dim(i), bj = b.dim(j), ck = c.dim(k);
        if (ai * bj * ck == 0) continue;
        // source: ((a (x) b) (x) c); target: (a (x) (b (x) c))
        const std::size_t abd = ab.dim(i + j), bcd = bc.dim(j + k);
        const std::size_t s0 = tensor_offset(ab, c, n, i + j), s1 = tensor_offset(a, b, i + j, i);
        const std::size_t t0 = tensor_offset(a, bc, n, i), t1 = tensor_offset(b, c, j + k, j);
        for (std::size_t x = 0; x < ai; ++x)
          for (std::size_t y = 0; y < bj; ++y)
            for (std::size_t z = 0; z < ck; ++z) {
              const std::size_t col = s0 + (s1 + x * bj + y) * ck + z;
              const std::size_t row = t0 + x * bcd + t1 + y * ck + z;
              m(row, col) = 1;
            }
        (void)abd;
      }
    comps.emplace(n, std::move(m));
  }
  return ChainMap(src, dst, comps);
}

ChainMap left_unitor(const ChainComplex& x) {
  ChainComplex sx = tensor_complex(ChainComplex::unit(x.field()), x);
  std::map<int, Matrix> c;
  for (int n = x.lo(); n <= x.hi(); ++n) c.emplace(n, Matrix::identity(x.field(), x.dim(n)));
  return ChainMap(sx, x, c);
}

ChainMap right_unitor(const ChainComplex& x) {
  ChainComplex xs = tensor_complex(x, ChainComplex::unit(x.field()));
  std::map<int, Matrix> c;
  for (int n = x.lo(); n <= x.hi(); ++n) c.emplace(n, Matrix::identity(x.field(), x.dim(n)));
  return ChainMap(xs, x, c);
}

// ---------------------------------------------------------------------------
// Hom complex

std::size_t hom_offset(const ChainComplex& a, const ChainComplex& b, int n, int i) {
  std::size_t off = 0;
  for (int k = a.lo(); k < i && k <= a.hi(); ++k) off += b.dim(k + n) * a.dim(k);
  return off;
}

ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b) {
  require_field(a.field(), b.field(), "hom");
  const Field& f = a.field();
  const int lo = b.lo() - a.hi(), hi = b.hi() - a.lo();
  std::vector<std::size_t> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(hom_offset(a, b, n, a.hi() + 1));
  auto dim_at = [&](int n) { return n < lo || n > hi ? 0 : dims[static_cast<std::size_t>(n - lo)]; };
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    Matrix d(f, dim_at(n - 1), dim_at(n));
    for (int i = a.lo(); i <= a.hi(); ++i) {
      const std::size_t ai = a.dim(i), bin = b.dim(i + n);
      if (ai * bin == 0) continue;
      const std::size_t col = hom_offset(a, b, n, i);
      // d_B phi_i lands in Hom(A_i, B_{i+n-1})
      if (b.dim(i + n - 1) > 0)
        d.add_block(hom_offset(a, b, n - 1, i), col, kron(b.diff(i + n), Matrix::identity(f, ai)));
      // -(-1)^n phi_i d_A lands in Hom(A_{i+1}, B_{i+n})
      if (a.dim(i + 1) > 0)
        d.add_block(hom_offset(a, b, n - 1, i + 1), col,
                    kron(Matrix::identity(f, bin), a.diff(i + 1).transpose()).scaled(f.neg(f.sign(n))));
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(f, lo, hi, std::move(dims), std::move(diffs));
}

Matrix map_to_hom_vector(const ChainMap& f) {
  const ChainComplex& a = f.src();
  const ChainComplex& b = f.dst();
  Matrix v(f.field(), hom_offset(a, b, 0, a.hi() + 1), 1);
  for (int i = a.lo(); i <= a.hi(); ++i) {
    Matrix m = f.comp(i);
    const std::size_t off = hom_offset(a, b, 0, i);
    for (std::size_t k = 0; k < m.data().size(); ++k) v(off + k, 0) = m.data()[k];
  }
  return v;
}

ChainMap hom_vector_to_map(const ChainComplex& a, const ChainComplex& b, const Matrix& v) {
  if (v.cols() != 1 || v.rows() != hom_offset(a, b, 0, a.hi() + 1))
    throw ShapeError("hom_vector_to_map: wrong vector length");
  std::map<int, Matrix> c;
  for (int i = a.lo(); i <= a.hi(); ++i) {
    Matrix m(a.field(), b.dim(i), a.dim(i));
    const std::size_t off = hom_offset(a, b, 0, i);
    for (std::size_t k = 0; k < m.data().size(); ++k) m.data()[k] = v(off + k, 0);
    if (!m.empty()) c.emplace(i, std::move(m));
  }
  return ChainMap(a, b, c);
}

ChainMap hom_post(const ChainMap& g, const ChainComplex& a) {
  const Field& f = g.field();
  ChainComplex src = hom_complex(a, g.src()), dst = hom_complex(a, g.dst());
  std::map<int, Matrix> c;
  for (int n = std::max(src.lo(), dst.lo()); n <= std::min(src.hi(), dst.hi()); ++n) {
    Matrix m(f, dst.dim(n), src.dim(n));
    for (int i = a.lo(); i <= a.hi(); ++i) {
      Matrix blk = kron(g.comp(i + n), Matrix::identity(f, a.dim(i)));
      if (blk.empty()) continue;
      m.set_block(hom_offset(a, g.dst(), n, i), hom_offset(a, g.src(), n, i), blk);
    }
    c.emplace(n, std::move(m));
  }
  return ChainMap(src, dst, c);
}

ChainMap hom_pre(const ChainMap& fm, const ChainComplex& b) {
  const Field& f = fm.field();
  ChainComplex src = hom_complex(fm.dst(), b), dst = hom_complex(fm.src(), b);
  std::map<int, Matrix> c;
  const int ilo = std::min(fm.src().lo(), fm.dst().lo()), ihi = std::max(fm.src().hi(), fm.dst().hi());
  for (int n = std::max(src.lo(), dst.lo()); n <= std::min(src.hi(), dst.hi()); ++n) {
    Matrix m(f, dst.dim(n), src.dim(n));
    for (int i = ilo; i <= ihi; ++i) {
      Matrix blk = kron(Matrix::identity(f, b.dim(i + n)), fm.comp(i).transpose());
      if (blk.empty()) continue;
      m.set_block(hom_offset(fm.src(), b, n, i), hom_offset(fm.dst(), b, n, i), blk);
    }
    c.emplace(n, std::move(m));
  }
  return ChainMap(src, dst, c);
}

ChainMap curry(const ChainMap& phi, const ChainComplex& a, const ChainComplex& b) {
  const ChainComplex& cc = phi.dst();
  ChainComplex ab = tensor_complex(a, b);
  if (!same_graded_data(ab, phi.src())) throw ShapeError("curry: source is not A (x) B");
  ChainComplex h = hom_complex(b, cc);
  std::map<int, Matrix> comps;
  for (int i = std::max(a.lo(), h.lo()); i <= std::min(a.hi(), h.hi()); ++i) {
    Matrix m(a.field(), h.dim(i), a.dim(i));
    for (int k = b.lo(); k <= b.hi(); ++k) {
      const std::size_t bk = b.dim(k), ck = cc.dim(k + i);
      if (bk * ck == 0) continue;
      Matrix ph = phi.comp(i + k);
      const std::size_t so = tensor_offset(a, b, i + k, i), to = hom_offset(b, cc, i, k);
      for (std::size_t r = 0; r < a.dim(i); ++r)
        for (std::size_t s = 0; s < ck; ++s)
          for (std::size_t t = 0; t < bk; ++t) m(to + s * bk + t, r) = ph(s, so + r * bk + t);
    }
    comps.emplace(i, std::move(m));
  }
  return ChainMap(a, h, comps);
}

ChainMap uncurry(const ChainMap& psi, const ChainComplex& b, const ChainComplex& c) {
  const ChainComplex& a = psi.src();
  ChainComplex h = hom_complex(b, c);
  if (!same_graded_data(h, psi.dst())) throw ShapeError("uncurry: target is not Hom(B, C)");
  ChainComplex ab = tensor_complex(a, b);
  std::map<int, Matrix> comps;
  for (int n = std::max(ab.lo(), c.lo()); n <= std::min(ab.hi(), c.hi()); ++n) {
    Matrix m(a.field(), c.dim(n), ab.dim(n));
    for (int i = a.lo(); i <= a.hi(); ++i) {
      const int k = n - i;
      const std::size_t bk = b.dim(k), ai = a.dim(i), cn = c.dim(n);
      if (ai * bk * cn == 0) continue;
      Matrix ps = psi.comp(i);
      const std::size_t so = tensor_offset(a, b, n, i), to = hom_offset(b, c, i, k);
      for (std::size_t r = 0; r < ai; ++r)
        for (std::size_t s = 0; s < cn; ++s)
          for (std::size_t t = 0; t < bk; ++t) m(s, so + r * bk + t) = ps(to + s * bk + t, r);
    }
    comps.emplace(n, std::move(m));
  }
  return ChainMap(ab, c, comps);
}

// ---------------------------------------------------------------------------
// Limits and colimits

DirectSum biproduct(const std::vector<ChainComplex>& parts) {
  if (parts.empty()) throw ShapeError("biproduct: no summands");
  const Field& f = parts.front().field();
  int lo = parts.front().lo(), hi = parts.front().hi();
  for (auto& x : parts) {
    require_field(f, x.field(), "biproduct");
    lo = std::min(lo, x.lo());
    hi = std::max(hi, x.hi());
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    std::size_t d = 0;
    std::vector<Matrix> blocks;
    for (auto& x : parts) {
      d += x.dim(n);
      blocks.push_back(x.diff(n));
    }
    dims.push_back(d);
    diffs.push_back(block_diagonal(blocks, f));
  }
  DirectSum s{ChainComplex(f, lo, hi, std::move(dims), std::move(diffs)), {}, {}};
  std::map<int, std::size_t> off;
  for (auto& x : parts) {
    std::map<int, Matrix> inc, proj;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      Matrix i(f, s.object.dim(n), x.dim(n));
      for (std::size_t k = 0; k < x.dim(n); ++k) i(off[n] + k, k) = 1;
      proj.emplace(n, i.transpose());
      inc.emplace(n, std::move(i));
    }
    for (int n = x.lo(); n <= x.hi(); ++n) off[n] += x.dim(n);
    s.inclusions.emplace_back(x, s.object, inc);
    s.projections.emplace_back(s.object, x, proj);
  }
  return s;
}

ChainMap copair(const DirectSum& sum, const std::vector<ChainMap>& maps) {
  if (maps.size() != sum.inclusions.size()) throw ShapeError("copair: wrong number of maps");
  ChainMap out = compose(maps.front(), sum.projections.front());
  for (std::size_t k = 1; k < maps.size(); ++k) out = out + compose(maps[k], sum.projections[k]);
  return out;
}

ChainMap pair(const DirectSum& sum, const std::vector<ChainMap>& maps) {
  if (maps.size() != sum.inclusions.size()) throw ShapeError("pair: wrong number of maps");
  ChainMap out = compose(sum.inclusions.front(), maps.front());
  for (std::size_t k = 1; k < maps.size(); ++k) out = out + compose(sum.inclusions[k], maps[k]);
  return out;
}

ChainMap direct_sum_map(const DirectSum& src, const DirectSum& dst, const std::vector<ChainMap>& maps) {
  if (maps.size() != src.inclusions.size() || maps.size() != dst.inclusions.size())
    throw ShapeError("direct_sum_map: wrong number of maps");
  ChainMap out = ChainMap::zero(src.object, dst.object);
  for (std::size_t k = 0; k < maps.size(); ++k)
    out = out + compose({src.projections[k], maps[k], dst.inclusions[k]});
  return out;
}

Kernel kernel(const ChainMap& fm) {
  const ChainComplex& a = fm.src();
  const Field& f = fm.field();
  std::map<int, Matrix> basis;
  std::map<int, std::size_t> dims;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    basis.emplace(n, kernel_basis(fm.comp(n)));
    dims[n] = basis.at(n).cols();
  }
  std::map<int, Matrix> diffs;
  for (int n = a.lo() + 1; n <= a.hi(); ++n) {
    if (dims[n] == 0 || dims[n - 1] == 0) continue;
    auto d = solve(basis.at(n - 1), a.diff(n) * basis.at(n));
    if (!d) throw Error("kernel: differential does not preserve the kernel");
    diffs.emplace(n, *d);
  }
  ChainComplex k = ChainComplex::from_maps(f, a.lo(), a.hi(), dims, diffs);
  return Kernel{k, ChainMap(k, a, basis)};
}

Cokernel cokernel(const ChainMap& fm) {
  const ChainComplex& b = fm.dst();
  const Field& f = fm.field();
  std::map<int, Matrix> proj, chosen;
  std::map<int, std::size_t> dims;
  for (int n = b.lo(); n <= b.hi(); ++n) {
    const std::size_t bn = b.dim(n);
    Matrix img = column_basis(fm.comp(n));
    std::vector<std::size_t> q = complement_indices(img);
    Matrix e(f, bn, q.size());
    for (std::size_t k = 0; k < q.size(); ++k) e(q[k], k) = 1;
    auto inv = inverse(hstack({img, e}, f, bn));
    if (!inv) throw Error("cokernel: complement selection failed");
    proj.emplace(n, inv->block(img.cols(), 0, q.size(), bn));
    chosen.emplace(n, std::move(e));
    dims[n] = q.size();
  }
  std::map<int, Matrix> diffs;
  for (int n = b.lo() + 1; n <= b.hi(); ++n)
    if (dims[n] && dims[n - 1]) diffs.emplace(n, proj.at(n - 1) * b.diff(n) * chosen.at(n));
  ChainComplex q = ChainComplex::from_maps(f, b.lo(), b.hi(), dims, diffs);
  return Cokernel{q, ChainMap(b, q, proj)};
}

Pushout pushout(const ChainMap& f, const ChainMap& g) {
  if (!same_graded_data(f.src(), g.src())) throw ShapeError("pushout: legs do not share a source");
  DirectSum s = biproduct({f.dst(), g.dst()});
  Cokernel q = cokernel(pair(s, {f, -g}));
  return Pushout{q.object, compose(q.projection, s.inclusions[0]), compose(q.projection, s.inclusions[1])};
}

ChainMap Pushout::mediate(const ChainMap& u, const ChainMap& v) const {
  return must_factor({from_b, from_c}, {u, v}, "pushout");
}

Pullback pullback(const ChainMap& f, const ChainMap& g) {
  if (!same_graded_data(f.dst(), g.dst())) throw ShapeError("pullback: legs do not share a target");
  DirectSum s = biproduct({f.src(), g.src()});
  Kernel k = kernel(copair(s, {f, -g}));
  return Pullback{k.object, compose(s.projections[0], k.inclusion), compose(s.projections[1], k.inclusion)};
}

ChainMap Pullback::mediate(const ChainMap& u, const ChainMap& v) const {
  return must_lift({to_b, to_c}, {u, v}, "pullback");
}

std::optional<ChainMap> factor_through(const std::vector<ChainMap>& legs, const std::vector<ChainMap>& targets) {
  if (legs.empty() || legs.size() != targets.size()) throw ShapeError("factor_through: leg count mismatch");
  const ChainComplex& p = legs.front().dst();
  const ChainComplex& z = targets.front().dst();
  const Field& f = p.field();
  int lo = std::min(p.lo(), z.lo()), hi = std::max(p.hi(), z.hi());
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!same_graded_data(legs[k].dst(), p) || !same_graded_data(targets[k].dst(), z) ||
        !same_graded_data(legs[k].src(), targets[k].src()))
      throw ShapeError("factor_through: incompatible legs");
    lo = std::min(lo, legs[k].src().lo());
    hi = std::max(hi, legs[k].src().hi());
  }
  std::map<int, Matrix> c;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Matrix> ls, ts;
    for (std::size_t k = 0; k < legs.size(); ++k) {
      ls.push_back(legs[k].comp(n));
      ts.push_back(targets[k].comp(n));
    }
    Matrix l = hstack(ls, f, p.dim(n)), t = hstack(ts, f, z.dim(n));
    if (rank(l) != p.dim(n)) throw Error("factor_through: legs are not jointly epimorphic");
    auto x = solve(l.transpose(), t.transpose());
    if (!x) return std::nullopt;
    if (p.dim(n) && z.dim(n)) c.emplace(n, x->transpose());
  }
  return ChainMap(p, z, c);
}

std::optional<ChainMap> lift_through(const std::vector<ChainMap>& projections,
                                     const std::vector<ChainMap>& targets) {
  if (projections.empty() || projections.size() != targets.size())
    throw ShapeError("lift_through: leg count mismatch");
  const ChainComplex& q = projections.front().src();
  const ChainComplex& t = targets.front().src();
  const Field& f = q.field();
  int lo = std::min(q.lo(), t.lo()), hi = std::max(q.hi(), t.hi());
  for (std::size_t k = 0; k < projections.size(); ++k) {
    if (!same_graded_data(projections[k].src(), q) || !same_graded_data(targets[k].src(), t) ||
        !same_graded_data(projections[k].dst(), targets[k].dst()))
      throw ShapeError("lift_through: incompatible legs");
    lo = std::min(lo, projections[k].dst().lo());
    hi = std::max(hi, projections[k].dst().hi());
  }
  std::map<int, Matrix> c;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Matrix> ps, ts;
    for (std::size_t k = 0; k < projections.size(); ++k) {
      ps.push_back(projections[k].comp(n));
      ts.push_back(targets[k].comp(n));
    }
    Matrix pm = vstack(ps, f, q.dim(n)), tm = vstack(ts, f, t.dim(n));
    if (rank(pm) != q.dim(n)) throw Error("lift_through: projections are not jointly monomorphic");
    auto x = solve(pm, tm);
    if (!x) return std::nullopt;
    if (q.dim(n) && t.dim(n)) c.emplace(n, *x);
  }
  return ChainMap(t, q, c);
}

ChainMap must_factor(const std::vector<ChainMap>& legs, const std::vector<ChainMap>& targets, const char* what) {
  auto u = factor_through(legs, targets);
  if (!u) throw Error(std::string(what) + ": no mediating map");
  return *u;
}

ChainMap must_lift(const std::vector<ChainMap>& projections, const std::vector<ChainMap>& targets,
                   const char* what) {
  auto u = lift_through(projections, targets);
  if (!u) throw Error(std::string(what) + ": no mediating map");
  return *u;
}

// ---------------------------------------------------------------------------
// Cones, cylinders, path objects

Cone cone(const ChainMap& fm) {
  const ChainComplex& a = fm.src();
  const ChainComplex& b = fm.dst();
  const Field& f = fm.field();
  const int lo = std::min(b.lo(), a.lo() + 1), hi = std::max(b.hi(), a.hi() + 1);
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int n = lo; n <= hi; ++n) dims[n] = b.dim(n) + a.dim(n - 1);
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d(f, dims[n - 1], dims[n]);
    d.set_block(0, 0, b.diff(n));
    d.set_block(0, b.dim(n), fm.comp(n - 1));
    d.set_block(b.dim(n - 1), b.dim(n), -a.diff(n - 1));
    diffs.emplace(n, std::move(d));
  }
  ChainComplex c = ChainComplex::from_maps(f, lo, hi, dims, diffs);
  std::map<int, Matrix> inc;
  for (int n = b.lo(); n <= b.hi(); ++n) {
    Matrix m(f, dims[n], b.dim(n));
    m.set_block(0, 0, Matrix::identity(f, b.dim(n)));
    inc.emplace(n, std::move(m));
  }
  return Cone{c, ChainMap(b, c, inc)};
}

Cylinder cylinder(const ChainMap& fm) {
  const ChainComplex& a = fm.src();
  const ChainComplex& b = fm.dst();
  const Field& f = fm.field();
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi() + 1, b.hi());
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int n = lo; n <= hi; ++n) dims[n] = a.dim(n) + b.dim(n) + a.dim(n - 1);
  for (int n = lo + 1; n <= hi; ++n) {
    const std::size_t an = a.dim(n), bn = b.dim(n), am = a.dim(n - 1), bm = b.dim(n - 1);
    Matrix d(f, dims[n - 1], dims[n]);
    d.set_block(0, 0, a.diff(n));
    d.set_block(0, an + bn, -Matrix::identity(f, am));
    d.set_block(am, an, b.diff(n));
    d.set_block(am, an + bn, fm.comp(n - 1));
    d.set_block(am + bm, an + bn, -a.diff(n - 1));
    diffs.emplace(n, std::move(d));
  }
  ChainComplex c = ChainComplex::from_maps(f, lo, hi, dims, diffs);
  std::map<int, Matrix> inc, proj, sec;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t an = a.dim(n), bn = b.dim(n);
    Matrix i(f, dims[n], an), p(f, bn, dims[n]), s(f, dims[n], bn);
    i.set_block(0, 0, Matrix::identity(f, an));
    p.set_block(0, 0, fm.comp(n));
    p.set_block(0, an, Matrix::identity(f, bn));
    s.set_block(an, 0, Matrix::identity(f, bn));
    if (an) inc.emplace(n, std::move(i));
    if (bn) {
      proj.emplace(n, std::move(p));
      sec.emplace(n, std::move(s));
    }
  }
  return Cylinder{c, ChainMap(a, c, inc), ChainMap(c, b, proj), ChainMap(b, c, sec)};
}

PathSpace path_space(const ChainMap& fm) {
  const ChainComplex& a = fm.src();
  const ChainComplex& b = fm.dst();
  const Field& f = fm.field();
  const int lo = std::min(a.lo(), b.lo() - 1), hi = std::max(a.hi(), b.hi());
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int n = lo; n <= hi; ++n) dims[n] = a.dim(n) + b.dim(n) + b.dim(n + 1);
  for (int n = lo + 1; n <= hi; ++n) {
    const std::size_t an = a.dim(n), bn = b.dim(n), am = a.dim(n - 1), bm = b.dim(n - 1);
    Matrix d(f, dims[n - 1], dims[n]);
    d.set_block(0, 0, a.diff(n));
    d.set_block(am, an, b.diff(n));
    d.set_block(am + bm, 0, fm.comp(n));
    d.set_block(am + bm, an, -Matrix::identity(f, bn));
    d.set_block(am + bm, an + bn, -b.diff(n + 1));
    diffs.emplace(n, std::move(d));
  }
  ChainComplex c = ChainComplex::from_maps(f, lo, hi, dims, diffs);
  std::map<int, Matrix> inc, proj;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t an = a.dim(n), bn = b.dim(n);
    Matrix i(f, dims[n], an), p(f, bn, dims[n]);
    i.set_block(0, 0, Matrix::identity(f, an));
    i.set_block(an, 0, fm.comp(n));
    p.set_block(0, an, Matrix::identity(f, bn));
    if (an) inc.emplace(n, std::move(i));
    if (bn) proj.emplace(n, std::move(p));
  }
  return PathSpace{c, ChainMap(a, c, inc), ChainMap(c, b, proj)};
}

PathObject path_object(const ChainComplex& x) {
  DirectSum xx = biproduct({x, x});
  ChainMap id = ChainMap::identity(x);
  PathSpace ps = path_space(pair(xx, {id, id}));
  return PathObject{ps.object, xx, ps.inclusion, ps.projection};
}

// ---------------------------------------------------------------------------
// Chain-map spaces

MapUnknown::MapUnknown(LinearSystem& sys, const ChainComplex& a, const ChainComplex& b) : a_(a), b_(b) {
  for (int n = std::max(a.lo(), b.lo()); n <= std::min(a.hi(), b.hi()); ++n)
    if (a.dim(n) && b.dim(n)) ids_[n] = sys.add_unknown(b.dim(n), a.dim(n));
}

std::optional<std::size_t> MapUnknown::at(int n) const {
  auto it = ids_.find(n);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int MapUnknown::lo() const { return std::min(a_.lo(), b_.lo()); }
int MapUnknown::hi() const { return std::max(a_.hi(), b_.hi()) + 1; }

void MapUnknown::add_chain_conditions(LinearSystem& sys) const {
  const Field& f = a_.field();
  for (int n = lo(); n <= hi(); ++n) {
    const std::size_t r = b_.dim(n - 1), c = a_.dim(n);
    if (r * c == 0) continue;
    std::vector<LinearSystem::Term> terms;
    add_terms(terms, *this, n, b_.diff(n), Matrix());
    add_terms(terms, *this, n - 1, Matrix(), -a_.diff(n));
    if (terms.empty()) continue;
    sys.add_equation(terms, Matrix(f, r, c));
  }
}

ChainMap MapUnknown::read(const std::vector<Matrix>& solution) const {
  std::map<int, Matrix> c;
  for (auto& [n, id] : ids_) c.emplace(n, solution.at(id));
  return ChainMap(a_, b_, c);
}

void add_terms(std::vector<LinearSystem::Term>& terms, const MapUnknown& x, int n, const Matrix& left,
               const Matrix& right) {
  auto id = x.at(n);
  if (!id) return;
  terms.push_back(LinearSystem::term(left, *id, right));
}

std::vector<ChainMap> chain_map_space(const ChainComplex& a, const ChainComplex& b) {
  LinearSystem sys(a.field());
  MapUnknown x(sys, a, b);
  x.add_chain_conditions(sys);
  std::vector<ChainMap> out;
  for (auto& sol : sys.nullspace()) out.push_back(x.read(sol));
  return out;
}

std::size_t chain_map_space_dim(const ChainComplex& a, const ChainComplex& b) {
  LinearSystem sys(a.field());
  MapUnknown x(sys, a, b);
  x.add_chain_conditions(sys);
  return sys.nullity();
}

}  // namespace smith
