#include "srg/matrix.hpp"

namespace srg {

CycMatrix::CycMatrix(int dim, std::vector<CycNumber> entries) : dim_(dim), e_(std::move(entries)) {
  if (e_.size() != static_cast<std::size_t>(dim) * dim)
    throw shape_error("entry count does not match dimension");
}

CycMatrix CycMatrix::identity(int dim) {
  CycMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = CycNumber(1);
  return m;
}

CycMatrix CycMatrix::scalar(int dim, const CycNumber& c) {
  CycMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = c;
  return m;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
  return m;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.dim_ != b.dim_) throw shape_error("dimension mismatch in product");
  CycMatrix m(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j) {
      CycNumber acc(0);
      for (int k = 0; k < a.dim_; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc = acc + a.at(i, k) * b.at(k, j);
      }
      m.at(i, j) = std::move(acc);
    }
  return m;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.dim_ != b.dim_) throw shape_error("dimension mismatch in sum");
  CycMatrix m(a.dim_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  if (a.dim_ != b.dim_) throw shape_error("dimension mismatch in difference");
  CycMatrix m(a.dim_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
  return m;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix m(dim_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

CycMatrix operator*(const CycNumber& c, const CycMatrix& a) {
  CycMatrix m(a.dim_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = c * a.e_[i];
  return m;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

std::vector<CycNumber> CycMatrix::apply(const std::vector<CycNumber>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw shape_error("vector length mismatch");
  std::vector<CycNumber> out(dim_, CycNumber(0));
  for (int i = 0; i < dim_; ++i) {
    CycNumber acc(0);
    for (int j = 0; j < dim_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      acc = acc + at(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

bool CycMatrix::is_identity() const { return *this == identity(dim_); }

bool CycMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

CycNumber CycMatrix::trace() const {
  CycNumber t(0);
  for (int i = 0; i < dim_; ++i) t = t + at(i, i);
  return t;
}

std::vector<int> rref(std::vector<CycVector>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  std::size_t nrows = rows.size(), ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t sel = r;
    while (sel < nrows && rows[sel][c].is_zero()) ++sel;
    if (sel == nrows) continue;
    std::swap(rows[sel], rows[r]);
    CycNumber inv_p = rows[r][c].inv();
    for (std::size_t j = c; j < ncols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] = inv_p * rows[r][j];
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      CycNumber f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank_of(std::vector<CycVector> rows) {
  return static_cast<int>(rref(rows).size());
}

std::vector<CycVector> null_space(std::vector<CycVector> rows) {
  if (rows.empty()) return {};
  std::size_t ncols = rows[0].size();
  std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<CycVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    CycVector v(ncols, CycNumber(0));
    v[f] = CycNumber(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycVector> solve(std::vector<CycVector> rows, CycVector b) {
  if (rows.size() != b.size()) throw shape_error("rows/rhs mismatch");
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
  std::vector<int> pivots = rref(rows);
  CycVector x(ncols, CycNumber(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(ncols)) return std::nullopt; // 0 = 1 row
    x[pivots[r]] = rows[r][ncols];
  }
  return x;
}

bool vec_is_zero(const CycVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

int CycMatrix::rank() const {
  std::vector<CycVector> rows(dim_);
  for (int i = 0; i < dim_; ++i) {
    rows[i].reserve(dim_);
    for (int j = 0; j < dim_; ++j) rows[i].push_back(at(i, j));
  }
  return rank_of(std::move(rows));
}

CycMatrix CycMatrix::inverse() const {
  std::vector<CycVector> rows(dim_);
  for (int i = 0; i < dim_; ++i) {
    rows[i].resize(2 * dim_, CycNumber(0));
    for (int j = 0; j < dim_; ++j) rows[i][j] = at(i, j);
    rows[i][dim_ + i] = CycNumber(1);
  }
  std::vector<int> pivots = rref(rows);
  if (static_cast<int>(pivots.size()) != dim_ || pivots.back() >= dim_)
    throw singular_error("matrix is singular");
  CycMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(i, j) = rows[i][dim_ + j];
  return m;
}

std::vector<CycNumber> CycMatrix::charpoly() const {
  // Faddeev-LeVerrier: exact, division only by integers
  int n = dim_;
  std::vector<CycNumber> c(static_cast<std::size_t>(n) + 1, CycNumber(0));
  c[n] = CycNumber(1);
  CycMatrix m = CycMatrix::zero(n);
  for (int k = 1; k <= n; ++k) {
    m = (*this) * m;
    for (int i = 0; i < n; ++i) m.at(i, i) = m.at(i, i) + c[n - k + 1];
    CycNumber t = ((*this) * m).trace();
    c[n - k] = CycNumber(Rational(-1, k)) * t;
  }
  return c;
}

CycNumber CycMatrix::det() const {
  std::vector<CycNumber> cp = charpoly();
  CycNumber d = cp[0];
  if (dim_ % 2 != 0) d = -d; // det = (-1)^n * charpoly(0)
  return d;
}

std::string CycMatrix::bytes() const {
  std::string out;
  auto put_u32 = [&](unsigned v) {
    for (int i = 0; i < 4; ++i)
      out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put_u32(static_cast<unsigned>(dim_));
  for (const auto& x : e_) out += x.bytes();
  return out;
}

std::size_t CycMatrix::hash() const {
  std::string b = bytes();
  std::size_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : b) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace srg
