#include "srg/pool.hpp"

namespace srg {

namespace {
constexpr std::uint64_t kEmptyKey = 0xffffffffffffffffULL;

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}
} // namespace

Vid PairMemo::find(std::uint64_t key) const {
  if (keys_.empty()) return npos;
  std::size_t mask = keys_.size() - 1;
  std::size_t i = mix64(key) & mask;
  while (keys_[i] != kEmptyKey) {
    if (keys_[i] == key) return vals_[i];
    i = (i + 1) & mask;
  }
  return npos;
}

void PairMemo::put(std::uint64_t key, Vid v) {
  if (keys_.empty() || count_ * 4 >= keys_.size() * 3) grow();
  std::size_t mask = keys_.size() - 1;
  std::size_t i = mix64(key) & mask;
  while (keys_[i] != kEmptyKey) {
    if (keys_[i] == key) return;
    i = (i + 1) & mask;
  }
  keys_[i] = key;
  vals_[i] = v;
  ++count_;
}

void PairMemo::grow() {
  std::size_t ncap = keys_.empty() ? 1024 : keys_.size() * 2;
  std::vector<std::uint64_t> nk(ncap, kEmptyKey);
  std::vector<Vid> nv(ncap);
  std::size_t mask = ncap - 1;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] == kEmptyKey) continue;
    std::size_t j = mix64(keys_[i]) & mask;
    while (nk[j] != kEmptyKey) j = (j + 1) & mask;
    nk[j] = keys_[i];
    nv[j] = vals_[i];
  }
  keys_ = std::move(nk);
  vals_ = std::move(nv);
}

ValuePool::ValuePool() {
  intern(CycNumber(0));
  intern(CycNumber(1));
}

ValuePool& ValuePool::global() {
  static ValuePool pool;
  return pool;
}

Vid ValuePool::intern(const CycNumber& x) {
  CycNumber c = x.canonical();
  std::string k = c.bytes();
  auto it = intern_.find(k);
  if (it != intern_.end()) return it->second;
  Vid id = static_cast<Vid>(values_.size());
  values_.push_back(std::move(c));
  keys_.push_back(std::move(k));
  intern_.emplace(keys_.back(), id);
  neg_memo_.push_back(PairMemo::npos);
  inv_memo_.push_back(PairMemo::npos);
  conj_memo_.push_back(PairMemo::npos);
  return id;
}

Vid ValuePool::add(Vid a, Vid b) {
  if (a == zero()) return b;
  if (b == zero()) return a;
  std::uint64_t key = a <= b ? (static_cast<std::uint64_t>(a) << 32) | b
                             : (static_cast<std::uint64_t>(b) << 32) | a;
  Vid hit = add_memo_.find(key);
  if (hit != PairMemo::npos) return hit;
  Vid r = intern(values_[a] + values_[b]);
  add_memo_.put(key, r);
  return r;
}

Vid ValuePool::mul(Vid a, Vid b) {
  if (a == zero() || b == zero()) return zero();
  if (a == one()) return b;
  if (b == one()) return a;
  std::uint64_t key = a <= b ? (static_cast<std::uint64_t>(a) << 32) | b
                             : (static_cast<std::uint64_t>(b) << 32) | a;
  Vid hit = mul_memo_.find(key);
  if (hit != PairMemo::npos) return hit;
  Vid r = intern(values_[a] * values_[b]);
  mul_memo_.put(key, r);
  return r;
}

Vid ValuePool::neg(Vid a) {
  if (a == zero()) return a;
  if (neg_memo_[a] != PairMemo::npos) return neg_memo_[a];
  Vid r = intern(-values_[a]);
  neg_memo_[a] = r;
  if (r < neg_memo_.size()) neg_memo_[r] = a;
  return r;
}

Vid ValuePool::inv(Vid a) {
  if (a == zero()) throw division_by_zero_error("division by zero");
  if (inv_memo_[a] != PairMemo::npos) return inv_memo_[a];
  Vid r = intern(values_[a].inv());
  inv_memo_[a] = r;
  if (r < inv_memo_.size()) inv_memo_[r] = a;
  return r;
}

Vid ValuePool::conj(Vid a) {
  if (conj_memo_[a] != PairMemo::npos) return conj_memo_[a];
  Vid r = intern(values_[a].conj());
  conj_memo_[a] = r;
  if (r < conj_memo_.size()) conj_memo_[r] = a;
  return r;
}

EMat emat_identity(ValuePool& p, int dim) {
  EMat m;
  m.dim = dim;
  m.e.assign(static_cast<std::size_t>(dim) * dim, p.zero());
  for (int i = 0; i < dim; ++i) m.e[static_cast<std::size_t>(i) * dim + i] = p.one();
  return m;
}

EMat emat_from(ValuePool& p, const CycMatrix& m) {
  EMat r;
  r.dim = m.dim();
  r.e.reserve(m.entries().size());
  for (const auto& x : m.entries()) r.e.push_back(p.intern(x));
  return r;
}

CycMatrix emat_to(const ValuePool& p, const EMat& m) {
  std::vector<CycNumber> entries;
  entries.reserve(m.e.size());
  for (Vid id : m.e) entries.push_back(p.value(id));
  return CycMatrix(m.dim, std::move(entries));
}

EMat emat_mul(ValuePool& p, const EMat& a, const EMat& b) {
  if (a.dim != b.dim) throw shape_error("dimension mismatch in product");
  int n = a.dim;
  EMat r;
  r.dim = n;
  r.e.assign(static_cast<std::size_t>(n) * n, p.zero());
  for (int i = 0; i < n; ++i) {
    const Vid* arow = a.e.data() + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      Vid acc = p.zero();
      for (int k = 0; k < n; ++k) {
        Vid x = arow[k];
        if (x == p.zero()) continue;
        Vid y = b.e[static_cast<std::size_t>(k) * n + j];
        if (y == p.zero()) continue;
        acc = p.add(acc, p.mul(x, y));
      }
      r.e[static_cast<std::size_t>(i) * n + j] = acc;
    }
  }
  return r;
}

EMat emat_transpose(const EMat& a) {
  EMat r;
  r.dim = a.dim;
  r.e.resize(a.e.size());
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      r.e[static_cast<std::size_t>(j) * a.dim + i] = a.e[static_cast<std::size_t>(i) * a.dim + j];
  return r;
}

EMat emat_scale(ValuePool& p, Vid c, const EMat& a) {
  EMat r;
  r.dim = a.dim;
  r.e.reserve(a.e.size());
  for (Vid x : a.e) r.e.push_back(p.mul(c, x));
  return r;
}

EMat emat_inverse(ValuePool& p, const EMat& a) {
  int n = a.dim;
  // Gauss-Jordan on [a | I] at id level
  std::vector<std::vector<Vid>> rows(n, std::vector<Vid>(2 * n, p.zero()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = a.e[static_cast<std::size_t>(i) * n + j];
    rows[i][n + i] = p.one();
  }
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int sel = r;
    while (sel < n && rows[sel][c] == p.zero()) ++sel;
    if (sel == n) throw singular_error("matrix is singular");
    std::swap(rows[sel], rows[r]);
    Vid ip = p.inv(rows[r][c]);
    for (int j = c; j < 2 * n; ++j) rows[r][j] = p.mul(ip, rows[r][j]);
    for (int i = 0; i < n; ++i) {
      if (i == r || rows[i][c] == p.zero()) continue;
      Vid f = p.neg(rows[i][c]);
      for (int j = c; j < 2 * n; ++j)
        rows[i][j] = p.add(rows[i][j], p.mul(f, rows[r][j]));
    }
    ++r;
  }
  EMat inv;
  inv.dim = n;
  inv.e.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.e[static_cast<std::size_t>(i) * n + j] = rows[i][n + j];
  return inv;
}

namespace {
int erank_rows(ValuePool& p, std::vector<std::vector<Vid>>& rows) {
  if (rows.empty()) return 0;
  int nrows = static_cast<int>(rows.size());
  int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int sel = r;
    while (sel < nrows && rows[sel][c] == p.zero()) ++sel;
    if (sel == nrows) continue;
    std::swap(rows[sel], rows[r]);
    Vid ip = p.inv(rows[r][c]);
    for (int j = c; j < ncols; ++j) rows[r][j] = p.mul(ip, rows[r][j]);
    for (int i = r + 1; i < nrows; ++i) {
      if (rows[i][c] == p.zero()) continue;
      Vid f = p.neg(rows[i][c]);
      for (int j = c; j < ncols; ++j)
        rows[i][j] = p.add(rows[i][j], p.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}
} // namespace

int emat_rank(ValuePool& p, const EMat& a) {
  int n = a.dim;
  std::vector<std::vector<Vid>> rows(n, std::vector<Vid>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = a.e[static_cast<std::size_t>(i) * n + j];
  return erank_rows(p, rows);
}

int emat_rank_minus_identity(ValuePool& p, const EMat& a) {
  int n = a.dim;
  std::vector<std::vector<Vid>> rows(n, std::vector<Vid>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vid x = a.e[static_cast<std::size_t>(i) * n + j];
      rows[i][j] = (i == j) ? p.sub(x, p.one()) : x;
    }
  return erank_rows(p, rows);
}

std::vector<Vid> emat_apply(ValuePool& p, const EMat& a, std::span<const Vid> v) {
  int n = a.dim;
  std::vector<Vid> out(static_cast<std::size_t>(n), p.zero());
  for (int i = 0; i < n; ++i) {
    Vid acc = p.zero();
    for (int j = 0; j < n; ++j) {
      Vid x = a.e[static_cast<std::size_t>(i) * n + j];
      if (x == p.zero() || v[j] == p.zero()) continue;
      acc = p.add(acc, p.mul(x, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

bool emat_commutes(ValuePool& p, const EMat& a, const EMat& b) {
  return emat_mul(p, a, b) == emat_mul(p, b, a);
}

std::string emat_bytes(const ValuePool& p, const EMat& m) {
  std::string out;
  auto put_u32 = [&](unsigned v) {
    for (int i = 0; i < 4; ++i)
      out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put_u32(static_cast<unsigned>(m.dim));
  for (Vid id : m.e) out += p.key(id);
  return out;
}

ElementSet::ElementSet(int dim)
    : dim_(dim), stride_(static_cast<std::size_t>(dim) * dim) {
  slots_.assign(1024, 0);
}

std::uint64_t ElementSet::hash_span(std::span<const Vid> m) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Vid v : m) h = mix64(h ^ v);
  return h;
}

bool ElementSet::contains(std::span<const Vid> m) const {
  std::size_t mask = slots_.size() - 1;
  std::size_t i = hash_span(m) & mask;
  while (slots_[i] != 0) {
    std::size_t idx = slots_[i] - 1;
    if (std::equal(m.begin(), m.end(), arena_.begin() + idx * stride_)) return true;
    i = (i + 1) & mask;
  }
  return false;
}

bool ElementSet::insert(std::span<const Vid> m) {
  if (m.size() != stride_) throw shape_error("element size mismatch");
  if ((count_ + 1) * 4 >= slots_.size() * 3) grow();
  std::size_t mask = slots_.size() - 1;
  std::size_t i = hash_span(m) & mask;
  while (slots_[i] != 0) {
    std::size_t idx = slots_[i] - 1;
    if (std::equal(m.begin(), m.end(), arena_.begin() + idx * stride_)) return false;
    i = (i + 1) & mask;
  }
  arena_.insert(arena_.end(), m.begin(), m.end());
  slots_[i] = static_cast<std::uint32_t>(count_ + 1);
  ++count_;
  return true;
}

void ElementSet::grow() {
  std::size_t ncap = slots_.size() * 2;
  std::vector<std::uint32_t> ns(ncap, 0);
  std::size_t mask = ncap - 1;
  for (std::size_t idx = 0; idx < count_; ++idx) {
    std::span<const Vid> m{arena_.data() + idx * stride_, stride_};
    std::size_t i = hash_span(m) & mask;
    while (ns[i] != 0) i = (i + 1) & mask;
    ns[i] = static_cast<std::uint32_t>(idx + 1);
  }
  slots_ = std::move(ns);
}

EMat ElementSet::mat(std::size_t i) const {
  EMat m;
  m.dim = dim_;
  auto s = at(i);
  m.e.assign(s.begin(), s.end());
  return m;
}

} // namespace srg
