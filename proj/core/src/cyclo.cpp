#include "srg/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

namespace srg {

std::size_t rat_hash(const Rational& r) {
  auto mix = [](std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::size_t h = 0xcbf29ce484222325ULL;
  auto hash_mpz = [&](const mpz_class& z) {
    h = mix(h, static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())));
    std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i)
      h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
  };
  hash_mpz(r.get_num());
  hash_mpz(r.get_den());
  return h;
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw cyclo_error("cannot parse rational: '" + s + "'");
  r.canonicalize();
  return r;
}

void int_bytes(const mpz_class& z, std::string& out) {
  int s = mpz_sgn(z.get_mpz_t());
  out.push_back(s == 0 ? '\0' : (s > 0 ? '\1' : '\2'));
  std::size_t count = 0;
  std::string buf;
  if (s != 0) {
    buf.resize((mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8);
    mpz_export(buf.data(), &count, -1, 1, 0, 0, z.get_mpz_t());
    buf.resize(count);
  }
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<char>((count >> (8 * i)) & 0xff));
  out += buf;
}

void rat_bytes(const Rational& r, std::string& out) {
  int_bytes(r.get_num(), out);
  int_bytes(r.get_den(), out);
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

using ZPoly = std::vector<mpz_class>; // dense, index = degree

ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b) {
  // exact division of integer polynomials, b monic up to sign of lead
  ZPoly r = a;
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
  for (int i = static_cast<int>(r.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    if (r[i] == 0) continue;
    mpz_class f = r[i] / b.back();
    int shift = i - static_cast<int>(b.size()) + 1;
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[shift + j] -= f * b[j];
  }
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

ZPoly cyclotomic_poly(unsigned n) {
  // x^n - 1 divided by all Phi_d with d | n, d < n
  ZPoly num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = zpoly_divexact(num, cyclotomic_poly(d));
  }
  return num;
}

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref_inplace(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && rat_is_zero(m[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rational inv_p = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv_p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || rat_is_zero(m[i][c])) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

struct SubfieldStep {
  unsigned m = 0;                 // target conductor n/p
  std::vector<unsigned> galois;   // k != 1 with k = 1 mod m, gcd(k, n) = 1
  QMat solve;                     // phi(n) x phi(n) row transform T
  std::vector<int> pivots;        // T*E = [I; 0] bookkeeping
};

struct Tables {
  unsigned n = 1;
  unsigned phi = 1;
  // zeta^e in the power basis, for phi <= e <= emax
  std::vector<QVec> rows;
  unsigned emax = 0;
  std::vector<SubfieldStep> steps; // one per prime divisor of n
};

class TableRegistry {
public:
  static const Tables& get(unsigned n) {
    static TableRegistry reg;
    auto it = reg.cache_.find(n);
    if (it != reg.cache_.end()) return *it->second;
    auto t = std::make_unique<Tables>(reg.build(n));
    const Tables& ref = *t;
    reg.cache_.emplace(n, std::move(t));
    return ref;
  }

private:
  std::map<unsigned, std::unique_ptr<Tables>> cache_;

  Tables build(unsigned n) {
    Tables t;
    t.n = n;
    t.phi = euler_phi(n);
    ZPoly cp = cyclotomic_poly(n);
    t.emax = std::max(n == 0 ? 0 : n - 1, 2 * t.phi >= 2 ? 2 * t.phi - 2 : 0);
    // rows by repeated multiplication with x and folding the lead
    QVec cur(t.phi, Rational(0));
    if (t.phi == 1) {
      // zeta^1 = -cp[0] (x = -const for linear Phi)
      cur[0] = Rational(-cp[0]);
    } else {
      cur[1] = 1;
    }
    // cur holds zeta^1; advance to zeta^phi and beyond
    auto mul_x = [&](const QVec& v) {
      QVec w(t.phi, Rational(0));
      for (std::size_t i = 0; i + 1 < t.phi; ++i) w[i + 1] = v[i];
      if (!rat_is_zero(v[t.phi - 1])) {
        // x^phi = -(cp[0] + cp[1] x + ...)
        const Rational lead = v[t.phi - 1];
        for (std::size_t i = 0; i < t.phi; ++i)
          w[i] -= lead * Rational(cp[i]);
      }
      return w;
    };
    t.rows.reserve(t.emax >= t.phi ? t.emax - t.phi + 1 : 0);
    QVec power = cur;
    for (unsigned e = 2; e <= t.emax; ++e) {
      power = mul_x(power);
      if (e >= t.phi) t.rows.push_back(power);
    }
    if (t.phi == 1 && t.emax >= 1) {
      // for phi = 1, zeta^1 itself is already a reduction row
      t.rows.insert(t.rows.begin(), cur);
    }
    for (unsigned p : prime_factors(n)) t.steps.push_back(make_step(t, p));
    return t;
  }

  SubfieldStep make_step(const Tables& t, unsigned p) {
    SubfieldStep s;
    s.m = t.n / p;
    for (unsigned k = 1 + s.m; k < t.n; k += s.m)
      if (std::gcd(k, t.n) == 1) s.galois.push_back(k);
    unsigned phim = euler_phi(s.m);
    // columns of E: zeta_m^j = zeta_n^{p j} in the power basis of n
    QMat aug(t.phi, QVec(phim + t.phi, Rational(0)));
    for (unsigned j = 0; j < phim; ++j) {
      QVec col = power_vec(t, (static_cast<unsigned long>(p) * j) % t.n);
      for (unsigned i = 0; i < t.phi; ++i) aug[i][j] = col[i];
    }
    for (unsigned i = 0; i < t.phi; ++i) aug[i][phim + i] = 1;
    s.pivots = rref_inplace(aug);
    // keep only the transform part T with T*E in rref
    s.solve.assign(t.phi, QVec(t.phi, Rational(0)));
    for (unsigned i = 0; i < t.phi; ++i)
      for (unsigned j = 0; j < t.phi; ++j) s.solve[i][j] = aug[i][phim + j];
    return s;
  }

public:
  static QVec power_vec(const Tables& t, unsigned e) {
    QVec v(t.phi, Rational(0));
    if (e < t.phi) {
      v[e] = 1;
    } else {
      v = t.rows[e - t.phi];
    }
    return v;
  }
};

QVec apply_galois(const Tables& t, const QVec& c, unsigned k) {
  QVec out(t.phi, Rational(0));
  for (unsigned i = 0; i < t.phi; ++i) {
    if (rat_is_zero(c[i])) continue;
    unsigned e = static_cast<unsigned>((static_cast<unsigned long>(i) * k) % t.n);
    if (e < t.phi) {
      out[e] += c[i];
    } else {
      const QVec& row = t.rows[e - t.phi];
      for (unsigned j = 0; j < t.phi; ++j)
        if (!rat_is_zero(row[j])) out[j] += c[i] * row[j];
    }
  }
  return out;
}

} // namespace

CycNumber CycNumber::from_powers(unsigned n, std::vector<Rational> coeffs) {
  if (n == 0) throw invalid_conductor_error("conductor must be positive");
  if (coeffs.size() > n)
    throw cyclo_error("power vector longer than conductor");
  const Tables& t = TableRegistry::get(n);
  CycNumber x;
  x.n_ = n;
  x.c_.assign(t.phi, Rational(0));
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (rat_is_zero(coeffs[e])) continue;
    if (e < t.phi) {
      x.c_[e] += coeffs[e];
    } else {
      const QVec& row = t.rows[e - t.phi];
      for (unsigned j = 0; j < t.phi; ++j)
        if (!rat_is_zero(row[j])) x.c_[j] += coeffs[e] * row[j];
    }
  }
  return x;
}

CycNumber root_of_unity(unsigned n, long k) {
  if (n == 0) throw invalid_conductor_error("conductor must be positive");
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(e)] = 1;
  return CycNumber::from_powers(n, std::move(coeffs));
}

bool CycNumber::is_zero() const {
  for (const auto& c : c_)
    if (!rat_is_zero(c)) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!rat_is_zero(c_[i])) return false;
  return true;
}

Rational CycNumber::to_rational() const {
  if (!is_rational()) throw cyclo_error("value is not rational");
  return c_[0];
}

CycNumber CycNumber::embedded(unsigned m) const {
  if (m == 0) throw invalid_conductor_error("conductor must be positive");
  if (m % n_ != 0)
    throw embedding_error("conductor " + std::to_string(n_) +
                          " does not divide " + std::to_string(m));
  if (m == n_) return *this;
  unsigned q = m / n_;
  std::vector<Rational> coeffs(m, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    coeffs[i * q] = c_[i];
  return from_powers(m, std::move(coeffs));
}

CycNumber CycNumber::canonical() const {
  CycNumber x = *this;
  bool changed = true;
  while (changed && x.n_ > 1) {
    changed = false;
    const Tables& t = TableRegistry::get(x.n_);
    for (const SubfieldStep& s : t.steps) {
      bool fixed = true;
      for (unsigned k : s.galois) {
        if (apply_galois(t, x.c_, k) != x.c_) {
          fixed = false;
          break;
        }
      }
      if (!fixed) continue;
      unsigned phim = euler_phi(s.m);
      QVec y(phim, Rational(0));
      // y = first phim entries of T*x, ordered by the recorded pivots
      for (unsigned r = 0; r < t.phi; ++r) {
        Rational acc(0);
        for (unsigned j = 0; j < t.phi; ++j)
          if (!rat_is_zero(s.solve[r][j])) acc += s.solve[r][j] * x.c_[j];
        if (r < s.pivots.size() && s.pivots[r] < static_cast<int>(phim))
          y[s.pivots[r]] = acc;
        else if (!rat_is_zero(acc))
          throw cyclo_error("internal: inconsistent subfield rewrite");
      }
      CycNumber next;
      next.n_ = s.m;
      next.c_ = std::move(y);
      x = std::move(next);
      changed = true;
      break;
    }
  }
  return x;
}

namespace {

void align(const CycNumber& a, const CycNumber& b, CycNumber& ea, CycNumber& eb) {
  unsigned l = static_cast<unsigned>(
      std::lcm<unsigned long>(a.conductor(), b.conductor()));
  ea = a.embedded(l);
  eb = b.embedded(l);
}

} // namespace

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
  CycNumber x, y;
  align(a, b, x, y);
  std::vector<Rational> c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
  return CycNumber::from_powers(x.conductor(), std::move(c));
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

CycNumber CycNumber::operator-() const {
  CycNumber x = *this;
  for (auto& c : x.c_) c = -c;
  return x;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  CycNumber x, y;
  align(a, b, x, y);
  unsigned n = x.conductor();
  const auto& xc = x.coeffs();
  const auto& yc = y.coeffs();
  std::vector<Rational> prod(xc.size() + yc.size() - 1, Rational(0));
  for (std::size_t i = 0; i < xc.size(); ++i) {
    if (rat_is_zero(xc[i])) continue;
    for (std::size_t j = 0; j < yc.size(); ++j) {
      if (rat_is_zero(yc[j])) continue;
      prod[i + j] += xc[i] * yc[j];
    }
  }
  // degree may reach 2 phi - 2 < emax + 1; from_powers handles up to n - 1,
  // so fold the tail explicitly first if needed
  const Tables& t = TableRegistry::get(n);
  if (prod.size() > n) {
    std::vector<Rational> folded(n, Rational(0));
    for (std::size_t e = 0; e < prod.size(); ++e) {
      if (rat_is_zero(prod[e])) continue;
      if (e < t.phi) {
        folded[e] += prod[e];
      } else {
        const auto& row = t.rows[e - t.phi];
        for (unsigned j = 0; j < t.phi; ++j)
          if (!rat_is_zero(row[j])) folded[j] += prod[e] * row[j];
      }
    }
    prod = std::move(folded);
  }
  return CycNumber::from_powers(n, std::move(prod));
}

CycNumber CycNumber::inv() const {
  if (is_zero()) throw division_by_zero_error("division by zero");
  const CycNumber x = canonical();
  unsigned n = x.n_;
  const Tables& t = TableRegistry::get(n);
  unsigned phi = t.phi;
  if (phi == 1) {
    CycNumber r;
    r.n_ = n;
    r.c_ = {1 / x.c_[0]};
    return r;
  }
  // multiplication-by-x matrix; solve M y = e_0
  QMat aug(phi, QVec(phi + 1, Rational(0)));
  CycNumber basis = x;
  for (unsigned j = 0; j < phi; ++j) {
    for (unsigned i = 0; i < phi; ++i) aug[i][j] = basis.c_[i];
    if (j + 1 < phi) {
      CycNumber z = root_of_unity(n, 1);
      basis = basis * z;
    }
  }
  aug[0][phi] = 1;
  rref_inplace(aug);
  CycNumber r;
  r.n_ = n;
  r.c_.assign(phi, Rational(0));
  // after rref the matrix is invertible, rows are e_i -> solution entries
  for (unsigned i = 0; i < phi; ++i) r.c_[i] = aug[i][phi];
  return r;
}

CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inv(); }

CycNumber CycNumber::conj() const {
  const Tables& t = TableRegistry::get(n_);
  CycNumber r;
  r.n_ = n_;
  r.c_ = apply_galois(t, c_, n_ - 1 == 0 ? 0 : n_ - 1);
  if (n_ == 1) r.c_ = c_;
  return r;
}

CycNumber CycNumber::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  CycNumber base = *this;
  CycNumber acc(1);
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  CycNumber x, y;
  align(a, b, x, y);
  return x.c_ == y.c_;
}

std::string CycNumber::bytes() const {
  CycNumber c = canonical();
  std::string out;
  auto put_u32 = [&](unsigned v) {
    for (int i = 0; i < 4; ++i)
      out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put_u32(c.n_);
  unsigned terms = 0;
  for (const auto& co : c.c_)
    if (!rat_is_zero(co)) ++terms;
  put_u32(terms);
  for (unsigned e = 0; e < c.c_.size(); ++e) {
    if (rat_is_zero(c.c_[e])) continue;
    put_u32(e);
    rat_bytes(c.c_[e], out);
  }
  return out;
}

std::size_t CycNumber::hash() const {
  std::string b = bytes();
  std::size_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : b) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string CycNumber::str() const {
  CycNumber c = canonical();
  std::ostringstream os;
  bool first = true;
  for (unsigned e = 0; e < c.c_.size(); ++e) {
    if (rat_is_zero(c.c_[e])) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(c.c_[e]);
    if (e > 0) os << "*z(" << c.n_ << ")^" << e;
  }
  if (first) os << "0";
  return os.str();
}

CycNumber CycNumber::parse(const std::string& s) {
  // terms separated by " + " (a leading '-' belongs to the coefficient)
  CycNumber acc(0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 3;
    // trim
    while (!term.empty() && term.front() == ' ') term.erase(term.begin());
    while (!term.empty() && term.back() == ' ') term.pop_back();
    if (term.empty()) continue;
    std::size_t star = term.find("*z(");
    if (star == std::string::npos) {
      acc = acc + CycNumber(rat_parse(term));
    } else {
      Rational coeff = rat_parse(term.substr(0, star));
      std::size_t close = term.find(')', star);
      std::size_t caret = term.find('^', close);
      if (close == std::string::npos || caret == std::string::npos)
        throw cyclo_error("cannot parse cyclotomic term: '" + term + "'");
      unsigned n = static_cast<unsigned>(std::stoul(term.substr(star + 3, close - star - 3)));
      long e = std::stol(term.substr(caret + 1));
      acc = acc + CycNumber(coeff) * root_of_unity(n, e);
    }
  }
  return acc;
}

} // namespace srg
