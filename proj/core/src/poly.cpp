#include "srg/poly.hpp"

#include "srg/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace srg {

CPoly cpoly_trim(CPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

bool cpoly_is_zero(const CPoly& a) { return a.empty(); }

int cpoly_deg(const CPoly& a) { return static_cast<int>(a.size()) - 1; }

CPoly cpoly_add(const CPoly& a, const CPoly& b) {
  CPoly r(std::max(a.size(), b.size()), CycNumber(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return cpoly_trim(std::move(r));
}

CPoly cpoly_sub(const CPoly& a, const CPoly& b) {
  CPoly r(std::max(a.size(), b.size()), CycNumber(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  return cpoly_trim(std::move(r));
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly r(a.size() + b.size() - 1, CycNumber(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return cpoly_trim(std::move(r));
}

std::pair<CPoly, CPoly> cpoly_divmod(const CPoly& a, const CPoly& b) {
  if (b.empty()) throw division_by_zero_error("polynomial division by zero");
  CPoly r = a;
  CPoly q;
  CycNumber lead_inv = b.back().inv();
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, CycNumber(0));
  for (int i = static_cast<int>(r.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    if (r[i].is_zero()) continue;
    CycNumber f = r[i] * lead_inv;
    int shift = i - static_cast<int>(b.size()) + 1;
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[shift + j] = r[shift + j] - f * b[j];
  }
  return {cpoly_trim(std::move(q)), cpoly_trim(std::move(r))};
}

CPoly cpoly_monic(const CPoly& a) {
  if (a.empty()) return a;
  CycNumber inv = a.back().inv();
  CPoly r = a;
  for (auto& c : r) c = c * inv;
  return r;
}

CPoly cpoly_gcd(CPoly a, CPoly b) {
  a = cpoly_trim(std::move(a));
  b = cpoly_trim(std::move(b));
  while (!b.empty()) {
    CPoly r = cpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return cpoly_monic(a);
}

CPoly det_one_minus_t(const CycMatrix& g) {
  std::vector<CycNumber> cp = g.charpoly(); // det(tI - A), monic
  CPoly r(cp.rbegin(), cp.rend());          // det(I - tA) = t^n cp(1/t)
  return cpoly_trim(std::move(r));
}

namespace {

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && rat_is_zero(p.back())) p.pop_back();
  return p;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qpoly_trim(std::move(r));
}

// remainder of a by b; also writes the quotient if q != nullptr
QPoly qpoly_rem(QPoly a, const QPoly& b, QPoly* q = nullptr) {
  if (q && a.size() >= b.size()) q->assign(a.size() - b.size() + 1, Rational(0));
  else if (q) q->clear();
  for (int i = static_cast<int>(a.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    if (rat_is_zero(a[i])) continue;
    Rational f = a[i] / b.back();
    int shift = i - static_cast<int>(b.size()) + 1;
    if (q) (*q)[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  return qpoly_trim(std::move(a));
}

QPoly cyclotomic_qpoly(unsigned m) {
  static std::map<unsigned, QPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  QPoly num(m + 1, Rational(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned dd = 1; dd < m; ++dd) {
    if (m % dd != 0) continue;
    QPoly q;
    QPoly rem = qpoly_rem(num, cyclotomic_qpoly(dd), &q);
    if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
    num = std::move(q);
  }
  cache.emplace(m, num);
  return num;
}

struct CFrac {
  CPoly num;
  CPoly den;
};

CFrac cfrac_reduce(CFrac f) {
  CPoly g = cpoly_gcd(f.num, f.den);
  if (cpoly_deg(g) > 0) {
    f.num = cpoly_divmod(f.num, g).first;
    f.den = cpoly_divmod(f.den, g).first;
  }
  return f;
}

CFrac cfrac_add(const CFrac& a, const CFrac& b) {
  CFrac r;
  r.num = cpoly_add(cpoly_mul(a.num, b.den), cpoly_mul(b.num, a.den));
  r.den = cpoly_mul(a.den, b.den);
  return cfrac_reduce(std::move(r));
}

} // namespace

RationalFunction molien_series(const FiniteMatrixGroup& g) {
  const ElementSet& set = g.eset();
  CFrac acc{{}, {CycNumber(1)}};
  for (std::size_t i = 0; i < set.size(); ++i) {
    CycMatrix m = g.element(i);
    CFrac term{{CycNumber(1)}, det_one_minus_t(m)};
    acc = cfrac_add(acc, term);
  }
  // divide by |G|
  CycNumber scale = CycNumber(1) / CycNumber(Rational(static_cast<long>(set.size())));
  for (auto& c : acc.num) c = c * scale;
  acc = cfrac_reduce(std::move(acc));
  // normalize den(0) = 1 (no pole at t = 0: every det(1 - tg) has constant 1)
  if (acc.den.empty() || acc.den[0].is_zero())
    throw std::logic_error("molien denominator vanishes at 0");
  CycNumber d0inv = acc.den[0].inv();
  RationalFunction out;
  for (const auto& c : acc.num) {
    CycNumber v = (c * d0inv).canonical();
    if (!v.is_rational())
      throw std::logic_error("molien coefficient is not rational");
    out.num.push_back(v.to_rational());
  }
  for (const auto& c : acc.den) {
    CycNumber v = (c * d0inv).canonical();
    if (!v.is_rational())
      throw std::logic_error("molien coefficient is not rational");
    out.den.push_back(v.to_rational());
  }
  return out;
}

RationalFunction molien_of_degrees(const std::vector<unsigned>& degrees) {
  RationalFunction f;
  f.num = {Rational(1)};
  f.den = {Rational(1)};
  for (unsigned d : degrees) {
    QPoly factor(d + 1, Rational(0));
    factor[0] = 1;
    factor[d] = -1;
    f.den = qpoly_mul(f.den, factor);
  }
  return f;
}

std::string RationalFunction::str() const {
  auto poly_str = [](const QPoly& p) {
    if (p.empty()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (rat_is_zero(p[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << rat_str(p[i]);
      if (i >= 1) os << "*t^" << i;
    }
    if (first) os << "0";
    return os.str();
  };
  return "(" + poly_str(num) + ")/(" + poly_str(den) + ")";
}

std::vector<Rational> RationalFunction::series(unsigned upto) const {
  std::vector<Rational> s(upto + 1, Rational(0));
  if (den.empty() || rat_is_zero(den[0]))
    throw std::logic_error("series expansion needs den(0) != 0");
  for (unsigned k = 0; k <= upto; ++k) {
    Rational acc = k < num.size() ? num[k] : Rational(0);
    for (unsigned j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * s[k - j];
    s[k] = acc / den[0];
  }
  return s;
}

std::optional<std::vector<unsigned>> invariant_degrees(const RationalFunction& f) {
  if (f.num != QPoly{Rational(1)}) return std::nullopt;
  if (f.den.empty()) return std::nullopt;
  int deg = static_cast<int>(f.den.size()) - 1;
  // multiplicity N_m of the cyclotomic Phi_m in the denominator
  std::map<unsigned, int> nm;
  for (unsigned m = 1; m <= static_cast<unsigned>(deg); ++m) {
    QPoly cur = f.den;
    QPoly phim = cyclotomic_qpoly(m);
    int count = 0;
    while (true) {
      QPoly q;
      QPoly rem = qpoly_rem(cur, phim, &q);
      if (!rem.empty()) break;
      cur = std::move(q);
      ++count;
      if (cur.size() < phim.size()) break;
    }
    if (count > 0) nm[m] = count;
  }
  // peel: count of factors (1 - t^a) is N_a minus factors of larger multiples
  std::map<unsigned, int> counts;
  for (auto it = nm.rbegin(); it != nm.rend(); ++it) {
    unsigned a = it->first;
    int c = it->second;
    for (unsigned m = 2 * a; m <= static_cast<unsigned>(deg); m += a) {
      auto f2 = counts.find(m);
      if (f2 != counts.end()) c -= f2->second;
    }
    if (c < 0) return std::nullopt;
    if (c > 0) counts[a] = c;
  }
  std::vector<unsigned> degrees;
  for (auto& [a, c] : counts)
    for (int i = 0; i < c; ++i) degrees.push_back(a);
  // verify the reconstruction exactly
  if (!(molien_of_degrees(degrees).den == f.den)) return std::nullopt;
  return degrees;
}

} // namespace srg
