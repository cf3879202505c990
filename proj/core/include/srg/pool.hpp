#pragma once

#include "srg/cyclo.hpp"
#include "srg/matrix.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace srg {

// Interning engine. Field values are deduplicated by canonical form and
// handled by dense ids; all arithmetic on ids is memoized. Matrix work on
// enumerated groups (closure, scans, rank tests) runs on id vectors, which
// keeps the 82944-element groups at a few dozen bytes per entry and makes
// equality of elements a plain integer comparison.
using Vid = std::uint32_t;

class PairMemo {
public:
  Vid find(std::uint64_t key) const;
  void put(std::uint64_t key, Vid v);
  static constexpr Vid npos = 0xffffffffu;

private:
  void grow();
  std::vector<std::uint64_t> keys_;
  std::vector<Vid> vals_;
  std::size_t count_ = 0;
};

class ValuePool {
public:
  ValuePool();
  static ValuePool& global();

  Vid intern(const CycNumber& x); // canonicalizes
  const CycNumber& value(Vid a) const { return values_[a]; }
  const std::string& key(Vid a) const { return keys_[a]; }
  std::size_t size() const { return values_.size(); }

  Vid zero() const { return 0; }
  Vid one() const { return 1; }

  Vid add(Vid a, Vid b);
  Vid mul(Vid a, Vid b);
  Vid neg(Vid a);
  Vid inv(Vid a);
  Vid conj(Vid a);
  Vid sub(Vid a, Vid b) { return add(a, neg(b)); }
  Vid div(Vid a, Vid b) { return mul(a, inv(b)); }

private:
  std::vector<CycNumber> values_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, Vid> intern_;
  PairMemo add_memo_, mul_memo_;
  std::vector<Vid> neg_memo_, inv_memo_, conj_memo_;
};

// Square matrix of interned values.
struct EMat {
  int dim = 0;
  std::vector<Vid> e;

  bool operator==(const EMat& o) const { return dim == o.dim && e == o.e; }
};

EMat emat_identity(ValuePool& p, int dim);
EMat emat_from(ValuePool& p, const CycMatrix& m);
CycMatrix emat_to(const ValuePool& p, const EMat& m);
EMat emat_mul(ValuePool& p, const EMat& a, const EMat& b);
EMat emat_inverse(ValuePool& p, const EMat& a); // throws singular_error
EMat emat_transpose(const EMat& a);
EMat emat_scale(ValuePool& p, Vid c, const EMat& a);
int emat_rank(ValuePool& p, const EMat& a);
// rank(a - I), the reflection test, without materializing a - I
int emat_rank_minus_identity(ValuePool& p, const EMat& a);
std::vector<Vid> emat_apply(ValuePool& p, const EMat& a, std::span<const Vid> v);
bool emat_commutes(ValuePool& p, const EMat& a, const EMat& b);
// canonical serialization (concatenated entry keys); lexicographic order on
// this string is the deterministic element order used for representatives
std::string emat_bytes(const ValuePool& p, const EMat& m);

// Hash set of id matrices with a shared arena.
class ElementSet {
public:
  explicit ElementSet(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return count_; }
  bool insert(std::span<const Vid> m); // false if already present
  bool contains(std::span<const Vid> m) const;
  std::span<const Vid> at(std::size_t i) const {
    return {arena_.data() + i * stride_, stride_};
  }
  EMat mat(std::size_t i) const;

private:
  void grow();
  std::uint64_t hash_span(std::span<const Vid> m) const;

  int dim_;
  std::size_t stride_;
  std::vector<Vid> arena_;
  std::vector<std::uint32_t> slots_; // index+1, 0 empty
  std::size_t count_ = 0;
};

} // namespace srg
