#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srcov::galois {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Arithmetic in GF(p^k). Elements are indices in [0, p^k): the index
// sum(d_i p^i) stands for sum(d_i x^i) in the polynomial basis of the
// canonical modulus. The canonical modulus is the monic irreducible of
// degree k over GF(p) with the smallest integer encoding sum(c_i p^i) of
// its non-leading coefficients.
//
// Multiplication is table-driven (exp/log of a fixed primitive element),
// which caps fields at 2^16 elements.
class Field {
 public:
  static constexpr uint32_t kMaxOrder = 1u << 16;
  static constexpr uint32_t kMaxDegree = 16;

  static FieldPtr make(uint32_t p, uint32_t k);
  // Explicit modulus (low-to-high, monic, length k+1); irreducibility is
  // checked by trial division.
  static FieldPtr make_with_modulus(uint32_t p, std::vector<uint32_t> modulus);
  static FieldPtr parse(std::string_view spec);  // "p^k/coeffs"

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return k_; }
  uint32_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  uint32_t generator() const { return gen_; }

  bool same(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (xor_add_) return a ^ b;
    return add_slow(a, b);
  }
  uint32_t neg(uint32_t a) const {
    if (xor_add_) return a;
    return neg_slow(a);
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t elem_order(uint32_t a) const;

  uint32_t digit(uint32_t a, uint32_t i) const { return (a / pow_p_[i]) % p_; }
  uint32_t from_digits(std::span<const uint32_t> d) const;

  std::string elem_to_string(uint32_t a) const;
  std::optional<uint32_t> elem_parse(std::string_view s) const;
  std::string to_string() const;

 private:
  Field() = default;
  uint32_t add_slow(uint32_t a, uint32_t b) const;
  uint32_t neg_slow(uint32_t a) const;
  void build_tables();

  uint32_t p_ = 0, k_ = 0, q_ = 0, gen_ = 0;
  bool xor_add_ = false;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> pow_p_;
  std::vector<uint32_t> exp_;  // size q-1
  std::vector<uint32_t> log_;  // size q; log_[0] is a sentinel
};

// Owner-checked element. Mixing elements of different fields is a hard
// error: silent coercion would corrupt every rank computation downstream.
struct Fe {
  FieldPtr field;
  uint32_t v = 0;

  Fe() = default;
  Fe(FieldPtr f, uint32_t value) : field(std::move(f)), v(value) {}

  Fe operator+(const Fe& o) const { return with(owner(o).add(v, o.v)); }
  Fe operator-(const Fe& o) const { return with(owner(o).sub(v, o.v)); }
  Fe operator*(const Fe& o) const { return with(owner(o).mul(v, o.v)); }
  Fe operator/(const Fe& o) const { return with(owner(o).div(v, o.v)); }
  Fe inverse() const { return with(field->inv(v)); }
  bool operator==(const Fe& o) const { return field->same(*o.field) && v == o.v; }

 private:
  const Field& owner(const Fe& o) const;
  Fe with(uint32_t nv) const { return Fe(field, nv); }
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// A subfield pair GF(p^a) inside GF(p^{a*m}). Fixes the embedding (the
// smallest-index root of the subfield modulus in the extension) and the
// expansion basis (polynomial basis 1, x, ..., x^{m-1} unless overridden),
// so every row expansion is reproducible byte for byte.
class Tower {
 public:
  static TowerPtr make(FieldPtr sub, FieldPtr ext,
                       std::optional<std::vector<uint32_t>> basis = std::nullopt);
  // GF(p) inside ext.
  static TowerPtr over_prime(const FieldPtr& ext);

  const FieldPtr& sub() const { return sub_; }
  const FieldPtr& ext() const { return ext_; }
  uint32_t ratio() const { return m_; }
  const std::vector<uint32_t>& basis() const { return basis_; }

  uint32_t embed(uint32_t sub_idx) const { return embed_[sub_idx]; }

  // a -> (coordinates over sub in the tower basis), a GF(sub)-linear
  // bijection; recompose is its inverse.
  void expand(uint32_t ext_idx, uint32_t* out) const {
    const uint32_t* row = expand_tbl_.data() + size_t(ext_idx) * m_;
    for (uint32_t i = 0; i < m_; ++i) out[i] = row[i];
  }
  std::vector<uint32_t> expand(uint32_t ext_idx) const {
    std::vector<uint32_t> out(m_);
    expand(ext_idx, out.data());
    return out;
  }
  uint32_t recompose(std::span<const uint32_t> coords) const;
  // coords packed as sum(coords[i] * |sub|^i)
  uint32_t recompose_packed(uint32_t packed) const { return rec_tbl_[packed]; }

  uint32_t frobenius(uint32_t ext_idx) const { return frob_[ext_idx]; }

  // Matrix (m x m, row-major, over sub) of the GF(sub)-linear map
  // x -> sum coeffs[i] * x^{|sub|^i}; column j is expand of the image of
  // basis element j.
  std::vector<uint32_t> linearized_matrix(std::span<const uint32_t> coeffs) const;

 private:
  Tower() = default;

  FieldPtr sub_, ext_;
  uint32_t m_ = 0;
  std::vector<uint32_t> basis_;       // ext indices, size m
  std::vector<uint32_t> embed_;       // size |sub|
  std::vector<uint32_t> expand_tbl_;  // |ext| * m
  std::vector<uint32_t> rec_tbl_;     // |ext|
  std::vector<uint32_t> frob_;        // |ext|
};

}  // namespace srcov::galois
