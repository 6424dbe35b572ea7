// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/universal.hpp"

#include <bit>
#include <stdexcept>

#include "everlast/errors.hpp"

namespace everlast::fe::universal {

using garble::Circuit;
using garble::CircuitBuilder;

Circuit mux_circuit(size_t n, size_t out_bits, const BitString& m) {
  if (n > 10) throw std::invalid_argument("mux: index width above 10");
  if (m.size() != n) throw std::invalid_argument("mux: message length does not match index width");
  size_t entries = size_t{1} << n;
  CircuitBuilder b(static_cast<uint32_t>(entries * out_bits));
  std::vector<uint32_t> out;
  for (size_t k = 0; k < out_bits; ++k) {
    std::vector<uint32_t> layer(entries);
    for (size_t j = 0; j < entries; ++j) layer[j] = static_cast<uint32_t>(j * out_bits + k);
    for (size_t i = 0; i < n; ++i) {
      // Entries 2e and 2e+1 differ in index bit i at this depth.
      uint8_t table = m[i] ? 0b1010 : 0b1100;
      std::vector<uint32_t> next(layer.size() / 2);
      for (size_t e = 0; e < next.size(); ++e) next[e] = b.gate(table, layer[2 * e], layer[2 * e + 1]);
      layer = std::move(next);
    }
    out.push_back(layer[0]);
  }
  return std::move(b).finish(std::move(out));
}

Universal mux(size_t n, size_t out_bits) {
  Universal u;
  u.desc_bits = (size_t{1} << n) * out_bits;
  u.msg_bits = n;
  u.out_bits = out_bits;
  u.build = [n, out_bits](const BitString& m) { return mux_circuit(n, out_bits, m); };
  return u;
}

namespace {

// A wire, possibly negated, or a constant. Negations and constants are
// folded into the tables of the gates that read them. Only structural
// constants (fixed by p and the input count) go through here, so the
// folding never depends on hardwired data.
struct W {
  int64_t wire = -1;  // -1: constant
  bool neg = false;   // constant value when wire < 0
};

class Sym {
 public:
  explicit Sym(CircuitBuilder& b) : b_(b) {}

  static W konst(bool v) { return {-1, v}; }
  static W lift(uint32_t w) { return {w, false}; }
  static W negate(W x) { return {x.wire, !x.neg}; }

  W gate(uint8_t table, W x, W y) {
    auto at = [table](bool a, bool b) { return static_cast<bool>((table >> ((a << 1) | b)) & 1); };
    if (x.wire < 0 && y.wire < 0) return konst(at(x.neg, y.neg));
    if (x.wire < 0) return unary(at(x.neg, y.neg), at(x.neg, !y.neg), y.wire);
    if (y.wire < 0) return unary(at(x.neg, y.neg), at(!x.neg, y.neg), x.wire);
    if (x.wire == y.wire) return unary(at(x.neg, y.neg), at(!x.neg, !y.neg), x.wire);
    uint8_t t = 0;
    for (int ra = 0; ra < 2; ++ra)
      for (int rb = 0; rb < 2; ++rb)
        if (at(ra != x.neg, rb != y.neg)) t |= static_cast<uint8_t>(1 << ((ra << 1) | rb));
    return lift(b_.gate(t, static_cast<uint32_t>(x.wire), static_cast<uint32_t>(y.wire)));
  }
  W xor_(W x, W y) { return gate(0b0110, x, y); }
  W and_(W x, W y) { return gate(0b1000, x, y); }

  // A plain output wire for x.
  uint32_t materialize(W x) {
    if (x.wire >= 0 && !x.neg) return static_cast<uint32_t>(x.wire);
    if (x.wire < 0) return b_.gate(x.neg ? 0b1111 : 0b0000, 0, 0);
    return b_.unary(0b01, static_cast<uint32_t>(x.wire));
  }

 private:
  // u0 = value when the raw wire is 0, u1 when it is 1.
  static W unary(bool u0, bool u1, int64_t wire) {
    if (u0 == u1) return konst(u0);
    return {wire, u0};
  }
  CircuitBuilder& b_;
};

size_t bit_length(uint64_t v) { return static_cast<size_t>(std::bit_width(v)); }

}  // namespace

Circuit linear_circuit(const field::Field& f, const std::vector<uint64_t>& weights) {
  const uint64_t p = f.p();
  const size_t w = f.width();
  const size_t K = weights.size();
  if (K == 0) throw std::invalid_argument("linear: no inputs");
  for (uint64_t x : weights)
    if (x >= p) throw std::invalid_argument("linear: weight not reduced mod p");
  CircuitBuilder b(static_cast<uint32_t>(K));
  Sym s(b);

  // Layer 1: each input pair becomes one w-bit number (d_a W_a + d_b W_b) mod p.
  // These tables carry the hardwired data, so every bit is a real gate.
  size_t numbers = (K + 1) / 2;
  std::vector<std::vector<W>> columns;
  for (size_t i = 0; i < numbers; ++i) {
    uint32_t a = static_cast<uint32_t>(2 * i);
    bool pair = 2 * i + 1 < K;
    uint64_t wa = weights[a], wb = pair ? weights[a + 1] : 0;
    for (size_t j = 0; j < w; ++j) {
      uint32_t out;
      if (pair) {
        uint8_t t = 0;
        for (int sa = 0; sa < 2; ++sa)
          for (int sb = 0; sb < 2; ++sb)
            if ((((sa * wa + sb * wb) % p) >> j) & 1) t |= static_cast<uint8_t>(1 << ((sa << 1) | sb));
        out = b.gate(t, a, a + 1);
      } else {
        uint8_t t = static_cast<uint8_t>(((0 >> j) & 1) | (((wa >> j) & 1) << 1));
        out = b.unary(t, a);
      }
      if (columns.size() <= j) columns.resize(j + 1);
      columns[j].push_back(Sym::lift(out));
    }
  }

  // Column compression down to one bit per column.
  uint64_t bound = static_cast<uint64_t>(numbers) * (p - 1);
  size_t nb = std::max<size_t>(1, bit_length(bound));
  columns.resize(nb + 1);
  std::vector<W> d(nb);
  for (size_t c = 0; c < nb; ++c) {
    auto& col = columns[c];
    while (col.size() >= 3) {
      W x = col[col.size() - 1], y = col[col.size() - 2], z = col[col.size() - 3];
      col.resize(col.size() - 3);
      W t = s.xor_(x, y);
      col.push_back(s.xor_(t, z));
      columns[c + 1].push_back(s.xor_(s.and_(x, y), s.and_(z, t)));
    }
    if (col.size() == 2) {
      W x = col[0], y = col[1];
      col = {s.xor_(x, y)};
      columns[c + 1].push_back(s.and_(x, y));
    }
    d[c] = col.empty() ? Sym::konst(false) : col[0];
  }

  // Conditional subtraction of p * 2^j, largest j first. Before the step
  // for j the value is below p * 2^(j+1); after it, below p * 2^j.
  size_t J = 0;
  while ((p << (J + 1)) <= bound) ++J;
  for (size_t jj = J + 1; jj-- > 0;) {
    uint64_t K = p << jj;
    if (K > bound) continue;
    W borrow = Sym::konst(false);
    std::vector<W> tmask(nb);
    for (size_t i = jj; i < nb; ++i) {
      bool ki = (K >> i) & 1;
      tmask[i] = ki ? Sym::negate(borrow) : borrow;  // K_i xor borrow_i
      // borrow' = K_i ? (!d | borrow) : (!d & borrow)
      borrow = ki ? s.gate(0b1011, d[i], borrow) : s.gate(0b0010, d[i], borrow);
    }
    W ge = Sym::negate(borrow);
    for (size_t i = jj; i < nb; ++i) d[i] = s.xor_(d[i], s.and_(ge, tmask[i]));
    bound = K - 1;
    nb = std::max<size_t>(1, bit_length(bound));
    d.resize(nb);
  }

  std::vector<uint32_t> out;
  for (size_t i = 0; i < w; ++i) out.push_back(s.materialize(i < d.size() ? d[i] : Sym::konst(false)));
  return std::move(b).finish(std::move(out));
}

BitString encode_elements(const field::Field& f, const std::vector<uint64_t>& v) {
  size_t w = f.width();
  BitString out;
  for (uint64_t x : v) {
    if (x >= f.p()) throw std::invalid_argument("encode_elements: value not reduced");
    out.append(BitString::from_uint(x, w));
  }
  return out;
}

std::vector<uint64_t> decode_elements(const field::Field& f, const BitString& b) {
  size_t w = f.width();
  if (w == 0 || b.size() % w != 0) throw FormatError("decode_elements: length is not a multiple of the width");
  std::vector<uint64_t> out;
  for (size_t off = 0; off < b.size(); off += w) {
    uint64_t x = b.slice(off, w).to_uint();
    if (x >= f.p()) throw FormatError("decode_elements: value not below p");
    out.push_back(x);
  }
  return out;
}

LinearShape linear_shape(const field::Field& f, size_t ell, size_t degree, size_t S) {
  LinearShape s{f, field::monomials_up_to(ell, degree), ell, S};
  return s;
}

BitString encode_linear_desc(const LinearShape& shape, const field::SparsePolynomial& C,
                             const std::vector<uint32_t>& delta) {
  if (C.nvars() != shape.ell) throw std::invalid_argument("linear desc: variable count mismatch");
  BitString out = encode_elements(shape.field, field::coefficients_in_basis(shape.field, C, shape.basis));
  BitString ind(shape.S);
  for (uint32_t a : delta) {
    if (a >= shape.S) throw std::invalid_argument("linear desc: Delta index out of range");
    ind.set(a, true);
  }
  out.append(ind);
  return out;
}

std::vector<uint64_t> linear_weights(const LinearShape& shape, const BitString& m) {
  if (m.size() != shape.msg_bits()) throw std::invalid_argument("linear: message length mismatch");
  const field::Field& f = shape.field;
  auto e = decode_elements(f, m);
  std::vector<uint64_t> mu(e.begin(), e.begin() + static_cast<long>(shape.ell));
  std::vector<uint64_t> weights;
  for (const auto& mono : shape.basis) {
    uint64_t c = field::eval_monomial(f, mono, mu);
    uint64_t pow2 = 1 % f.p();
    for (size_t k = 0; k < f.width(); ++k) {
      weights.push_back(f.mul(pow2, c));
      pow2 = f.add(pow2, pow2);
    }
  }
  for (size_t a = 0; a < shape.S; ++a) weights.push_back(e[shape.ell + a]);
  return weights;
}

Universal linear(const LinearShape& shape) {
  Universal u;
  u.desc_bits = shape.desc_bits();
  u.msg_bits = shape.msg_bits();
  u.out_bits = shape.field.width();
  u.build = [shape](const BitString& m) { return linear_circuit(shape.field, linear_weights(shape, m)); };
  return u;
}

}  // namespace everlast::fe::universal
