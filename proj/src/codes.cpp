// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/codes.hpp"

#include <stdexcept>

namespace everlast::codes {

LinearCode LinearCode::from_generator(const std::vector<BitString>& rows, size_t length,
                                      size_t distance_t) {
  LinearCode c;
  c.q_ = length;
  c.t_ = distance_t;
  std::vector<BitString> m;
  for (const auto& r : rows) {
    if (r.size() != length) throw std::invalid_argument("generator row has wrong length");
    m.push_back(r);
  }
  size_t rank = 0;
  for (size_t col = 0; col < length && rank < m.size(); ++col) {
    size_t sel = rank;
    while (sel < m.size() && !m[sel][col]) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    for (size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][col]) m[r] ^= m[rank];
    c.pivots_.push_back(col);
    ++rank;
  }
  m.resize(rank);
  c.rref_ = std::move(m);
  // Parity checks: one per free column f, with a 1 at f and at every pivot
  // whose row has a 1 in column f.
  std::vector<bool> is_pivot(length, false);
  for (size_t p : c.pivots_) is_pivot[p] = true;
  for (size_t f = 0; f < length; ++f) {
    if (is_pivot[f]) continue;
    BitString h(length);
    h.set(f, true);
    for (size_t r = 0; r < c.rref_.size(); ++r)
      if (c.rref_[r][f]) h.set(c.pivots_[r], true);
    c.check_.push_back(h);
  }
  return c;
}

bool LinearCode::contains(const BitString& x) const { return coset_mod(x).is_zero(); }

BitString LinearCode::coset_mod(const BitString& x) const {
  if (x.size() != q_) throw std::invalid_argument("coset_mod: length mismatch");
  BitString r = x;
  for (size_t i = 0; i < rref_.size(); ++i)
    if (r[pivots_[i]]) r ^= rref_[i];
  return r;
}

BitString LinearCode::encode(const BitString& coeffs) const {
  if (coeffs.size() != rref_.size()) throw std::invalid_argument("encode: coefficient length mismatch");
  BitString r(q_);
  for (size_t i = 0; i < rref_.size(); ++i)
    if (coeffs[i]) r ^= rref_[i];
  return r;
}

CssPair::CssPair(LinearCode c1, LinearCode c2) : c1_(std::move(c1)), c2_(std::move(c2)) {
  if (c1_.length() != c2_.length()) throw std::invalid_argument("CSS codes differ in length");
  for (const auto& r : c2_.generator())
    if (!c1_.contains(r)) throw std::invalid_argument("C2 is not a subcode of C1");
  // Smallest nonzero canonical representative of C1/C2 by scanning C1.
  size_t k = c1_.dimension();
  for (uint64_t v = 1; v < (uint64_t{1} << k) && one_rep_.empty(); ++v) {
    BitString rep = c2_.coset_mod(c1_.encode(BitString::from_uint(v, k)));
    if (!rep.is_zero()) one_rep_ = rep;
  }
}

CssPair CssPair::hamming7() {
  std::vector<BitString> g1 = {
      BitString::from_string("1000110"), BitString::from_string("0100101"),
      BitString::from_string("0010011"), BitString::from_string("0001111")};
  std::vector<BitString> g2 = {BitString::from_string("1101100"), BitString::from_string("1011010"),
                               BitString::from_string("0111001")};
  return CssPair(LinearCode::from_generator(g1, 7, 1), LinearCode::from_generator(g2, 7, 1));
}

BitString CssPair::sample(CosetSpace space, Rng& rng) const {
  switch (space) {
    case CosetSpace::kC2:
      return c2_.encode(BitString::random(c2_.dimension(), rng));
    case CosetSpace::kC1:
      return c1_.encode(BitString::random(c1_.dimension(), rng));
    case CosetSpace::kC1ModC2:
      return c2_.coset_mod(c1_.encode(BitString::random(c1_.dimension(), rng)));
    case CosetSpace::kAmbientModC1:
      return c1_.coset_mod(BitString::random(length(), rng));
  }
  throw std::logic_error("unknown coset space");
}

BitString CssPair::encode_bit(bool m) const { return m ? one_rep_ : BitString(length()); }

bool CssPair::decode_bit(const BitString& rep) const {
  if (rep.is_zero()) return false;
  if (rep == one_rep_) return true;
  throw std::invalid_argument("not a canonical C1/C2 representative");
}

}  // namespace everlast::codes
