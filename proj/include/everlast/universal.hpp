// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Universal circuits U(., m) with the plaintext m hardwired into the truth
// tables and the function description as the circuit input. The wiring
// depends only on public sizes, never on m.

#pragma once

#include <functional>
#include <vector>

#include "everlast/circuit.hpp"
#include "everlast/field.hpp"

namespace everlast::fe::universal {

struct Universal {
  size_t desc_bits = 0;
  size_t msg_bits = 0;
  size_t out_bits = 0;
  std::function<garble::Circuit(const BitString& m)> build;
};

// Truth-table lookup: the description is 2^n entries of out_bits bits
// (entry j at bits [j*out_bits, (j+1)*out_bits)), the message is an n-bit
// index, LSB first. (2^n - 1) * out_bits gates.
garble::Circuit mux_circuit(size_t n, size_t out_bits, const BitString& m);
Universal mux(size_t n, size_t out_bits);

// sum_k d_k * weights[k] mod p over input bits d, as field.width() output
// bits (LSB first). Weights must be reduced mod p.
garble::Circuit linear_circuit(const field::Field& f, const std::vector<uint64_t>& weights);

// Fixed-width encoding of field elements, field.width() bits each.
BitString encode_elements(const field::Field& f, const std::vector<uint64_t>& v);
// Throws FormatError if an element is not below p.
std::vector<uint64_t> decode_elements(const field::Field& f, const BitString& b);

// Description of G(mu, xi) = C(mu) + sum_{a in Delta} xi_a for a polynomial
// C over `basis`: the coefficients (width bits each, basis order) followed
// by one indicator bit per a in [0, S).
struct LinearShape {
  field::Field field;
  std::vector<field::Monomial> basis;
  size_t ell = 0;
  size_t S = 0;
  size_t desc_bits() const { return basis.size() * field.width() + S; }
  size_t msg_bits() const { return (ell + S) * field.width(); }
};

LinearShape linear_shape(const field::Field& f, size_t ell, size_t degree, size_t S);
BitString encode_linear_desc(const LinearShape& shape, const field::SparsePolynomial& C,
                             const std::vector<uint32_t>& delta);
// Weights of the hardwired point (mu, xi) read from m.
std::vector<uint64_t> linear_weights(const LinearShape& shape, const BitString& m);
Universal linear(const LinearShape& shape);

}  // namespace everlast::fe::universal
