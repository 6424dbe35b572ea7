// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations used to cross-check the real
// modules: a dense statevector simulator, a direct boolean-circuit
// evaluator, and a polynomial evaluator.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "everlast/bits.hpp"
#include "everlast/field.hpp"

namespace everlast::garble {
struct Circuit;
}

namespace everlast::oracle {

using Amp = std::complex<double>;

// Dense statevector over n qubits; index bit i = qubit i.
class DenseState {
 public:
  explicit DenseState(size_t n);
  size_t qubits() const { return n_; }
  const std::vector<Amp>& amplitudes() const { return psi_; }

  void x(size_t q);
  void z(size_t q);
  void h(size_t q);
  void cnot(size_t c, size_t t);
  // Probability that measuring q in the computational basis yields 1.
  double prob_one(size_t q) const;
  // Projects q onto the outcome and renormalizes.
  void collapse(size_t q, bool outcome);

 private:
  size_t n_;
  std::vector<Amp> psi_;
};

// One op in a statevector program.
struct Op {
  enum class Kind { kX, kZ, kH, kCnot } kind;
  size_t a = 0;
  size_t b = 0;
};
std::vector<Amp> statevector(size_t n, const std::vector<Op>& ops);

// Evaluates every wire of the circuit by memoized recursion from the
// outputs, independent of the garbling code's forward pass.
BitString circuit_eval(const garble::Circuit& c, const BitString& x);

inline uint64_t poly_eval(const field::Field& f, const field::SparsePolynomial& P,
                          const std::vector<uint64_t>& x) {
  return P.eval(f, x);
}

}  // namespace everlast::oracle
