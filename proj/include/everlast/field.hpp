// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Arithmetic over GF(p) for p < 2^32: univariate polynomials for secret
// sharing, sparse multivariate polynomials, and boolean-formula
// arithmetization.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "everlast/rng.hpp"

namespace everlast::field {

class Field {
 public:
  explicit Field(uint64_t p);
  uint64_t p() const { return p_; }
  uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p_ ? s - p_ : s; }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p_; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;
  uint64_t reduce(int64_t v) const;
  uint64_t random(Rng& rng) const { return rng.below(p_); }
  // Bits needed to write any element: ceil(log2 p).
  size_t width() const;

 private:
  uint64_t p_;
};

bool is_prime(uint64_t n);
uint64_t next_prime_above(uint64_t n);

// Coefficients c[0] + c[1] X + ...
struct UniPoly {
  std::vector<uint64_t> c;
  uint64_t eval(const Field& f, uint64_t x) const;
  size_t degree() const;  // 0 for the zero polynomial
};

// Degree <= d with the given constant term and uniform higher coefficients.
UniPoly sample_poly(const Field& f, size_t d, uint64_t constant, Rng& rng);
// Exactly d+1 points with distinct abscissae.
UniPoly lagrange_interpolate(const Field& f, const std::vector<std::pair<uint64_t, uint64_t>>& pts, size_t d);
// Value at 0 of the interpolant, without building the coefficients.
uint64_t lagrange_at_zero(const Field& f, const std::vector<std::pair<uint64_t, uint64_t>>& pts);

struct Term {
  uint64_t coef;
  std::vector<uint32_t> exps;  // one exponent per variable
};

class SparsePolynomial {
 public:
  SparsePolynomial(size_t nvars, std::vector<Term> terms);
  size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t total_degree() const;
  // Validates the invariants against a field and a degree bound.
  void check(const Field& f, size_t max_degree) const;
  uint64_t eval(const Field& f, const std::vector<uint64_t>& point) const;
  std::string to_string() const;

 private:
  size_t nvars_;
  std::vector<Term> terms_;
};

// Monomial exponent vector, e.g. {1, 1} for x0*x1.
using Monomial = std::vector<uint32_t>;
// All monomials in nvars variables of total degree <= d, graded then
// lexicographic, starting with the constant monomial.
std::vector<Monomial> monomials_up_to(size_t nvars, size_t d);
uint64_t eval_monomial(const Field& f, const Monomial& m, const std::vector<uint64_t>& point);
// Coefficient vector of P over the basis; throws if P uses a monomial
// outside it.
std::vector<uint64_t> coefficients_in_basis(const Field& f, const SparsePolynomial& P,
                                            const std::vector<Monomial>& basis);

// Boolean formulas over variables x0..x{n-1} with NOT, AND, XOR.
struct Formula {
  enum class Op { kVar, kConst, kNot, kAnd, kXor } op;
  uint32_t var = 0;
  bool value = false;
  std::shared_ptr<const Formula> lhs, rhs;

  static std::shared_ptr<const Formula> variable(uint32_t i);
  static std::shared_ptr<const Formula> constant(bool v);
  static std::shared_ptr<const Formula> negate(std::shared_ptr<const Formula> a);
  static std::shared_ptr<const Formula> conj(std::shared_ptr<const Formula> a, std::shared_ptr<const Formula> b);
  static std::shared_ptr<const Formula> exclusive(std::shared_ptr<const Formula> a, std::shared_ptr<const Formula> b);
  bool eval(const std::vector<bool>& x) const;
};

// NOT x -> 1 - x, x AND y -> xy, x XOR y -> x + y - 2xy. Throws
// std::domain_error if the result exceeds max_degree.
SparsePolynomial arithmetize(const Field& f, const Formula& formula, size_t nvars, size_t max_degree);

}  // namespace everlast::field
