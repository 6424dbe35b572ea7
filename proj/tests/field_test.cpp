// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "everlast/field.hpp"

using namespace everlast;
using namespace everlast::field;

namespace {

std::shared_ptr<const Formula> random_formula(size_t nvars, int depth, Rng& rng) {
  if (depth == 0 || rng.below(4) == 0) {
    if (rng.below(8) == 0) return Formula::constant(rng.bit());
    return Formula::variable(static_cast<uint32_t>(rng.below(nvars)));
  }
  switch (rng.below(3)) {
    case 0: return Formula::negate(random_formula(nvars, depth - 1, rng));
    case 1: return Formula::conj(random_formula(nvars, depth - 1, rng), random_formula(nvars, depth - 1, rng));
    default:
      return Formula::exclusive(random_formula(nvars, depth - 1, rng), random_formula(nvars, depth - 1, rng));
  }
}

}  // namespace

TEST(Field, Arithmetic) {
  Field f(257);
  EXPECT_EQ(f.width(), 9u);
  EXPECT_EQ(Field(256 + 1).width(), 9u);
  EXPECT_EQ(Field(17).width(), 5u);
  for (uint64_t a = 1; a < 257; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.reduce(-1), 256u);
  EXPECT_THROW(Field(15), std::invalid_argument);
  EXPECT_TRUE(is_prime(257));
  EXPECT_EQ(next_prime_above(256), 257u);
  EXPECT_EQ(next_prime_above(17), 19u);
}

TEST(Field, InterpolatesWorkedExample) {
  Field f(101);
  UniPoly p = lagrange_interpolate(f, {{1, 2}, {2, 4}, {3, 6}}, 2);
  for (uint64_t x = 0; x < 101; ++x) EXPECT_EQ(p.eval(f, x), f.mul(2, x));
  EXPECT_EQ(p.degree(), 1u);
}

TEST(Field, RandomInterpolationRecoversPolynomial) {
  Field f(257);
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    size_t d = rng.below(17);
    uint64_t c = f.random(rng);
    UniPoly P = sample_poly(f, d, c, rng);
    EXPECT_EQ(P.eval(f, 0), c);
    std::vector<std::pair<uint64_t, uint64_t>> pts;
    for (uint64_t x = 1; x <= d + 1; ++x) pts.push_back({x, P.eval(f, x)});
    EXPECT_EQ(lagrange_at_zero(f, pts), c);
    UniPoly Q = lagrange_interpolate(f, pts, d);
    uint64_t probe = f.random(rng);
    EXPECT_EQ(Q.eval(f, probe), P.eval(f, probe));
  }
}

TEST(Field, InterpolationRejectsBadInput) {
  Field f(5);
  EXPECT_THROW(lagrange_interpolate(f, {{1, 1}, {1, 2}}, 1), std::invalid_argument);
  EXPECT_THROW(lagrange_interpolate(f, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {0, 2}}, 5),
               std::invalid_argument);
}

TEST(Field, ZeroPolynomialEvaluatesToZero) {
  Field f(257);
  SparsePolynomial zero(3, {});
  EXPECT_EQ(zero.eval(f, {5, 6, 7}), 0u);
  EXPECT_EQ(zero.total_degree(), 0u);
}

TEST(Field, MonomialBasisSize) {
  // C(nvars + d, d) monomials.
  EXPECT_EQ(monomials_up_to(2, 2).size(), 6u);
  EXPECT_EQ(monomials_up_to(3, 2).size(), 10u);
  EXPECT_EQ(monomials_up_to(4, 3).size(), 35u);
  EXPECT_EQ(monomials_up_to(2, 2)[0], Monomial({0, 0}));
}

TEST(Field, CoefficientsReproduceEvaluation) {
  Field f(257);
  Rng rng(2);
  auto basis = monomials_up_to(3, 2);
  for (int t = 0; t < 100; ++t) {
    std::vector<Term> terms;
    for (const auto& m : basis)
      if (rng.bit()) terms.push_back({f.random(rng), m});
    SparsePolynomial P(3, terms);
    auto coef = coefficients_in_basis(f, P, basis);
    std::vector<uint64_t> x = {f.random(rng), f.random(rng), f.random(rng)};
    uint64_t acc = 0;
    for (size_t i = 0; i < basis.size(); ++i) acc = f.add(acc, f.mul(coef[i], eval_monomial(f, basis[i], x)));
    EXPECT_EQ(acc, P.eval(f, x));
  }
  SparsePolynomial cubic(3, {{1, {3, 0, 0}}});
  EXPECT_THROW(coefficients_in_basis(f, cubic, basis), std::invalid_argument);
}

TEST(Field, ArithmetizationAgreesOnBooleanCube) {
  Field f(257);
  Rng rng(3);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    size_t nvars = 1 + rng.below(10);
    auto F = random_formula(nvars, 3, rng);
    SparsePolynomial P(0, {});
    try {
      P = arithmetize(f, *F, nvars, 4);
    } catch (const std::domain_error&) {
      continue;
    }
    EXPECT_LE(P.total_degree(), 4u);
    for (uint64_t x = 0; x < (uint64_t{1} << nvars); ++x) {
      std::vector<bool> xb(nvars);
      std::vector<uint64_t> xf(nvars);
      for (size_t i = 0; i < nvars; ++i) xf[i] = xb[i] = (x >> i) & 1;
      EXPECT_EQ(P.eval(f, xf), F->eval(xb) ? 1u : 0u);
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Field, ArithmetizationEnforcesDegreeBound) {
  Field f(257);
  auto x0 = Formula::variable(0), x1 = Formula::variable(1), x2 = Formula::variable(2);
  auto f3 = Formula::conj(Formula::conj(x0, x1), x2);
  EXPECT_THROW(arithmetize(f, *f3, 3, 2), std::domain_error);
  EXPECT_NO_THROW(arithmetize(f, *f3, 3, 3));
}
