// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace everlast::field {

Field::Field(uint64_t p) : p_(p) {
  if (p < 2 || p >= (uint64_t{1} << 32) || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime below 2^32");
}

uint64_t Field::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1, b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint64_t Field::inv(uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

uint64_t Field::reduce(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(p_) : r);
}

size_t Field::width() const {
  size_t w = 0;
  while ((uint64_t{1} << w) < p_) ++w;
  return w;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t next_prime_above(uint64_t n) {
  uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

uint64_t UniPoly::eval(const Field& f, uint64_t x) const {
  uint64_t r = 0;
  for (size_t i = c.size(); i-- > 0;) r = f.add(f.mul(r, x), c[i]);
  return r;
}

size_t UniPoly::degree() const {
  for (size_t i = c.size(); i-- > 0;)
    if (c[i] != 0) return i;
  return 0;
}

UniPoly sample_poly(const Field& f, size_t d, uint64_t constant, Rng& rng) {
  UniPoly p;
  p.c.resize(d + 1);
  p.c[0] = constant % f.p();
  for (size_t i = 1; i <= d; ++i) p.c[i] = f.random(rng);
  return p;
}

namespace {

void check_points(const Field& f, const std::vector<std::pair<uint64_t, uint64_t>>& pts) {
  std::vector<uint64_t> xs;
  for (auto [x, y] : pts) xs.push_back(x % f.p());
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument("interpolation points have duplicate abscissae");
}

}  // namespace

UniPoly lagrange_interpolate(const Field& f, const std::vector<std::pair<uint64_t, uint64_t>>& pts,
                             size_t d) {
  if (d + 1 > f.p()) throw std::invalid_argument("degree too large for the field");
  if (pts.size() != d + 1) throw std::invalid_argument("interpolation needs exactly d+1 points");
  check_points(f, pts);
  UniPoly out;
  out.c.assign(d + 1, 0);
  for (size_t i = 0; i < pts.size(); ++i) {
    // basis numerator prod_{j != i} (X - x_j), built incrementally
    std::vector<uint64_t> num = {1};
    uint64_t denom = 1;
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      std::vector<uint64_t> next(num.size() + 1, 0);
      for (size_t k = 0; k < num.size(); ++k) {
        next[k + 1] = f.add(next[k + 1], num[k]);
        next[k] = f.sub(next[k], f.mul(num[k], pts[j].first % f.p()));
      }
      num = std::move(next);
      denom = f.mul(denom, f.sub(pts[i].first % f.p(), pts[j].first % f.p()));
    }
    uint64_t scale = f.mul(pts[i].second % f.p(), f.inv(denom));
    for (size_t k = 0; k < num.size(); ++k) out.c[k] = f.add(out.c[k], f.mul(num[k], scale));
  }
  return out;
}

uint64_t lagrange_at_zero(const Field& f, const std::vector<std::pair<uint64_t, uint64_t>>& pts) {
  check_points(f, pts);
  uint64_t acc = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    uint64_t num = 1, den = 1;
    uint64_t xi = pts[i].first % f.p();
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      uint64_t xj = pts[j].first % f.p();
      num = f.mul(num, f.neg(xj));
      den = f.mul(den, f.sub(xi, xj));
    }
    acc = f.add(acc, f.mul(pts[i].second % f.p(), f.mul(num, f.inv(den))));
  }
  return acc;
}

SparsePolynomial::SparsePolynomial(size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.exps.size() != nvars_) throw std::invalid_argument("term has wrong number of exponents");
}

size_t SparsePolynomial::total_degree() const {
  size_t d = 0;
  for (const auto& t : terms_) {
    size_t s = 0;
    for (uint32_t e : t.exps) s += e;
    if (t.coef != 0) d = std::max(d, s);
  }
  return d;
}

void SparsePolynomial::check(const Field& f, size_t max_degree) const {
  for (const auto& t : terms_)
    if (t.coef >= f.p()) throw std::invalid_argument("coefficient outside the field");
  if (total_degree() > max_degree) throw std::domain_error("polynomial exceeds the degree bound");
}

uint64_t SparsePolynomial::eval(const Field& f, const std::vector<uint64_t>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  uint64_t acc = 0;
  for (const auto& t : terms_) acc = f.add(acc, f.mul(t.coef % f.p(), eval_monomial(f, t.exps, point)));
  return acc;
}

std::string SparsePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coef;
    for (size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      os << "*x" << i;
      if (t.exps[i] > 1) os << "^" << t.exps[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

void gen_monomials(size_t nvars, size_t remaining, size_t var, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (size_t e = remaining + 1; e-- > 0;) {
    cur[var] = static_cast<uint32_t>(e);
    gen_monomials(nvars, remaining - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(size_t nvars, size_t d) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  for (size_t deg = 0; deg <= d; ++deg) gen_monomials(nvars, deg, 0, cur, out);
  return out;
}

uint64_t eval_monomial(const Field& f, const Monomial& m, const std::vector<uint64_t>& point) {
  uint64_t r = 1;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) r = f.mul(r, f.pow(point[i], m[i]));
  return r;
}

std::vector<uint64_t> coefficients_in_basis(const Field& f, const SparsePolynomial& P,
                                            const std::vector<Monomial>& basis) {
  std::vector<uint64_t> coeffs(basis.size(), 0);
  for (const auto& t : P.terms()) {
    auto it = std::find(basis.begin(), basis.end(), t.exps);
    if (it == basis.end()) {
      if (t.coef % f.p() == 0) continue;
      throw std::invalid_argument("polynomial uses a monomial outside the public basis");
    }
    size_t j = static_cast<size_t>(it - basis.begin());
    coeffs[j] = f.add(coeffs[j], t.coef % f.p());
  }
  return coeffs;
}

std::shared_ptr<const Formula> Formula::variable(uint32_t i) {
  auto f = std::make_shared<Formula>();
  f->op = Op::kVar;
  f->var = i;
  return f;
}

std::shared_ptr<const Formula> Formula::constant(bool v) {
  auto f = std::make_shared<Formula>();
  f->op = Op::kConst;
  f->value = v;
  return f;
}

std::shared_ptr<const Formula> Formula::negate(std::shared_ptr<const Formula> a) {
  auto f = std::make_shared<Formula>();
  f->op = Op::kNot;
  f->lhs = std::move(a);
  return f;
}

std::shared_ptr<const Formula> Formula::conj(std::shared_ptr<const Formula> a,
                                             std::shared_ptr<const Formula> b) {
  auto f = std::make_shared<Formula>();
  f->op = Op::kAnd;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

std::shared_ptr<const Formula> Formula::exclusive(std::shared_ptr<const Formula> a,
                                                  std::shared_ptr<const Formula> b) {
  auto f = std::make_shared<Formula>();
  f->op = Op::kXor;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

bool Formula::eval(const std::vector<bool>& x) const {
  switch (op) {
    case Op::kVar: return x.at(var);
    case Op::kConst: return value;
    case Op::kNot: return !lhs->eval(x);
    case Op::kAnd: return lhs->eval(x) && rhs->eval(x);
    case Op::kXor: return lhs->eval(x) != rhs->eval(x);
  }
  return false;
}

namespace {

using PolyMap = std::map<Monomial, uint64_t>;

PolyMap padd(const Field& f, const PolyMap& a, const PolyMap& b, uint64_t bscale) {
  PolyMap r = a;
  for (const auto& [m, c] : b) r[m] = f.add(r[m], f.mul(c, bscale));
  return r;
}

PolyMap pmul(const Field& f, const PolyMap& a, const PolyMap& b) {
  PolyMap r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r[m] = f.add(r[m], f.mul(ca, cb));
    }
  return r;
}

PolyMap arith(const Field& f, const Formula& g, size_t n) {
  Monomial zero(n, 0);
  switch (g.op) {
    case Formula::Op::kVar: {
      if (g.var >= n) throw std::invalid_argument("formula variable out of range");
      Monomial m = zero;
      m[g.var] = 1;
      return {{m, 1}};
    }
    case Formula::Op::kConst:
      return g.value ? PolyMap{{zero, 1}} : PolyMap{};
    case Formula::Op::kNot:
      return padd(f, PolyMap{{zero, 1}}, arith(f, *g.lhs, n), f.neg(1));
    case Formula::Op::kAnd:
      return pmul(f, arith(f, *g.lhs, n), arith(f, *g.rhs, n));
    case Formula::Op::kXor: {
      PolyMap a = arith(f, *g.lhs, n), b = arith(f, *g.rhs, n);
      return padd(f, padd(f, a, b, 1), pmul(f, a, b), f.neg(f.reduce(2)));
    }
  }
  return {};
}

}  // namespace

SparsePolynomial arithmetize(const Field& f, const Formula& formula, size_t nvars, size_t max_degree) {
  std::vector<Term> terms;
  for (const auto& [m, c] : arith(f, formula, nvars))
    if (c != 0) terms.push_back({c, m});
  SparsePolynomial P(nvars, std::move(terms));
  if (P.total_degree() > max_degree) throw std::domain_error("arithmetized formula exceeds the degree bound");
  return P;
}

}  // namespace everlast::field
