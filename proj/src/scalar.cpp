#include "qweyl/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "qweyl/errors.hpp"

namespace qweyl {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::int64_t e, std::uint64_t p) {
  if (e < 0) {
    a = powmod(a, static_cast<std::int64_t>(p - 2), p);
    e = -e;
  }
  std::uint64_t r = 1;
  auto u = static_cast<std::uint64_t>(e);
  while (u > 0) {
    if (u & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    u >>= 1u;
  }
  return r;
}

namespace {

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t rational_mod(const mpq_class& c, std::uint64_t p) {
  std::uint64_t n = mpz_mod(c.get_num(), p);
  std::uint64_t d = mpz_mod(c.get_den(), p);
  return mulmod(n, powmod(d, -1, p), p);
}

}  // namespace

std::uint64_t eval_mod(const Poly& f, const VarPoint& point, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = rational_mod(t.coef, p);
    for (const auto& [var, e] : t.mono.factors()) v = mulmod(v, powmod(point(var), e, p), p);
    acc = (acc + v) % p;
  }
  return acc;
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(long c) : num_(c) {}
Scalar::Scalar(mpq_class c) : num_(std::move(c)) {}
Scalar::Scalar(Poly p) : num_(std::move(p)) {}

Scalar Scalar::var(Var v) { return Scalar(Poly::var(v)); }

Scalar Scalar::monomial(const Monomial& m, mpq_class c) { return Scalar(Poly(m, std::move(c))); }

bool Scalar::is_one() const { return den_.empty() && num_ == Poly(1); }

Poly Scalar::denominator() const {
  Poly d(1);
  for (const auto& [f, e] : den_) d = d * f.pow(static_cast<unsigned>(e));
  return d;
}

void Scalar::add_factor(Poly f, int e) {
  assert(!f.is_zero());
  if (e == 0) return;
  mpq_class uc;
  Monomial um;
  Poly g = f.primitive_part(uc, um);
  // num / (uc*um*g)^e  ==  (num * (uc*um)^-e) / g^e
  mpq_class ucinv = 1 / uc;
  mpq_class scale = 1;
  for (int i = 0; i < e; ++i) scale *= ucinv;
  num_ = num_.scaled(scale, um.pow(-e));
  if (g.is_constant()) return;
  auto it = std::lower_bound(den_.begin(), den_.end(), g, [](const Factor& a, const Poly& b) {
    return structural_compare(a.first, b) < 0;
  });
  if (it != den_.end() && it->first == g) {
    it->second += e;
  } else {
    den_.insert(it, {std::move(g), e});
  }
}

void Scalar::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [f, e] : den_) {
    while (e > 0) {
      auto q = num_.divide_exact(f);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  std::erase_if(den_, [](const Factor& fe) { return fe.second == 0; });
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar operator+(const Scalar& self, const Scalar& o) {
  if (o.is_zero()) return self;
  if (self.is_zero()) return o;
  if (self.den_ == o.den_) {
    Scalar r;
    r.num_ = self.num_ + o.num_;
    r.den_ = self.den_;
    r.cancel();
    return r;
  }
  // Common denominator with the maximal exponent of every factor.
  Poly na = self.num_;
  Poly nb = o.num_;
  std::vector<Scalar::Factor> den;
  auto a = self.den_.begin();
  auto b = o.den_.begin();
  while (a != self.den_.end() || b != o.den_.end()) {
    int c = 0;
    if (a == self.den_.end()) {
      c = 1;
    } else if (b == o.den_.end()) {
      c = -1;
    } else {
      auto cc = structural_compare(a->first, b->first);
      c = cc < 0 ? -1 : (cc > 0 ? 1 : 0);
    }
    if (c < 0) {
      nb = nb * a->first.pow(static_cast<unsigned>(a->second));
      den.push_back(*a++);
    } else if (c > 0) {
      na = na * b->first.pow(static_cast<unsigned>(b->second));
      den.push_back(*b++);
    } else {
      int m = std::max(a->second, b->second);
      if (m > a->second) na = na * a->first.pow(static_cast<unsigned>(m - a->second));
      if (m > b->second) nb = nb * b->first.pow(static_cast<unsigned>(m - b->second));
      den.emplace_back(a->first, m);
      ++a;
      ++b;
    }
  }
  Scalar r;
  r.num_ = na + nb;
  r.den_ = std::move(den);
  r.cancel();
  return r;
}

Scalar operator-(const Scalar& self, const Scalar& o) { return self + (-o); }

Scalar operator*(const Scalar& self, const Scalar& o) {
  if (self.is_zero() || o.is_zero()) return {};
  if (self.den_.empty() && o.den_.empty()) return Scalar(self.num_ * o.num_);
  Scalar r;
  r.num_ = self.num_ * o.num_;
  r.den_ = self.den_;
  for (const auto& [f, e] : o.den_) {
    auto it = std::lower_bound(r.den_.begin(), r.den_.end(), f, [](const Scalar::Factor& a, const Poly& b) {
      return structural_compare(a.first, b) < 0;
    });
    if (it != r.den_.end() && it->first == f) {
      it->second += e;
    } else {
      r.den_.insert(it, {f, e});
    }
  }
  r.cancel();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero scalar");
  Scalar r(denominator());
  r.add_factor(num_, 1);
  r.cancel();
  return r;
}

Scalar operator/(const Scalar& self, const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero scalar");
  return self * o.inverse();
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e == 0) return Scalar(1);
  if (e < 0) return inverse().pow(-e);
  if (den_.empty() && num_.is_monomial()) {
    const Term& t = num_.leading();
    mpq_class c = 1;
    for (std::int64_t i = 0; i < e; ++i) c *= t.coef;
    return monomial(t.mono.pow(e), c);
  }
  // The numerator is expanded, denominator factors keep their identity.
  Scalar result(num_.pow(static_cast<unsigned>(e)));
  if (e > std::numeric_limits<int>::max()) throw Error(ErrorCode::ExponentOverflow, "scalar power");
  for (const auto& [f, x] : den_) {
    std::int64_t ex = static_cast<std::int64_t>(x) * e;
    if (ex > std::numeric_limits<int>::max()) throw Error(ErrorCode::ExponentOverflow, "scalar power");
    result.den_.emplace_back(f, static_cast<int>(ex));
  }
  return result;
}

namespace {

Scalar substitute_poly(const Poly& f, Var v, const Scalar& value) {
  Scalar acc;
  for (const auto& t : f.terms()) {
    Monomial rest;
    std::int64_t e = 0;
    for (const auto& [w, x] : t.mono.factors()) {
      if (w == v) {
        e = x;
      } else {
        rest = rest * Monomial::power(w, x);
      }
    }
    Scalar term = Scalar::monomial(rest, t.coef);
    if (e != 0) term = term * value.pow(e);
    acc += term;
  }
  return acc;
}

}  // namespace

Scalar Scalar::substitute(Var v, const Scalar& value) const {
  Scalar r = substitute_poly(num_, v, value);
  for (const auto& [f, e] : den_) r = r / substitute_poly(f, v, value).pow(e);
  return r;
}

std::optional<std::uint64_t> Scalar::eval_mod(const VarPoint& point) const {
  std::uint64_t d = qweyl::eval_mod(denominator(), point);
  if (d == 0) return std::nullopt;
  return mulmod(qweyl::eval_mod(num_, point), powmod(d, -1, kEvalPrime), kEvalPrime);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.denominator() == b.num_ * a.denominator();
}

std::string Scalar::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string s = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  s += " / ";
  bool wrap = den_.size() > 1 || den_[0].second > 1;
  if (wrap) s += "(";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i > 0) s += "*";
    s += "(" + den_[i].first.to_string() + ")";
    if (den_[i].second > 1) s += "^" + std::to_string(den_[i].second);
  }
  if (wrap) s += ")";
  return s;
}

// -------------------------------------------------------- quantum integers

Scalar quantum_integer(std::int64_t m, const Scalar& q) {
  if (m == 0) return Scalar(0);
  if (m > 0) {
    Scalar acc;
    Scalar p(1);
    for (std::int64_t k = 0; k < m; ++k) {
      acc += p;
      p *= q;
    }
    return acc;
  }
  // (m)_q = -q^m (-m)_q
  return -(q.pow(m) * quantum_integer(-m, q));
}

Scalar quantum_integer(std::int64_t m, int i) { return quantum_integer(m, Scalar::q(i)); }

std::optional<std::int64_t> as_q_power(const Scalar& s, int i) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroScalar, "as_q_power of zero");
  Poly quotient = s.numerator();
  if (!s.is_polynomial()) {
    auto q = s.numerator().divide_exact(s.denominator());
    if (!q) return std::nullopt;
    quotient = std::move(*q);
  }
  if (!quotient.is_monomial() || quotient.leading().coef != 1) return std::nullopt;
  const auto& fs = quotient.leading().mono.factors();
  if (fs.empty()) return 0;
  if (fs.size() != 1 || !(fs[0].first == Var::q(i))) return std::nullopt;
  return fs[0].second;
}

}  // namespace qweyl
