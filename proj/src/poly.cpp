#include "qweyl/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::ExponentOverflow, "exponent sum");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::ExponentOverflow, "exponent product");
  return r;
}

}  // namespace

Var Var::q(int i) {
  assert(i >= 1 && i < 0x3fff);
  return Var((static_cast<std::uint32_t>(VarKind::Q) << 28) | static_cast<std::uint32_t>(i));
}

Var Var::lambda(int i, int j) {
  assert(i >= 1 && i < j && j < 0x3fff);
  return Var((static_cast<std::uint32_t>(VarKind::L) << 28) |
             (static_cast<std::uint32_t>(i) << 14) | static_cast<std::uint32_t>(j));
}

Var Var::generic(int t) {
  assert(t >= 1 && t < 0x3fff);
  return Var((static_cast<std::uint32_t>(VarKind::C) << 28) | static_cast<std::uint32_t>(t));
}

std::string Var::name() const {
  switch (kind()) {
    case VarKind::Q:
      return "q" + std::to_string(second());
    case VarKind::L:
      if (first() < 10 && second() < 10) {
        return "l" + std::to_string(first()) + std::to_string(second());
      }
      return "l" + std::to_string(first()) + "_" + std::to_string(second());
    case VarKind::C:
      return "c" + std::to_string(second());
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::power(Var v, std::int64_t e) {
  Monomial m;
  if (e != 0) m.f_.emplace_back(v, e);
  return m;
}

std::int64_t Monomial::exponent(Var v) const {
  for (const auto& [w, e] : f_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin();
  auto b = o.f_.begin();
  while (a != f_.end() && b != o.f_.end()) {
    if (a->first < b->first) {
      r.f_.push_back(*a++);
    } else if (b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      std::int64_t e = checked_add(a->second, b->second);
      if (e != 0) r.f_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  r.f_.insert(r.f_.end(), a, f_.end());
  r.f_.insert(r.f_.end(), b, o.f_.end());
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& [v, e] : r.f_) {
    if (e == INT64_MIN) throw Error(ErrorCode::ExponentOverflow, "exponent negation");
    e = -e;
  }
  return r;
}

Monomial Monomial::pow(std::int64_t k) const {
  if (k == 0) return {};
  Monomial r = *this;
  for (auto& [v, e] : r.f_) e = checked_mul(e, k);
  return r;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  auto i = a.f_.begin();
  auto j = b.f_.begin();
  while (i != a.f_.end() && j != b.f_.end()) {
    if (i->first < j->first) return i->second <=> 0;
    if (j->first < i->first) return 0 <=> j->second;
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  if (i != a.f_.end()) return i->second <=> 0;
  if (j != b.f_.end()) return 0 <=> j->second;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Monomial(), mpq_class(c)});
}

Poly::Poly(mpq_class c) {
  c.canonicalize();
  if (c != 0) terms_.push_back({Monomial(), std::move(c)});
}

Poly::Poly(Monomial m, mpq_class c) {
  c.canonicalize();
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Poly Poly::from_unsorted(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& x, const Term& y) { return lex_compare(x.mono, y.mono) > 0; });
  Poly p;
  p.terms_.reserve(ts.size());
  for (auto& t : ts) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    auto c = lex_compare(a->mono, b->mono);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      mpq_class s = a->coef + b->coef;
      if (s != 0) r.terms_.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_constant()) return scaled(o.terms_[0].coef, Monomial());
  if (is_constant()) return o.scaled(terms_[0].coef, Monomial());
  std::vector<Term> ts;
  ts.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) ts.push_back({a.mono * b.mono, a.coef * b.coef});
  }
  return from_unsorted(std::move(ts));
}

Poly Poly::scaled(const mpq_class& c, const Monomial& m) const {
  if (c == 0) return {};
  Poly r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lex order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Monomial Poly::min_exponents() const {
  std::map<Var, std::int64_t> lo;
  std::map<Var, std::size_t> seen;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = lo.find(v);
      if (it == lo.end()) {
        lo.emplace(v, e);
      } else {
        it->second = std::min(it->second, e);
      }
      seen[v]++;
    }
  }
  Monomial m;
  for (const auto& [v, e] : lo) {
    // A variable missing from some term has exponent 0 there.
    std::int64_t mn = seen[v] < terms_.size() ? std::min<std::int64_t>(e, 0) : e;
    m = m * Monomial::power(v, mn);
  }
  return m;
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> vs;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.mono.factors()) vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Poly Poly::primitive_part(mpq_class& unit_coef, Monomial& unit_mono) const {
  assert(!is_zero());
  unit_mono = min_exponents();
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  unit_coef = mpq_class(num_gcd, den_lcm);
  unit_coef.canonicalize();
  if (terms_.front().coef < 0) unit_coef = -unit_coef;
  mpq_class inv = 1 / unit_coef;
  return scaled(inv, unit_mono.inverse());
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return Poly();
  if (d.is_monomial()) {
    return scaled(1 / d.terms_[0].coef, d.terms_[0].mono.inverse());
  }
  if (size() < d.size()) return std::nullopt;
  // Shift both into the ordinary polynomial ring; a shifted divisor has no
  // monomial factor, so divisibility is unaffected by the shift.
  Monomial dm = d.min_exponents();
  Monomial gm = min_exponents();
  Poly dd = d.scaled(1, dm.inverse());
  Poly r = scaled(1, gm.inverse());

  // Degree bounds per variable.
  for (Var v : dd.variables()) {
    std::int64_t dmax = 0, rmax = 0;
    for (const auto& t : dd.terms_) dmax = std::max(dmax, t.mono.exponent(v));
    for (const auto& t : r.terms_) rmax = std::max(rmax, t.mono.exponent(v));
    if (rmax < dmax) return std::nullopt;
  }

  const Term& lead = dd.terms_.front();
  Monomial lead_inv = lead.mono.inverse();
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    Monomial t = r.terms_.front().mono * lead_inv;
    for (const auto& [v, e] : t.factors()) {
      if (e < 0) return std::nullopt;
    }
    mpq_class c = r.terms_.front().coef / lead.coef;
    r = r - dd.scaled(c, t);
    quotient.push_back({std::move(t), std::move(c)});
  }
  Poly q;
  q.terms_ = std::move(quotient);  // produced in decreasing order
  return q.scaled(1, gm * dm.inverse());
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

std::strong_ordering structural_compare(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = lex_compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c;
    int cc = cmp(a.terms_[i].coef, b.terms_[i].coef);
    if (cc != 0) return cc <=> 0;
  }
  return a.terms_.size() <=> b.terms_.size();
}

namespace {

std::string coef_string(const mpq_class& c) { return c.get_str(); }

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class a = abs(t.coef);
    bool neg = t.coef < 0;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += coef_string(a);
    } else if (a == 1) {
      s += t.mono.to_string();
    } else {
      s += coef_string(a) + "*" + t.mono.to_string();
    }
  }
  return s;
}

}  // namespace qweyl
