#include "qweyl/presentation.hpp"

#include <cassert>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

using Terms = NormalElement::Terms;

void add_to(Terms& t, const NormalMonomial& mono, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t.find(mono);
  if (it == t.end()) {
    t.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

std::size_t at(int i) { return static_cast<std::size_t>(i - 1); }

// Letter-at-a-time rewriting. Each call multiplies one normal monomial on
// the right by a single generator letter and accumulates into `out`.
class Engine {
public:
  explicit Engine(const PresentationId& p) : p_(p), n_(p.n()) {
    for (int i = 1; i <= n_; ++i) {
      q_.push_back(p.ctx.q(i));
      inv_qm1_.push_back((p.ctx.q(i) - 1).inverse());
    }
  }

  void mul_letter(const NormalMonomial& mono, const Scalar& coef, Letter g, int i, Terms& out) const {
    if (g == Letter::Z || g == Letter::ZInv) {
      assert(p_.localized);
      NormalMonomial r = mono;
      r.m[at(i)] += g == Letter::Z ? 1 : -1;
      add_to(out, r, coef);
      return;
    }
    if (p_.localized) {
      mul_letter_b(mono, coef, g, i, out);
    } else {
      mul_letter_a(mono, coef, g, i, out);
    }
  }

private:
  const Scalar& q(int i) const { return q_[at(i)]; }
  Scalar lam(int i, int j) const { return p_.ctx.lambda(i, j); }

  // z_l g = d * g z_l for g of index j.
  Scalar znorm(int l, Letter g, int j) const {
    bool moves = p_.family == Family::AJ ? (l == j) : (j <= l);
    if (!moves) return Scalar(1);
    return g == Letter::X ? q(j).inverse() : q(j);
  }

  // h g = c * g h, where h has index j > i and g has index i.
  Scalar comm(Letter h, int j, Letter g, int i) const {
    bool malt = p_.family == Family::Malt;
    if (h == Letter::X && g == Letter::X) return malt ? (lam(i, j) * q(i)).inverse() : lam(i, j).inverse();
    if (h == Letter::Y && g == Letter::Y) return lam(i, j).inverse();
    if (h == Letter::Y && g == Letter::X) return lam(i, j);
    return malt ? lam(i, j) * q(i) : lam(i, j);  // h = x_j, g = y_i
  }

  void mul_letter_b(const NormalMonomial& mono, const Scalar& coef, Letter g, int i, Terms& out) const {
    // z^m g = (prod_l d_l^{m_l}) g z^m
    Scalar c = coef;
    for (int l = 1; l <= n_; ++l) {
      std::int64_t ml = mono.m[at(l)];
      if (ml != 0) c *= znorm(l, g, i).pow(ml);
    }
    for (int j = i + 1; j <= n_; ++j) {
      std::int64_t kj = mono.k[at(j)];
      if (kj > 0) c *= comm(Letter::X, j, g, i).pow(kj);
      if (kj < 0) c *= comm(Letter::Y, j, g, i).pow(-kj);
    }

    std::int64_t ki = mono.k[at(i)];
    bool straight = g == Letter::X ? ki >= 0 : ki <= 0;
    NormalMonomial r = mono;
    r.k[at(i)] += g == Letter::X ? 1 : -1;
    if (straight) {
      add_to(out, r, c);
      return;
    }
    // y x = (z_i - Z)/(q_i - 1) and x y = (q_i z_i - Z)/(q_i - 1), with Z = 1
    // (AJ) or z_{i-1} (Maltsiniotis).
    Scalar zi = g == Letter::X ? inv_qm1_[at(i)] : q(i) * inv_qm1_[at(i)];
    insert_z(r, c * zi, i, i, out);
    Scalar z0 = -inv_qm1_[at(i)];
    if (p_.family == Family::AJ || i == 1) {
      add_to(out, r, c * z0);
    } else {
      insert_z(r, c * z0, i - 1, i, out);
    }
  }

  // z_l sits right after block `after`; move it past the higher blocks.
  void insert_z(NormalMonomial r, Scalar c, int l, int after, Terms& out) const {
    for (int j = after + 1; j <= n_; ++j) {
      std::int64_t kj = r.k[at(j)];
      if (kj > 0) c *= znorm(l, Letter::X, j).pow(kj);
      if (kj < 0) c *= znorm(l, Letter::Y, j).pow(-kj);
    }
    r.m[at(l)] += 1;
    add_to(out, r, c);
  }

  void mul_letter_a(const NormalMonomial& mono, const Scalar& coef, Letter g, int i, Terms& out) const {
    Scalar c = coef;
    for (int j = i + 1; j <= n_; ++j) {
      if (mono.m[at(j)] != 0) c *= comm(Letter::Y, j, g, i).pow(mono.m[at(j)]);
      if (mono.k[at(j)] != 0) c *= comm(Letter::X, j, g, i).pow(mono.k[at(j)]);
    }
    NormalMonomial r = mono;
    if (g == Letter::X) {
      r.k[at(i)] += 1;
      add_to(out, r, c);
      return;
    }
    // y^a x^b y = q^b y^{a+1} x^b + (b)_q Z y^a x^{b-1}, Z central in block i.
    std::int64_t b = mono.k[at(i)];
    r.m[at(i)] += 1;
    add_to(out, r, c * q(i).pow(b));
    if (b == 0) return;
    NormalMonomial s = mono;
    s.k[at(i)] -= 1;
    Scalar cb = c * quantum_integer(b, q(i));
    if (p_.family == Family::AJ || i == 1) {
      add_to(out, s, cb);
      return;
    }
    // Z = z_{i-1} = 1 + sum_{j<i} (q_j - 1) y_j x_j multiplies the lower blocks.
    NormalMonomial prefix = mono;
    for (int j = i; j <= n_; ++j) {
      prefix.k[at(j)] = 0;
      prefix.m[at(j)] = 0;
    }
    Terms pz;
    add_to(pz, prefix, Scalar(1));
    for (int j = 1; j < i; ++j) {
      Terms t1;
      mul_letter_a(prefix, q(j) - 1, Letter::Y, j, t1);
      for (const auto& [pm, pc] : t1) mul_letter_a(pm, pc, Letter::X, j, pz);
    }
    for (const auto& [pm, pc] : pz) {
      NormalMonomial t = s;
      for (int j = 1; j < i; ++j) {
        t.k[at(j)] = pm.k[at(j)];
        t.m[at(j)] = pm.m[at(j)];
      }
      add_to(out, t, cb * pc);
    }
  }

  const PresentationId& p_;
  int n_;
  std::vector<Scalar> q_;
  std::vector<Scalar> inv_qm1_;
};

struct LetterPower {
  Letter g;
  int i;
  std::int64_t e;
};

std::vector<LetterPower> letters_of(const PresentationId& p, const NormalMonomial& mono) {
  std::vector<LetterPower> out;
  int n = p.n();
  for (int i = 1; i <= n; ++i) {
    std::int64_t k = mono.k[at(i)];
    if (p.localized) {
      if (k > 0) out.push_back({Letter::X, i, k});
      if (k < 0) out.push_back({Letter::Y, i, -k});
    } else {
      if (mono.m[at(i)] > 0) out.push_back({Letter::Y, i, mono.m[at(i)]});
      if (k > 0) out.push_back({Letter::X, i, k});
    }
  }
  if (p.localized) {
    for (int i = 1; i <= n; ++i) {
      std::int64_t m = mono.m[at(i)];
      if (m > 0) out.push_back({Letter::Z, i, m});
      if (m < 0) out.push_back({Letter::ZInv, i, -m});
    }
  }
  return out;
}

void require_same(const PresentationId& a, const PresentationId& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::PresentationMismatch, a.name() + " vs " + b.name());
  }
}

std::string term_string(const Scalar& c, const std::string& mono) {
  if (c.is_polynomial() && c.numerator().is_monomial()) {
    std::string s = c.numerator().to_string();
    if (mono.empty()) return s;
    if (s == "1") return mono;
    if (s == "-1") return "-" + mono;
    return s + "*" + mono;
  }
  std::string s = "(" + c.to_string() + ")";
  return mono.empty() ? s : s + "*" + mono;
}

}  // namespace

// ------------------------------------------------------------ basic types

std::string PresentationId::name() const {
  std::string s = family == Family::AJ ? "AJ" : "Malt";
  s += localized ? "-B" : "-A";
  return s + " (" + ctx.describe() + ")";
}

bool NormalMonomial::is_one() const {
  for (auto e : k) {
    if (e != 0) return false;
  }
  for (auto e : m) {
    if (e != 0) return false;
  }
  return true;
}

Exponents degree(const PresentationId& p, const NormalMonomial& mono) {
  if (p.localized) return mono.k;
  Exponents d = mono.k;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= mono.m[i];
  return d;
}

std::string monomial_to_string(const PresentationId& p, const NormalMonomial& mono) {
  std::string s;
  auto put = [&s](char g, int i, std::int64_t e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += g + std::to_string(i);
    if (e != 1) s += "^" + std::to_string(e);
  };
  int n = p.n();
  for (int i = 1; i <= n; ++i) {
    std::int64_t k = mono.k[at(i)];
    if (p.localized) {
      if (k > 0) put('x', i, k);
      if (k < 0) put('y', i, -k);
    } else {
      put('y', i, mono.m[at(i)]);
      put('x', i, k);
    }
  }
  if (p.localized) {
    for (int i = 1; i <= n; ++i) put('z', i, mono.m[at(i)]);
  }
  return s;
}

// ---------------------------------------------------------- NormalElement

NormalElement NormalElement::constant(const PresentationId& p, const Scalar& c) {
  return monomial(p, NormalMonomial::one(p.n()), c);
}

NormalElement NormalElement::monomial(const PresentationId& p, NormalMonomial mono, const Scalar& c) {
  if (mono.k.size() != static_cast<std::size_t>(p.n()) || mono.m.size() != mono.k.size()) {
    throw Error(ErrorCode::InvalidArgument, "monomial rank does not match presentation");
  }
  if (!p.localized) {
    for (std::size_t i = 0; i < mono.k.size(); ++i) {
      if (mono.k[i] < 0 || mono.m[i] < 0) {
        throw Error(ErrorCode::NegativeExponent, "A-family monomials have non-negative exponents");
      }
    }
  }
  NormalElement e(p);
  add_to(e.terms_, mono, c);
  return e;
}

NormalElement NormalElement::generator(const PresentationId& p, Letter g, int i, std::int64_t e) {
  if (i < 1 || i > p.n()) {
    throw Error(ErrorCode::UnknownGenerator, "generator index " + std::to_string(i) + " exceeds n");
  }
  if (g == Letter::ZInv) return generator(p, Letter::Z, i, -e);
  if (e < 0 && (g != Letter::Z || !p.localized)) {
    throw Error(ErrorCode::NegativeExponent, "negative exponent on a non-invertible generator");
  }
  NormalMonomial mono = NormalMonomial::one(p.n());
  if (g == Letter::Z) {
    if (p.localized) {
      mono.m[at(i)] = e;
      return monomial(p, mono);
    }
    NormalElement z = z_element(p, i);
    NormalElement r = constant(p, 1);
    for (std::int64_t t = 0; t < e; ++t) r = multiply(r, z);
    return r;
  }
  if (p.localized) {
    mono.k[at(i)] = g == Letter::X ? e : -e;
  } else if (g == Letter::X) {
    mono.k[at(i)] = e;
  } else {
    mono.m[at(i)] = e;
  }
  return monomial(p, mono);
}

Scalar NormalElement::coefficient(const NormalMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NormalElement::add_term(const NormalMonomial& mono, const Scalar& c) { add_to(terms_, mono, c); }

NormalElement NormalElement::operator+(const NormalElement& o) const {
  require_same(p_, o.p_);
  NormalElement r = *this;
  for (const auto& [mono, c] : o.terms_) add_to(r.terms_, mono, c);
  return r;
}

NormalElement NormalElement::operator-(const NormalElement& o) const { return *this + (-o); }

NormalElement NormalElement::operator-() const {
  NormalElement r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

NormalElement NormalElement::scaled(const Scalar& c) const {
  NormalElement r(p_);
  if (c.is_zero()) return r;
  for (const auto& [mono, v] : terms_) r.terms_.emplace(mono, v * c);
  return r;
}

NormalElement NormalElement::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  NormalElement r(p_);
  for (const auto& [mono, v] : terms_) add_to(r.terms_, mono, f(v));
  return r;
}

std::map<Exponents, NormalElement> NormalElement::homogeneous_components() const {
  std::map<Exponents, NormalElement> out;
  for (const auto& [mono, c] : terms_) {
    auto [it, inserted] = out.try_emplace(degree(p_, mono), p_);
    it->second.add_term(mono, c);
  }
  return out;
}

bool operator==(const NormalElement& a, const NormalElement& b) {
  if (!(a.p_ == b.p_) || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  }
  return true;
}

std::string NormalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mono, c] : terms_) {
    std::string t = term_string(c, monomial_to_string(p_, mono));
    if (s.empty()) {
      s = t;
    } else if (t[0] == '-') {
      s += " - " + t.substr(1);
    } else {
      s += " + " + t;
    }
  }
  return s;
}

// ----------------------------------------------------------- multiplication

NormalElement multiply(const NormalElement& a, const NormalElement& b) {
  require_same(a.presentation(), b.presentation());
  const PresentationId& p = a.presentation();
  Engine engine(p);
  Terms result;
  for (const auto& [mono, coef] : b.terms()) {
    Terms cur = a.terms();
    for (const LetterPower& lp : letters_of(p, mono)) {
      if (lp.g == Letter::Z || lp.g == Letter::ZInv) {
        // z's are rightmost in the normal form: only exponents shift.
        Terms next;
        std::int64_t shift = lp.g == Letter::Z ? lp.e : -lp.e;
        for (const auto& [m, c] : cur) {
          NormalMonomial r = m;
          r.m[at(lp.i)] += shift;
          add_to(next, r, c);
        }
        cur = std::move(next);
        continue;
      }
      for (std::int64_t t = 0; t < lp.e; ++t) {
        Terms next;
        for (const auto& [m, c] : cur) engine.mul_letter(m, c, lp.g, lp.i, next);
        cur = std::move(next);
      }
    }
    for (const auto& [m, c] : cur) add_to(result, m, c * coef);
  }
  NormalElement r(p);
  for (const auto& [m, c] : result) r.add_term(m, c);
  return r;
}

NormalElement z_element(const PresentationId& p, int i) {
  if (i < 1 || i > p.n()) throw Error(ErrorCode::UnknownGenerator, "z index exceeds n");
  if (p.localized) {
    NormalMonomial mono = NormalMonomial::one(p.n());
    mono.m[at(i)] = 1;
    return NormalElement::monomial(p, mono);
  }
  NormalElement x = NormalElement::generator(p, Letter::X, i);
  NormalElement y = NormalElement::generator(p, Letter::Y, i);
  return x * y - y * x;
}

// --------------------------------------------------------------- relations

RelationModel native_model(const PresentationId& p) {
  RelationModel m;
  m.x = [p](int i) { return NormalElement::generator(p, Letter::X, i); };
  m.y = [p](int i) { return NormalElement::generator(p, Letter::Y, i); };
  m.z = [p](int i) { return z_element(p, i); };
  if (p.localized) m.zinv = [p](int i) { return NormalElement::generator(p, Letter::Z, i, -1); };
  m.mul = [](const NormalElement& a, const NormalElement& b) { return a * b; };
  m.one = NormalElement::constant(p, 1);
  return m;
}

std::vector<IdentityCheck> check_relations(const PresentationId& p, const CoefficientHook& hook) {
  return check_relations_in(p, native_model(p), hook);
}

std::vector<IdentityCheck> check_relations_in(const PresentationId& p, const RelationModel& model,
                                              const CoefficientHook& hook) {
  auto h = [&hook](const Scalar& s) { return hook ? hook(s) : s; };
  const int n = p.n();
  const bool malt = p.family == Family::Malt;
  const auto& X = model.x;
  const auto& Y = model.y;
  const auto& Z = model.z;
  const NormalElement& one = model.one;
  auto mul = [&model](const NormalElement& a, const NormalElement& b) { return model.mul(a, b); };
  auto q = [&p](int i) { return p.ctx.q(i); };
  auto lam = [&p](int i, int j) { return p.ctx.lambda(i, j); };
  auto sub = [](const char* pattern, int i, int j) {
    std::string s;
    for (const char* ch = pattern; *ch != '\0'; ++ch) {
      if (*ch == 'i') {
        s += std::to_string(i);
      } else if (*ch == 'j') {
        s += std::to_string(j);
      } else {
        s += *ch;
      }
    }
    return s;
  };

  std::vector<IdentityCheck> out;
  auto check = [&out](std::string name, const NormalElement& lhs, const NormalElement& rhs) {
    NormalElement d = lhs - rhs;
    out.push_back({std::move(name), d.is_zero(), d.is_zero() ? "" : d.to_string()});
  };
  // Sum_{j <= upto} (q_j - 1) y_j x_j
  auto yx_sum = [&](int upto) {
    NormalElement s(one.presentation());
    for (int j = 1; j <= upto; ++j) s = s + mul(Y(j), X(j)).scaled(h(q(j) - 1));
    return s;
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || (malt && i > j)) continue;
      Scalar l = h(lam(i, j));
      Scalar qi = malt ? h(q(i)) : Scalar(1);
      check(sub(malt ? "x_i*x_j = lambda_ij*q_i*x_j*x_i" : "x_i*x_j = lambda_ij*x_j*x_i", i, j), mul(X(i), X(j)),
            mul(X(j), X(i)).scaled(l * qi));
      check(sub("y_i*y_j = lambda_ij*y_j*y_i", i, j), mul(Y(i), Y(j)), mul(Y(j), Y(i)).scaled(l));
      check(sub("x_i*y_j = lambda_ij^-1*y_j*x_i", i, j), mul(X(i), Y(j)), mul(Y(j), X(i)).scaled(l.inverse()));
      check(sub(malt ? "y_i*x_j = lambda_ij^-1*q_i^-1*x_j*y_i" : "y_i*x_j = lambda_ij^-1*x_j*y_i", i, j),
            mul(Y(i), X(j)), mul(X(j), Y(i)).scaled((l * qi).inverse()));
    }
  }
  for (int i = 1; i <= n; ++i) {
    NormalElement rhs = malt ? one + yx_sum(i - 1) : one;
    check(sub(malt ? "x_i*y_i - q_i*y_i*x_i = 1 + sum_{j<i}(q_j-1)*y_j*x_j" : "x_i*y_i - q_i*y_i*x_i = 1", i, i),
          mul(X(i), Y(i)) - mul(Y(i), X(i)).scaled(h(q(i))), rhs);
    check(sub("z_i = x_i*y_i - y_i*x_i", i, i), Z(i), mul(X(i), Y(i)) - mul(Y(i), X(i)));
    NormalElement zrhs = malt ? one + yx_sum(i) : one + mul(Y(i), X(i)).scaled(h(q(i) - 1));
    check(sub(malt ? "z_i = 1 + sum_{j<=i}(q_j-1)*y_j*x_j" : "z_i = 1 + (q_i-1)*y_i*x_i", i, i), Z(i), zrhs);
    if (malt) {
      NormalElement zprev = i == 1 ? one : Z(i - 1);
      check(sub("z_i = z_{i-1} + (q_i-1)*y_i*x_i", i, i), Z(i), zprev + mul(Y(i), X(i)).scaled(h(q(i) - 1)));
      check(sub("x_i*y_i - q_i*y_i*x_i = z_{i-1}", i, i), mul(X(i), Y(i)) - mul(Y(i), X(i)).scaled(h(q(i))), zprev);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      bool moves = malt ? j <= i : j == i;
      Scalar dx = moves ? h(q(j)).inverse() : Scalar(1);
      Scalar dy = moves ? h(q(j)) : Scalar(1);
      check(sub(moves ? "z_i*x_j = q_j^-1*x_j*z_i" : "z_i*x_j = x_j*z_i", i, j), mul(Z(i), X(j)),
            mul(X(j), Z(i)).scaled(dx));
      check(sub(moves ? "z_i*y_j = q_j*y_j*z_i" : "z_i*y_j = y_j*z_i", i, j), mul(Z(i), Y(j)),
            mul(Y(j), Z(i)).scaled(dy));
      if (i < j) check(sub("z_i*z_j = z_j*z_i", i, j), mul(Z(i), Z(j)), mul(Z(j), Z(i)));
    }
  }
  if (p.localized && model.zinv) {
    for (int i = 1; i <= n; ++i) {
      NormalElement zinv = model.zinv(i);
      check(sub("z_i*z_i^-1 = 1", i, i), mul(Z(i), zinv), one);
      check(sub("z_i^-1*z_i = 1", i, i), mul(zinv, Z(i)), one);
    }
  }
  return out;
}

// ------------------------------------------------------------------- theta

NormalElement theta(const NormalElement& a) {
  const PresentationId& src = a.presentation();
  if (src.family != Family::AJ || !src.localized) {
    throw Error(ErrorCode::PresentationMismatch, "theta is defined on the AJ-B algebra");
  }
  PresentationId dst{Family::Malt, true, src.ctx};
  const int n = src.n();
  auto zinv_prev = [&dst](int i) {
    return i == 1 ? NormalElement::constant(dst, 1) : NormalElement::generator(dst, Letter::Z, i - 1, -1);
  };
  std::vector<NormalElement> img_x;
  std::vector<NormalElement> img_y;
  std::vector<NormalElement> img_z;
  std::vector<NormalElement> img_zinv;
  for (int i = 1; i <= n; ++i) {
    img_x.push_back(zinv_prev(i) * NormalElement::generator(dst, Letter::X, i));
    img_y.push_back(NormalElement::generator(dst, Letter::Y, i));
    img_z.push_back(zinv_prev(i) * NormalElement::generator(dst, Letter::Z, i));
    NormalElement zp = i == 1 ? NormalElement::constant(dst, 1) : NormalElement::generator(dst, Letter::Z, i - 1);
    img_zinv.push_back(NormalElement::generator(dst, Letter::Z, i, -1) * zp);
  }
  NormalElement out(dst);
  for (const auto& [mono, coef] : a.terms()) {
    NormalElement img = NormalElement::constant(dst, coef);
    for (const LetterPower& lp : letters_of(src, mono)) {
      const std::vector<NormalElement>* table = nullptr;
      switch (lp.g) {
        case Letter::X: table = &img_x; break;
        case Letter::Y: table = &img_y; break;
        case Letter::Z: table = &img_z; break;
        case Letter::ZInv: table = &img_zinv; break;
      }
      for (std::int64_t t = 0; t < lp.e; ++t) img = img * (*table)[at(lp.i)];
    }
    out = out + img;
  }
  return out;
}

// ------------------------------------------------------------------ twists

namespace {

void require_ones_aj(const PresentationId& p) {
  if (p.family != Family::AJ || p.ctx.mode() != LambdaMode::AllOnes) {
    throw Error(ErrorCode::ModeMismatch, "twisting acts on the AJ algebra with Lambda = (1)");
  }
}

}  // namespace

NormalElement tau_apply(const Exponents& g, const NormalElement& a, const ParamContext& lambda_source) {
  const PresentationId& p = a.presentation();
  require_ones_aj(p);
  const int n = p.n();
  if (g.size() != static_cast<std::size_t>(n) || lambda_source.n() != n) {
    throw Error(ErrorCode::InvalidArgument, "twist degree rank mismatch");
  }
  // tau_g(x_l) = prod_{s<l} lambda_sl^{-g_s} x_l and tau_g(y_l) the inverse
  // scale, so a monomial of degree d scales by prod_l prod_{s<l} lambda_sl^{-g_s d_l}.
  NormalElement r(p);
  for (const auto& [mono, c] : a.terms()) {
    Exponents d = degree(p, mono);
    Scalar s = c;
    for (int l = 2; l <= n; ++l) {
      for (int t = 1; t < l; ++t) {
        std::int64_t e = -g[at(t)] * d[at(l)];
        if (e != 0) s *= lambda_source.lambda(t, l).pow(e);
      }
    }
    r.add_term(mono, s);
  }
  return r;
}

NormalElement twist_product(const NormalElement& a, const NormalElement& b, const ParamContext& lambda_source) {
  require_same(a.presentation(), b.presentation());
  require_ones_aj(a.presentation());
  NormalElement out(a.presentation());
  for (const auto& [g, bg] : b.homogeneous_components()) out = out + tau_apply(g, a, lambda_source) * bg;
  return out;
}

}  // namespace qweyl
