#include "qweyl/qdiff.hpp"

#include <functional>

#include "qweyl/character.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/weight_module.hpp"

namespace qweyl {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i - 1); }

void require_index(const QPolynomial& p, int i) {
  if (i < 1 || i > p.n()) throw Error(ErrorCode::UnknownGenerator, "operator index " + std::to_string(i));
}

PresentationId host(const ParamContext& ctx) { return {Family::AJ, false, ctx}; }

// Coefficient of y_i y^k = c y^{k+e_i}: y_i passes y_j^{k_j} for j < i.
Scalar left_factor(const ParamContext& ctx, int i, const Exponents& k) {
  Scalar c(1);
  for (int j = 1; j < i; ++j) {
    if (k[at(j)] != 0) c *= ctx.lambda(i, j).pow(k[at(j)]);
  }
  return c;
}

template <class F>
QPolynomial map_terms(const QPolynomial& p, F f) {
  QPolynomial out(p.ctx());
  for (const auto& [k, c] : p.terms()) {
    auto [k2, s] = f(k);
    if (!s.is_zero()) out.add_term(k2, c * s);
  }
  return out;
}

// All k in N^n with |k|_1 <= d.
std::vector<Exponents> monomials_up_to(int n, int d) {
  std::vector<Exponents> out;
  Exponents k(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      out.push_back(k);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      k[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1, left - e);
    }
    k[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, d);
  return out;
}

std::string k_text(const Exponents& k) {
  std::string s = "y^(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

using Op = std::function<QPolynomial(const QPolynomial&)>;

}  // namespace

// ------------------------------------------------------------- QPolynomial

QPolynomial QPolynomial::monomial(const ParamContext& ctx, Exponents k, const Scalar& c) {
  if (k.size() != static_cast<std::size_t>(ctx.n())) throw Error(ErrorCode::PresentationMismatch, "exponent length");
  for (auto e : k) {
    if (e < 0) throw Error(ErrorCode::NegativeExponent, "y exponents are non-negative");
  }
  QPolynomial p(ctx);
  p.add_term(k, c);
  return p;
}

Scalar QPolynomial::coefficient(const Exponents& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

void QPolynomial::add_term(const Exponents& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  QPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + o.scaled(Scalar(-1)); }

QPolynomial QPolynomial::scaled(const Scalar& c) const {
  QPolynomial r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

NormalElement QPolynomial::to_element() const {
  PresentationId p = host(ctx_);
  NormalElement e(p);
  for (const auto& [k, c] : terms_) {
    NormalMonomial mono = NormalMonomial::one(n());
    mono.m = k;
    e.add_term(mono, c);
  }
  return e;
}

QPolynomial QPolynomial::from_element(const NormalElement& a) {
  const PresentationId& p = a.presentation();
  if (p.family != Family::AJ || p.localized) {
    throw Error(ErrorCode::PresentationMismatch, "quantum affine space lives in the AJ-A algebra");
  }
  QPolynomial out(p.ctx);
  for (const auto& [mono, c] : a.terms()) {
    for (auto e : mono.k) {
      if (e != 0) throw Error(ErrorCode::PresentationMismatch, "element involves x generators");
    }
    out.add_term(mono.m, c);
  }
  return out;
}

std::string QPolynomial::to_string() const { return to_element().to_string(); }

// --------------------------------------------------------------- operators

QPolynomial xi(int i, const QPolynomial& p) {
  require_index(p, i);
  Scalar qi = p.ctx().q(i);
  return map_terms(p, [&](const Exponents& k) { return std::pair{k, qi.pow(k[at(i)])}; });
}

QPolynomial xi_inverse(int i, const QPolynomial& p) {
  require_index(p, i);
  Scalar qi = p.ctx().q(i);
  return map_terms(p, [&](const Exponents& k) { return std::pair{k, qi.pow(-k[at(i)])}; });
}

QPolynomial m(int i, const QPolynomial& p) {
  require_index(p, i);
  return map_terms(p, [&](const Exponents& k) {
    Exponents k2 = k;
    ++k2[at(i)];
    return std::pair{k2, left_factor(p.ctx(), i, k)};
  });
}

QPolynomial partial(int i, const QPolynomial& p, PartialConstant c) {
  require_index(p, i);
  Scalar q1 = p.ctx().q(i) - 1;
  Scalar constant = c == PartialConstant::Corrected ? q1.inverse() : q1;
  // xi_i(f) - f, then the exact left division by y_i.
  QPolynomial d = xi(i, p) - p;
  return map_terms(d, [&](const Exponents& k) {
    Exponents k2 = k;
    --k2[at(i)];
    return std::pair{k2, constant * left_factor(p.ctx(), i, k2).inverse()};
  });
}

// ------------------------------------------------------------ morphism check

Report check_qdiff_morphism(const ParamContext& ctx, int degree, PartialConstant pc) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree bound must be at least 1");
  const int n = ctx.n();
  Report report;
  report.title = std::string("q-difference representation (") +
                 (pc == PartialConstant::Corrected ? "corrected" : "verbatim") + " constant, " + ctx.describe() +
                 ", |k| <= " + std::to_string(degree) + ")";
  std::vector<Exponents> basis = monomials_up_to(n, degree);

  auto D = [pc](int i) -> Op { return [i, pc](const QPolynomial& f) { return partial(i, f, pc); }; };
  auto M = [](int i) -> Op { return [i](const QPolynomial& f) { return m(i, f); }; };
  auto Xi = [](int i) -> Op { return [i](const QPolynomial& f) { return xi(i, f); }; };
  auto XiInv = [](int i) -> Op { return [i](const QPolynomial& f) { return xi_inverse(i, f); }; };
  Op id = [](const QPolynomial& f) { return f; };
  auto comp = [](Op a, Op b) -> Op { return [a, b](const QPolynomial& f) { return a(b(f)); }; };
  auto lin = [](Op a, Scalar sa, Op b, Scalar sb) -> Op {
    return [a, b, sa, sb](const QPolynomial& f) { return a(f).scaled(sa) + b(f).scaled(sb); };
  };
  auto check = [&](const std::string& name, const Op& lhs, const Op& rhs) {
    for (const auto& k : basis) {
      QPolynomial f = QPolynomial::monomial(ctx, k);
      QPolynomial diff = lhs(f) - rhs(f);
      if (!diff.is_zero()) {
        report.add(name, false, "on " + k_text(k) + ": " + diff.to_string());
        return;
      }
    }
    report.add(name, true);
  };
  auto sub = [](std::string s, int i, int j) {
    for (auto [tok, v] : {std::pair{std::string("{i}"), i}, std::pair{std::string("{j}"), j}}) {
      for (auto pos = s.find(tok); pos != std::string::npos; pos = s.find(tok)) s.replace(pos, tok.size(), std::to_string(v));
    }
    return s;
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Scalar l = ctx.lambda(i, j);
      check(sub("d_{i} d_{j} = lambda_{i}{j} d_{j} d_{i}", i, j), comp(D(i), D(j)), lin(comp(D(j), D(i)), l, id, 0));
      check(sub("m_{i} m_{j} = lambda_{i}{j} m_{j} m_{i}", i, j), comp(M(i), M(j)), lin(comp(M(j), M(i)), l, id, 0));
      check(sub("d_{i} m_{j} = lambda_{i}{j}^-1 m_{j} d_{i}", i, j), comp(D(i), M(j)),
            lin(comp(M(j), D(i)), l.inverse(), id, 0));
      check(sub("m_{i} d_{j} = lambda_{i}{j}^-1 d_{j} m_{i}", i, j), comp(M(i), D(j)),
            lin(comp(D(j), M(i)), l.inverse(), id, 0));
    }
  }
  for (int i = 1; i <= n; ++i) {
    Scalar qi = ctx.q(i);
    Op dm = comp(D(i), M(i));
    Op md = comp(M(i), D(i));
    check(sub("d_{i} m_{i} - q_{i} m_{i} d_{i} = id", i, i), lin(dm, 1, md, -qi), id);
    check(sub("xi_{i} = d_{i} m_{i} - m_{i} d_{i}", i, i), Xi(i), lin(dm, 1, md, -1));
    check(sub("xi_{i} = id + (q_{i}-1) m_{i} d_{i}", i, i), Xi(i), lin(id, 1, md, qi - 1));
    check(sub("xi_{i} xi_{i}^-1 = id", i, i), comp(Xi(i), XiInv(i)), id);
    check(sub("xi_{i}^-1 xi_{i} = id", i, i), comp(XiInv(i), Xi(i)), id);
    for (int j = 1; j <= n; ++j) {
      Scalar qj = i == j ? ctx.q(j) : Scalar(1);
      check(sub(i == j ? "xi_{i} d_{j} = q_{j}^-1 d_{j} xi_{i}" : "xi_{i} d_{j} = d_{j} xi_{i}", i, j), comp(Xi(i), D(j)),
            lin(comp(D(j), Xi(i)), qj.inverse(), id, 0));
      check(sub(i == j ? "xi_{i} m_{j} = q_{j} m_{j} xi_{i}" : "xi_{i} m_{j} = m_{j} xi_{i}", i, j), comp(Xi(i), M(j)),
            lin(comp(M(j), Xi(i)), qj, id, 0));
      if (i < j) check(sub("xi_{i} xi_{j} = xi_{j} xi_{i}", i, j), comp(Xi(i), Xi(j)), comp(Xi(j), Xi(i)));
    }
  }
  // m_i against the rewriting engine: E_n^Lambda is the y-subalgebra of AJ-A.
  PresentationId p = host(ctx);
  for (int i = 1; i <= n; ++i) {
    NormalElement yi = NormalElement::generator(p, Letter::Y, i);
    check(sub("m_{i} = left multiplication by y_{i}", i, i), M(i),
          [yi](const QPolynomial& f) { return QPolynomial::from_element(yi * f.to_element()); });
  }
  return report;
}

// ------------------------------------------------------------ E_n vs S_1

QdiffIntertwiner check_E_is_S1(const ParamContext& ctx, std::int64_t radius) {
  if (radius < 2) throw Error(ErrorCode::WindowTooSmall, "identification needs R >= 2");
  const int n = ctx.n();
  QdiffIntertwiner out;
  Report& report = out.report;
  report.title = "E_n^Lambda vs S_1 (" + ctx.describe() + ", R = " + std::to_string(radius) + ")";
  ModuleSpec spec{ctx, Character::one(n), ModuleKind::S, Realization::DirectLambda};

  // Points of [0, R]^n, last coordinate fastest.
  std::vector<Exponents> box;
  {
    Exponents k(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        box.push_back(k);
        return;
      }
      for (std::int64_t e = 0; e <= radius; ++e) {
        k[static_cast<std::size_t>(pos)] = e;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  auto neg = [](Exponents k) {
    for (auto& e : k) e = -e;
    return k;
  };

  // (1) weights
  {
    bool ok = true;
    std::string witness;
    for (const auto& k : box) {
      QPolynomial f = QPolynomial::monomial(ctx, k);
      Character w = act(neg(k), spec.phi);
      for (int i = 1 ; i <= n && ok; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[at(i)] = 1;
        if (!(xi(i, f) == f.scaled(eval(w, e, ctx)))) {
          ok = false;
          witness = k_text(k) + " at z" + std::to_string(i);
        }
      }
      if (!ok) break;
    }
    report.add("weight of y^k equals weight of v_{-k}", ok, witness);
  }

  // (2) supports
  {
    WeightSetDescriptor d = weight_support(spec);
    bool shape = true;
    for (const auto& c : d.coords) shape = shape && c == SupportCoord{SupportCoord::Kind::LowerRay, 0};
    report.add("S_1 support descriptor is k <= 0 coordinatewise", shape, d.to_string());
    Window w(n, radius);
    std::vector<bool> nphi = nphi_oracle_window(spec, radius);
    bool agree = true;
    std::string witness;
    for (std::size_t v = 0; v < w.size() && agree; ++v) {
      Point k = w.point(v);
      bool in_image = true;  // k = -k' for some k' in N^n
      for (auto e : k) in_image = in_image && e <= 0;
      bool oracle = w.contains(k, 1) ? !nphi[v] : d.contains(k);
      if (in_image != d.contains(k) || in_image != oracle) {
        agree = false;
        witness = "k = " + k_text(k);
      }
    }
    report.add("S_1 support equals {-k : k in N^n} on the window", agree, witness);
  }

  // (3) intertwiner: solve mu along m-steps from mu_0 = 1.
  auto& mu = out.mu;
  mu[Exponents(static_cast<std::size_t>(n), 0)] = Scalar(1);
  bool determined = true;
  std::string undetermined;
  for (const auto& k : box) {
    if (mu.count(k) != 0) continue;
    // predecessor along the last nonzero axis
    int i = n;
    while (k[at(i)] == 0) --i;
    Exponents prev = k;
    --prev[at(i)];
    Scalar ay = action_coefficient(spec, Letter::Y, i, neg(prev));
    Scalar cm = left_factor(ctx, i, prev);
    if (ay.is_zero() || mu.count(prev) == 0) {
      determined = false;
      undetermined = k_text(k);
      continue;
    }
    mu[k] = mu.at(prev) * ay / cm;
  }
  report.add("mu_0 = 1 and every mu_k is determined", determined, undetermined);
  bool nonzero = true;
  for (const auto& [k, v] : mu) nonzero = nonzero && !v.is_zero();
  report.add("every mu_k is nonzero", nonzero);

  auto image = [&](const QPolynomial& f, bool& inside) {
    WeightVector v(spec);
    for (const auto& [k, c] : f.terms()) {
      auto it = mu.find(k);
      if (it == mu.end()) {
        inside = false;
        continue;
      }
      v.add(neg(k), c * it->second);
    }
    return v;
  };
  for (int i = 1; i <= n; ++i) {
    struct Gen {
      Letter g;
      std::function<QPolynomial(const QPolynomial&)> op;
      const char* name;
    };
    std::vector<Gen> gens = {
        {Letter::X, [i](const QPolynomial& f) { return partial(i, f); }, "x"},
        {Letter::Y, [i](const QPolynomial& f) { return m(i, f); }, "y"},
        {Letter::Z, [i](const QPolynomial& f) { return xi(i, f); }, "z"},
        {Letter::ZInv, [i](const QPolynomial& f) { return xi_inverse(i, f); }, "z"},
    };
    for (const auto& g : gens) {
      bool ok = true;
      std::string witness;
      for (const auto& k : box) {
        QPolynomial f = QPolynomial::monomial(ctx, k);
        bool inside = true;
        WeightVector lhs = image(g.op(f), inside);
        if (!inside) continue;  // leaves the solved window
        WeightVector rhs = act_gen(spec, g.g, i, image(f, inside));
        if (!(lhs == rhs)) {
          ok = false;
          witness = "on " + k_text(k) + ": " + (lhs - rhs).to_string();
          break;
        }
      }
      report.add(std::string("intertwines ") + g.name + std::to_string(i) + (g.g == Letter::ZInv ? "^-1" : ""), ok, witness);
    }
  }
  return out;
}

}  // namespace qweyl
