#include "qweyl/weight_module.hpp"

#include <deque>
#include <set>

#include "json.hpp"
#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i - 1); }

Point unit(int n, int i, std::int64_t s = 1) {
  Point e(static_cast<std::size_t>(n), 0);
  e[at(i)] = s;
  return e;
}

Point add(Point a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Point target_of(const Point& k, Letter g, int i) {
  Point t = k;
  if (g == Letter::X) t[at(i)] += 1;
  if (g == Letter::Y) t[at(i)] -= 1;
  return t;
}

std::string point_text(const Point& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(k[i]);
  }
  return s + ")";
}

std::string letter_text(Letter g, int i) {
  switch (g) {
    case Letter::X: return "x" + std::to_string(i);
    case Letter::Y: return "y" + std::to_string(i);
    case Letter::Z: return "z" + std::to_string(i);
    case Letter::ZInv: return "z" + std::to_string(i) + "^-1";
  }
  return "?";
}

void require_spec(const ModuleSpec& spec, const WeightVector& v) {
  if (!(spec == v.spec())) throw Error(ErrorCode::SpecMismatch, "vector belongs to a different module");
}

// (q^a phi(z_i) - 1)/(q - 1)
Scalar wall_factor(const ModuleSpec& spec, int i, std::int64_t a) {
  Scalar q = spec.ctx.q(i);
  return (q.pow(a) * value(spec.phi, i, spec.ctx) - 1) / (q - 1);
}

// Coefficient of the Lambda = (1) action times the twisting scalar of tau_k.
Scalar twist_scalar(const ModuleSpec& spec, Letter g, int i, const Point& k) {
  PresentationId ones{Family::AJ, true, spec.ctx.with_ones()};
  NormalElement gen = NormalElement::generator(ones, g, i);
  NormalElement t = tau_apply(k, gen, spec.ctx);
  return t.coefficient(gen.terms().begin()->first);
}

Scalar lambda_product(const ModuleSpec& spec, int i, const Point& k) {
  Scalar c(1);
  for (int j = 1; j < i; ++j) {
    if (k[at(j)] != 0) c *= spec.ctx.lambda(i, j).pow(k[at(j)]);
  }
  return c;
}

std::int64_t max_integral_alpha(const Character& phi) {
  std::int64_t m = 0;
  for (const auto& c : phi.coords()) {
    if (!c.generic) m = std::max(m, c.alpha < 0 ? -c.alpha : c.alpha);
  }
  return m;
}

void require_oracle_window(const ModuleSpec& spec, std::int64_t radius) {
  std::int64_t need = max_integral_alpha(spec.phi) + 2;
  if (radius < need) {
    throw Error(ErrorCode::WindowTooSmall,
                "radius " + std::to_string(radius) + " below required " + std::to_string(need));
  }
}

ModuleSpec as_P(ModuleSpec spec) {
  spec.kind = ModuleKind::P;
  return spec;
}

}  // namespace

// ------------------------------------------------------------ WeightVector

WeightVector WeightVector::basis(const ModuleSpec& spec, const Point& k, const Scalar& c) {
  WeightVector v(spec);
  v.add(k, c);
  return v;
}

Scalar WeightVector::coefficient(const Point& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Scalar(0) : it->second;
}

void WeightVector::add(const Point& k, const Scalar& c) {
  if (k.size() != static_cast<std::size_t>(spec_.n())) throw Error(ErrorCode::InvalidArgument, "point rank");
  if (c.is_zero()) return;
  if (spec_.kind == ModuleKind::S && in_Nphi(spec_.phi, k)) return;  // quotient projection
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    entries_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
  require_spec(spec_, o);
  WeightVector r = *this;
  for (const auto& [k, c] : o.entries_) r.add(k, c);
  return r;
}

WeightVector WeightVector::operator-(const WeightVector& o) const { return *this + o.scaled(Scalar(-1)); }

WeightVector WeightVector::scaled(const Scalar& c) const {
  WeightVector r(spec_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : entries_) r.entries_.emplace(k, v * c);
  return r;
}

std::map<Point, WeightVector> WeightVector::weight_components() const {
  // Weights phi o sigma_k are pairwise distinct for distinct k (the Z^n
  // action on characters is free), so grouping by weight is grouping by k.
  std::map<Point, WeightVector> out;
  for (const auto& [k, c] : entries_) {
    auto [it, inserted] = out.try_emplace(k, spec_);
    it->second.add(k, c);
  }
  return out;
}

bool operator==(const WeightVector& a, const WeightVector& b) {
  if (!(a.spec_ == b.spec_) || a.entries_.size() != b.entries_.size()) return false;
  auto ia = a.entries_.begin();
  for (auto ib = b.entries_.begin(); ib != b.entries_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

std::string WeightVector::to_string() const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : entries_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*v" + point_text(k);
  }
  return s;
}

// ----------------------------------------------------------------- actions

Scalar action_coefficient(const ModuleSpec& spec, Letter g, int i, const Point& k) {
  if (i < 1 || i > spec.n()) throw Error(ErrorCode::UnknownGenerator, "generator index exceeds n");
  if (k.size() != static_cast<std::size_t>(spec.n())) throw Error(ErrorCode::InvalidArgument, "point rank");
  if (g == Letter::Z || g == Letter::ZInv) {
    Scalar w = value(act(k, spec.phi), i, spec.ctx);
    return g == Letter::Z ? w : w.inverse();
  }
  Scalar lam = spec.realization == Realization::DirectLambda ? lambda_product(spec, i, k)
                                                             : twist_scalar(spec, g, i, k);
  if (g == Letter::Y) lam = spec.realization == Realization::DirectLambda ? lam.inverse() : lam;
  std::int64_t ki = k[at(i)];
  if (g == Letter::X) return ki >= 0 ? lam : lam * wall_factor(spec, i, -ki);
  return ki > 0 ? lam * wall_factor(spec, i, -ki + 1) : lam;
}

WeightVector act_gen(const ModuleSpec& spec, Letter g, int i, const WeightVector& v) {
  require_spec(spec, v);
  WeightVector out(spec);
  for (const auto& [k, c] : v.entries()) out.add(target_of(k, g, i), c * action_coefficient(spec, g, i, k));
  return out;
}

WeightVector act_element(const ModuleSpec& spec, const NormalElement& a, const WeightVector& v) {
  if (!(a.presentation() == spec.algebra())) {
    throw Error(ErrorCode::PresentationMismatch, "element is not in the algebra acting on the module");
  }
  require_spec(spec, v);
  WeightVector out(spec);
  const int n = spec.n();
  for (const auto& [mono, c] : a.terms()) {
    // b_k z^m acts right to left: z's first, then blocks n, ..., 1.
    WeightVector w = v;
    for (int i = 1; i <= n; ++i) {
      std::int64_t m = mono.m[at(i)];
      for (std::int64_t t = 0; t < (m < 0 ? -m : m); ++t) w = act_gen(spec, m > 0 ? Letter::Z : Letter::ZInv, i, w);
    }
    for (int i = n; i >= 1; --i) {
      std::int64_t k = mono.k[at(i)];
      for (std::int64_t t = 0; t < (k < 0 ? -k : k); ++t) w = act_gen(spec, k > 0 ? Letter::X : Letter::Y, i, w);
    }
    out = out + w.scaled(c);
  }
  return out;
}

Character weight_of(const ModuleSpec& spec, const Point& k) { return act(k, spec.phi); }

// -------------------------------------------------------------------- N_phi

bool in_Nphi(const Character& phi, const Point& k) {
  for (int i = 1; i <= phi.n(); ++i) {
    const Coord& c = phi[i];
    if (c.generic) continue;
    std::int64_t ki = k[at(i)];
    if (c.alpha >= 0 && ki > c.alpha) return true;
    if (c.alpha < 0 && ki <= c.alpha) return true;
  }
  return false;
}

bool nphi_oracle(const ModuleSpec& spec_in, const Point& k, std::int64_t radius) {
  ModuleSpec spec = as_P(spec_in);
  require_oracle_window(spec, radius);
  Window w(spec.n(), radius);
  if (!w.contains(k, 1)) throw Error(ErrorCode::WindowTooSmall, "point " + point_text(k) + " not interior");
  std::set<Point> seen{k};
  std::deque<Point> queue{k};
  const Point origin(static_cast<std::size_t>(spec.n()), 0);
  while (!queue.empty()) {
    Point u = queue.front();
    queue.pop_front();
    if (u == origin) return false;
    for (int i = 1; i <= spec.n(); ++i) {
      for (Letter g : {Letter::X, Letter::Y}) {
        Point t = target_of(u, g, i);
        if (!w.contains(t) || seen.count(t) != 0) continue;
        if (action_coefficient(spec, g, i, u).is_zero()) continue;
        seen.insert(t);
        queue.push_back(t);
      }
    }
  }
  return true;
}

EdgeTable build_edge_table(const ModuleSpec& spec_in, std::int64_t radius, Exec exec) {
  ModuleSpec spec = as_P(spec_in);
  Window w(spec.n(), radius);
  const int slots = 2 * spec.n();
  EdgeTable table{w, std::vector<std::int64_t>(w.size() * static_cast<std::size_t>(slots), EdgeTable::kOutside)};
  sweep(w, exec, [&](std::size_t v) {
    Point k = w.point(v);
    for (int i = 1; i <= spec.n(); ++i) {
      for (int y = 0; y < 2; ++y) {
        Letter g = y == 0 ? Letter::X : Letter::Y;
        auto t = w.index(target_of(k, g, i));
        std::int64_t& slot = table.target[v * static_cast<std::size_t>(slots) + static_cast<std::size_t>(2 * (i - 1) + y)];
        if (!t) continue;
        slot = action_coefficient(spec, g, i, k).is_zero() ? EdgeTable::kZero : static_cast<std::int64_t>(*t);
      }
    }
  });
  return table;
}

std::vector<bool> nphi_oracle_window(const ModuleSpec& spec, std::int64_t radius, Exec exec) {
  require_oracle_window(spec, radius);
  EdgeTable table = build_edge_table(spec, radius, exec);
  const Window& w = table.window;
  const int slots = 2 * spec.n();
  std::vector<std::vector<std::size_t>> reverse(w.size());
  for (std::size_t v = 0; v < w.size(); ++v) {
    for (int s = 0; s < slots; ++s) {
      std::int64_t t = table.at(v, s);
      if (t >= 0) reverse[static_cast<std::size_t>(t)].push_back(v);
    }
  }
  std::vector<bool> reaches(w.size(), false);
  std::size_t origin = *w.index(Point(static_cast<std::size_t>(spec.n()), 0));
  std::deque<std::size_t> queue{origin};
  reaches[origin] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t p : reverse[u]) {
      if (!reaches[p]) {
        reaches[p] = true;
        queue.push_back(p);
      }
    }
  }
  std::vector<bool> out(w.size());
  for (std::size_t v = 0; v < w.size(); ++v) out[v] = !reaches[v];
  return out;
}

bool is_simple_P(const Character& phi) { return complexity(phi).empty(); }

// ----------------------------------------------------------- classification

std::string WeightSetDescriptor::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) s += ", ";
    std::string k = "k" + std::to_string(i + 1);
    const SupportCoord& c = coords[i];
    switch (c.kind) {
      case SupportCoord::Kind::FullOrbit: s += k + " ∈ Z (orbit c" + std::to_string(c.value) + ")"; break;
      case SupportCoord::Kind::LowerRay: s += k + " ≤ " + std::to_string(c.value); break;
      case SupportCoord::Kind::UpperRay: s += k + " ≥ " + std::to_string(c.value + 1); break;
    }
  }
  return s;
}

bool WeightSetDescriptor::contains(const Point& k) const {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const SupportCoord& c = coords[i];
    if (c.kind == SupportCoord::Kind::LowerRay && k[i] > c.value) return false;
    if (c.kind == SupportCoord::Kind::UpperRay && k[i] < c.value + 1) return false;
  }
  return true;
}

WeightSetDescriptor weight_support(const ModuleSpec& spec) {
  if (spec.kind != ModuleKind::S) {
    throw Error(ErrorCode::SpecMismatch, "weight support descriptors describe S-kind modules");
  }
  WeightSetDescriptor d;
  for (const auto& c : spec.phi.coords()) {
    if (c.generic) {
      d.coords.push_back({SupportCoord::Kind::FullOrbit, c.t});
    } else if (c.alpha >= 0) {
      d.coords.push_back({SupportCoord::Kind::LowerRay, c.alpha});
    } else {
      d.coords.push_back({SupportCoord::Kind::UpperRay, c.alpha});
    }
  }
  return d;
}

bool isomorphic_S(const Character& phi, const Character& psi) {
  // A lower ray k_i <= alpha carries the weights q_i^{alpha - k_i}, i.e. all
  // q_i^j with j >= 0, independently of alpha; an upper ray gives j < 0.
  if (phi.n() != psi.n()) return false;
  for (int i = 1; i <= phi.n(); ++i) {
    const Coord& a = phi[i];
    const Coord& b = psi[i];
    if (a.generic != b.generic) return false;
    if (a.generic ? a.t != b.t : (a.alpha >= 0) != (b.alpha >= 0)) return false;
  }
  return true;
}

bool isomorphic_P_rank1(const Character& phi, const Character& psi) {
  if (phi.n() != 1 || psi.n() != 1) {
    throw Error(ErrorCode::RankNotOne, "the P classification is stated for n = 1 only");
  }
  if (!same_orbit(phi, psi)) return false;
  if (phi[1].generic) return true;
  return (phi[1].alpha >= 0) == (psi[1].alpha >= 0);
}

// --------------------------------------------------------- shift isomorphism

ShiftIso shift_iso_scalars(int ell, const Character& phi, const ParamContext& ctx, std::int64_t radius) {
  const int n = ctx.n();
  if (ell < 1 || ell > n) throw Error(ErrorCode::InvalidArgument, "axis out of range");
  if (phi.n() != n) throw Error(ErrorCode::SpecMismatch, "character rank differs from context");
  if (radius < 2) throw Error(ErrorCode::WindowTooSmall, "shift verification needs radius >= 2");
  ShiftIso out;
  out.report.title = "shift isomorphism P_{e" + std::to_string(ell) + "." + phi.to_string() + "} -> P_phi";
  Window w(n, radius);
  Scalar phil = value(phi, ell, ctx);
  bool degenerate = phil.is_one();

  // lambda_k = r_i(k) lambda_{k + e_i}
  auto ratio = [&](const Point& k, int i) -> Scalar {
    if (i == ell) return k[at(ell)] == -1 ? (phil - 1) / (ctx.q(ell) - 1) : Scalar(1);
    if (i < ell) return Scalar(1);
    return ctx.lambda(i, ell).inverse();
  };

  auto& lam = out.scalars;
  const Point origin(static_cast<std::size_t>(n), 0);
  lam.emplace(origin, Scalar(1));
  std::deque<Point> queue{origin};
  while (!queue.empty()) {
    Point k = queue.front();
    queue.pop_front();
    const Scalar lk = lam.at(k);
    for (int i = 1; i <= n; ++i) {
      Point up = add(k, unit(n, i));
      Point down = add(k, unit(n, i, -1));
      if (w.contains(up) && lam.count(up) == 0) {
        Scalar r = ratio(k, i);
        if (!r.is_zero()) {
          lam.emplace(up, lk / r);
          queue.push_back(up);
        }
      }
      if (w.contains(down) && lam.count(down) == 0) {
        lam.emplace(down, ratio(down, i) * lk);
        queue.push_back(down);
      }
    }
  }

  // Over-determination: every condition inside the window must hold.
  const char* names[] = {"(a) lambda_k = lambda_{k+e_l} for k_l != -1",
                         "(b) lambda_k = (phi(z_l)-1)/(q_l-1) lambda_{k+e_l} at k_l = -1",
                         "(c) lambda_k = lambda_{k+e_i} for i < l", "(d) lambda_k = lambda_il^-1 lambda_{k+e_i} for i > l"};
  std::string witness[4];
  bool ok[4] = {true, true, true, true};
  std::size_t unassigned = 0;
  for (std::size_t v = 0; v < w.size(); ++v) {
    Point k = w.point(v);
    if (lam.count(k) == 0) {
      ++unassigned;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      Point up = add(k, unit(n, i));
      if (!w.contains(up) || lam.count(up) == 0) continue;
      int cond = i == ell ? (k[at(ell)] == -1 ? 1 : 0) : (i < ell ? 2 : 3);
      if (!(lam.at(k) == ratio(k, i) * lam.at(up))) {
        if (ok[cond]) witness[cond] = "k=" + point_text(k) + ", i=" + std::to_string(i);
        ok[cond] = false;
      }
    }
  }
  for (int c = 0; c < 4; ++c) out.report.add(names[c], ok[c], witness[c]);
  out.report.add("scalars determined on the whole window", unassigned == 0,
                 unassigned == 0 ? "" : std::to_string(unassigned) + " points unassigned");

  // Intertwining on interior points: f(g.w_k) = g.f(w_k).
  ModuleSpec src{ctx, act(unit(n, ell), phi), ModuleKind::P, Realization::DirectLambda};
  ModuleSpec dst{ctx, phi, ModuleKind::P, Realization::DirectLambda};
  std::size_t checked = 0;
  for (int i = 1; i <= n; ++i) {
    for (Letter g : {Letter::X, Letter::Y, Letter::Z}) {
      bool good = true;
      std::string wit;
      for (std::size_t v = 0; v < w.size(); ++v) {
        Point k = w.point(v);
        if (!w.contains(k, 1)) continue;
        Point kt = target_of(k, g, i);
        if (lam.count(k) == 0 || lam.count(kt) == 0) continue;
        Scalar lhs = action_coefficient(src, g, i, k) * lam.at(kt);
        Scalar rhs = lam.at(k) * action_coefficient(dst, g, i, add(k, unit(n, ell)));
        ++checked;
        if (!(lhs == rhs) && good) {
          good = false;
          wit = "k=" + point_text(k) + ": " + lhs.to_string() + " vs " + rhs.to_string();
        }
      }
      out.report.add("intertwines " + letter_text(g, i), good, wit);
    }
  }
  bool injective = true;
  for (const auto& [k, s] : lam) injective = injective && !s.is_zero();
  out.report.add("map is injective (isomorphism)", injective,
                 degenerate ? std::string(to_string(ErrorCode::DegenerateCharacter)) + ": phi(z_l) = 1" : "");
  out.report.notes.push_back("window radius " + std::to_string(radius) + ", margin 1, " +
                             std::to_string(checked) + " intertwining checks");
  return out;
}

// ------------------------------------------------------ tensor and twisting

Report tensor_compare(const Character& phi, const ParamContext& ctx, std::int64_t radius) {
  if (ctx.mode() != LambdaMode::AllOnes) {
    throw Error(ErrorCode::LambdaModeMismatch, "tensor decomposition requires Lambda = (1)");
  }
  const int n = ctx.n();
  if (phi.n() != n) throw Error(ErrorCode::SpecMismatch, "character rank differs from context");
  Report rep;
  rep.title = "P_phi vs tensor product of rank-one modules, phi = " + phi.to_string();
  ModuleSpec full{ctx, phi, ModuleKind::P, Realization::DirectLambda};
  std::vector<ModuleSpec> factors;
  auto parts = tensor_factor(phi);
  for (int i = 1; i <= n; ++i) factors.push_back({ctx.restricted_to_axis(i), parts[at(i)], ModuleKind::P, Realization::DirectLambda});

  Window w(n, radius);
  const Letter gens[] = {Letter::X, Letter::Y, Letter::Z, Letter::ZInv};
  // mismatch[v] = first failing generator text, empty if none
  std::vector<std::string> mismatch(w.size());
  sweep(w, Exec::Parallel, [&](std::size_t v) {
    Point k = w.point(v);
    for (int i = 1; i <= n; ++i) {
      for (Letter g : gens) {
        Scalar a = action_coefficient(full, g, i, k);
        Scalar b = action_coefficient(factors[at(i)], g, 1, Point{k[at(i)]});
        if (!(a == b)) {
          mismatch[v] = letter_text(g, i) + " at k=" + point_text(k);
          return;
        }
      }
    }
  });
  std::string wit;
  for (const auto& m : mismatch) {
    if (!m.empty()) {
      wit = m;
      break;
    }
  }
  rep.add("structure constants of P_phi equal those of the tensor product on the window", wit.empty(), wit);

  // S-supports: descriptor product, and the oracle on both sides.
  ModuleSpec fullS = full;
  fullS.kind = ModuleKind::S;
  WeightSetDescriptor prod;
  for (auto f : factors) {
    f.kind = ModuleKind::S;
    prod.coords.push_back(weight_support(f).coords.front());
  }
  rep.add("S-support descriptor equals the product of rank-one descriptors", weight_support(fullS) == prod,
          weight_support(fullS).to_string() + " vs " + prod.to_string());
  std::int64_t r_or = std::max(radius, max_integral_alpha(phi) + 2);
  auto oracle_full = nphi_oracle_window(full, r_or);
  std::vector<std::vector<bool>> oracle_parts;
  for (const auto& f : factors) oracle_parts.push_back(nphi_oracle_window(f, r_or));
  Window wo(n, r_or);
  Window w1(1, r_or);
  std::string swit;
  for (std::size_t v = 0; v < wo.size(); ++v) {
    Point k = wo.point(v);
    if (!wo.contains(k, 1)) continue;
    bool in_support = !oracle_full[v];
    bool in_product = true;
    for (int i = 1; i <= n; ++i) in_product = in_product && !oracle_parts[at(i)][*w1.index(Point{k[at(i)]})];
    if (in_support != in_product && swit.empty()) swit = "k=" + point_text(k);
  }
  rep.add("oracle S-support equals the product of rank-one supports", swit.empty(), swit);
  rep.notes.push_back("window radius " + std::to_string(radius) + " (structure constants), " +
                      std::to_string(r_or) + " with margin 1 (supports)");
  return rep;
}

Report twist_module_compare(const Character& phi, const ParamContext& ctx, std::int64_t radius) {
  const int n = ctx.n();
  if (phi.n() != n) throw Error(ErrorCode::SpecMismatch, "character rank differs from context");
  Report rep;
  rep.title = "twisted (1)-module vs direct Lambda-module, phi = " + phi.to_string();
  ModuleSpec direct{ctx, phi, ModuleKind::P, Realization::DirectLambda};
  ModuleSpec twisted{ctx, phi, ModuleKind::P, Realization::TwistOfOnes};
  Window w(n, radius);
  const Letter gens[] = {Letter::X, Letter::Y, Letter::Z, Letter::ZInv};
  std::vector<std::string> mismatch(w.size());
  sweep(w, Exec::Parallel, [&](std::size_t v) {
    Point k = w.point(v);
    for (int i = 1; i <= n; ++i) {
      for (Letter g : gens) {
        if (!(action_coefficient(direct, g, i, k) == action_coefficient(twisted, g, i, k))) {
          mismatch[v] = letter_text(g, i) + " at k=" + point_text(k);
          return;
        }
      }
    }
  });
  std::string wit;
  for (const auto& m : mismatch) {
    if (!m.empty()) {
      wit = m;
      break;
    }
  }
  rep.add("v_k^(1) -> v_k^Lambda intertwines the twisted and direct actions", wit.empty(), wit);

  // Weights: z acts through tau_g(z_i) = z_i, so weights agree pointwise; the
  // simple quotients keep the same support under both realizations.
  std::int64_t r_or = std::max(radius, max_integral_alpha(phi) + 2);
  auto a = nphi_oracle_window(direct, r_or);
  auto b = nphi_oracle_window(twisted, r_or);
  Window wo(n, r_or);
  std::string swit;
  for (std::size_t v = 0; v < wo.size(); ++v) {
    if (!wo.contains(wo.point(v), 1)) continue;
    if (a[v] != b[v] && swit.empty()) swit = "k=" + point_text(wo.point(v));
  }
  rep.add("weight sets of the simple quotients coincide under twisting", swit.empty(), swit);
  ModuleSpec ds = direct;
  ds.kind = ModuleKind::S;
  ModuleSpec ts = twisted;
  ts.kind = ModuleKind::S;
  rep.add("weight-support descriptors coincide", weight_support(ds) == weight_support(ts));
  rep.notes.push_back("window radius " + std::to_string(radius) + ", support margin 1 at radius " +
                      std::to_string(r_or));
  return rep;
}

// ------------------------------------------------------------------ graphs

std::string ActionGraph::vertex_name(std::size_t v) const {
  std::string s = "v";
  for (auto c : window.point(v)) s += "_" + std::to_string(c);
  return s;
}

ActionGraph action_graph(const ModuleSpec& spec, std::int64_t radius, Exec exec) {
  if (radius < 1) throw Error(ErrorCode::WindowTooSmall, "graph radius must be at least 1");
  Window w(spec.n(), radius);
  ActionGraph g{spec, w, std::vector<bool>(w.size(), true), {}, {}};
  if (spec.kind == ModuleKind::S) {
    for (std::size_t v = 0; v < w.size(); ++v) g.present[v] = !in_Nphi(spec.phi, w.point(v));
  }
  std::vector<std::vector<GraphEdge>> edges(w.size());
  std::vector<std::vector<GraphEdge>> missing(w.size());
  sweep(w, exec, [&](std::size_t v) {
    if (!g.present[v]) return;
    Point k = w.point(v);
    for (int i = 1; i <= spec.n(); ++i) {
      for (Letter l : {Letter::X, Letter::Y}) {
        auto t = w.index(target_of(k, l, i));
        if (!t) continue;
        Scalar c = action_coefficient(spec, l, i, k);
        GraphEdge e{v, *t, l, i, c};
        if (c.is_zero() || !g.present[*t]) {
          missing[v].push_back(std::move(e));
        } else {
          edges[v].push_back(std::move(e));
        }
      }
    }
  });
  for (std::size_t v = 0; v < w.size(); ++v) {
    for (auto& e : edges[v]) g.edges.push_back(std::move(e));
    for (auto& e : missing[v]) g.missing.push_back(std::move(e));
  }
  return g;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}

}  // namespace

std::string ActionGraph::to_dot() const {
  std::string s = "digraph " + dot_quote(std::string(spec.kind == ModuleKind::P ? "P" : "S") + "_phi") + " {\n";
  s += "  label=" + dot_quote(std::string(spec.kind == ModuleKind::P ? "P" : "S") + " phi=" + spec.phi.to_string() +
                              " " + spec.ctx.describe() + " R=" + std::to_string(window.radius())) + ";\n";
  for (std::size_t v = 0; v < window.size(); ++v) {
    if (!present[v]) continue;
    s += "  " + dot_quote(vertex_name(v)) + " [tooltip=" + dot_quote("weight " + act(window.point(v), spec.phi).to_string()) +
         "];\n";
  }
  for (const auto& e : edges) {
    s += "  " + dot_quote(vertex_name(e.source)) + " -> " + dot_quote(vertex_name(e.target)) +
         " [label=" + dot_quote(letter_text(e.g, e.i)) + "];\n";
  }
  for (const auto& e : missing) {
    s += "  // missing " + letter_text(e.g, e.i) + ": " + vertex_name(e.source) + " -> " + vertex_name(e.target) + "\n";
  }
  s += "}\n";
  return s;
}

std::string ActionGraph::to_jsonl() const {
  std::vector<nlohmann::json> rows(window.size());
  for (std::size_t v = 0; v < window.size(); ++v) {
    if (!present[v]) continue;
    rows[v] = {{"vertex", vertex_name(v)},
               {"k", window.point(v)},
               {"weight", act(window.point(v), spec.phi).to_string()},
               {"edges", nlohmann::json::array()},
               {"missing", nlohmann::json::array()}};
  }
  for (const auto& e : edges) {
    rows[e.source]["edges"].push_back(
        {{"label", letter_text(e.g, e.i)}, {"target", vertex_name(e.target)}, {"coefficient", e.coefficient.to_string()}});
  }
  for (const auto& e : missing) {
    rows[e.source]["missing"].push_back({{"label", letter_text(e.g, e.i)}, {"target", vertex_name(e.target)}});
  }
  std::string s;
  for (std::size_t v = 0; v < window.size(); ++v) {
    if (present[v]) s += rows[v].dump() + "\n";
  }
  return s;
}

}  // namespace qweyl
