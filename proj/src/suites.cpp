#include "qweyl/suites.hpp"

#include <map>
#include <random>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

std::string vec_text(const Exponents& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// All vectors in Z^n with |v|_1 <= 1.
std::vector<Exponents> unit_ball(int n) {
  std::vector<Exponents> out{Exponents(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      Exponents v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(i)] = s;
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

Report relation_suite(const PresentationId& p, const CoefficientHook& hook) {
  Report r;
  r.title = "relations of " + p.name();
  r.append(check_relations(p, hook));
  return r;
}

std::size_t rank_of(const std::vector<NormalElement>& elements) {
  // Gaussian elimination on coefficient rows keyed by monomial.
  std::vector<std::map<NormalMonomial, Scalar>> rows;
  for (const auto& e : elements) rows.emplace_back(e.terms().begin(), e.terms().end());
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    if (row.empty()) continue;
    ++rank;
    auto [pivot, pc] = *row.begin();
    for (std::size_t s = r + 1; s < rows.size(); ++s) {
      auto it = rows[s].find(pivot);
      if (it == rows[s].end()) continue;
      Scalar f = it->second / pc;
      for (const auto& [mono, c] : row) {
        Scalar& t = rows[s][mono];
        t -= f * c;
        if (t.is_zero()) rows[s].erase(mono);
      }
    }
  }
  return rank;
}

Report theta_suite(const ParamContext& ctx) {
  const int n = ctx.n();
  PresentationId src{Family::AJ, true, ctx};
  PresentationId dst{Family::Malt, true, ctx};
  Report r;
  r.title = "theta: " + src.name() + " -> " + dst.name();

  RelationModel img;
  img.x = [&](int i) { return theta(NormalElement::generator(src, Letter::X, i)); };
  img.y = [&](int i) { return theta(NormalElement::generator(src, Letter::Y, i)); };
  img.z = [&](int i) { return theta(z_element(src, i)); };
  img.zinv = [&](int i) { return theta(NormalElement::generator(src, Letter::Z, i, -1)); };
  img.mul = [](const NormalElement& a, const NormalElement& b) { return a * b; };
  img.one = NormalElement::constant(dst, 1);
  for (auto e : check_relations_in(src, img)) {
    e.identity = "theta(" + e.identity + ")";
    r.entries.push_back(std::move(e));
  }

  std::vector<NormalElement> images;
  for (const auto& k : unit_ball(n)) {
    for (const auto& m : unit_ball(n)) images.push_back(theta(NormalElement::monomial(src, {k, m})));
  }
  std::size_t rk = rank_of(images);
  r.add("theta images of the " + std::to_string(images.size()) + " monomials b_k z^m, |k|,|m| <= 1, are independent",
        rk == images.size(), rk == images.size() ? "" : "rank " + std::to_string(rk));
  return r;
}

Report twist_suite(const ParamContext& ctx, bool localized, int samples, std::uint64_t seed) {
  const int n = ctx.n();
  PresentationId target{Family::AJ, localized, ctx};
  PresentationId base{Family::AJ, localized, ctx.with_ones()};
  Report r;
  r.title = "Zhang twist of " + base.name() + " by " + ctx.describe();

  RelationModel tw;
  tw.x = [&](int i) { return NormalElement::generator(base, Letter::X, i); };
  tw.y = [&](int i) { return NormalElement::generator(base, Letter::Y, i); };
  tw.z = [&](int i) {
    auto x = NormalElement::generator(base, Letter::X, i);
    auto y = NormalElement::generator(base, Letter::Y, i);
    return twist_product(x, y, ctx) - twist_product(y, x, ctx);
  };
  if (localized) tw.zinv = [&](int i) { return NormalElement::generator(base, Letter::Z, i, -1); };
  tw.mul = [&](const NormalElement& a, const NormalElement& b) { return twist_product(a, b, ctx); };
  tw.one = NormalElement::constant(base, 1);
  for (auto e : check_relations_in(target, tw)) {
    e.identity = "twisted: " + e.identity;
    r.entries.push_back(std::move(e));
  }

  // tau is a group action: tau_g(tau_h(a)) = tau_{g+h}(a), tau_0 = id.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gd(-3, 3);
  std::uniform_int_distribution<int> axis(0, n - 1);
  std::uniform_int_distribution<int> letter(0, localized ? 3 : 1);
  bool action_ok = true;
  bool identity_ok = true;
  std::string witness;
  for (int t = 0; t < samples; ++t) {
    Exponents g(static_cast<std::size_t>(n));
    Exponents h(static_cast<std::size_t>(n));
    Exponents gh(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.size(); ++i) {
      g[i] = gd(rng);
      h[i] = gd(rng);
      gh[i] = g[i] + h[i];
    }
    // random element: a few words of up to four letters
    NormalElement a(base);
    for (int w = 0; w < 3; ++w) {
      NormalElement word = NormalElement::constant(base, Scalar(1 + w));
      int len = 1 + t % 4;
      for (int l = 0; l < len; ++l) {
        int i = axis(rng) + 1;
        switch (letter(rng)) {
          case 0: word = word * NormalElement::generator(base, Letter::X, i); break;
          case 1: word = word * NormalElement::generator(base, Letter::Y, i); break;
          case 2: word = word * NormalElement::generator(base, Letter::Z, i); break;
          default: word = word * NormalElement::generator(base, Letter::Z, i, -1); break;
        }
      }
      a = a + word;
    }
    if (!(tau_apply(g, tau_apply(h, a, ctx), ctx) == tau_apply(gh, a, ctx)) && action_ok) {
      action_ok = false;
      witness = "g = " + vec_text(g) + ", h = " + vec_text(h) + ", a = " + a.to_string();
    }
    if (!(tau_apply(Exponents(static_cast<std::size_t>(n), 0), a, ctx) == a)) identity_ok = false;
  }
  r.add("tau_g tau_h = tau_{g+h} on " + std::to_string(samples) + " random triples", action_ok, witness);
  r.add("tau_0 = id", identity_ok);
  return r;
}

}  // namespace qweyl
