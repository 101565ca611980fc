#pragma once

// The four quantized Weyl algebra presentations and their normal forms.
//
// B-family (localized) monomials are b_k z^m: for each axis in increasing
// order x_i^{k_i} (k_i >= 0) or y_i^{-k_i} (k_i < 0), followed by
// z_1^{m_1} ... z_n^{m_n}.
//
// A-family monomials are y_1^{m_1} x_1^{k_1} ... y_n^{m_n} x_n^{k_n}, i.e.
// `k` holds the x-exponents and `m` the y-exponents, both non-negative.
// With this convention the Z^n-degree of a monomial is k in the B-family
// and k - m in the A-family.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qweyl/params.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl {

enum class Family { AJ, Malt };

struct PresentationId {
  Family family = Family::AJ;
  bool localized = true;
  ParamContext ctx;

  int n() const { return ctx.n(); }
  std::string name() const;
  friend bool operator==(const PresentationId& a, const PresentationId& b) {
    return a.family == b.family && a.localized == b.localized && a.ctx == b.ctx;
  }
};

using Exponents = std::vector<std::int64_t>;

struct NormalMonomial {
  Exponents k;
  Exponents m;

  static NormalMonomial one(int n) {
    return {Exponents(static_cast<std::size_t>(n), 0), Exponents(static_cast<std::size_t>(n), 0)};
  }
  bool is_one() const;
  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

enum class Letter { X, Y, Z, ZInv };

class NormalElement {
public:
  using Terms = std::map<NormalMonomial, Scalar>;

  NormalElement() = default;
  explicit NormalElement(PresentationId p) : p_(std::move(p)) {}
  static NormalElement constant(const PresentationId& p, const Scalar& c);
  static NormalElement monomial(const PresentationId& p, NormalMonomial mono, const Scalar& c = 1);
  /// x_i^e, y_i^e (e >= 0), or z_i^e (any e in the B-family, e >= 0 otherwise).
  static NormalElement generator(const PresentationId& p, Letter g, int i, std::int64_t e = 1);

  const PresentationId& presentation() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const NormalMonomial& mono) const;

  void add_term(const NormalMonomial& mono, const Scalar& c);

  NormalElement operator+(const NormalElement& o) const;
  NormalElement operator-(const NormalElement& o) const;
  NormalElement operator-() const;
  NormalElement scaled(const Scalar& c) const;
  /// Applies `f` to every coefficient.
  NormalElement map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  /// Z^n-homogeneous components keyed by degree.
  std::map<Exponents, NormalElement> homogeneous_components() const;

  friend bool operator==(const NormalElement& a, const NormalElement& b);

  /// Canonical text: terms ascending in (k, m), e.g. `q1*y1^2*x2 - z1^-1`.
  std::string to_string() const;

private:
  PresentationId p_;
  Terms terms_;
};

std::string monomial_to_string(const PresentationId& p, const NormalMonomial& mono);
Exponents degree(const PresentationId& p, const NormalMonomial& mono);

/// Product in the algebra, rewritten to normal form.
NormalElement multiply(const NormalElement& a, const NormalElement& b);
inline NormalElement operator*(const NormalElement& a, const NormalElement& b) { return multiply(a, b); }

/// z_i = x_i y_i - y_i x_i in normal form.
NormalElement z_element(const PresentationId& p, int i);

struct IdentityCheck {
  std::string identity;
  bool ok = false;
  std::string witness;  // normal form of LHS - RHS when nonzero
};

/// Coefficient hook applied to every right-hand-side constant of an
/// identity; the identity map leaves the relations untouched.
using CoefficientHook = std::function<Scalar(const Scalar&)>;

/// Evaluates every defining relation and z-normality identity.
std::vector<IdentityCheck> check_relations(const PresentationId& p, const CoefficientHook& hook = {});

/// A realization of the generators of a presentation inside some algebra:
/// images of x_i, y_i, z_i (and z_i^-1 when localized) and the product used
/// to combine them.
struct RelationModel {
  std::function<NormalElement(int)> x, y, z, zinv;
  std::function<NormalElement(const NormalElement&, const NormalElement&)> mul;
  NormalElement one;
};

RelationModel native_model(const PresentationId& p);

/// The relations of `p` (coefficients from p's family and parameters)
/// evaluated on the images given by `model`.
std::vector<IdentityCheck> check_relations_in(const PresentationId& p, const RelationModel& model,
                                              const CoefficientHook& hook = {});

/// The isomorphism from the AJ-B algebra onto the Maltsiniotis B algebra.
NormalElement theta(const NormalElement& a);

/// Degree-zero automorphism tau_g of the Lambda = (1) AJ algebra, with the
/// lambda's taken from `lambda_source`.
NormalElement tau_apply(const Exponents& g, const NormalElement& a, const ParamContext& lambda_source);

/// Zhang twisted product a * b = sum_g tau_g(a) b_g.
NormalElement twist_product(const NormalElement& a, const NormalElement& b,
                            const ParamContext& lambda_source);

}  // namespace qweyl
