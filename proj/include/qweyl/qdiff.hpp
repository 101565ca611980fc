#pragma once

// The quantum affine space E_n^Lambda = k<y_1..y_n | y_i y_j = lambda_ij y_j y_i>
// and the q-difference operators through which the localized AJ algebra acts
// on it: x_i -> partial_i, y_i -> m_i, z_i -> xi_i.

#include <map>
#include <string>

#include "qweyl/params.hpp"
#include "qweyl/presentation.hpp"
#include "qweyl/report.hpp"

namespace qweyl {

class QPolynomial {
public:
  using Terms = std::map<Exponents, Scalar>;

  QPolynomial() = default;
  explicit QPolynomial(ParamContext ctx) : ctx_(std::move(ctx)) {}
  static QPolynomial monomial(const ParamContext& ctx, Exponents k, const Scalar& c = 1);

  const ParamContext& ctx() const { return ctx_; }
  int n() const { return ctx_.n(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Exponents& k) const;

  void add_term(const Exponents& k, const Scalar& c);
  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial scaled(const Scalar& c) const;

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

  /// The same polynomial as a y-only element of the AJ-A algebra over ctx.
  NormalElement to_element() const;
  /// Inverse of to_element; throws PresentationMismatch on x's.
  static QPolynomial from_element(const NormalElement& a);
  std::string to_string() const;

private:
  ParamContext ctx_;
  Terms terms_;
};

enum class PartialConstant {
  Corrected,  // (q_i - 1)^-1 y_i^-1 (xi_i(f) - f)
  Verbatim,   // (q_i - 1)   y_i^-1 (xi_i(f) - f)
};

QPolynomial xi(int i, const QPolynomial& p);
QPolynomial xi_inverse(int i, const QPolynomial& p);
QPolynomial m(int i, const QPolynomial& p);
QPolynomial partial(int i, const QPolynomial& p, PartialConstant c = PartialConstant::Corrected);

/// Every defining relation of the localized AJ algebra, read through
/// x -> partial, y -> m, z -> xi, as an operator identity on all y^k with
/// |k| <= degree.
Report check_qdiff_morphism(const ParamContext& ctx, int degree,
                            PartialConstant c = PartialConstant::Corrected);

/// Identification of E_n^Lambda with S_1: weights, supports, and the
/// intertwiner y^k -> mu_k v_{-k} solved on [0, R]^n with mu_0 = 1.
struct QdiffIntertwiner {
  std::map<Exponents, Scalar> mu;
  Report report;
};

QdiffIntertwiner check_E_is_S1(const ParamContext& ctx, std::int64_t radius);

}  // namespace qweyl
