#pragma once

// Exact elements of the coefficient field Q(q_i, l_ij, c_t).
//
// A Scalar is a fraction num / (f_1^e_1 ... f_r^e_r) whose denominator is
// kept as a list of normalized factors. No polynomial gcd is computed:
// equality is decided by cross-multiplication, and a factor is cancelled
// only when it divides the numerator exactly.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/poly.hpp"

namespace qweyl {

/// Prime used for modular specialisation (2^61 - 1).
inline constexpr std::uint64_t kEvalPrime = (std::uint64_t{1} << 61) - 1;

using VarPoint = std::function<std::uint64_t(Var)>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::int64_t e, std::uint64_t p);

/// Value of a Laurent polynomial at a point of (F_p^*)^N.
std::uint64_t eval_mod(const Poly& f, const VarPoint& point, std::uint64_t p = kEvalPrime);

class Scalar {
public:
  using Factor = std::pair<Poly, int>;

  Scalar() = default;
  Scalar(long c);  // NOLINT: integer constants convert implicitly
  explicit Scalar(mpq_class c);
  explicit Scalar(Poly p);
  static Scalar var(Var v);
  static Scalar q(int i) { return var(Var::q(i)); }
  static Scalar generic(int t) { return var(Var::generic(t)); }
  static Scalar monomial(const Monomial& m, mpq_class c = 1);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.empty(); }
  const Poly& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  Poly denominator() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  /// Replaces every occurrence of `v` by `value`.
  Scalar substitute(Var v, const Scalar& value) const;

  /// Specialisation modulo kEvalPrime; empty when the denominator vanishes.
  std::optional<std::uint64_t> eval_mod(const VarPoint& point) const;

  /// Equality by cross-multiplication: a.num*b.den == b.num*a.den.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text form: `num` or `num / den`.
  std::string to_string() const;

private:
  void add_factor(Poly f, int e);
  void cancel();

  Poly num_;
  std::vector<Factor> den_;
};

/// The quantum integer (m)_q for an arbitrary scalar q.
Scalar quantum_integer(std::int64_t m, const Scalar& q);
/// (m)_{q_i} for the indeterminate q_i.
Scalar quantum_integer(std::int64_t m, int i);

/// Returns alpha iff s == q_i^alpha exactly. Throws ZeroScalar on s == 0.
std::optional<std::int64_t> as_q_power(const Scalar& s, int i);

}  // namespace qweyl
