#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients.
//
// Variables are the deformation parameters q_i, the skew-symmetric matrix
// entries l_ij (i < j) and the generic character symbols c_t. Terms are kept
// sorted in decreasing lexicographic order, with no zero coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qweyl {

enum class VarKind : std::uint32_t { Q = 0, L = 1, C = 2 };

/// Packed variable id. Ordering of ids is the variable precedence used by
/// the lex term order: all q's, then all l's, then all c's.
class Var {
public:
  constexpr Var() = default;
  static Var q(int i);
  static Var lambda(int i, int j);  // requires i < j
  static Var generic(int t);

  VarKind kind() const { return static_cast<VarKind>(id_ >> 28); }
  int first() const { return static_cast<int>((id_ >> 14) & 0x3fff); }
  int second() const { return static_cast<int>(id_ & 0x3fff); }
  std::uint32_t id() const { return id_; }
  std::string name() const;

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend auto operator<=>(Var a, Var b) { return a.id_ <=> b.id_; }

private:
  explicit constexpr Var(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

/// Laurent monomial: sorted (var, exponent) pairs, exponents nonzero.
class Monomial {
public:
  Monomial() = default;
  static Monomial power(Var v, std::int64_t e);

  const std::vector<std::pair<Var, std::int64_t>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::int64_t exponent(Var v) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(std::int64_t e) const;

  /// Lexicographic comparison: first differing variable (in id order)
  /// decides, larger exponent is larger.
  friend std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return lex_compare(a, b) < 0;
  }

  std::string to_string() const;

private:
  std::vector<std::pair<Var, std::int64_t>> f_;
};

struct Term {
  Monomial mono;
  mpq_class coef;
};

class Poly {
public:
  Poly() = default;
  Poly(long c);  // NOLINT: integer constants convert implicitly
  explicit Poly(mpq_class c);
  Poly(Monomial m, mpq_class c);
  static Poly var(Var v) { return Poly(Monomial::power(v, 1), 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const mpq_class& c, const Monomial& m) const;
  Poly pow(unsigned e) const;

  /// Exact quotient in the Laurent ring, or empty if `d` does not divide.
  std::optional<Poly> divide_exact(const Poly& d) const;

  /// Splits off a unit: *this == unit_coef * unit_mono * result, where the
  /// result has minimal exponent zero in every variable, coprime integer
  /// coefficients and a positive leading coefficient.
  Poly primitive_part(mpq_class& unit_coef, Monomial& unit_mono) const;

  /// Minimal exponent of every variable occurring in the polynomial.
  Monomial min_exponents() const;

  std::vector<Var> variables() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend std::strong_ordering structural_compare(const Poly& a, const Poly& b);

  std::string to_string() const;

private:
  static Poly from_unsorted(std::vector<Term> ts);
  std::vector<Term> terms_;
};

}  // namespace qweyl
