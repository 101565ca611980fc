#pragma once

// Weights of R° = k[z_1^{±1}, ..., z_n^{±1}] of the form phi(z_i) = q_i^a or
// c_t q_i^a, and the Z^n action (k, phi) -> phi o sigma_k.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qweyl/params.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl {

struct Coord {
  bool generic = false;  // false: q_i^alpha, true: c_t q_i^alpha
  int t = 0;
  std::int64_t alpha = 0;

  static Coord integral(std::int64_t a) { return {false, 0, a}; }
  static Coord generic_symbol(int t, std::int64_t a) { return {true, t, a}; }
  friend bool operator==(const Coord&, const Coord&) = default;
};

class Character {
public:
  Character() = default;
  explicit Character(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  /// The trivial character sending every z_i to 1.
  static Character one(int n) { return Character(std::vector<Coord>(static_cast<std::size_t>(n))); }
  /// Parses `[q^2, c1*q^-1, c2]`.
  static Character parse(const std::string& text);

  int n() const { return static_cast<int>(coords_.size()); }
  const std::vector<Coord>& coords() const { return coords_; }
  const Coord& operator[](int i) const { return coords_[static_cast<std::size_t>(i - 1)]; }

  /// Largest generic symbol id in use (0 if none).
  int max_symbol() const;

  std::string to_string() const;
  friend bool operator==(const Character&, const Character&) = default;

private:
  std::vector<Coord> coords_;
};

/// phi o sigma_k: alpha_i -> alpha_i - k_i.
Character act(const std::vector<std::int64_t>& k, const Character& phi);

/// Axes where phi(z_i) lies in <q_i>.
std::set<int> complexity(const Character& phi);

bool same_orbit(const Character& phi, const Character& psi);

std::vector<Character> tensor_factor(const Character& phi);
Character product(const std::vector<Character>& factors);

/// phi(z_i) with the q of axis i taken from ctx.
Scalar value(const Character& phi, int i, const ParamContext& ctx);
/// prod_i phi(z_i)^{m_i}.
Scalar eval(const Character& phi, const std::vector<std::int64_t>& m, const ParamContext& ctx);

}  // namespace qweyl
