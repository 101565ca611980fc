#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/scalar.hpp"

namespace qweyl {

enum class LambdaMode { AllOnes, Symbolic, Numeric };

/// Rank, the deformation parameters q_i and the skew-symmetric matrix Lambda.
///
/// Only lambda_ij with i < j is ever stored; lambda(i, i) = 1 and
/// lambda(j, i) = lambda(i, j)^-1 are derived on access.
class ParamContext {
public:
  ParamContext() = default;
  static ParamContext ones(int n);
  static ParamContext symbolic(int n);
  /// `table` must hold a nonzero entry for every pair i < j.
  static ParamContext numeric(int n, std::map<std::pair<int, int>, mpq_class> table);
  /// Accepts `ones`, `symbolic` or `numeric:12=2,13=-1/3,...`.
  static ParamContext parse(int n, const std::string& spec);

  int n() const { return n_; }
  LambdaMode mode() const { return mode_; }
  int generic_symbols() const { return generic_symbols_; }
  void set_generic_symbols(int count) { generic_symbols_ = count; }

  /// Index of the q symbol used on axis i (1-based); identity unless restricted.
  int q_index(int i) const { return axis_q_[static_cast<std::size_t>(i - 1)]; }
  Scalar q(int i) const { return Scalar::q(q_index(i)); }
  Scalar lambda(int i, int j) const;

  /// Rank-one context carrying the q of axis i, with Lambda = (1).
  ParamContext restricted_to_axis(int i) const;
  /// Same q's, Lambda replaced by (1).
  ParamContext with_ones() const;

  std::string describe() const;

  friend bool operator==(const ParamContext& a, const ParamContext& b);

private:
  int n_ = 1;
  LambdaMode mode_ = LambdaMode::AllOnes;
  int generic_symbols_ = 0;
  std::map<std::pair<int, int>, mpq_class> table_;
  std::vector<int> axis_q_{1};
};

}  // namespace qweyl
