#include "qweyl/params.hpp"

#include <numeric>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

std::vector<int> identity_axes(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void check_rank(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
}

}  // namespace

ParamContext ParamContext::ones(int n) {
  check_rank(n);
  ParamContext c;
  c.n_ = n;
  c.axis_q_ = identity_axes(n);
  return c;
}

ParamContext ParamContext::symbolic(int n) {
  ParamContext c = ones(n);
  c.mode_ = LambdaMode::Symbolic;
  return c;
}

ParamContext ParamContext::numeric(int n, std::map<std::pair<int, int>, mpq_class> table) {
  ParamContext c = ones(n);
  c.mode_ = LambdaMode::Numeric;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      auto it = table.find({i, j});
      if (it == table.end()) {
        throw Error(ErrorCode::InvalidArgument,
                    "numeric lambda table lacks entry " + std::to_string(i) + std::to_string(j));
      }
      if (it->second == 0) throw Error(ErrorCode::InvalidArgument, "lambda entries must be nonzero");
    }
  }
  for (const auto& [ij, v] : table) {
    if (ij.first < 1 || ij.first >= ij.second || ij.second > n) {
      throw Error(ErrorCode::InvalidArgument, "lambda table index out of range");
    }
  }
  c.table_ = std::move(table);
  return c;
}

ParamContext ParamContext::parse(int n, const std::string& spec) {
  if (spec == "ones" || spec == "1") return ones(n);
  if (spec == "symbolic") return symbolic(n);
  const std::string prefix = "numeric:";
  if (spec.rfind(prefix, 0) != 0) {
    throw Error(ErrorCode::InvalidArgument, "unknown lambda mode '" + spec + "'");
  }
  std::map<std::pair<int, int>, mpq_class> table;
  std::stringstream ss(spec.substr(prefix.size()));
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "bad lambda entry '" + item + "'");
    std::string idx = item.substr(0, eq);
    int i = 0;
    int j = 0;
    auto us = idx.find('_');
    try {
      if (us != std::string::npos) {
        i = std::stoi(idx.substr(0, us));
        j = std::stoi(idx.substr(us + 1));
      } else if (idx.size() == 2) {
        i = idx[0] - '0';
        j = idx[1] - '0';
      } else {
        throw Error(ErrorCode::InvalidArgument, "bad lambda index '" + idx + "'");
      }
      mpq_class v(item.substr(eq + 1));
      v.canonicalize();
      table[{i, j}] = v;
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::InvalidArgument, "bad lambda entry '" + item + "'");
    }
  }
  return numeric(n, std::move(table));
}

Scalar ParamContext::lambda(int i, int j) const {
  if (i == j) return Scalar(1);
  if (i > j) return lambda(j, i).inverse();
  switch (mode_) {
    case LambdaMode::AllOnes:
      return Scalar(1);
    case LambdaMode::Symbolic:
      return Scalar::var(Var::lambda(i, j));
    case LambdaMode::Numeric:
      return Scalar(table_.at({i, j}));
  }
  return Scalar(1);
}

ParamContext ParamContext::restricted_to_axis(int i) const {
  ParamContext c = ones(1);
  c.axis_q_ = {q_index(i)};
  c.generic_symbols_ = generic_symbols_;
  return c;
}

ParamContext ParamContext::with_ones() const {
  ParamContext c = *this;
  c.mode_ = LambdaMode::AllOnes;
  c.table_.clear();
  return c;
}

std::string ParamContext::describe() const {
  std::string s = "n=" + std::to_string(n_) + ", lambda=";
  switch (mode_) {
    case LambdaMode::AllOnes: s += "ones"; break;
    case LambdaMode::Symbolic: s += "symbolic"; break;
    case LambdaMode::Numeric: {
      s += "numeric:";
      bool first = true;
      for (const auto& [ij, v] : table_) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(ij.first) + std::to_string(ij.second) + "=" + v.get_str();
      }
      break;
    }
  }
  return s;
}

bool operator==(const ParamContext& a, const ParamContext& b) {
  return a.n_ == b.n_ && a.mode_ == b.mode_ && a.table_ == b.table_ && a.axis_q_ == b.axis_q_;
}

}  // namespace qweyl
