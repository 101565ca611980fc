#pragma once

// Induced weight modules P_phi over the localized AJ algebra, their maximal
// submodules N_phi and simple quotients S_phi, all handled on finite
// windows of the basis {v_k : k in Z^n}.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/character.hpp"
#include "qweyl/params.hpp"
#include "qweyl/presentation.hpp"
#include "qweyl/report.hpp"
#include "qweyl/sweep.hpp"

namespace qweyl {

enum class ModuleKind { P, S };
enum class Realization { DirectLambda, TwistOfOnes };

struct ModuleSpec {
  ParamContext ctx;
  Character phi;
  ModuleKind kind = ModuleKind::P;
  Realization realization = Realization::DirectLambda;

  int n() const { return ctx.n(); }
  /// The algebra acting on the module: AJ-B with the context's Lambda.
  PresentationId algebra() const { return {Family::AJ, true, ctx}; }
  friend bool operator==(const ModuleSpec& a, const ModuleSpec& b) {
    return a.ctx == b.ctx && a.phi == b.phi && a.kind == b.kind && a.realization == b.realization;
  }
};

class WeightVector {
public:
  using Entries = std::map<Point, Scalar>;

  WeightVector() = default;
  explicit WeightVector(ModuleSpec spec) : spec_(std::move(spec)) {}
  static WeightVector basis(const ModuleSpec& spec, const Point& k, const Scalar& c = 1);

  const ModuleSpec& spec() const { return spec_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Scalar coefficient(const Point& k) const;

  void add(const Point& k, const Scalar& c);
  WeightVector operator+(const WeightVector& o) const;
  WeightVector operator-(const WeightVector& o) const;
  WeightVector scaled(const Scalar& c) const;

  /// Components grouped by weight phi o sigma_k.
  std::map<Point, WeightVector> weight_components() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b);
  std::string to_string() const;

private:
  ModuleSpec spec_;
  Entries entries_;
};

/// Coefficient c with g.v_k = c v_{k'} in P_phi, where k' = k + e_i for x_i,
/// k - e_i for y_i and k for z_i^{±1}. Quotient projection is not applied.
Scalar action_coefficient(const ModuleSpec& spec, Letter g, int i, const Point& k);

/// g.v for a generator g in {x_i, y_i, z_i, z_i^-1}.
WeightVector act_gen(const ModuleSpec& spec, Letter g, int i, const WeightVector& v);

/// a.v for an element of the AJ-B algebra with the module's Lambda.
WeightVector act_element(const ModuleSpec& spec, const NormalElement& a, const WeightVector& v);

Character weight_of(const ModuleSpec& spec, const Point& k);

bool in_Nphi(const Character& phi, const Point& k);
inline bool in_Nphi(const ModuleSpec& spec, const Point& k) { return in_Nphi(spec.phi, k); }

/// Brute force: true iff v_0 is not reachable from v_k through nonzero
/// generator actions inside [-R, R]^n.
bool nphi_oracle(const ModuleSpec& spec, const Point& k, std::int64_t radius);

/// Adjacency of the P-module action graph on a window: for every vertex and
/// generator slot (x_1, y_1, ..., x_n, y_n) the target index, or -1 when the
/// coefficient vanishes, or -2 when the target leaves the window.
struct EdgeTable {
  Window window;
  std::vector<std::int64_t> target;  // size() * 2n, slot = 2(i-1) + (y ? 1 : 0)

  static constexpr std::int64_t kZero = -1;
  static constexpr std::int64_t kOutside = -2;
  std::int64_t at(std::size_t v, int slot) const {
    return target[v * static_cast<std::size_t>(2 * window.n()) + static_cast<std::size_t>(slot)];
  }
};

EdgeTable build_edge_table(const ModuleSpec& spec, std::int64_t radius, Exec exec = Exec::Parallel);

/// Window version of the oracle: result[index] is true iff v_0 is NOT
/// reachable from the vertex, computed by a backward search from v_0.
std::vector<bool> nphi_oracle_window(const ModuleSpec& spec, std::int64_t radius, Exec exec = Exec::Parallel);

bool is_simple_P(const Character& phi);

struct SupportCoord {
  enum class Kind { FullOrbit, LowerRay, UpperRay };
  Kind kind = Kind::FullOrbit;
  std::int64_t value = 0;  // symbol id for FullOrbit, alpha for the rays
  friend bool operator==(const SupportCoord&, const SupportCoord&) = default;
};

struct WeightSetDescriptor {
  std::vector<SupportCoord> coords;
  friend bool operator==(const WeightSetDescriptor&, const WeightSetDescriptor&) = default;
  /// e.g. `k1 <= 2, k2 >= 0, k3 full orbit c1`.
  std::string to_string() const;
  bool contains(const Point& k) const;
};

WeightSetDescriptor weight_support(const ModuleSpec& spec);

/// Equality of the weight sets of S_phi and S_psi as sets of characters.
bool isomorphic_S(const Character& phi, const Character& psi);
bool isomorphic_P_rank1(const Character& phi, const Character& psi);

struct ShiftIso {
  std::map<Point, Scalar> scalars;
  Report report;
};

/// Scalars lambda_k realizing P_{e_l.phi} -> P_phi, w_k -> lambda_k v_{k+e_l}.
ShiftIso shift_iso_scalars(int ell, const Character& phi, const ParamContext& ctx, std::int64_t radius);

Report tensor_compare(const Character& phi, const ParamContext& ctx, std::int64_t radius);
Report twist_module_compare(const Character& phi, const ParamContext& ctx, std::int64_t radius);

struct GraphEdge {
  std::size_t source;
  std::size_t target;
  Letter g;
  int i;
  Scalar coefficient;
};

struct ActionGraph {
  ModuleSpec spec;
  Window window;
  std::vector<bool> present;  // vertex kept (S-kind drops N_phi)
  std::vector<GraphEdge> edges;
  /// Edges whose target lies in the window but whose coefficient vanishes
  /// (or whose target was dropped in the quotient).
  std::vector<GraphEdge> missing;

  std::string vertex_name(std::size_t v) const;
  std::string to_dot() const;
  std::string to_jsonl() const;
};

ActionGraph action_graph(const ModuleSpec& spec, std::int64_t radius, Exec exec = Exec::Parallel);

}  // namespace qweyl
