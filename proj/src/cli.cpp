#include "qweyl/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qweyl/character.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/qdiff.hpp"
#include "qweyl/suites.hpp"
#include "qweyl/weight_module.hpp"

namespace qweyl {

namespace {

using json = nlohmann::json;

struct Options {
  std::string family = "aj";
  bool localized = false;
  int n = 0;
  std::string lambda;
  std::string phi;
  std::string psi;
  std::int64_t radius = 4;
  std::string kind = "P";
  std::string realization = "direct";
  std::string format = "text";
  std::string output;
  std::string expr;
  int degree = 5;
  int axis = 1;
  std::string perturb;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_mode(const Options& o) { return o.format == "json"; }

std::uint64_t seed_from_env() {
  const char* s = std::getenv("QWEYL_SEED");
  return s != nullptr ? std::strtoull(s, nullptr, 10) : 20240607u;
}

// ------------------------------------------------------------ resolution

int resolve_n(const Options& o, const std::optional<Character>& phi) {
  int n = o.n;
  if (phi) {
    if (n != 0 && n != phi->n()) {
      throw Usage("--n " + std::to_string(n) + " does not match the character length " + std::to_string(phi->n()));
    }
    n = phi->n();
  }
  if (n == 0) n = 1;
  if (n < 1) throw Usage("--n must be at least 1");
  return n;
}

Character require_character(const std::string& text, const char* flag) {
  if (text.empty()) throw Usage(std::string("missing ") + flag);
  return Character::parse(text);
}

ParamContext context(const Options& o, int n, const char* fallback = "symbolic") {
  return ParamContext::parse(n, o.lambda.empty() ? fallback : o.lambda);
}

PresentationId presentation(const Options& o, const ParamContext& ctx) {
  Family f;
  if (o.family == "aj") {
    f = Family::AJ;
  } else if (o.family == "malt") {
    f = Family::Malt;
  } else {
    throw Usage("--family must be aj or malt");
  }
  return {f, o.localized, ctx};
}

ModuleSpec module_spec(const Options& o, const ParamContext& ctx, const Character& phi) {
  ModuleSpec spec{ctx, phi, ModuleKind::P, Realization::DirectLambda};
  if (o.kind == "S") {
    spec.kind = ModuleKind::S;
  } else if (o.kind != "P") {
    throw Usage("--kind must be P or S");
  }
  if (o.realization == "twist") {
    spec.realization = Realization::TwistOfOnes;
  } else if (o.realization != "direct") {
    throw Usage("--realization must be direct or twist");
  }
  return spec;
}

void require_radius(const Options& o) {
  if (o.radius < 1) throw Usage("--radius must be at least 1");
}

// `q1=q1^2`: substitute a parameter in every relation constant.
CoefficientHook perturbation(const std::string& text) {
  if (text.empty()) return {};
  auto eq = text.find('=');
  if (eq == std::string::npos) throw Usage("--perturb expects <symbol>=<scalar>");
  Scalar lhs = parse_scalar(text.substr(0, eq));
  Scalar rhs = parse_scalar(text.substr(eq + 1));
  const Poly& num = lhs.numerator();
  if (!lhs.is_polynomial() || !num.is_monomial() || num.leading().coef != 1 ||
      num.leading().mono.factors().size() != 1 || num.leading().mono.factors()[0].second != 1) {
    throw Usage("--perturb: left-hand side must be a single parameter symbol");
  }
  Var v = num.leading().mono.factors()[0].first;
  return [v, rhs](const Scalar& s) { return s.substitute(v, rhs); };
}

// ---------------------------------------------------------------- output

class Sink {
public:
  Sink(const Options& o, std::ostream& out) : out_(&out) {
    if (!o.output.empty()) {
      file_.open(o.output);
      if (!file_) throw Usage("cannot open " + o.output);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

private:
  std::ofstream file_;
  std::ostream* out_;
};

struct WindowInfo {
  std::int64_t radius;
  std::int64_t margin;
};

// Prints reports; returns the exit code.
int emit_reports(const Options& o, std::ostream& out, const std::vector<Report>& reports,
                 std::optional<WindowInfo> window = std::nullopt, const std::vector<std::string>& notes = {}) {
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    failed += r.failures();
    passed += r.entries.size() - r.failures();
  }
  if (json_mode(o)) {
    for (const auto& r : reports) {
      for (const auto& e : r.entries) {
        json line = {{"check", r.title}, {"identity", e.identity}, {"ok", e.ok}};
        if (!e.witness.empty()) line["witness"] = e.witness;
        out << line.dump() << "\n";
      }
    }
    json summary = {{"passed", passed}, {"failed", failed}};
    if (window) summary["window"] = {{"radius", window->radius}, {"margin", window->margin}};
    if (!notes.empty()) summary["notes"] = notes;
    out << json{{"summary", summary}}.dump() << "\n";
  } else {
    if (window) out << "window: radius " << window->radius << ", margin " << window->margin << "\n";
    for (const auto& r : reports) {
      out << r.title << "\n";
      for (const auto& e : r.entries) {
        out << "  " << (e.ok ? "PASS" : "FAIL") << "  " << e.identity;
        if (!e.witness.empty()) out << "    [" << e.witness << "]";
        out << "\n";
      }
      for (const auto& note : r.notes) out << "  note: " << note << "\n";
    }
    for (const auto& note : notes) out << "note: " << note << "\n";
    out << "summary: " << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------- commands

int cmd_normalize(const Options& o, std::ostream& out, std::istream& in) {
  PresentationId p = presentation(o, context(o, resolve_n(o, std::nullopt)));
  if (o.expr.empty()) throw Usage("normalize needs --expr (use - to read lines from stdin)");
  std::vector<std::string> inputs;
  if (o.expr == "-") {
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) inputs.push_back(line);
    }
  } else {
    inputs.push_back(o.expr);
  }
  for (const auto& src : inputs) {
    NormalElement e = parse_element(src, p);
    if (json_mode(o)) {
      out << json{{"input", src}, {"presentation", p.name()}, {"normal_form", e.to_string()}}.dump() << "\n";
    } else {
      out << e.to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_relcheck(const Options& o, std::ostream& out) {
  PresentationId p = presentation(o, context(o, resolve_n(o, std::nullopt)));
  return emit_reports(o, out, {relation_suite(p, perturbation(o.perturb))});
}

int cmd_theta(const Options& o, std::ostream& out) {
  return emit_reports(o, out, {theta_suite(context(o, resolve_n(o, std::nullopt)))});
}

int cmd_twist(const Options& o, std::ostream& out) {
  ParamContext ctx = context(o, resolve_n(o, std::nullopt));
  return emit_reports(o, out, {twist_suite(ctx, o.localized, 50, seed_from_env())});
}

int cmd_module_graph(const Options& o, std::ostream& out, std::ostream& err) {
  require_radius(o);
  Character phi = require_character(o.phi, "--phi");
  ParamContext ctx = context(o, resolve_n(o, phi));
  ActionGraph g = action_graph(module_spec(o, ctx, phi), o.radius);
  std::string text = json_mode(o) ? g.to_jsonl() : g.to_dot();
  if (!json_mode(o)) text = "// window: radius " + std::to_string(o.radius) + ", margin 0\n" + text;
  out << text;
  if (!o.output.empty()) err << "window: radius " << o.radius << ", margin 0\n";
  return kExitOk;
}

std::string descriptor_json_kind(SupportCoord::Kind k) {
  switch (k) {
    case SupportCoord::Kind::FullOrbit: return "FullOrbit";
    case SupportCoord::Kind::LowerRay: return "LowerRay";
    case SupportCoord::Kind::UpperRay: return "UpperRay";
  }
  return "?";
}

json descriptor_json(const WeightSetDescriptor& d) {
  json a = json::array();
  for (std::size_t i = 0; i < d.coords.size(); ++i) {
    a.push_back({{"axis", i + 1}, {"kind", descriptor_json_kind(d.coords[i].kind)}, {"value", d.coords[i].value}});
  }
  return a;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Character phi = require_character(o.phi, "--phi");
  ParamContext ctx = context(o, resolve_n(o, phi));
  WeightSetDescriptor d = weight_support({ctx, phi, ModuleKind::S, Realization::DirectLambda});
  bool simple = is_simple_P(phi);
  if (json_mode(o)) {
    out << json{{"phi", phi.to_string()}, {"s_support", d.to_string()}, {"descriptor", descriptor_json(d)},
                {"p_simple", simple}}
               .dump()
        << "\n";
  } else {
    out << "S-support: " << d.to_string() << "; P simple: " << (simple ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_iso(const Options& o, std::ostream& out) {
  Character phi = require_character(o.phi, "--phi");
  Character psi = require_character(o.psi, "--psi");
  if (phi.n() != psi.n()) throw Usage("--phi and --psi have different lengths");
  ParamContext ctx = context(o, resolve_n(o, phi));
  auto support = [&ctx](const Character& c) {
    return weight_support({ctx, c, ModuleKind::S, Realization::DirectLambda});
  };
  bool s_iso = isomorphic_S(phi, psi);
  std::optional<bool> p_iso;
  if (phi.n() == 1) p_iso = isomorphic_P_rank1(phi, psi);
  if (json_mode(o)) {
    json j = {{"phi", phi.to_string()},
              {"psi", psi.to_string()},
              {"s_isomorphic", s_iso},
              {"phi_support", descriptor_json(support(phi))},
              {"psi_support", descriptor_json(support(psi))}};
    if (p_iso) j["p_isomorphic"] = *p_iso;
    out << j.dump() << "\n";
  } else {
    out << "S isomorphic: " << (s_iso ? "true" : "false") << "\n";
    out << "  S-support(phi): " << support(phi).to_string() << "\n";
    out << "  S-support(psi): " << support(psi).to_string() << "\n";
    if (p_iso) out << "P isomorphic: " << (*p_iso ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  require_radius(o);
  Character phi = require_character(o.phi, "--phi");
  ParamContext ctx = context(o, resolve_n(o, phi), "ones");
  if (ctx.mode() != LambdaMode::AllOnes) throw Usage("tensor-check requires --lambda ones");
  return emit_reports(o, out, {tensor_compare(phi, ctx, o.radius)}, WindowInfo{o.radius, 1});
}

int cmd_qdiff(const Options& o, std::ostream& out) {
  require_radius(o);
  if (o.degree < 1) throw Usage("--degree must be at least 1");
  ParamContext ctx = context(o, resolve_n(o, std::nullopt));
  Report morph = check_qdiff_morphism(ctx, o.degree);
  Report ident = check_E_is_S1(ctx, std::max<std::int64_t>(o.radius, 2)).report;
  // The verbatim constant is reported for the record; it does not affect the exit code.
  Report verbatim = check_qdiff_morphism(ctx, o.degree, PartialConstant::Verbatim);
  std::vector<std::string> notes;
  for (const auto& e : verbatim.entries) {
    if (!e.ok) notes.push_back("verbatim constant (q_i-1) y_i^-1 (xi_i(f)-f) fails: " + e.identity);
  }
  return emit_reports(o, out, {morph, ident}, WindowInfo{std::max<std::int64_t>(o.radius, 2), 0}, notes);
}

int cmd_shift_iso(const Options& o, std::ostream& out) {
  require_radius(o);
  Character phi = require_character(o.phi, "--phi");
  ParamContext ctx = context(o, resolve_n(o, phi));
  if (o.axis < 1 || o.axis > phi.n()) throw Usage("--axis out of range");
  ShiftIso s = shift_iso_scalars(o.axis, phi, ctx, o.radius);
  if (!json_mode(o)) {
    out << "scalars lambda_k (w_k -> lambda_k v_{k+e" << o.axis << "}):\n";
    for (const auto& [k, c] : s.scalars) {
      out << "  k = (";
      for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
      out << "): " << c.to_string() << "\n";
    }
  } else {
    for (const auto& [k, c] : s.scalars) out << json{{"k", k}, {"lambda", c.to_string()}}.dump() << "\n";
  }
  return emit_reports(o, out, {s.report}, WindowInfo{o.radius, 1});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in quantized Weyl algebras and their weight modules", "qweyl"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* c) {
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--output", o.output, "write the main output to this file");
  };
  auto algebra = [&o](CLI::App* c) {
    c->add_option("--family", o.family, "aj or malt")->check(CLI::IsMember({"aj", "malt"}));
    c->add_flag("--localized", o.localized, "use the localized (B) presentation");
  };
  auto rank = [&o](CLI::App* c) {
    c->add_option("--n", o.n, "rank")->check(CLI::PositiveNumber);
    c->add_option("--lambda", o.lambda, "ones | symbolic | numeric:12=2,...");
  };
  auto window = [&o](CLI::App* c) { c->add_option("--radius", o.radius, "window radius (default 4)"); };
  auto character = [&o](CLI::App* c, bool two) {
    c->add_option("--phi", o.phi, "character, e.g. [q^2, c1*q^-1]");
    if (two) c->add_option("--psi", o.psi, "second character");
  };

  auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
  common(normalize);
  algebra(normalize);
  rank(normalize);
  normalize->add_option("--expr", o.expr, "expression, or - to read one per line from stdin");

  auto* relcheck = app.add_subcommand("relcheck", "check every defining relation");
  common(relcheck);
  algebra(relcheck);
  rank(relcheck);
  relcheck->add_option("--perturb", o.perturb, "substitute in relation constants, e.g. q1=q1^2");

  auto* theta_cmd = app.add_subcommand("theta-check", "check the AJ-B -> Malt-B isomorphism");
  common(theta_cmd);
  rank(theta_cmd);

  auto* twist_cmd = app.add_subcommand("twist-check", "check the Zhang twist of the (1) algebra");
  common(twist_cmd);
  rank(twist_cmd);
  twist_cmd->add_flag("--localized", o.localized, "twist the localized algebra");

  auto* graph = app.add_subcommand("module-graph", "emit the action graph of P_phi or S_phi");
  common(graph);
  rank(graph);
  window(graph);
  character(graph, false);
  graph->add_option("--kind", o.kind, "P or S")->check(CLI::IsMember({"P", "S"}));
  graph->add_option("--realization", o.realization, "direct or twist")->check(CLI::IsMember({"direct", "twist"}));

  auto* classify = app.add_subcommand("classify", "weight support of S_phi and simplicity of P_phi");
  common(classify);
  rank(classify);
  character(classify, false);

  auto* iso = app.add_subcommand("iso", "decide S_phi = S_psi (and P_phi = P_psi for n = 1)");
  common(iso);
  rank(iso);
  character(iso, true);

  auto* tensor = app.add_subcommand("tensor-check", "compare P_phi with the tensor product of rank-one modules");
  common(tensor);
  rank(tensor);
  window(tensor);
  character(tensor, false);

  auto* qdiff_cmd = app.add_subcommand("qdiff-check", "check the q-difference representation");
  common(qdiff_cmd);
  rank(qdiff_cmd);
  window(qdiff_cmd);
  qdiff_cmd->add_option("--degree", o.degree, "monomial degree bound (default 5)");

  auto* shift = app.add_subcommand("shift-iso", "solve the isomorphism P_{e_l.phi} -> P_phi");
  common(shift);
  rank(shift);
  window(shift);
  character(shift, false);
  shift->add_option("--axis", o.axis, "axis l (default 1)");

  try {
    std::vector<std::string> rev;  // CLI11 consumes arguments from the back
    for (std::size_t i = args.size(); i > 1; --i) rev.push_back(args[i - 1]);
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Sink sink(o, out);
    std::ostream& os = sink.stream();
    if (*normalize) return cmd_normalize(o, os, std::cin);
    if (*relcheck) return cmd_relcheck(o, os);
    if (*theta_cmd) return cmd_theta(o, os);
    if (*twist_cmd) return cmd_twist(o, os);
    if (*graph) return cmd_module_graph(o, os, err);
    if (*classify) return cmd_classify(o, os);
    if (*iso) return cmd_iso(o, os);
    if (*tensor) return cmd_tensor(o, os);
    if (*qdiff_cmd) return cmd_qdiff(o, os);
    if (*shift) return cmd_shift_iso(o, os);
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qweyl
