#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliff/binor.hpp"
#include "cliff/expression.hpp"
#include "cliff/finite_dirac.hpp"
#include "cliff/hierarchy.hpp"
#include "cliff/matrix_rep.hpp"
#include "cliff/spectrum.hpp"

namespace cliff::cli {

inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

using json = nlohmann::ordered_json;

// "++-+" or "p,q" (p squares +1 first, then q squares -1).
inline Signature parse_signature_text(const std::string &text) {
  if (text.find(',') != std::string::npos) {
    std::size_t p = 0, q = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> p >> comma >> q) || comma != ',' || !(in >> std::ws).eof())
      throw config_error("signature '" + text + "' is not of the form p,q");
    if (p + q > kMaxBladeGenerators)
      throw bound_error("signature has more than 32 generators");
    return Signature::pq(p, q);
  }
  Signature sig;
  for (char c : text) {
    if (c == '+')
      sig.push_back(1);
    else if (c == '-')
      sig.push_back(-1);
    else
      throw config_error("signature '" + text + "' must be made of '+' and '-'");
  }
  return sig;
}

inline json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json spectrum_json(const SpectrumReport &rep) {
  json clusters = json::array();
  for (const auto &c : rep.clusters)
    clusters.push_back({{"value", complex_json(c.value)},
                        {"multiplicity", c.multiplicity}});
  return {{"dim", rep.dim},
          {"clusters", clusters},
          {"block_count", rep.block_count},
          {"largest_block", rep.largest_block}};
}

inline json clusters_json(const std::vector<EigenCluster> &cs) {
  json out = json::array();
  for (const auto &c : cs)
    out.push_back(
        {{"value", complex_json(c.value)}, {"multiplicity", c.multiplicity}});
  return out;
}

template <CoefficientRing R> json terms_json(const Multivector<R> &x) {
  json terms = json::array();
  for (const auto &[b, c] : x.terms()) {
    json members = json::array();
    for (auto i : b.members())
      members.push_back(i + 1);
    terms.push_back({{"blade", members},
                     {"coefficient", ring_traits<R>::to_string(c)}});
  }
  return terms;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Envelope {
  std::string command;
  json config = json::object();
  json results = json::object();
  json residuals = json::object();

  json to_json(bool with_timestamp) const {
    json j;
    j["command"] = command;
    j["config"] = config;
    j["results"] = results;
    j["residuals"] = residuals;
    j["tool_version"] = kToolVersion;
    j["timestamp"] = with_timestamp ? json(utc_timestamp()) : json(nullptr);
    return j;
  }
};

// Values from a --config JSON file fill any option not given on the command
// line; options given on the command line win.
class ConfigFile {
public:
  void load(const std::string &path) {
    std::ifstream in(path);
    if (!in)
      throw config_error("cannot open config file '" + path + "'");
    try {
      data_ = json::parse(in);
    } catch (const json::exception &e) {
      throw config_error("config file '" + path + "': " + e.what());
    }
    if (!data_.is_object())
      throw config_error("config file must hold a JSON object");
  }

  template <class T>
  void fill(const CLI::App &app, const std::string &flag, const std::string &key,
            T &value) const {
    if (app.count(flag) > 0 || !data_.contains(key))
      return;
    try {
      value = data_.at(key).get<T>();
    } catch (const json::exception &e) {
      throw config_error("config key '" + key + "': " + e.what());
    }
  }

private:
  json data_ = json::object();
};

struct GlobalOptions {
  std::string format = "json";
  std::string config_path;
  bool no_timestamp = false;
};

class Runner {
public:
  Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

  int run(const std::vector<std::string> &args);

private:
  void emit(const Envelope &env) {
    out_ << env.to_json(!globals_.no_timestamp).dump(2) << "\n";
  }

  bool csv() const { return globals_.format == "csv"; }

  Signature signature_from(const std::string &sig_text, std::size_t gens) const {
    if (!sig_text.empty())
      return parse_signature_text(sig_text);
    if (gens > kMaxBladeGenerators)
      throw bound_error("at most 32 generators");
    return Signature::euclidean(gens);
  }

  // eval
  std::string eval_ring = "rational";
  std::size_t eval_gens = 4;
  std::string eval_sig;
  std::string eval_expr;
  std::string eval_norm;
  bool eval_letters = false;
  void cmd_eval(const CLI::App &app);

  // binor
  std::size_t binor_gens = 3;
  std::string binor_sig;
  std::string binor_op = "xor";
  std::vector<std::string> binor_operands;
  std::string bool_op;
  void cmd_binor(const CLI::App &app);

  // hierarchy
  int hier_max = 6;
  bool hier_search = false;
  std::string hier_form = "I";
  std::string hier_rule = "Q";
  std::string hier_order = "plus-first";
  void cmd_hierarchy(const CLI::App &app);

  // rep
  std::size_t rep_gens = 4;
  std::string rep_sig;
  void cmd_rep(const CLI::App &app);

  // dirac
  int dirac_n = 1;
  double dirac_tau = 1.0;
  double dirac_hbar = 1.0;
  std::string dirac_sig = "++++++++";
  std::string dirac_report = "time-spectrum";
  std::string dirac_mass = "first-octad";
  int dirac_time_index = 1;
  double dirac_delta = 1e-6;
  unsigned dirac_seed = 12345;
  void cmd_dirac(const CLI::App &app);

  std::ostream &out_;
  std::ostream &err_;
  GlobalOptions globals_;
  ConfigFile config_;
};

inline void Runner::cmd_eval(const CLI::App &app) {
  config_.fill(app, "--ring", "ring", eval_ring);
  config_.fill(app, "--gens", "gens", eval_gens);
  config_.fill(app, "--signature", "signature", eval_sig);
  const RingTag ring = parse_ring(eval_ring);
  const Signature sig = signature_from(eval_sig, eval_gens);
  ParseOptions opts;
  opts.letters = eval_letters || ring == RingTag::GF2;
  const AnyMultivector value = parse_expression(eval_expr, ring, sig, opts);
  if (const auto *d = std::get_if<Multivector<double>>(&value))
    for (const auto &[b, c] : d->terms())
      if (!std::isfinite(c))
        throw numeric_error("floating-point overflow in expression");

  Envelope env;
  env.command = "eval";
  env.config = {{"ring", std::string(ring_name(ring))},
                {"signature", sig.str()},
                {"letters", opts.letters}};
  env.results["input"] = eval_expr;
  env.results["value"] = print_expression(value);
  env.results["terms"] =
      std::visit([](const auto &m) { return terms_json(m); }, value);
  if (!eval_norm.empty()) {
    const FourGroup g = parse_four_group(eval_norm);
    env.results["norm_form"] = std::visit(
        [g](const auto &m) -> json {
          using R = typename std::decay_t<decltype(m)>::coefficient_type;
          return ring_traits<R>::to_string(norm_form(m, g));
        },
        value);
  }
  emit(env);
}

inline void Runner::cmd_binor(const CLI::App &app) {
  config_.fill(app, "--gens", "gens", binor_gens);
  config_.fill(app, "--signature", "signature", binor_sig);
  Envelope env;
  env.command = "binor";
  if (!bool_op.empty()) {
    if (binor_operands.size() != 2)
      throw config_error("Boolean operations take two truth tables");
    const auto op = binor::parse_bool_op(bool_op);
    const auto a = binor::BoolFn::parse(binor_operands[0]);
    const auto b = binor::BoolFn::parse(binor_operands[1]);
    env.config = {{"bool_op", bool_op}};
    env.results = {{"A", a.str()},
                   {"B", b.str()},
                   {"value", binor::bool_eval(op, a, b).str()}};
    emit(env);
    return;
  }
  const Signature sig = signature_from(binor_sig, binor_gens);
  ParseOptions opts;
  opts.letters = true;
  std::vector<binor::Binor> args;
  for (const auto &text : binor_operands)
    args.push_back(parse_expression<GF2>(text, sig, opts));
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw config_error("operation '" + binor_op + "' takes " +
                         std::to_string(n) + " operand(s), got " +
                         std::to_string(args.size()));
  };
  env.config = {{"op", binor_op}, {"generators", sig.size()}};
  binor::Binor result;
  if (binor_op == "xor") {
    need(2);
    result = binor::binor_xor(args[0], args[1]);
  } else if (binor_op == "xand") {
    need(2);
    result = binor::binor_xand(args[0], args[1]);
  } else if (binor_op == "sum") {
    need(2);
    result = binor::binor_sum(args[0], args[1]);
  } else if (binor_op == "sup" || binor_op == "or") {
    need(2);
    result = binor::binor_sup(args[0], args[1]);
  } else if (binor_op == "inf" || binor_op == "and") {
    need(2);
    result = binor::binor_inf(args[0], args[1]);
  } else if (binor_op == "complement") {
    need(1);
    result = binor::complement_top(args[0]);
  } else if (binor_op == "full") {
    need(0);
    result = binor::full_algebra_state(sig);
  } else if (binor_op == "grade") {
    need(1);
    env.results["grade"] = binor::monomial_grade(args[0]);
    env.results["operand"] = print_expression(args[0]);
    emit(env);
    return;
  } else {
    throw config_error("unknown binor operation '" + binor_op + "'");
  }
  json operands = json::array();
  for (const auto &a : args)
    operands.push_back(print_expression(a));
  env.results["operands"] = operands;
  env.results["value"] = print_expression(result);
  env.results["term_count"] = result.size();
  emit(env);
}

inline json chain_json(const std::vector<hierarchy::HierarchyLevel> &chain,
                       hierarchy::NotationOrder order) {
  json out = json::array();
  for (const auto &lvl : chain) {
    const auto pair = hierarchy::notation_pair(lvl.generators, order);
    json j = {{"n", lvl.n},
              {"cliff", json::array({pair.first, pair.second})},
              {"generator_count", lvl.generator_count},
              {"dim", lvl.dim}};
    j["induced"] = lvl.induced_known
                       ? json::array({lvl.induced.n_plus, lvl.induced.n_minus})
                       : json(nullptr);
    out.push_back(j);
  }
  return out;
}

inline json match_json(const hierarchy::MatchReport &rep) {
  json levels = json::array();
  json vec = json::array();
  for (const auto &m : rep.levels) {
    levels.push_back({{"n", m.n},
                      {"computed", json::array({m.computed.first, m.computed.second})},
                      {"published", json::array({m.published.first, m.published.second})},
                      {"equal", m.equal}});
    vec.push_back(m.equal);
  }
  return {{"convention", hierarchy::to_string(rep.cfg)},
          {"matches", rep.matches},
          {"first_mismatch", rep.first_mismatch},
          {"match_vector", vec},
          {"levels", levels}};
}

// Arithmetic facts about the printed chain and the computed one.
inline json hierarchy_consistency(const hierarchy::MatchReport &best) {
  const auto &p5 = hierarchy::kPublishedChain[4];
  const auto &p6 = hierarchy::kPublishedChain[5];
  const auto d5 = p5.first + p5.second;
  const auto d6 = p6.first + p6.second;
  const auto s6 = static_cast<std::int64_t>(p6.first) - static_cast<std::int64_t>(p6.second);
  json j;
  j["published_level5_sum_is_16"] = d5 == 16;
  j["published_level5_signature_is_sqrt_dim"] =
      static_cast<std::int64_t>(p5.first) - static_cast<std::int64_t>(p5.second) == 4;
  j["published_level6_sum_is_65536"] = d6 == 65536;
  j["published_level6_signature"] = s6;
  j["published_level6_signature_is_sqrt_dim"] = s6 == 256;
  const auto &c6 = best.levels.at(5).computed;
  const auto cs6 = static_cast<std::int64_t>(c6.first) - static_cast<std::int64_t>(c6.second);
  j["computed_level6"] = json::array({c6.first, c6.second});
  j["computed_level6_signature"] = cs6;
  j["computed_level6_abs_signature_is_sqrt_dim"] = (cs6 < 0 ? -cs6 : cs6) == 256;
  return j;
}

inline void Runner::cmd_hierarchy(const CLI::App &app) {
  config_.fill(app, "--max", "max", hier_max);
  config_.fill(app, "--form", "form", hier_form);
  config_.fill(app, "--rule", "rule", hier_rule);
  config_.fill(app, "--order", "order", hier_order);
  hierarchy::ConventionConfig cfg{parse_four_group(hier_form),
                                  hierarchy::parse_square_rule(hier_rule),
                                  hierarchy::parse_notation_order(hier_order)};
  Envelope env;
  env.command = "hierarchy";
  env.config = {{"max", hier_max},
                {"search", hier_search},
                {"convention", hierarchy::to_string(cfg)}};
  const auto chain = hierarchy::hierarchy_chain(hier_max, cfg);
  env.results["chain"] = chain_json(chain, cfg.notation_order);
  const auto match = hierarchy::match_published_chain(cfg);
  env.results["match"] = match_json(match);
  if (hier_search) {
    const auto table = hierarchy::search_convention();
    json rows = json::array();
    for (const auto &r : table)
      rows.push_back(match_json(r));
    env.results["conventions"] = rows;
    env.results["best"] = match_json(table.front());
    env.results["consistency"] = hierarchy_consistency(table.front());
  } else {
    env.results["consistency"] = hierarchy_consistency(match);
  }
  emit(env);
}

inline std::string pauli_label(const PauliString &p, std::size_t qubits) {
  std::string s;
  for (std::size_t q = 0; q < qubits; ++q) {
    const std::uint32_t bit = std::uint32_t{1} << (qubits - 1 - q);
    const bool x = p.x & bit, z = p.z & bit;
    s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

inline void Runner::cmd_rep(const CLI::App &app) {
  config_.fill(app, "--gens", "gens", rep_gens);
  config_.fill(app, "--signature", "signature", rep_sig);
  const Signature sig = signature_from(rep_sig, rep_gens);
  const RepResult rep = jordan_wigner_rep(sig);
  const RelationCheck check = verify_relations(rep, sig);
  if (csv()) {
    if (rep.spinor_dim > kMaxDenseDim)
      throw bound_error("matrix dump limited to dimension 4096");
    out_ << "generator,row,col,re,im\n";
    for (std::size_t g = 0; g < rep.generators.size(); ++g) {
      const auto &p = rep.generators[g];
      for (std::uint32_t col = 0; col < rep.spinor_dim; ++col) {
        const cplx v = p.entry_phase(col);
        out_ << g + 1 << ',' << (col ^ p.x) << ',' << col << ','
             << ring_traits<double>::to_string(v.real()) << ','
             << ring_traits<double>::to_string(v.imag()) << "\n";
      }
    }
    return;
  }
  const std::size_t qubits = std::bit_width(rep.spinor_dim) - 1;
  Envelope env;
  env.command = "rep";
  env.config = {{"signature", sig.str()}};
  json gens = json::array();
  for (std::size_t g = 0; g < rep.generators.size(); ++g) {
    const auto &p = rep.generators[g];
    gens.push_back({{"generator", g + 1},
                    {"square", sig.square(g)},
                    {"pauli", pauli_label(p, qubits)},
                    {"phase_power_of_i", int(p.phase)}});
  }
  env.results = {{"spinor_dim", rep.spinor_dim},
                 {"faithful", rep.faithful},
                 {"relations_ok", check.ok},
                 {"generators", gens}};
  env.residuals = {{"max_anticommutator_deviation", check.max_deviation}};
  emit(env);
}

inline void Runner::cmd_dirac(const CLI::App &app) {
  config_.fill(app, "--n", "n", dirac_n);
  config_.fill(app, "--tau", "tau", dirac_tau);
  config_.fill(app, "--hbar", "hbar", dirac_hbar);
  config_.fill(app, "--signature", "signature", dirac_sig);
  config_.fill(app, "--report", "report", dirac_report);
  config_.fill(app, "--mass", "mass", dirac_mass);
  config_.fill(app, "--time-index", "time_index", dirac_time_index);
  config_.fill(app, "--delta", "delta", dirac_delta);
  config_.fill(app, "--seed", "seed", dirac_seed);

  dirac::OctadConfig cfg;
  cfg.n = dirac_n;
  cfg.tau = dirac_tau;
  cfg.hbar = dirac_hbar;
  cfg.octad_squares = parse_signature_text(dirac_sig);
  cfg.mass = dirac::parse_mass_variant(dirac_mass);
  cfg.time_index = dirac_time_index;

  Envelope env;
  env.command = "dirac";
  env.config = {{"n", cfg.n},
                {"tau", cfg.tau},
                {"hbar", cfg.hbar},
                {"ergon", cfg.ergon()},
                {"octad_signature", cfg.octad_squares.str()},
                {"mu_indices", cfg.mu_indices},
                {"aux_indices", json::array({cfg.coord_aux, cfg.momentum_aux})},
                {"time_index", cfg.time_index},
                {"mass_operator", std::string(dirac::mass_variant_name(cfg.mass))},
                {"report", dirac_report},
                {"matrix_dim", cfg.matrix_dim()}};

  const bool spectral = dirac_report == "time-spectrum" || dirac_report == "eta-spectrum";
  if (spectral && cfg.n > dirac::kMaxEigenOctads) {
    cfg.validate(dirac::kMaxCombinatorialOctads);
    const auto clusters = dirac_report == "time-spectrum"
                              ? dirac::combinatorial_time_spectrum(cfg)
                              : dirac::combinatorial_eta_spectrum(cfg);
    if (csv()) {
      out_ << "re,im,multiplicity\n";
      for (const auto &c : clusters)
        out_ << ring_traits<double>::to_string(c.value.real()) << ','
             << ring_traits<double>::to_string(c.value.imag()) << ','
             << c.multiplicity << "\n";
      return;
    }
    env.results = {{"method", "combinatorial"}, {"clusters", clusters_json(clusters)}};
    emit(env);
    return;
  }

  cfg.validate();
  const dirac::ToyOperators ops = dirac::build_toy_model(cfg);
  auto spectrum_out = [&](const SpectrumReport &rep, json extra) {
    if (csv()) {
      out_ << "re,im,multiplicity\n";
      for (const auto &c : rep.clusters)
        out_ << ring_traits<double>::to_string(c.value.real()) << ','
             << ring_traits<double>::to_string(c.value.imag()) << ','
             << c.multiplicity << "\n";
      return;
    }
    env.results = spectrum_json(rep);
    env.results["method"] = "eigensolve";
    for (auto &[k, v] : extra.items())
      env.results[k] = v;
    env.residuals = {{"max_eigenpair_residual", rep.max_residual},
                     {"normality_deviation", rep.normality_deviation}};
    emit(env);
  };

  if (dirac_report == "time-spectrum") {
    const auto rep = dirac::time_spectrum(ops);
    json units = json::array();
    for (const auto &c : rep.clusters)
      units.push_back(c.value.real() / cfg.tau);
    spectrum_out(rep, {{"in_units_of_tau", units}});
  } else if (dirac_report == "eta-spectrum") {
    const auto eta = dirac::eta_spectrum(ops);
    spectrum_out(eta.spectrum,
                 {{"moduli", eta.moduli}, {"max_modulus", eta.max_modulus}});
  } else if (dirac_report == "commutators") {
    json rows = json::array();
    double worst_offdiag = 0.0, worst_resid = 0.0;
    for (int mu : cfg.mu_indices)
      for (int nu : cfg.mu_indices) {
        const auto c = dirac::commutator_xp(ops, mu, nu);
        rows.push_back({{"mu", mu},
                        {"nu", nu},
                        {"norm", c.norm},
                        {"c", complex_json(c.c)},
                        {"residual", c.residual}});
        if (mu != nu)
          worst_offdiag = std::max(worst_offdiag, c.norm);
        else
          worst_resid = std::max(worst_resid, c.residual);
      }
    env.results = {{"commutators", rows}};
    env.residuals = {{"max_offdiagonal_norm", worst_offdiag},
                     {"max_diagonal_residual", worst_resid}};
    emit(env);
  } else if (dirac_report == "factorization") {
    const auto f = dirac::octad_factorization_check(cfg);
    env.results = {{"factorizes", f.ok}};
    env.residuals = {{"max_deviation", f.max_deviation}};
    emit(env);
  } else if (dirac_report == "evolution") {
    if (ops.dim() > 256)
      throw bound_error("evolution report limited to N <= 2");
    std::mt19937_64 rng(dirac_seed);
    std::normal_distribution<double> nd;
    const auto d = static_cast<Eigen::Index>(ops.dim());
    OperatorMatrix x(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j)
        x(i, j) = cplx(nd(rng), nd(rng));
    x = (x + x.adjoint()).eval() * 0.5;
    const double delta = dirac_delta * cfg.n * cfg.tau;
    const auto chk = dirac::evolution_derivative_check(ops, x, delta);
    env.results = {{"delta", delta}, {"seed", dirac_seed}};
    env.residuals = {{"relative_error", chk.relative_error}};
    emit(env);
  } else {
    throw config_error("unknown report '" + dirac_report + "'");
  }
}

inline int Runner::run(const std::vector<std::string> &args) {
  CLI::App app{"Clifford-algebra engine: binor logic, iterated Clifford "
               "hierarchy, finite Dirac toy model",
               "cliff"};
  app.require_subcommand(1);
  app.add_option("--format", globals_.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", globals_.config_path, "JSON config file");
  app.add_flag("--no-timestamp", globals_.no_timestamp,
               "Write null instead of the current time");

  auto *eval = app.add_subcommand("eval", "Evaluate a Clifford expression");
  eval->add_option("--ring", eval_ring, "gf2 | rational | float");
  eval->add_option("--gens", eval_gens, "Number of +1 generators");
  eval->add_option("--signature", eval_sig, "Generator squares, e.g. ++- or 3,1");
  eval->add_option("--norm", eval_norm, "Also report Re(x^g x) for g in I,T,C,H");
  eval->add_flag("--letters", eval_letters, "Accept a..z as generator names");
  eval->add_option("expression", eval_expr, "Expression text")->required();

  auto *bin = app.add_subcommand("binor", "Binor logic operations");
  bin->add_option("--gens", binor_gens, "Number of generators");
  bin->add_option("--signature", binor_sig, "Generator squares (ignored over GF2)");
  bin->add_option("--op", binor_op,
                  "xor | xand | sum | sup | inf | complement | full | grade");
  bin->add_option("--bool", bool_op,
                  "Boolean reference op on truth tables: or and xor xand por pand");
  bin->add_option("operands", binor_operands, "Binor expressions or truth tables");

  auto *hier = app.add_subcommand("hierarchy", "Iterated Clifford hierarchy");
  hier->add_option("--max", hier_max, "Highest level (1..6)");
  hier->add_flag("--search", hier_search, "Evaluate all 16 conventions");
  hier->add_option("--form", hier_form, "Norm form I | T | C | H");
  hier->add_option("--rule", hier_rule, "Q | MinusQ");
  hier->add_option("--order", hier_order, "plus-first | minus-first");

  auto *rep = app.add_subcommand("rep", "Jordan-Wigner matrix representation");
  rep->add_option("--gens", rep_gens, "Number of +1 generators");
  rep->add_option("--signature", rep_sig, "Generator squares");

  auto *dir = app.add_subcommand("dirac", "Finite Dirac toy model");
  dir->add_option("--n", dirac_n, "Octad count");
  dir->add_option("--tau", dirac_tau, "Chronon");
  dir->add_option("--hbar", dirac_hbar, "Action constant");
  dir->add_option("--signature", dirac_sig, "Octad generator squares (8)");
  dir->add_option("--report", dirac_report)
      ->check(CLI::IsMember({"time-spectrum", "eta-spectrum", "commutators",
                             "factorization", "evolution"}));
  dir->add_option("--mass", dirac_mass, "first-octad | averaged");
  dir->add_option("--time-index", dirac_time_index, "Lorentz index used as time");
  dir->add_option("--delta", dirac_delta,
                  "Evolution finite-difference step in units of N*tau");
  dir->add_option("--seed", dirac_seed, "Seed for the random Hermitian operator");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out_ << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err_ << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (!globals_.config_path.empty())
      config_.load(globals_.config_path);
    if (eval->parsed())
      cmd_eval(*eval);
    else if (bin->parsed())
      cmd_binor(*bin);
    else if (hier->parsed())
      cmd_hierarchy(*hier);
    else if (rep->parsed())
      cmd_rep(*rep);
    else if (dir->parsed())
      cmd_dirac(*dir);
  } catch (const cliff::error &e) {
    err_ << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::bad_alloc &) {
    err_ << "error: out of memory\n";
    return kDomainError;
  }
  return kOk;
}

// argv[0] is skipped.
inline int run_command(int argc, const char *const *argv, std::ostream &out,
                       std::ostream &err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return Runner(out, err).run(args);
}

inline int run_command(const std::vector<std::string> &args, std::ostream &out,
                       std::ostream &err) {
  return Runner(out, err).run(args);
}

} // namespace cliff::cli
