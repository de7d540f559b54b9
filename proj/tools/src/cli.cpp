#include "lcoal_cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lcoal/lcoal.hpp"

namespace lcoal::cli
{

namespace
{

struct Config
{
  std::uint64_t seed = default_seed;
  unsigned jobs = 1;

  std::string input;
  std::string matrix;
  std::string side = "left";
  int hat = 1;
  bool sparse = false;
  std::string only;
  unsigned strands = 3;
  std::size_t samples = 1000;
  std::size_t exhaustive_cap = 100000;
  bool skip_ybe_check = false;
  std::string word;
  std::string state;
  std::optional<unsigned> eval_strands;
  bool require_coassociative = false;

  Parallelism par() const { return Parallelism{jobs}; }
};

std::string read_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void header(std::ostream &out, const std::string &command, const Config &cfg)
{
  out << "# lcoal " << command << " (seed " << cfg.seed << ")\n";
}

Side side_of(const Config &cfg) { return cfg.side == "right" ? Side::Right : Side::Left; }

std::string map_name(const Config &cfg)
{
  return "hat" + std::to_string(cfg.hat) + "(psi_" + cfg.side + ")";
}

CompanionCoalgebra load_companion(const std::string &path)
{
  return build_companion(markov_from_graph(parse_graph(read_file(path))));
}

struct LoadedR
{
  TwoTensorEndo r;
  std::string description;
};

LoadedR load_r(const Config &cfg)
{
  if (!cfg.matrix.empty())
  {
    TwoTensorEndo r = from_product_endo(parse_matrix(read_file(cfg.matrix)));
    return {std::move(r), "matrix " + cfg.matrix};
  }
  if (cfg.input.empty())
    throw Error(ErrorKind::SyntaxError, "a graph file or --matrix is required");
  const CompanionCoalgebra c = load_companion(cfg.input);
  return {companion_r_matrix(c, side_of(cfg), cfg.hat), map_name(cfg)};
}

std::string triple_text(const Triple &t, const Basis &b)
{
  return b.name(t[0]) + " (x) " + b.name(t[1]) + " (x) " + b.name(t[2]);
}

void print_cocommutativity(std::ostream &out, const LCoalgebra &c)
{
  const Basis &b = *c.basis();
  const CocommutativityReport report = is_L_cocommutative(c);
  out << "# L-cocommutative: " << (report.cocommutative() ? "yes" : "no") << "\n";
  for (const auto &[v, diff] : report.defects)
    out << "# defect at " << b.name(v) << ": " << format_tensor2(diff, b) << "\n";
}

int cmd_validate(const Config &cfg, std::ostream &out)
{
  const WeightedDigraph g = parse_graph(read_file(cfg.input));
  header(out, "validate", cfg);
  const ValidationReport report = validate_no_sink_no_source(g);
  for (Index v : report.sources)
    out << "source: " << g.vertices()[v] << "\n";
  for (Index v : report.sinks)
    out << "sink: " << g.vertices()[v] << "\n";
  out << "row-stochastic: " << (is_row_stochastic(g) ? "yes" : "no") << "\n";
  if (!report.valid())
  {
    out << "invalid\n";
    return exit_failed;
  }
  out << "valid: " << g.vertex_count() << " vertices, " << g.arcs().size() << " arcs\n";
  return exit_ok;
}

int cmd_coalgebra(const Config &cfg, std::ostream &out)
{
  const LCoalgebra c = markov_from_graph(parse_graph(read_file(cfg.input)));
  header(out, "coalgebra", cfg);
  out << format_coalgebra(c);
  const BreakingCheck breaking = check_breaking_equation(c);
  out << "# breaking equation: " << (breaking.holds ? "holds" : "fails") << "\n";
  out << "# degenerate: " << (is_degenerate(c) ? "yes" : "no") << "\n";
  print_cocommutativity(out, c);
  return exit_ok;
}

int cmd_companion(const Config &cfg, std::ostream &out)
{
  const CompanionCoalgebra c = load_companion(cfg.input);
  header(out, "companion", cfg);
  const std::vector<std::pair<std::string, const LinearEndo *>> maps = {
      {"psi_left", &c.psi_left()},
      {"phi_left", &c.phi_left()},
      {"psi_right", &c.psi_right()},
      {"phi_right", &c.phi_right()},
  };
  if (cfg.only.empty() || cfg.only == "coalgebra")
    out << format_coalgebra(c.full());
  for (const auto &[name, map] : maps)
  {
    if (!cfg.only.empty() && cfg.only != name)
      continue;
    if (cfg.only.empty())
      out << "\n# " << name << "\n";
    out << format_matrix(*map);
  }
  if (cfg.only.empty())
  {
    const FactorizationReport report = verify_factorization(c);
    out << "\n# factorization: " << (report.holds() ? "holds" : "fails") << "\n";
    for (const auto &line : report.failures)
      out << "# " << line << "\n";
  }
  return exit_ok;
}

int cmd_rmatrix(const Config &cfg, std::ostream &out)
{
  const LoadedR loaded = load_r(cfg);
  header(out, "rmatrix", cfg);
  out << "# " << loaded.description << "\n";
  out << (cfg.sparse ? format_sparse(loaded.r) : format_matrix(to_product_endo(loaded.r)));
  return exit_ok;
}

int cmd_verify_ybe(const Config &cfg, std::ostream &out)
{
  const LoadedR loaded = load_r(cfg);
  header(out, "verify-ybe", cfg);
  const Basis &b = *loaded.r.basis();
  out << "R = " << loaded.description << " on " << loaded.r.dim() << "-dimensional W\n";
  const YbeResult result = verify_ybe(loaded.r, cfg.par());
  if (result.holds)
  {
    out << "YBE holds on all " << result.triples_checked << " basis triples\n";
    return exit_ok;
  }
  const YbeCounterexample &cex = *result.counterexample;
  out << "YBE fails at " << triple_text(cex.triple, b) << "\n";
  out << "  (R (x) id)(id (x) R)(R (x) id) = " << format_tensor3(cex.lhs, b) << "\n";
  out << "  (id (x) R)(R (x) id)(id (x) R) = " << format_tensor3(cex.rhs, b) << "\n";
  return exit_failed;
}

int cmd_braid_check(const Config &cfg, std::ostream &out)
{
  LoadedR loaded = load_r(cfg);
  if (cfg.strands < 2)
    throw Error(ErrorKind::IndexOutOfRange, "braids need at least 2 strands");
  header(out, "braid-check", cfg);
  out << "R = " << loaded.description << ", n = " << cfg.strands << "\n";

  std::optional<BraidRepresentation> rep;
  if (cfg.skip_ybe_check)
  {
    rep = BraidRepresentation::unchecked(std::move(loaded.r));
  }
  else
  {
    try
    {
      rep = BraidRepresentation::from_r_matrix(std::move(loaded.r), cfg.par());
    }
    catch (const Error &e)
    {
      if (e.kind() != ErrorKind::NotYbeSolution)
        throw;
      out << "not a representation: " << e.detail() << "\n";
      return exit_failed;
    }
  }

  BraidCheckOptions options;
  options.exhaustive_cap = cfg.exhaustive_cap;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.par = cfg.par();
  const BraidReport report = verify_braid_relations(*rep, cfg.strands, options);
  if (report.sampled)
    out << "checked " << report.tensors_checked << " sampled basis tensors (seed " << report.seed
        << ")\n";
  else
    out << "checked all " << report.tensors_checked << " basis tensors\n";
  for (const auto &line : report.lines)
    out << line << "\n";
  out << (report.holds ? "braid relations hold" : "braid relations fail") << "\n";
  return report.holds ? exit_ok : exit_failed;
}

int cmd_braid_eval(const Config &cfg, std::ostream &out)
{
  LoadedR loaded = load_r(cfg);
  const Basis &b = *loaded.r.basis();
  const TensorN state = resolve_tensorn(parse_formal_sum(cfg.state), b);
  unsigned strands = 0;
  if (cfg.eval_strands)
    strands = *cfg.eval_strands;
  else if (!state.empty())
    strands = static_cast<unsigned>(arity(state));
  else
    throw Error(ErrorKind::ArityMismatch, "give -n when the state is 0");
  const BraidWord word = parse_braid_word(cfg.word, strands);
  const auto rep = cfg.skip_ybe_check
                       ? BraidRepresentation::unchecked(std::move(loaded.r))
                       : BraidRepresentation::from_r_matrix(std::move(loaded.r), cfg.par());
  const TensorN result = evaluate_word(rep, word, state);
  header(out, "braid-eval", cfg);
  out << "# R = " << loaded.description << ", word = "
      << (word.letters.empty() ? "id" : format_braid_word(word)) << "\n";
  out << format_tensorn(result, *rep.basis()) << "\n";
  return exit_ok;
}

int cmd_markovize(const Config &cfg, std::ostream &out, std::ostream &err)
{
  const CoalgebraText text = parse_coalgebra(read_file(cfg.input));
  if (text.tilde_lines > 0)
    err << "warning: ignoring " << text.tilde_lines
        << " tilde line(s); markovize reads delta lines only\n";
  header(out, "markovize", cfg);
  if (cfg.require_coassociative)
  {
    const BreakingCheck check = check_coassociativity(text.basis, text.delta);
    if (!check.holds)
    {
      out << "input delta is not coassociative at " << text.basis->name(*check.label) << "\n";
      return exit_failed;
    }
  }
  const LCoalgebra m = markovize(text.basis, text.delta);
  out << format_coalgebra(m);
  print_cocommutativity(out, m);
  const CompanionCoalgebra c = build_companion(m);
  if (!(c.psi_left() == c.psi_right()))
    out << "# two distinct R-matrices available\n";
  else
    out << "# one representation\n";
  return exit_ok;
}

int cmd_support(const Config &cfg, std::ostream &out)
{
  const CoalgebraText text = parse_coalgebra(read_file(cfg.input));
  const LCoalgebra c(text.basis, text.delta, text.tilde);
  const WeightedDigraph g = geometric_support(c);
  header(out, "support", cfg);
  out << format_graph(g);
  const ValidationReport report = validate_no_sink_no_source(g);
  for (Index v : report.sources)
    out << "# source: " << g.vertices()[v] << "\n";
  for (Index v : report.sinks)
    out << "# sink: " << g.vertices()[v] << "\n";
  return report.valid() ? exit_ok : exit_failed;
}

void add_r_options(CLI::App *sub, Config &cfg, bool matrix_allowed)
{
  sub->add_option("graph", cfg.input, "Graph file");
  sub->add_option("--side", cfg.side, "Automorphism side")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  sub->add_option("--hat", cfg.hat, "1: x(x)y -> psi(y)(x)x, 2: x(x)y -> y(x)psi(x)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  if (matrix_allowed)
    sub->add_option("--matrix", cfg.matrix, "Read R from a matrix file over the product basis")
        ->check(CLI::ExistingFile);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  Config cfg;
  CLI::App app{"Markov L-coalgebras, companions, R-matrices and braid representations", "lcoal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Seed for sampled checks (echoed in every report)")
      ->capture_default_str();
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads for verification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::map<CLI::App *, std::function<int()>> handlers;

  auto *validate = app.add_subcommand("validate", "Check a graph for sinks and sources");
  validate->add_option("graph", cfg.input, "Graph file")->required();
  handlers[validate] = [&] { return cmd_validate(cfg, out); };

  auto *coalgebra = app.add_subcommand("coalgebra", "Print the Markov L-coalgebra of a graph");
  coalgebra->add_option("graph", cfg.input, "Graph file")->required();
  handlers[coalgebra] = [&] { return cmd_coalgebra(cfg, out); };

  auto *companion = app.add_subcommand("companion", "Print the companion and its automorphisms");
  companion->add_option("graph", cfg.input, "Graph file")->required();
  companion->add_option("--only", cfg.only, "Print a single section")
      ->check(CLI::IsMember({"coalgebra", "psi_left", "phi_left", "psi_right", "phi_right"}));
  handlers[companion] = [&] { return cmd_companion(cfg, out); };

  auto *rmatrix = app.add_subcommand("rmatrix", "Export an R-matrix over the product basis");
  add_r_options(rmatrix, cfg, false);
  rmatrix->add_flag("--sparse", cfg.sparse, "Emit 'row col value' lines");
  handlers[rmatrix] = [&] { return cmd_rmatrix(cfg, out); };

  auto *ybe = app.add_subcommand("verify-ybe", "Check the Yang-Baxter equation on all basis triples");
  add_r_options(ybe, cfg, true);
  handlers[ybe] = [&] { return cmd_verify_ybe(cfg, out); };

  auto *check = app.add_subcommand("braid-check", "Check the braid relations on W^(x)n");
  add_r_options(check, cfg, true);
  check->add_option("-n,--strands", cfg.strands, "Number of strands")->capture_default_str();
  check->add_option("--samples", cfg.samples, "Sample size above the exhaustive cap")
      ->capture_default_str();
  check->add_option("--exhaustive-cap", cfg.exhaustive_cap,
                    "Largest dim^n checked exhaustively")
      ->capture_default_str();
  check->add_flag("--skip-ybe-check", cfg.skip_ybe_check,
                  "Build the representation without verifying YBE first");
  handlers[check] = [&] { return cmd_braid_check(cfg, out); };

  auto *eval = app.add_subcommand(
      "braid-eval", "Apply a braid word to a tensor; the leftmost letter acts first");
  add_r_options(eval, cfg, true);
  eval->add_option("--word", cfg.word, "Word such as 's1 s2^-1 s1'")->required();
  eval->add_option("--state", cfg.state, "State such as 'a (x) b (x) c'")->required();
  eval->add_option("-n,--strands", cfg.eval_strands, "Number of strands (default: state arity)");
  eval->add_flag("--skip-ybe-check", cfg.skip_ybe_check,
                 "Build the representation without verifying YBE first");
  handlers[eval] = [&] { return cmd_braid_eval(cfg, out); };

  auto *markov = app.add_subcommand("markovize", "Turn a delta-only coalgebra into a Markov one");
  markov->add_option("coalgebra", cfg.input, "Coalgebra file")->required();
  markov->add_flag("--require-coassociative", cfg.require_coassociative,
                   "Fail unless the input delta is coassociative");
  handlers[markov] = [&] { return cmd_markovize(cfg, out, err); };

  auto *support = app.add_subcommand("support", "Print the geometric support of a coalgebra");
  support->add_option("coalgebra", cfg.input, "Coalgebra file")->required();
  handlers[support] = [&] { return cmd_support(cfg, out); };

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try
  {
    for (auto *sub : app.get_subcommands())
      return handlers.at(sub)();
    return exit_input;
  }
  catch (const Error &e)
  {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  catch (const std::exception &e)
  {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
}

}  // namespace lcoal::cli
