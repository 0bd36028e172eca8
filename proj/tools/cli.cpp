#include "cli.hpp"

#include "framecoh/bounds.hpp"
#include "framecoh/code_frame.hpp"
#include "framecoh/constructions.hpp"
#include "framecoh/equivalence.hpp"
#include "framecoh/experiment.hpp"
#include "framecoh/frame.hpp"
#include "framecoh/frame_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>

namespace framecoh::cli {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

void print_report(std::ostream& out, const Frame& frame, double mu, double nu, double norm) {
  const double sqrt_m = std::sqrt(static_cast<double>(frame.rows()));
  out << "frame        " << frame.rows() << " x " << frame.cols() << ' ' << to_string(frame.field()) << '\n';
  out << "mu           " << fmt(mu) << '\n';
  out << "mu/sqrt(M)   " << fmt(mu / sqrt_m) << '\n';
  out << "nu           " << fmt(nu) << '\n';
  out << "||F||_2      " << fmt(norm) << '\n';
  out << "||F||_2^2    " << fmt(norm * norm) << '\n';
  out << "welch        " << fmt(welch_bound(frame.rows(), frame.cols())) << '\n';
  out << "lower bound  " << fmt(best_lower_bound(frame.rows(), frame.cols(), frame.field())) << '\n';
  out << "SCP-1 mu <= 1/(164 ln N)  " << verdict(scp1_holds(mu, frame.cols())) << '\n';
  out << "SCP-2 nu <= mu/sqrt(M)    " << verdict(scp2_holds(nu, mu, frame.rows())) << '\n';
}

void print_report(std::ostream& out, const Frame& frame) {
  const CoherenceReport r = scp_check(frame);
  print_report(out, frame, r.mu, r.nu, r.spectral_norm);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open '" + path + "' for writing");
  return file;
}

void write_text(const std::string& path, const std::string& text) {
  auto file = open_output(path);
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

/// Replaces "--config FILE" / "--config=FILE" with the file's tokens, skipping keys given as flags.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
      continue;
    }
    const auto tokens = config_tokens(path);
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      const std::string& tok = tokens[k];
      const bool short_form = tok.size() == 2;
      const std::string name = short_form ? tok : tok.substr(0, tok.find('='));
      const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == name || a.rfind(name + "=", 0) == 0 || (short_form && a.rfind(name, 0) == 0);
      });
      if (!given) {
        out.push_back(tok);
        if (short_form) out.push_back(tokens[k + 1]);
      }
      if (short_form) ++k;
    }
  }
  return out;
}

AmplitudeLaw parse_law(const std::string& law) {
  return law == "two-tier" ? AmplitudeLaw::TwoTier : AmplitudeLaw::Flat;
}

struct Options {
  // construct
  Index rows = 0, cols = 0;
  unsigned m = 0, t = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> modulus;
  std::string output, rows_output;
  bool binary = false;
  // analyze / flip
  std::string input;
  bool csv = false, oracle = false;
  // recover / experiment
  std::string experiment;
  Index sparsity = 0;
  double sigma2 = 1.0, t_param = 0.5, delta = 0.1, alpha_factor = 10.0;
  std::optional<double> snr, lambda, slack;
  std::size_t trials = 100;
  std::string family, law = "flat";
  Index n_min = 0, n_max = 0;
  bool text = false;
};

void add_recovery_options(CLI::App* app, Options& o) {
  app->add_option("-K,--sparsity", o.sparsity, "Sparsity K");
  app->add_option("--sigma2", o.sigma2, "Noise variance (complex, E|e_i|^2)")->check(CLI::NonNegativeNumber);
  app->add_option("--snr", o.snr, "Signal-to-noise ratio given to the threshold (default: from x)");
  app->add_option("--lambda", o.lambda, "Explicit threshold (overrides sigma2/snr rule)");
  app->add_option("--t-param", o.t_param, "Threshold parameter t in (0,1)");
  app->add_option("--law", o.law, "Amplitude law")->check(CLI::IsMember({"flat", "two-tier"}));
  app->add_option("--alpha-factor", o.alpha_factor, "Amplitude alpha as a multiple of the noise floor");
  app->add_option("--seed", o.seed, "Base seed; trial i uses hash64(seed, i)");
  app->add_option("--trials", o.trials, "Number of trials");
  app->add_option("--slack", o.slack, "Fixed slack instead of the Wilson half-width");
  app->add_option("-o,--output", o.output, "CSV output path (default: stdout)");
}

ExperimentConfig to_config(const Options& o) {
  ExperimentConfig c;
  if (!o.experiment.empty()) c.id = *parse_experiment_id(o.experiment);
  c.rows = o.rows;
  c.cols = o.cols;
  c.m = o.m;
  c.t = o.t;
  c.sparsity = o.sparsity;
  c.sigma2 = o.sigma2;
  c.snr = o.snr;
  c.lambda = o.lambda;
  c.t_param = o.t_param;
  c.delta = o.delta;
  c.base_seed = o.seed;
  c.trials = o.trials;
  c.family = o.family;
  c.law = parse_law(o.law);
  c.amplitude_factor = o.alpha_factor;
  c.oracle = o.oracle;
  c.n_min = o.n_min;
  c.n_max = o.n_max;
  c.slack = o.slack;
  c.output = o.output;
  return c;
}

int emit_report(const ExperimentConfig& c, const ExperimentReport& report, std::ostream& out, std::ostream& err) {
  const std::string summary = format_summary(c, report);
  if (c.output.empty()) {
    out << report.csv;
    err << summary;
  } else {
    write_text(c.output, report.csv);
    out << summary;
  }
  return report.summary.pass ? kExitPass : kExitFail;
}

// --- subcommands ------------------------------------------------------------

int do_construct(const std::string& kind, const Options& o, std::ostream& out, std::ostream& err) {
  const FrameEncoding enc = o.binary ? FrameEncoding::Binary : FrameEncoding::Text;
  Warnings warnings;
  auto save = [&](const Frame& f) {
    if (!o.output.empty()) {
      save_frame(o.output, f, enc);
      out << "wrote " << o.output << '\n';
    }
  };
  if (kind == "gaussian") {
    const Frame f = build_gaussian({o.rows, o.cols, o.seed}, &warnings);
    save(f);
    print_report(out, f);
    const GaussianFrameSpec spec{o.rows, o.cols, o.seed};
    out << "theorem regime 60 ln N <= M <= (N-1)/(4 ln N)  " << (spec.in_theorem_regime() ? "yes" : "no") << '\n';
  } else if (kind == "harmonic") {
    const HarmonicFrame h = build_harmonic({o.cols, o.rows, o.seed}, &warnings);
    save(h.frame);
    print_report(out, h.frame);
    std::string list;
    for (Index k : h.selected_rows) list += (list.empty() ? "" : " ") + std::to_string(k);
    if (!o.rows_output.empty()) write_text(o.rows_output, list + "\n");
    out << "selected rows (" << h.selected_rows.size() << "): " << list << '\n';
  } else {
    const CodeFrameSpec spec{o.m, o.t, o.modulus};
    const CodeFrameOperator op(spec);
    const Frame f = build_code_frame(spec);
    save(f);
    const double mu = op.worst_case_coherence();
    print_report(out, f, mu, average_coherence(f), spectral_norm(f));
    out << "mu <= 1/sqrt(2^(m-2t-1)) = " << fmt(spec.mu_bound()) << "  " << verdict(mu <= spec.mu_bound()) << '\n';
    out << "||F||_2^2 = 2^(tm) = " << fmt(spec.spectral_norm_squared()) << '\n';
  }
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return kExitPass;
}

int do_analyze(const Options& o, std::ostream& out) {
  const Frame f = load_frame(o.input);
  const CoherenceReport r = scp_check(f);
  if (o.csv) {
    out << "M,N,field,mu,nu,spectral_norm,scp1,scp2\n"
        << f.rows() << ',' << f.cols() << ',' << to_string(f.field()) << ',' << exact(r.mu) << ',' << exact(r.nu)
        << ',' << exact(r.spectral_norm) << ',' << r.scp1 << ',' << r.scp2 << '\n';
  } else {
    print_report(out, f, r.mu, r.nu, r.spectral_norm);
  }
  return kExitPass;
}

int do_flip(const Options& o, std::ostream& out) {
  const Frame f = load_frame(o.input);
  const FlipResult g = linear_time_flip(f);
  out << "pattern " << g.pattern.to_string() << '\n';
  out << "nu before  " << fmt(average_coherence(f)) << '\n';
  out << "nu after   " << fmt(average_coherence(g.frame)) << '\n';
  out << "mu         " << fmt(worst_case_coherence(g.frame)) << '\n';
  if (o.oracle) {
    const FlipOracleResult best = exhaustive_flip_oracle(f);
    out << "oracle     " << best.pattern.to_string() << " nu " << fmt(best.min_nu) << '\n';
  }
  if (!o.output.empty()) {
    save_frame(o.output, g.frame, o.binary ? FrameEncoding::Binary : FrameEncoding::Text);
    out << "wrote " << o.output << '\n';
  }
  return kExitPass;
}

int do_recover(const Options& o, std::ostream& out, std::ostream& err) {
  const Frame f = load_frame(o.input);
  ExperimentConfig c = to_config(o);
  c.id = ExperimentId::OstRecovery;
  const ExperimentReport report = run_recovery(f, c);
  return emit_report(c, report, out, err);
}

int do_bounds(const Options& o, std::ostream& out) {
  const Index first = o.n_min ? o.n_min : std::max<Index>(o.rows, 2);
  const BoundTable table = bound_table(o.rows, first, o.n_max);
  if (o.output.empty()) {
    out << (o.text ? to_text(table) : to_csv(table));
  } else {
    write_text(o.output, o.text ? to_text(table) : to_csv(table));
  }
  return kExitPass;
}

int do_experiment(const Options& o, std::ostream& out, std::ostream& err) {
  const ExperimentConfig c = to_config(o);
  return emit_report(c, run_experiment(c), out, err);
}

}  // namespace

std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  std::size_t number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument(path + ":" + std::to_string(number) + ": empty key");
    if (key.size() == 1) {
      tokens.push_back("-" + key);
      tokens.push_back(value);
    } else {
      tokens.push_back("--" + key + "=" + value);
    }
  }
  return tokens;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frame coherence toolkit: constructions, coherence analysis, flipping, OST recovery, bounds"};
  app.name("framecoh");
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a frame and print its coherence report");
  construct->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed");
    sub->add_option("-o,--output", o.output, "Write the frame (FRAME v1)");
    sub->add_flag("--binary", o.binary, "Binary payload instead of text");
  };
  auto* gaussian = construct->add_subcommand("gaussian", "Normalized Gaussian frame");
  gaussian->add_option("-M,--rows", o.rows, "Rows M")->required();
  gaussian->add_option("-N,--cols", o.cols, "Columns N")->required();
  add_common(gaussian);
  auto* harmonic = construct->add_subcommand("harmonic", "Random harmonic (partial DFT) frame");
  harmonic->add_option("-N,--dft-size", o.cols, "DFT size N")->required();
  harmonic->add_option("-M,--rows", o.rows, "Expected number of rows M")->required();
  harmonic->add_option("--rows-output", o.rows_output, "Write the selected row list");
  add_common(harmonic);
  auto* code = construct->add_subcommand("code", "GF(2^m) code-based frame");
  code->add_option("-m,--field-degree", o.m, "Field degree m")->required();
  code->add_option("-t,--terms", o.t, "Number of quadratic terms t")->required();
  code->add_option("--modulus", o.modulus, "Modulus polynomial as an integer (e.g. 0x25)");
  add_common(code);

  auto* analyze = app.add_subcommand("analyze", "Coherence report of a frame file");
  analyze->add_option("frame", o.input, "FRAME v1 file")->required();
  analyze->add_flag("--csv", o.csv, "CSV output");

  auto* flip = app.add_subcommand("flip", "Linear-time flipping of a frame file");
  flip->add_option("frame", o.input, "FRAME v1 file")->required();
  flip->add_option("-o,--output", o.output, "Write the flipped frame");
  flip->add_flag("--binary", o.binary, "Binary payload instead of text");
  flip->add_flag("--oracle", o.oracle, "Also search all flips (N <= 24)");

  auto* recover = app.add_subcommand("recover", "One-step thresholding trials on a frame file");
  recover->add_option("--frame", o.input, "FRAME v1 file")->required();
  add_recovery_options(recover, o);

  auto* bounds = app.add_subcommand("bounds", "Lower bounds on worst-case coherence");
  bounds->add_option("-M,--rows", o.rows, "Rows M")->required();
  bounds->add_option("--nmin", o.n_min, "First N (default max(M, 2))");
  bounds->add_option("--nmax", o.n_max, "Last N")->required();
  bounds->add_flag("--text", o.text, "Aligned text instead of CSV");
  bounds->add_option("-o,--output", o.output, "Output path");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo check of a theorem-level claim");
  experiment->add_option("id", o.experiment, "Experiment")->required()->check(CLI::IsMember(experiment_names()));
  experiment->add_option("-M,--rows", o.rows, "Rows M");
  experiment->add_option("-N,--cols", o.cols, "Columns N");
  experiment->add_option("-m,--field-degree", o.m, "Code frame field degree m");
  experiment->add_option("-t,--terms", o.t, "Code frame terms t");
  experiment->add_option("--delta", o.delta, "Weak RIP delta");
  experiment->add_option("--family", o.family, "Frame family (weak-rip, ost-recovery)");
  experiment->add_flag("--oracle", o.oracle, "flip-guarantee: run the exhaustive oracle too");
  experiment->add_option("--nmin", o.n_min, "bounds-figure: first N");
  experiment->add_option("--nmax", o.n_max, "bounds-figure: last N");
  add_recovery_options(experiment, o);

  const std::string config_help = "key=value file; flags given on the command line take precedence";
  recover->add_option("--config")->description("Config file: " + config_help);
  experiment->add_option("--config")->description("Config file: " + config_help);

  try {
    args = expand_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      const std::string kind = gaussian->parsed() ? "gaussian" : harmonic->parsed() ? "harmonic" : "code";
      return do_construct(kind, o, out, err);
    }
    if (analyze->parsed()) return do_analyze(o, out);
    if (flip->parsed()) return do_flip(o, out);
    if (recover->parsed()) return do_recover(o, out, err);
    if (bounds->parsed()) return do_bounds(o, out);
    return do_experiment(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace framecoh::cli
