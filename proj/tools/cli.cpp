#include "upk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "upk/adversaries.hpp"
#include "upk/advice.hpp"
#include "upk/core.hpp"
#include "upk/engine.hpp"
#include "upk/errors.hpp"
#include "upk/report_io.hpp"
#include "upk/selfcheck.hpp"
#include "upk/sequence_io.hpp"
#include "upk/sweep.hpp"

namespace upk {
namespace {

struct Flags {
  std::optional<std::string> format;
  std::uint64_t seed = 0;
  std::optional<std::string> output;

  // run
  std::string alg;
  std::optional<double> ahat;
  std::string input;

  // adversary
  std::string kind;
  std::optional<double> a;
  double r2 = 0.5;
  std::int64_t b = 0;
  double z = 2.0;
  double q = 0.5;
  bool perturb = false;
  std::int64_t m = 1;
  std::optional<std::string> dump;

  // sweep
  std::string generator = "random";
  std::vector<double> r_grid;
  std::int64_t trials = 50;
  bool serial = false;

  // advice
  int k = 8;
  std::string frame;
  std::string s_bits;
  int z_int = 0;

  // selfcheck
  bool quick = false;
  bool inject_fault = false;
};

OutputFormat resolve_format(const Flags& f, OutputFormat fallback) {
  if (!f.format) return fallback;
  if (*f.format == "csv") return OutputFormat::Csv;
  if (*f.format == "json") return OutputFormat::Json;
  return OutputFormat::Text;
}

double require_ahat(const Flags& f, const std::string& alg) {
  if (!f.ahat) throw ConfigError("--alg " + alg + " requires --ahat");
  if (!(*f.ahat > 0.0)) throw ConfigError("--ahat must be > 0");
  return *f.ahat;
}

int cmd_run(const Flags& f, std::ostream& out) {
  RequestSequence seq = read_sequence_file(f.input);
  PackingResult res;
  if (f.alg == "at") {
    res = run_at(seq, require_ahat(f, f.alg));
  } else if (f.alg == "atup") {
    res = run_atup(seq, require_ahat(f, f.alg));
  } else if (f.alg == "greedy") {
    res = greedy_accept_all(seq);
  } else {
    res = opt_pack(seq);
  }
  const PackingResult opt = opt_pack(seq);
  const double ratio =
      opt.profit > 0 ? static_cast<double>(res.profit) / static_cast<double>(opt.profit) : 0.0;
  switch (resolve_format(f, OutputFormat::Text)) {
    case OutputFormat::Csv:
      out << "alg,n,profit,level,opt_profit,ratio\n"
          << f.alg << ',' << seq.size() << ',' << res.profit << ','
          << format_shortest(res.final_level) << ',' << opt.profit << ','
          << format_shortest(ratio) << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["alg"] = f.alg;
      j["n"] = seq.size();
      j["profit"] = res.profit;
      j["level"] = res.final_level;
      j["opt_profit"] = opt.profit;
      j["ratio"] = ratio;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      out << "alg=" << f.alg << " n=" << seq.size() << " profit=" << res.profit
          << " level=" << format_significant(res.final_level) << " opt_profit=" << opt.profit
          << " ratio=" << format_significant(ratio) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_adversary(const Flags& f, std::ostream& out) {
  // Validate the adversary parameters before building the decider.
  std::optional<TrustedAdversaryConfig> trusted;
  std::optional<SemiTrustedAdversaryConfig> semi;
  std::optional<TradeoffAdversaryConfig> tradeoff;
  double prediction = 0.0;
  if (f.kind == "trusted") {
    if (!f.a) throw ConfigError("--kind trusted requires --a");
    trusted = TrustedAdversaryConfig::make(*f.a);
    prediction = f.ahat.value_or(*f.a);
  } else {
    if (!f.ahat) throw ConfigError("--kind " + f.kind + " requires --ahat");
    prediction = *f.ahat;
    if (f.kind == "semitrusted") {
      semi = SemiTrustedAdversaryConfig::make(prediction, f.r2, f.b);
    } else {
      tradeoff = TradeoffAdversaryConfig::make(prediction, f.z, f.q, f.b, f.perturb);
    }
  }
  DeciderKind kind = DeciderKind::Greedy;
  if (f.alg == "at") kind = DeciderKind::AT;
  if (f.alg == "atup") kind = DeciderKind::ATup;
  if (f.alg == "reject") kind = DeciderKind::RejectAll;
  if (f.alg == "accept-first") kind = DeciderKind::AcceptFirst;
  if (kind == DeciderKind::AcceptFirst && f.m < 0) throw ConfigError("--m must be >= 0");
  auto decider = make_decider(kind, prediction, f.m);

  AdversaryOutcome outcome;
  if (trusted) {
    outcome = run_trusted_adversary(*trusted, *decider);
  } else if (semi) {
    outcome = run_semitrusted_adversary(*semi, *decider);
  } else {
    outcome = run_tradeoff_adversary(*tradeoff, *decider);
  }
  if (f.dump) write_sequence_file(*f.dump, outcome.sequence());
  write_outcome(out, outcome, f.alg, resolve_format(f, OutputFormat::Json));
  return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.algorithm = *parse_sweep_algorithm(f.alg);
  spec.generator = *parse_sweep_generator(f.generator);
  for (double r : f.r_grid) {
    if (std::find(spec.r_grid.begin(), spec.r_grid.end(), r) != spec.r_grid.end()) {
      err << "warning: duplicate r value " << format_shortest(r) << " dropped\n";
      continue;
    }
    spec.r_grid.push_back(r);
  }
  spec.ahat = f.ahat.value_or(0.005);
  spec.trials = f.trials;
  spec.seed = f.seed;
  spec.b = f.b;
  spec.z = f.z;
  spec.perturb = f.perturb;
  spec.validate();
  const auto reports = f.serial ? run_sweep_serial(spec) : run_sweep(spec);
  write_reports(out, reports, resolve_format(f, OutputFormat::Csv));
  const bool all = std::all_of(reports.begin(), reports.end(),
                               [](const RatioReport& r) { return r.pass; });
  return all ? kExitOk : kExitBoundViolation;
}

void write_advice(std::ostream& out, const SingleValueAdvice& adv, std::optional<double> a,
                  OutputFormat format) {
  const BitString frame = frame_self_delimiting(adv);
  switch (format) {
    case OutputFormat::Csv:
      out << "z,s,k,ahat" << (a ? ",r" : "") << ",frame\n"
          << adv.z << ',' << adv.s_bits().to_string() << ',' << adv.k << ','
          << format_shortest(adv.ahat());
      if (a) out << ',' << format_shortest(*a / adv.ahat());
      out << ',' << frame.to_string() << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["z"] = adv.z;
      j["s"] = adv.s_bits().to_string();
      j["k"] = adv.k;
      j["ahat"] = adv.ahat();
      if (a) j["r"] = *a / adv.ahat();
      j["frame"] = frame.to_string();
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      out << "z=" << adv.z << " s=" << adv.s_bits().to_string()
          << " ahat=" << format_significant(adv.ahat());
      if (a) out << " r=" << format_significant(*a / adv.ahat());
      out << " frame=" << frame.to_string() << '\n';
      break;
  }
}

int cmd_advice(const std::string& sub, const Flags& f, std::ostream& out) {
  const OutputFormat format = resolve_format(f, OutputFormat::Text);
  if (sub == "encode") {
    if (!f.a) throw ConfigError("advice encode requires --a");
    write_advice(out, encode_average(*f.a, f.k), f.a, format);
  } else if (sub == "decode") {
    write_advice(out, parse_frame(BitString::from_string(f.frame)), std::nullopt, format);
  } else if (sub == "frame") {
    const BitString s = BitString::from_string(f.s_bits);
    const auto adv = SingleValueAdvice::make(f.z_int, s.to_uint(), static_cast<int>(s.size()));
    const BitString frame = frame_self_delimiting(adv);
    switch (format) {
      case OutputFormat::Csv:
        out << "frame,length\n" << frame.to_string() << ',' << frame.size() << '\n';
        break;
      case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["frame"] = frame.to_string();
        j["length"] = frame.size();
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::Text:
        out << frame.to_string() << '\n';
        break;
    }
  } else {
    const BitString frame = BitString::from_string(f.frame);
    const double ahat = parse_frame(frame).ahat();
    RequestSequence seq = read_sequence_file(f.input);
    PackingResult res = run_at_with_encoded_advice(seq, frame);
    const PackingResult opt = opt_pack(seq);
    const double ratio =
        opt.profit > 0 ? static_cast<double>(res.profit) / static_cast<double>(opt.profit) : 0.0;
    switch (format) {
      case OutputFormat::Csv:
        out << "ahat,profit,opt_profit,ratio\n"
            << format_shortest(ahat) << ',' << res.profit << ',' << opt.profit << ','
            << format_shortest(ratio) << '\n';
        break;
      case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["ahat"] = ahat;
        j["profit"] = res.profit;
        j["opt_profit"] = opt.profit;
        j["ratio"] = ratio;
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::Text:
        out << "ahat=" << format_significant(ahat) << " profit=" << res.profit
            << " opt_profit=" << opt.profit << " ratio=" << format_significant(ratio) << '\n';
        break;
    }
  }
  return kExitOk;
}

int cmd_selfcheck(const Flags& f, std::ostream& out) {
  const SelfcheckReport report = run_selfcheck(f.quick, f.inject_fault);
  write_selfcheck(out, report);
  return report.all_pass() ? kExitOk : kExitBoundViolation;
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd->add_option("--seed", f.seed, "Random seed (default 0)");
  cmd->add_option("--output", f.output, "Write output to this path");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Online unit-profit knapsack with predictions"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run one algorithm on a sequence file");
  add_common(run, f);
  run->add_option("--alg", f.alg, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"at", "atup", "greedy", "opt"}));
  run->add_option("--ahat", f.ahat, "Predicted average size");
  run->add_option("--input", f.input, "Sequence file")->required();

  auto* adv = app.add_subcommand("adversary", "Duel an adaptive adversary against a decider");
  add_common(adv, f);
  adv->add_option("--kind", f.kind, "Adversary")
      ->required()
      ->check(CLI::IsMember({"trusted", "semitrusted", "tradeoff"}));
  adv->add_option("--alg", f.alg, "Decider")
      ->required()
      ->check(CLI::IsMember({"at", "atup", "greedy", "reject", "accept-first"}));
  adv->add_option("--a", f.a, "True average (trusted)");
  adv->add_option("--ahat", f.ahat, "Prediction");
  adv->add_option("--r2", f.r2, "Final item ratio (semitrusted)");
  adv->add_option("--b", f.b, "Additive constant to defeat");
  adv->add_option("--z", f.z, "Round scale (tradeoff)");
  adv->add_option("--q", f.q, "Final item ratio (tradeoff)");
  adv->add_flag("--perturb", f.perturb, "Add a^2/10 to tradeoff round items");
  adv->add_option("--m", f.m, "Items accepted by accept-first");
  adv->add_option("--dump-sequence", f.dump, "Write the emitted sequence to this path");

  auto* sweep = app.add_subcommand("sweep", "Check the ratio bound over a grid of r");
  add_common(sweep, f);
  sweep->add_option("--alg", f.alg, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"at", "atup", "greedy"}));
  sweep->add_option("--gen", f.generator, "Input generator")
      ->check(CLI::IsMember({"random", "trusted", "semitrusted", "tradeoff", "sigma"}));
  sweep->add_option("--ahat", f.ahat, "Prediction (default 0.005)");
  sweep->add_option("--r", f.r_grid, "Comma-separated r grid")->required()->delimiter(',');
  sweep->add_option("--trials", f.trials, "Trials per point");
  sweep->add_option("--b", f.b, "Adversary additive constant");
  sweep->add_option("--z", f.z, "Tradeoff round scale");
  sweep->add_flag("--perturb", f.perturb, "Perturb tradeoff round items");
  sweep->add_flag("--serial", f.serial, "Use the serial reference loop");

  auto* advice = app.add_subcommand("advice", "Advice codecs");
  advice->require_subcommand(1);
  auto* encode = advice->add_subcommand("encode", "k-bit approximation of a");
  add_common(encode, f);
  encode->add_option("--a", f.a, "Average size")->required();
  encode->add_option("--k", f.k, "Payload bits");
  auto* decode = advice->add_subcommand("decode", "Parse a frame");
  add_common(decode, f);
  decode->add_option("--frame", f.frame, "Frame bits")->required();
  auto* frame = advice->add_subcommand("frame", "Frame z and s");
  add_common(frame, f);
  frame->add_option("--z", f.z_int, "Leading zeros")->required();
  frame->add_option("--s", f.s_bits, "Payload bits")->required();
  auto* arun = advice->add_subcommand("run", "Run AT with framed advice");
  add_common(arun, f);
  arun->add_option("--frame", f.frame, "Frame bits")->required();
  arun->add_option("--input", f.input, "Sequence file")->required();

  auto* self = app.add_subcommand("selfcheck", "Numeric lemma and oracle checks");
  add_common(self, f);
  self->add_flag("--quick", f.quick, "Smaller grids");
  self->add_flag("--inject-fault", f.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFlags;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (f.output) {
      file.open(*f.output, std::ios::binary);
      if (!file) throw ParseError("cannot write " + *f.output);
      sink = &file;
    }
    int code = kExitOk;
    if (run->parsed()) {
      code = cmd_run(f, *sink);
    } else if (adv->parsed()) {
      code = cmd_adversary(f, *sink);
    } else if (sweep->parsed()) {
      code = cmd_sweep(f, *sink, err);
    } else if (advice->parsed()) {
      for (auto* sub : {encode, decode, frame, arun}) {
        if (sub->parsed()) code = cmd_advice(sub->get_name(), f, *sink);
      }
    } else {
      code = cmd_selfcheck(f, *sink);
    }
    sink->flush();
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ProtocolError& e) {
    err << "protocol violation: " << e.what() << '\n';
    return kExitBoundViolation;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFlags;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitFlags;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFlags;
  }
}

}  // namespace upk
