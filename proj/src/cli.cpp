#include "xoph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "xoph/format.hpp"
#include "xoph/json_io.hpp"

namespace xoph::cli {

namespace {

struct Config {
  std::string partition;
  std::string f_spec = "auto";
  long n_max = 20;
  long n = 0;
  bool has_n = false;
  std::string format = "text";
  std::string target;
  std::string recurrence_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& csv) {
  try {
    return Partition::parse(csv);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--partition: ") + e.what());
  }
}

// auto: antiderivative of eta; auto-int: its primitive integer multiple;
// otherwise comma-separated coefficients from degree 0 upwards.
Poly resolve_f(const std::string& spec, const Partition& lam) {
  if (spec == "auto") return minimal_stabilizer(lam);
  if (spec == "auto-int") return primitive_part(minimal_stabilizer(lam));
  std::vector<Rat> cs;
  std::stringstream ss(spec);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) cs.push_back(parse_rat(item));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--f: ") + e.what());
  }
  if (cs.empty()) throw UsageError("--f: empty coefficient list");
  return Poly(Var::x, std::move(cs));
}

Style style_of(const Config& cfg) { return cfg.format == "latex" ? Style::latex : Style::text; }

int reject_non_stabilizer(const Partition& lam, const Poly& f, std::ostream& err) {
  err << "xoph: f = " << render(f) << " is not in the stabilizer ring of " << lam.to_string()
      << ": eta = " << render(eta(lam)) << " does not divide f'\n";
  return kNotStabilizer;
}

int cmd_gen(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Partition lam = parse_partition(cfg.partition);
  const Poly f = resolve_f(cfg.f_spec, lam);
  if (!is_stabilizer(lam, f)) return reject_non_stabilizer(lam, f, err);
  const Recurrence rec = recurrence(lam, f);
  if (cfg.format == "json") {
    out << serialize(rec) << "\n";
  } else if (cfg.format == "latex") {
    out << render(rec, Style::latex) << "\n";
  } else {
    out << "# partition " << lam.to_string() << ": N = " << lam.weight() << ", l = " << lam.length()
        << (lam.is_even() ? ", even" : "") << "\n";
    out << render(rec) << "\n";
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  Recurrence rec;
  if (!cfg.recurrence_file.empty()) {
    std::ifstream in(cfg.recurrence_file);
    if (!in) throw UsageError("cannot read " + cfg.recurrence_file);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      rec = parse_recurrence(buf.str());
    } catch (const std::invalid_argument& e) {
      throw UsageError(cfg.recurrence_file + ": " + e.what());
    }
  } else {
    const Partition lam = parse_partition(cfg.partition);
    const Poly f = resolve_f(cfg.f_spec, lam);
    if (!is_stabilizer(lam, f)) return reject_non_stabilizer(lam, f, err);
    rec = recurrence(lam, f);
  }
  if (cfg.n_max < 0) throw UsageError("--n-max must be nonnegative");

  const VerificationReport report = verify_recurrence(rec, cfg.n_max);
  if (cfg.format == "json") {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& m : report.failures) {
      failures.push_back({{"n", m.n}, {"expected", to_json(m.expected)}, {"got", to_json(m.got)}});
    }
    nlohmann::json poles = nlohmann::json::array();
    for (const auto& p : report.poles) poles.push_back({{"offset", p.offset}, {"n", p.n}});
    out << nlohmann::json{{"checked", report.checked},
                          {"verified", report.clean()},
                          {"failures", failures},
                          {"poles", poles}}
               .dump(2)
        << "\n";
  } else {
    out << "checked " << report.checked.size() << " degrees in [0, " << cfg.n_max << "]: "
        << report.failures.size() << " failures, " << report.poles.size() << " poles\n";
    for (const auto& p : report.poles) {
      out << "pole: coefficient of offset " << p.offset << " is undefined at n = " << p.n << "\n";
    }
    if (!report.failures.empty()) {
      const auto& m = report.failures.front();
      out << "first failure at n = " << m.n << "\n"
          << "  expected: " << render(m.expected) << "\n"
          << "  got:      " << render(m.got) << "\n";
    }
  }
  return report.clean() ? kOk : kVerificationFailed;
}

int cmd_show(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Partition lam = parse_partition(cfg.partition);
  const Style style = style_of(cfg);
  const bool json = cfg.format == "json";
  const auto emit = [&](const auto& obj, const std::string& text) {
    out << (json ? to_json(obj).dump(2) : text) << "\n";
  };

  if (cfg.target == "eta") {
    const Poly e = eta(lam);
    emit(e, render(e, style));
  } else if (cfg.target == "A") {
    const PolyDiffOp a = op_A(lam);
    emit(a, render(a, style));
  } else if (cfg.target == "B") {
    const RatDiffOp b = op_B(lam);
    emit(b, render(b, style));
  } else if (cfg.target == "hhat") {
    if (!cfg.has_n) throw UsageError("show hhat requires --n");
    const Poly h = exceptional_hermite(lam, cfg.n);
    emit(h, render(h, style));
  } else if (cfg.target == "pi") {
    const Poly p = pi(lam);
    emit(p, style == Style::latex ? render_factored(RatFun(p), style) : render_linear_factors(p));
  } else if (cfg.target == "flat-bfa") {
    const Poly f = resolve_f(cfg.f_spec, lam);
    if (!is_stabilizer(lam, f)) return reject_non_stabilizer(lam, f, err);
    const ShiftOp s = flat(bfa(lam, f));
    if (json) out << nlohmann::json{{"terms", to_json(s)}}.dump(2) << "\n";
    else out << render(s, style) << "\n";
  } else {
    throw UsageError("unknown show target '" + cfg.target + "'");
  }
  return kOk;
}

int cmd_stab_check(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Partition lam = parse_partition(cfg.partition);
  const Poly f = resolve_f(cfg.f_spec, lam);
  const bool ok = is_stabilizer(lam, f);
  if (cfg.format == "json") {
    out << nlohmann::json{{"partition", lam.parts()}, {"f", {{"coeffs", to_json(f)}}}, {"stabilizer", ok}}.dump(2)
        << "\n";
  } else {
    out << (ok ? "yes" : "no") << ": f = " << render(f, style_of(cfg)) << ", eta = " << render(eta(lam), style_of(cfg))
        << "\n";
  }
  if (!ok) err << "xoph: eta does not divide f'\n";
  return ok ? kOk : kNotStabilizer;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact recurrence relations for exceptional Hermite polynomials", "xoph"};
  app.require_subcommand(1);
  Config cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--partition", cfg.partition, "Non-decreasing parts, comma separated; empty for none");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  };
  const auto f_option = [&](CLI::App* sub) {
    sub->add_option("--f", cfg.f_spec, "auto | auto-int | coefficients low-to-high, comma separated");
  };

  CLI::App* gen = app.add_subcommand("gen", "Print the recurrence relation for f");
  common(gen);
  f_option(gen);

  CLI::App* verify = app.add_subcommand("verify", "Check the recurrence against the exceptional family");
  common(verify);
  f_option(verify);
  verify->add_option("--n-max", cfg.n_max, "Largest degree to check");
  verify->add_option("--recurrence", cfg.recurrence_file, "Verify a recurrence read from a JSON file");

  CLI::App* show = app.add_subcommand("show", "Print an intermediate object");
  show->add_option("target", cfg.target, "eta | A | B | hhat | pi | flat-bfa")->required();
  common(show);
  f_option(show);
  CLI::Option* n_opt = show->add_option("--n", cfg.n, "Degree for hhat");

  CLI::App* stab = app.add_subcommand("stab-check", "Test whether f lies in the stabilizer ring");
  common(stab);
  f_option(stab);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "xoph: " << e.what() << "\n";
    return kUsage;
  }
  cfg.has_n = n_opt->count() > 0;

  try {
    if (gen->parsed()) return cmd_gen(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (show->parsed()) return cmd_show(cfg, out, err);
    return cmd_stab_check(cfg, out, err);
  } catch (const UsageError& e) {
    err << "xoph: " << e.what() << "\n";
    return kUsage;
  } catch (const DenominatorNotCleared& e) {
    err << "xoph: internal invariant breach: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace xoph::cli
