#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "leadinf/leadinf.h"

namespace leadinf {
namespace cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kBenchBoundSeconds = 30.0;
constexpr int kBenchBoundN = 10;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string Fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

double Rounded(double value) { return std::round(value * 1e6) / 1e6; }

std::string PadRight(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

// Rows of left-aligned columns separated by two spaces; no trailing blanks.
std::string Columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += i + 1 < row.size() ? PadRight(row[i], width[i] + 2) : row[i];
    }
    out += line + "\n";
  }
  return out;
}

struct DealSource {
  std::string file;
  std::string declarer;
  std::string dummy;
  std::string strain = "NT";

  void AddOptions(CLI::App* app) {
    app->add_option("--deal", file, "Deal file with declarer:, dummy: and strain: lines");
    app->add_option("--declarer", declarer, "Declarer's hand, e.g. AQJ8.AKQ2.AKQ.AK");
    app->add_option("--dummy", dummy, "Dummy's hand");
    app->add_option("--strain", strain, "Contract strain: C, D, H, S or NT")->capture_default_str();
  }

  DealView Resolve() const {
    if (!file.empty()) {
      if (!declarer.empty() || !dummy.empty()) {
        throw UsageError("give either --deal or --declarer/--dummy, not both");
      }
      return ParseDealText(ReadFile(file));
    }
    if (declarer.empty() || dummy.empty()) {
      throw UsageError("a deal needs --deal FILE or both --declarer and --dummy");
    }
    return DealView(ParseHand(declarer), ParseHand(dummy), StrainFromString(strain));
  }
};

const std::vector<std::string> kRuleNames = {"builtin", "forced-S", "forced-H", "forced-D",
                                             "forced-C"};

std::unique_ptr<RuleSet> MakeRules(const std::string& name) {
  if (name == "builtin") return std::make_unique<BuiltinRules>();
  if (name.size() == 8 && name.rfind("forced-", 0) == 0) {
    if (auto s = SuitFromChar(name[7])) return std::make_unique<ForcedSuitRules>(*s);
  }
  throw UsageError("unknown rule set '" + name + "'");
}

// ---------------------------------------------------------------------------
// infer

struct InferArgs {
  DealSource deal;
  std::string lead;
  std::string mode = "within-suit";
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::string prior;
  std::string format = "table";
  std::string on_zero = "error";
  std::string rules = "builtin";
  int threads = 1;
};

LikelihoodMode ResolveMode(const InferArgs& args) {
  if (args.mode == "mc") {
    if (!args.samples || !args.seed) throw UsageError("--mode mc needs --samples and --seed");
    if (*args.samples == 0) throw UsageError("--samples must be positive");
    return LikelihoodMode::MonteCarlo(*args.samples, *args.seed);
  }
  if (args.samples || args.seed) throw UsageError("--samples and --seed apply only to --mode mc");
  return args.mode == "full" ? LikelihoodMode::FullExact() : LikelihoodMode::WithinSuit();
}

std::string Label(const MarginalRow& row) { return row.card ? row.card->Code() : "offsuit"; }

std::string ZText(const Probability& z) {
  if (z.is_exact()) return RationalString(z.exact());
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", z.value());
  return buf;
}

std::string InferTable(const BeliefState& bs, const std::string& rules) {
  const bool exact = bs.z.is_exact();
  std::vector<std::vector<std::string>> head = {
      {"mode", bs.mode.name()},
      {"rules", rules},
      {"lead", bs.lead->Code()},
      {"suit", std::string(1, SuitChar(bs.suit))},
      {"n", std::to_string(bs.hidden_count)},
      {"holdings", std::to_string(bs.holdings.size())},
      {"z", ZText(bs.z)},
  };
  if (!exact) head.push_back({"z_se", Fixed(bs.z.std_error(), 9)});
  if (bs.possession_only) head.push_back({"fallback", "possession-only"});

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"card", "p", exact ? "p_exact" : "se"});
  for (const MarginalRow& row : CardMarginals(bs)) {
    rows.push_back({Label(row), Fixed(row.p.value()),
                    exact ? RationalString(row.p.exact()) : Fixed(row.p.std_error())});
  }
  return Columns(head) + "\n" + Columns(rows);
}

Json ProbabilityJson(const Probability& p) {
  Json j;
  j["p"] = Rounded(p.value());
  if (p.is_exact()) {
    j["p_exact"] = RationalString(p.exact());
  } else {
    j["p_exact"] = nullptr;
    j["se"] = Rounded(p.std_error());
  }
  return j;
}

Json InferJson(const BeliefState& bs, const std::string& rules) {
  Json j;
  j["mode"] = bs.mode.name();
  j["rules"] = rules;
  j["lead"] = bs.lead->Code();
  j["suit"] = std::string(1, SuitChar(bs.suit));
  j["n"] = bs.hidden_count;
  j["holdings"] = bs.holdings.size();
  j["z"] = ZText(bs.z);
  if (!bs.z.is_exact()) j["z_se"] = bs.z.std_error();
  j["possession_only"] = bs.possession_only;
  j["marginals"] = Json::array();
  j["offsuit"] = nullptr;
  for (const MarginalRow& row : CardMarginals(bs)) {
    if (!row.card) {
      j["offsuit"] = ProbabilityJson(row.p);
      continue;
    }
    Json m;
    m["card"] = row.card->Code();
    m.update(ProbabilityJson(row.p));
    j["marginals"].push_back(std::move(m));
  }
  return j;
}

std::string RunInfer(const InferArgs& args) {
  const DealView dv = args.deal.Resolve();
  const Evidence ev{Card::FromCode(args.lead)};
  const LikelihoodMode mode = ResolveMode(args);
  const auto rules = MakeRules(args.rules);
  ValidateEvidence(dv, ev);
  const Suit s = ev.lead.suit();
  const HandVariablePrior prior =
      args.prior.empty() ? PriorDistribution(dv, s) : ParseExternalPrior(ReadFile(args.prior), dv, s);
  PosteriorOptions options;
  options.on_zero = args.on_zero == "possession-only" ? ZeroEvidencePolicy::kPossessionOnly
                                                      : ZeroEvidencePolicy::kError;
  options.threads = args.threads;
  const BeliefState bs = Posterior(dv, ev, *rules, prior, mode, options);
  if (args.format == "json") return InferJson(bs, rules->name()).dump(2) + "\n";
  return InferTable(bs, rules->name());
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  DealSource deal;
  std::string lead;
  std::string rules = "builtin";
  std::string format = "table";
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

// Rejection-sampled version of the oracle report.
std::string RunSampledOracle(const OracleArgs& args, const DealView& dv, const Evidence& ev,
                             const RuleSet& rules) {
  if (!args.samples || !args.seed) throw UsageError("sampling needs both --samples and --seed");
  if (*args.samples == 0) throw UsageError("--samples must be positive");
  const McReport report = McPosterior(dv, ev, rules, *args.samples, *args.seed, args.threads);
  if (args.format == "json") {
    Json j;
    j["rules"] = rules.name();
    j["lead"] = ev.lead.Code();
    j["samples"] = report.samples;
    j["accepted"] = report.accepted;
    j["cards"] = Json::array();
    for (auto it = report.hidden_cards.rbegin(); it != report.hidden_cards.rend(); ++it) {
      Json c;
      c["card"] = it->Code();
      c["p"] = Rounded(report.Estimate(*it));
      c["se"] = Rounded(report.StdError(*it));
      j["cards"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> head = {
      {"rules", rules.name()},
      {"lead", ev.lead.Code()},
      {"samples", std::to_string(report.samples)},
      {"accepted", std::to_string(report.accepted)},
  };
  std::vector<std::vector<std::string>> rows = {{"card", "p", "se"}};
  for (auto it = report.hidden_cards.rbegin(); it != report.hidden_cards.rend(); ++it) {
    rows.push_back({it->Code(), Fixed(report.Estimate(*it)), Fixed(report.StdError(*it))});
  }
  return Columns(head) + "\n" + Columns(rows);
}

std::string RunOracle(const OracleArgs& args) {
  const DealView dv = args.deal.Resolve();
  const Evidence ev{Card::FromCode(args.lead)};
  const auto rules = MakeRules(args.rules);
  if (args.samples || args.seed) return RunSampledOracle(args, dv, ev, *rules);
  const OracleReport report = OraclePosterior(dv, ev, *rules, args.threads);

  // Highest suit first, highest card first.
  std::vector<std::size_t> order(report.hidden_cards.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;

  if (args.format == "json") {
    Json j;
    j["rules"] = rules->name();
    j["lead"] = ev.lead.Code();
    j["consistent"] = report.consistent.str();
    j["total"] = report.total.str();
    j["cards"] = Json::array();
    for (std::size_t i : order) {
      const Rational p = report.Posterior(report.hidden_cards[i]);
      Json c;
      c["card"] = report.hidden_cards[i].Code();
      c["count"] = report.card_counts[i].str();
      c["p"] = Rounded(ToDouble(p));
      c["p_exact"] = RationalString(p);
      j["cards"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> head = {
      {"rules", rules->name()},
      {"lead", ev.lead.Code()},
      {"consistent", report.consistent.str()},
      {"total", report.total.str()},
  };
  std::vector<std::vector<std::string>> rows = {{"card", "count", "p", "p_exact"}};
  for (std::size_t i : order) {
    const Rational p = report.Posterior(report.hidden_cards[i]);
    rows.push_back({report.hidden_cards[i].Code(), report.card_counts[i].str(), Fixed(ToDouble(p)),
                    RationalString(p)});
  }
  return Columns(head) + "\n" + Columns(rows);
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::vector<int> n_values = {0, 5, 10};
  int reps = 3;
  std::vector<std::string> modes = {"within-suit", "full"};
  std::uint64_t samples = 10000;
  int threads = 1;
};

// A notrump deal with exactly n hidden spades, the n highest. The other
// hidden cards are the highest remaining ones, spread over the three suits.
DealView BenchDeal(int n) {
  Hand visible;
  for (int r = 0; r < kNumRanks - n; ++r) visible.Add(Card(Suit::kSpades, static_cast<Rank>(r)));
  for (int r = 0; visible.size() < 2 * kHandSize; ++r) {
    for (Suit s : {Suit::kClubs, Suit::kDiamonds, Suit::kHearts}) {
      if (visible.size() < 2 * kHandSize) visible.Add(Card(s, static_cast<Rank>(r)));
    }
  }
  const std::vector<Card> cards = visible.Cards();
  Hand declarer, dummy;
  for (std::size_t i = 0; i < cards.size(); ++i) (i % 2 == 0 ? declarer : dummy).Add(cards[i]);
  return DealView(declarer, dummy, Strain::kNoTrump);
}

template <typename Fn>
double MedianSeconds(int reps, Fn&& fn) {
  std::vector<double> times;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

std::string RunBench(const BenchArgs& args, bool* failed) {
  for (int n : args.n_values) {
    if (n < 0 || n > kNumRanks) throw UsageError("--n values must lie in 0..13");
  }
  const BuiltinRules rules;
  PosteriorOptions options;
  options.on_zero = ZeroEvidencePolicy::kPossessionOnly;
  options.threads = args.threads;

  std::vector<std::vector<std::string>> rows = {{"n", "mode", "holdings", "median_s", "status"}};
  for (int n : args.n_values) {
    const DealView dv = BenchDeal(n);
    const HandVariablePrior prior = PriorDistribution(dv, Suit::kSpades);
    if (n == 0) {
      std::size_t holdings = 0;
      const double t = MedianSeconds(args.reps, [&] { holdings = PriorBelief(prior).holdings.size(); });
      rows.push_back({"0", "prior-only", std::to_string(holdings), Fixed(t), "-"});
      continue;
    }
    const Evidence ev{WithinSuitSelect({Suit::kSpades, dv.HiddenRanks(Suit::kSpades)})};
    for (const std::string& name : args.modes) {
      const LikelihoodMode mode = name == "mc"     ? LikelihoodMode::MonteCarlo(args.samples, 1)
                                  : name == "full" ? LikelihoodMode::FullExact()
                                                   : LikelihoodMode::WithinSuit();
      std::size_t holdings = 0;
      const double t = MedianSeconds(args.reps, [&] {
        holdings = Posterior(dv, ev, rules, prior, mode, options).holdings.size();
      });
      std::string status = "-";
      if (name == "within-suit" && n == kBenchBoundN) {
        status = t < kBenchBoundSeconds ? "PASS" : "FAIL";
        if (t >= kBenchBoundSeconds) *failed = true;
      }
      rows.push_back({std::to_string(n), name, std::to_string(holdings), Fixed(t), status});
    }
  }
  return Columns(rows);
}

// ---------------------------------------------------------------------------
// rules, deal

std::string RunTrace(const std::string& hand_text, const std::string& strain_text) {
  const Hand hand = ParseHand(hand_text);
  if (hand.size() != kHandSize) {
    throw leadinf::ParseError("hand '" + hand_text + "' has " + std::to_string(hand.size()) +
                              " cards, expected 13");
  }
  const Strain strain = StrainFromString(strain_text);
  const Suit s = BuiltinRules().ChooseSuit(hand, strain);
  const WithinSuitTrace trace = TraceWithinSuit({s, hand.Ranks(s)});
  return Columns({{"rule", LeadRuleId(trace.rule)},
                  {"suit", std::string(1, SuitChar(s))},
                  {"card", trace.card.Code()}});
}

std::string RunCheck(const std::string& rules_name, bool* failed) {
  const auto rules = MakeRules(rules_name);
  const CompletenessReport report = CheckCompleteness(*rules);
  std::string out = std::to_string(report.failures.size()) + " failures / " +
                    std::to_string(report.holdings_checked) + " holdings\n";
  for (const CompletenessFailure& f : report.failures) {
    out += std::string(1, SuitChar(f.holding.suit)) + " " + FormatRanks(f.holding.ranks) + " -> " +
           (f.result ? f.result->Code() : "none") + "\n";
  }
  *failed = !report.complete();
  return out;
}

std::string RunDeal(std::uint64_t seed, int count) {
  std::string out;
  const std::vector<DealView> deals = SampleDeals(seed, count);
  for (std::size_t i = 0; i < deals.size(); ++i) {
    if (i > 0) out += "\n";
    out += FormatDealText(deals[i]);
  }
  return out;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Opening-lead inference for the declarer in bridge", "leadinf"};
  app.require_subcommand(1);

  InferArgs infer;
  CLI::App* infer_cmd = app.add_subcommand("infer", "Posterior of the leader's holding in the led suit");
  infer.deal.AddOptions(infer_cmd);
  infer_cmd->add_option("--lead", infer.lead, "Led card, e.g. SK")->required();
  infer_cmd->add_option("--mode", infer.mode, "Likelihood mode")
      ->check(CLI::IsMember({"within-suit", "full", "mc"}))
      ->capture_default_str();
  infer_cmd->add_option("--samples", infer.samples, "Monte Carlo completions per holding");
  infer_cmd->add_option("--seed", infer.seed, "Monte Carlo seed");
  infer_cmd->add_option("--prior", infer.prior, "Prior file: '<ranks> <weight>' per line");
  infer_cmd->add_option("--format", infer.format)
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  infer_cmd->add_option("--on-zero", infer.on_zero, "What to do when nothing explains the lead")
      ->check(CLI::IsMember({"error", "possession-only"}))
      ->capture_default_str();
  infer_cmd->add_option("--rules", infer.rules)->check(CLI::IsMember(kRuleNames))->capture_default_str();
  infer_cmd->add_option("--threads", infer.threads, "0 uses every hardware thread")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  OracleArgs oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive posterior over all leader hands");
  oracle.deal.AddOptions(oracle_cmd);
  oracle_cmd->add_option("--lead", oracle.lead, "Led card, e.g. SK")->required();
  oracle_cmd->add_option("--rules", oracle.rules)->check(CLI::IsMember(kRuleNames))->capture_default_str();
  oracle_cmd->add_option("--format", oracle.format)
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  oracle_cmd->add_option("--samples", oracle.samples, "Sample deals instead of enumerating");
  oracle_cmd->add_option("--seed", oracle.seed, "Sampling seed");
  oracle_cmd->add_option("--threads", oracle.threads, "0 uses every hardware thread")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time posterior computation by hidden suit length");
  bench_cmd->add_option("--n", bench.n_values, "Hidden card counts, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps)->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--modes", bench.modes)
      ->delimiter(',')
      ->check(CLI::IsMember({"within-suit", "full", "mc"}))
      ->capture_default_str();
  bench_cmd->add_option("--samples", bench.samples, "Monte Carlo completions per holding")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--threads", bench.threads)->check(CLI::NonNegativeNumber)->capture_default_str();

  CLI::App* rules_cmd = app.add_subcommand("rules", "Inspect the lead rules");
  rules_cmd->require_subcommand(1);
  std::string trace_hand, trace_strain;
  CLI::App* trace_cmd = rules_cmd->add_subcommand("trace", "Show which rule picks the lead of a hand");
  trace_cmd->add_option("hand", trace_hand, "13-card hand, e.g. AK72.853.QJ4.962")->required();
  trace_cmd->add_option("strain", trace_strain, "C, D, H, S or NT")->required();
  std::string check_rules = "builtin";
  CLI::App* check_cmd = rules_cmd->add_subcommand("check", "Check every holding has a member lead");
  check_cmd->add_option("--rules", check_rules)->check(CLI::IsMember(kRuleNames))->capture_default_str();

  std::uint64_t deal_seed = 0;
  int deal_count = 1;
  CLI::App* deal_cmd = app.add_subcommand("deal", "Print random deals as deal files");
  deal_cmd->add_option("--seed", deal_seed)->required();
  deal_cmd->add_option("--count", deal_count)->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  int status = kExitOk;
  try {
    std::string report;
    bool failed = false;
    if (infer_cmd->parsed()) {
      report = RunInfer(infer);
    } else if (oracle_cmd->parsed()) {
      report = RunOracle(oracle);
    } else if (bench_cmd->parsed()) {
      report = RunBench(bench, &failed);
      if (failed) status = kExitBenchFail;
    } else if (trace_cmd->parsed()) {
      report = RunTrace(trace_hand, trace_strain);
    } else if (check_cmd->parsed()) {
      report = RunCheck(check_rules, &failed);
      if (failed) status = kExitFailure;
    } else if (deal_cmd->parsed()) {
      report = RunDeal(deal_seed, deal_count);
    }
    out << report;
    return status;
  } catch (const UsageError& e) {
    err << "leadinf: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "leadinf: " << e.what() << "\n";
    return kExitFailure;
  } catch (const leadinf::ParseError& e) {
    err << "leadinf: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidDeal& e) {
    err << "leadinf: invalid deal: " << e.what() << "\n";
    return kExitParse;
  } catch (const InfeasibleEvidence& e) {
    err << "leadinf: infeasible evidence: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ZeroEvidence& e) {
    err << "leadinf: zero evidence: " << e.what() << "\n";
    return kExitZeroEvidence;
  } catch (const NoAcceptedSamples& e) {
    err << "leadinf: " << e.what() << "\n";
    return kExitNoSamples;
  } catch (const std::exception& e) {
    err << "leadinf: error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace cli
}  // namespace leadinf
