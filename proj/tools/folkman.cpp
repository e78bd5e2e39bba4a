// Command-line front end.  Every run writes one JSON report (stdout or
// --out) and one run manifest (--manifest, <out>.manifest.json, or a single
// line on stderr).
//
// Exit codes: 0 verdict produced / positive, 1 negative verdict,
// 2 usage or input error, 3 indeterminate or budget exhausted.

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "folkman/arrowing.hpp"
#include "folkman/bounds.hpp"
#include "folkman/dense.hpp"
#include "folkman/experiments.hpp"
#include "folkman/graph_io.hpp"
#include "folkman/hypergraph.hpp"
#include "folkman/report.hpp"

#ifndef FOLKMAN_VERSION
#define FOLKMAN_VERSION "0.0.0"
#endif

namespace {

using namespace folkman;

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kIndeterminate = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// graph6 for .g6/.graph6 files and for anything not starting with a digit
/// or '#'; otherwise an edge list.
Graph parse_graph(const std::string& path, const std::string& text) {
  const auto ext = std::filesystem::path(path).extension().string();
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  const bool edge_list =
      ext != ".g6" && ext != ".graph6" && !body.empty() && (std::isdigit(static_cast<unsigned char>(body.front())) || body.front() == '#');
  if (edge_list) return from_edge_list(body);
  const auto nl = body.find('\n');
  return from_graph6(body.substr(0, nl));
}

/// Removes wall-clock fields so reports can be compared across runs.
Json strip_timing(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "wall_ms" || it.key() == "runtime_ms") continue;
      out[it.key()] = strip_timing(it.value());
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& e : j) out.push_back(strip_timing(e));
    return out;
  }
  return j;
}

std::uint64_t env_budget() {
  const char* v = std::getenv("FOLKMAN_BUDGET");
  if (!v || !*v) return 0;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw UsageError("FOLKMAN_BUDGET must be a nonnegative integer");
  }
}

int arrow_exit(ArrowVerdict v) {
  switch (v) {
    case ArrowVerdict::Arrows: return kOk;
    case ArrowVerdict::NonArrowing: return kNegative;
    case ArrowVerdict::Indeterminate: return kIndeterminate;
  }
  return kIndeterminate;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::CertifiedTrue: return kOk;
    case Verdict::CertifiedFalse: return kNegative;
    case Verdict::Indeterminate: return kIndeterminate;
  }
  return kIndeterminate;
}

/// Lower bounds on two-colour diagonal Ramsey numbers used to seed the
/// product construction.
RamseyBaseValues default_base(std::uint64_t k) {
  switch (k) {
    case 3: return {{2, 6}, {3, 17}};
    case 4: return {{2, 18}};
    case 5: return {{2, 43}};
    case 6: return {{2, 102}};
    default: return {};
  }
}

LogInterval parse_R(const std::string& spec, std::uint64_t k, std::uint64_t r, const std::vector<std::string>& base) {
  if (spec == "skolem") return ramsey_upper_skolem(k, r);
  if (spec == "product") {
    RamseyBaseValues values = default_base(k);
    for (const auto& b : base) {
      const auto colon = b.find(':');
      if (colon == std::string::npos) throw UsageError("--base expects s:value");
      values[static_cast<unsigned>(std::stoul(b.substr(0, colon)))] = std::stoull(b.substr(colon + 1));
    }
    return ramsey_lower_product(k, static_cast<unsigned>(r), values);
  }
  if (spec.rfind("value:", 0) == 0) {
    try {
      return LogInterval::from_integer(std::stoull(spec.substr(6)));
    } catch (const std::exception&) {
      throw UsageError("--R value:N needs an integer N");
    }
  }
  throw UsageError("--R must be skolem, product or value:N");
}

struct Outcome {
  Json report;
  std::string text;  // plain-text output instead of JSON (sample)
  int exit_code = kOk;
  std::optional<std::uint64_t> seed;
};

struct Context {
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest

  std::string load(const std::string& path) {
    auto text = read_file(path);
    inputs.emplace_back(path, sha256_hex(text));
    return text;
  }
  Graph graph(const std::string& path) { return parse_graph(path, load(path)); }
};

Json option_map(const CLI::App* sub) {
  Json params = Json::object();
  for (const auto* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    const auto& res = opt->results();
    std::string key = opt->get_name();
    if (res.size() == 1) {
      params[key] = res[0];
    } else {
      params[key] = res;
    }
  }
  return params;
}

int replay(const std::string& manifest_path, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Folkman-number toolkit: arrowing, Folkman certificates, bound chains and experiments", "folkman"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FOLKMAN_VERSION);
  std::string out_path;
  std::string manifest_path;
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--manifest", manifest_path, "Write the run manifest here (default <out>.manifest.json or stderr)");
  app.fallthrough();

  // arrow
  std::string graph_path;
  std::size_t k = 3;
  unsigned r = 2;
  std::size_t l = 0;
  std::string mode = "det";
  std::uint64_t budget = 0;
  double time_ms = 0;
  unsigned threads = 0;
  auto* arrow = app.add_subcommand("arrow", "Decide G -> (K_k)_r");
  auto* folk = app.add_subcommand("folkman", "Certify G -> (K_k)_r and K_l-freeness");
  for (auto* sub : {arrow, folk}) {
    sub->add_option("--graph", graph_path, "Host graph (graph6 or edge list)")->required();
    sub->add_option("-k,--k", k, "Clique size")->capture_default_str();
    sub->add_option("-r,--r", r, "Number of colours")->capture_default_str();
    sub->add_option("--mode", mode, "det or par")->check(CLI::IsMember({"det", "par"}))->capture_default_str();
    sub->add_option("--budget", budget, "Search node budget (0: FOLKMAN_BUDGET or unlimited)");
    sub->add_option("--time-ms", time_ms, "Wall-clock budget in milliseconds");
    sub->add_option("--threads", threads, "Worker threads for --mode par");
  }
  folk->add_option("-l,--l", l, "Forbidden clique size")->required();

  // bounds
  std::uint64_t bk = 3;
  std::uint64_t br = 2;
  std::string R_spec = "skolem";
  std::vector<std::string> base;
  std::optional<double> log2n;
  bool grid = false;
  auto* bounds = app.add_subcommand("bounds", "Certify the inequality chain at given parameters");
  bounds->add_option("--k", bk, "Clique size")->capture_default_str();
  bounds->add_option("--r", br, "Number of colours")->capture_default_str();
  bounds->add_option("--R", R_spec, "skolem, product or value:N")->capture_default_str();
  bounds->add_option("--base", base, "Base values s:R(k;s) for --R product");
  bounds->add_option("--log2n", log2n, "Evaluate at n = 2^X instead of the threshold order");
  bounds->add_flag("--grid", grid, "Every (k,r) in {3..6}x{2..4}");

  // codegree
  std::uint64_t cn = 6;
  std::uint64_t ck = 3;
  std::string tau_text = "0.5";
  bool closed = false;
  bool exact_flag = false;
  bool dropped = false;
  auto* codeg = app.add_subcommand("codegree", "Co-degree function of H(n,k) against delta(n,k,tau)");
  codeg->add_option("--n", cn, "Order of K_n")->capture_default_str();
  codeg->add_option("--k", ck, "Clique size")->capture_default_str();
  codeg->add_option("--tau", tau_text, "tau > 0")->capture_default_str();
  auto* ex = codeg->add_flag("--exact", exact_flag, "Materialise H(n,k) (n <= 12)");
  codeg->add_flag("--closed-form", closed, "Closed-form co-degrees, any n")->excludes(ex);
  codeg->add_flag("--drop-powers", dropped, "Omit the 2^binom(j-1,2) divisor");

  // dichotomy
  std::uint64_t dn = 6;
  std::uint64_t dk = 3;
  unsigned dr = 2;
  std::uint64_t dR = 6;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  auto* dich = app.add_subcommand("dichotomy", "Check the counting dichotomy on (r+1)-colourings of K_n");
  dich->add_option("--n", dn)->capture_default_str();
  dich->add_option("--k", dk)->capture_default_str();
  dich->add_option("--r", dr)->capture_default_str();
  dich->add_option("--R", dR)->capture_default_str();
  auto* exo = dich->add_flag("--exhaustive", exhaustive, "All colourings (at most 3^15)");
  dich->add_option("--samples", samples, "Random colourings")->excludes(exo);
  dich->add_option("--seed", seed)->capture_default_str();
  dich->add_option("--threads", threads, "Worker threads for --exhaustive");

  // canonical
  std::string coloring_path;
  std::size_t ell = 4;
  std::string d_text = "0.9";
  auto* canon = app.add_subcommand("canonical", "Greedy canonical sequence in a 2-coloured graph");
  canon->add_option("--graph", graph_path)->required();
  canon->add_option("--coloring", coloring_path, "JSON colour list in canonical edge order")->required();
  canon->add_option("--ell", ell)->capture_default_str();
  canon->add_option("--d", d_text, "Degree fraction, decimal or p/q")->capture_default_str();

  // sample
  std::size_t sn = 10;
  double sp = 0.5;
  std::uint64_t count = 1;
  auto* samp = app.add_subcommand("sample", "Sample G(n,p) graphs as graph6 lines");
  samp->add_option("--n", sn)->capture_default_str();
  samp->add_option("--p", sp)->capture_default_str();
  samp->add_option("--seed", seed)->capture_default_str();
  samp->add_option("--count", count, "Graph i uses seed + i")->capture_default_str();

  // experiment
  std::string exp_name;
  auto* expt = app.add_subcommand("experiment", "Run a named acceptance experiment");
  expt->add_option("name", exp_name)->required()->check(CLI::IsMember(experiment_names()));
  expt->add_option("--seed", seed)->capture_default_str();

  // verify / replay
  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Re-check the witnesses in a certificate without searching");
  verify->add_option("certificate", cert_path)->required();
  std::string replay_path;
  auto* rep = app.add_subcommand("replay", "Re-run a manifest and compare reports");
  rep->add_option("manifest", replay_path)->required();

  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << FOLKMAN_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "folkman: " << e.what() << '\n';
    return kUsage;
  }

  if (rep->parsed()) return replay(replay_path, out, err);

  Context ctx;
  Outcome res;
  CLI::App* sub = app.get_subcommands().front();
  try {
    if (arrow->parsed() || folk->parsed()) {
      const Graph g = ctx.graph(graph_path);
      ArrowOptions opts;
      opts.mode = mode == "par" ? SearchMode::Parallel : SearchMode::Deterministic;
      opts.node_budget = budget ? budget : env_budget();
      opts.time_budget_ms = time_ms;
      opts.threads = threads;
      if (arrow->parsed()) {
        const auto cert = arrows(g, k, r, opts);
        res.report = to_json(g, cert);
        res.exit_code = arrow_exit(cert.verdict);
      } else {
        const auto b = is_folkman(g, k, r, l, opts);
        res.report = to_json(g, b);
        res.exit_code = b.verdict == FolkmanVerdict::Folkman      ? kOk
                        : b.verdict == FolkmanVerdict::NotFolkman ? kNegative
                                                                  : kIndeterminate;
      }
    } else if (bounds->parsed()) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
      if (grid) {
        for (std::uint64_t a = 3; a <= 6; ++a) {
          for (std::uint64_t b = 2; b <= 4; ++b) cells.emplace_back(a, b);
        }
      } else {
        cells.emplace_back(bk, br);
      }
      Json reports = Json::array();
      Verdict all = Verdict::CertifiedTrue;
      for (auto [a, b] : cells) {
        const auto R = parse_R(R_spec, a, b, base);
        std::optional<LogInterval> n;
        if (log2n) n = LogInterval::exp2(static_cast<real>(*log2n));
        const auto chain = check_chain(derive_params(a, b, R, n));
        all = verdict_and(all, chain.overall());
        reports.push_back(to_json(chain));
      }
      res.report = grid ? Json{{"type", "chain-grid"}, {"R", R_spec}, {"overall", to_string(all)}, {"cells", reports}}
                        : reports[0];
      res.exit_code = verdict_exit(all);
    } else if (codeg->parsed()) {
      real tau = 0;
      try {
        tau = std::stold(tau_text);
      } catch (const std::exception&) {
        throw UsageError("--tau must be a number");
      }
      if (!(tau > 0)) throw UsageError("--tau must be positive");
      const auto form = dropped ? CodegreeForm::DroppedPowers : CodegreeForm::Exact;
      const bool materialise = exact_flag || (!closed && cn <= CliqueHypergraph::kMaxOrder);
      const auto t = LogInterval::from_value(tau);
      LogInterval delta_h;
      if (materialise) {
        delta_h = codegree_function(build_clique_hypergraph(cn, ck).hypergraph(), t, form);
      } else {
        delta_h = codegree_clique_closed_form(cn, ck, t, form);
      }
      const auto delta_n = delta_nk(LogInterval::from_integer(cn), ck, t);
      const auto v = certify_le(delta_h, delta_n);
      res.report = {{"type", "codegree"},
                    {"n", cn},
                    {"k", ck},
                    {"tau", tau_text},
                    {"method", materialise ? "exact" : "closed-form"},
                    {"form", dropped ? "dropped-powers" : "exact"},
                    {"delta_H_log2", to_json(delta_h)},
                    {"delta_nk_log2", to_json(delta_n)},
                    {"verdict", to_string(v)}};
      res.exit_code = verdict_exit(v);
    } else if (dich->parsed()) {
      DichotomySurvey s;
      if (samples > 0) {
        s = dichotomy_sampled(dn, dk, dr, dR, samples, seed);
        res.seed = seed;
      } else {
        s = dichotomy_exhaustive(dn, dk, dr, dR, threads);
      }
      res.report = {{"type", "dichotomy"}, {"n", dn}, {"k", dk}, {"r", dr}, {"R", dR}};
      if (samples > 0) res.report["seed"] = seed;
      res.report["survey"] = to_json(s);
      res.exit_code = s.neither == 0 ? kOk : kNegative;
    } else if (canon->parsed()) {
      const Graph g = ctx.graph(graph_path);
      EdgeColoring c = coloring_from_json(Json::parse(ctx.load(coloring_path)));
      const Fraction d = Fraction::parse(d_text);
      const auto o = canonical_sequence(g, c, ell, d);
      res.report = {{"type", "canonical"}, {"ell", ell}, {"d", d.str()}};
      Json levels = Json::array();
      for (const auto& lv : o.levels) {
        levels.push_back({{"level", lv.level}, {"set_size", lv.set_size}, {"vertex", lv.vertex},
                          {"degree", lv.degree}, {"majority", lv.majority}});
      }
      res.report["levels"] = levels;
      if (o.sequence) {
        res.report["sequence"] = to_json(*o.sequence);
        if (ell % 2 == 0 && ell >= 4) {
          const std::size_t kk = (ell + 2) / 2;
          const auto mono = mono_clique_from_canonical(g, c, *o.sequence, kk);
          res.report["mono_clique"] = {{"k", kk}, {"color", mono.color}, {"vertices", to_json(mono.vertices)},
                                       {"verified", is_clique(color_class(g, c, mono.color), mono.vertices)}};
        }
        res.exit_code = kOk;
      } else {
        res.report["sequence"] = nullptr;
        res.report["failure"] = o.failure;
        res.report["failed_level"] = *o.failed_level;
        res.exit_code = kNegative;
      }
    } else if (samp->parsed()) {
      std::ostringstream os;
      for (std::uint64_t i = 0; i < count; ++i) os << to_graph6(sample_gnp(sn, sp, seed + i)) << '\n';
      res.text = os.str();
      res.seed = seed;
    } else if (expt->parsed()) {
      const auto e = experiment_registry().at(exp_name)(seed);
      res.report = to_json(e);
      res.seed = seed;
      res.exit_code = e.pass() ? kOk : kNegative;
    } else if (verify->parsed()) {
      const auto j = Json::parse(ctx.load(cert_path));
      const auto v = verify_certificate(j);
      res.report = {{"type", "verification"}, {"certificate", cert_path}, {"ok", v.ok},
                    {"search_claim_unchecked", v.search_claim_unchecked}, {"message", v.message}};
      res.exit_code = v.ok ? kOk : kNegative;
    }
  } catch (const UsageError& e) {
    err << "folkman: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "folkman: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const FormatError& e) {
    err << "folkman: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    err << "folkman: malformed JSON input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "folkman: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "folkman: " << e.what() << '\n';
    return kIndeterminate;
  }

  const std::string payload = res.text.empty() ? res.report.dump(2) + "\n" : res.text;
  if (out_path.empty()) {
    out << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "folkman: cannot write " << out_path << '\n';
      return kUsage;
    }
    f << payload;
  }

  Json manifest;
  manifest["subcommand"] = sub->get_name();
  manifest["params"] = option_map(sub);
  manifest["seed"] = res.seed ? Json(*res.seed) : Json(nullptr);
  manifest["tool_version"] = FOLKMAN_VERSION;
  Json inputs = Json::array();
  for (const auto& [path, digest] : ctx.inputs) inputs.push_back({{"path", path}, {"sha256", digest}});
  manifest["inputs"] = inputs;
  manifest["outputs"] = out_path.empty() ? Json::array() : Json::array({out_path});
  manifest["argv"] = argv;
  manifest["exit_code"] = res.exit_code;
  manifest["report_sha256"] =
      sha256_hex(res.text.empty() ? strip_timing(res.report).dump() : res.text);
  if (manifest_path.empty() && !out_path.empty()) manifest_path = out_path + ".manifest.json";
  if (manifest_path.empty()) {
    err << manifest.dump() << '\n';
  } else {
    std::ofstream f(manifest_path, std::ios::binary);
    if (!f) {
      err << "folkman: cannot write " << manifest_path << '\n';
      return kUsage;
    }
    f << manifest.dump(2) << '\n';
  }
  return res.exit_code;
}

/// Re-runs the recorded argv with outputs sent to scratch files and compares
/// input digests, exit code and timing-free report digest.
int replay(const std::string& manifest_path, std::ostream& out, std::ostream& err) {
  Json m;
  try {
    m = Json::parse(read_file(manifest_path));
  } catch (const std::exception& e) {
    err << "folkman: " << e.what() << '\n';
    return kUsage;
  }
  Json report = {{"type", "replay"}, {"manifest", manifest_path}};
  for (const auto& in : m.at("inputs")) {
    const auto path = in.at("path").get<std::string>();
    std::string now;
    try {
      now = sha256_hex(read_file(path));
    } catch (const UsageError&) {
      now = "missing";
    }
    if (now != in.at("sha256").get<std::string>()) {
      report["identical"] = false;
      report["reason"] = "input " + path + " changed";
      out << report.dump(2) << '\n';
      return kNegative;
    }
  }
  std::vector<std::string> argv;
  const auto recorded = m.at("argv").get<std::vector<std::string>>();
  for (std::size_t i = 0; i < recorded.size(); ++i) {
    if (recorded[i] == "--out" || recorded[i] == "--manifest") {
      ++i;
      continue;
    }
    if (recorded[i].rfind("--out=", 0) == 0 || recorded[i].rfind("--manifest=", 0) == 0) continue;
    argv.push_back(recorded[i]);
  }
  const auto scratch = std::filesystem::temp_directory_path() /
                       ("folkman-replay-" + std::to_string(std::hash<std::string>{}(manifest_path)) + "-" +
                        std::to_string(::getpid()));
  std::filesystem::create_directories(scratch);
  const auto out_file = (scratch / "report").string();
  const auto man_file = (scratch / "manifest.json").string();
  argv.insert(argv.end(), {"--out", out_file, "--manifest", man_file});
  std::ostringstream sink_out;
  std::ostringstream sink_err;
  const int code = run(argv, sink_out, sink_err);
  Json fresh;
  try {
    fresh = Json::parse(read_file(man_file));
  } catch (const std::exception&) {
    std::filesystem::remove_all(scratch);
    err << "folkman: replay produced no manifest: " << sink_err.str();
    return kUsage;
  }
  std::filesystem::remove_all(scratch);
  const bool same_code = code == m.at("exit_code").get<int>();
  const bool same_report = fresh.at("report_sha256") == m.at("report_sha256");
  report["identical"] = same_code && same_report;
  report["exit_code"] = code;
  report["report_sha256"] = fresh.at("report_sha256");
  out << report.dump(2) << '\n';
  return same_code && same_report ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}
