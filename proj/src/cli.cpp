#include "metagrowth/cli.hpp"

#include "metagrowth/growth.hpp"
#include "metagrowth/lie_core.hpp"
#include "metagrowth/metabelian.hpp"
#include "metagrowth/series.hpp"
#include "metagrowth/wreath.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace metagrowth::cli {

using nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ordered_json bigJson(const BigInt& v) {
  if (v.fits_ulong_p()) return ordered_json(static_cast<std::uint64_t>(v.get_ui()));
  return ordered_json(v.get_str());
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

void requireDims(const RunConfig& cfg) {
  if (cfg.d < 1) throw UsageError("--d must be at least 1");
  if (cfg.maxN < 1) throw UsageError("--max-n must be at least 1");
}

void requireFormat(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
}

growth::GrowthMode modeOf(const RunConfig& cfg) {
  try {
    return growth::parseGrowthMode(cfg.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// dims -------------------------------------------------------------------------

int cmdDims(const RunConfig& cfg, std::ostream& out) {
  requireDims(cfg);
  requireFormat(cfg);
  const DimSequence gamma = metabelian::growthOfM(cfg.d, cfg.maxN);
  if (cfg.format == "csv") {
    out << "n,dim,gamma\n";
    for (std::uint32_t n = 1; n <= cfg.maxN; ++n) {
      out << n << ',' << metabelian::dimOfDegree(cfg.d, n).get_str() << ',' << gamma.at(n).get_str() << '\n';
    }
    return kExitPass;
  }
  ordered_json rows = ordered_json::array();
  for (std::uint32_t n = 1; n <= cfg.maxN; ++n) {
    rows.push_back({{"n", n}, {"dim", bigJson(metabelian::dimOfDegree(cfg.d, n))}, {"gamma", bigJson(gamma.at(n))}});
  }
  out << ordered_json{{"d", cfg.d}, {"rows", rows}}.dump(2) << '\n';
  return kExitPass;
}

// growth -----------------------------------------------------------------------

int cmdGrowth(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  requireDims(cfg);
  requireFormat(cfg);
  const growth::GrowthMode mode = modeOf(cfg);
  const growth::GrowthReport report = growth::growthBFS(mode, cfg.d, cfg.maxN);
  const bool withBound = mode == growth::GrowthMode::Wplus;

  std::vector<std::uint32_t> overBound;
  ordered_json rows = ordered_json::array();
  if (cfg.format == "csv") out << (withBound ? "n,gamma,a_n,upper_bound\n" : "n,gamma,a_n\n");
  for (std::uint32_t n = 1; n <= cfg.maxN; ++n) {
    const BigInt& g = report.gamma.at(n);
    const BigInt& a = report.newDims.at(n);
    BigInt bound;
    if (withBound) {
      bound = growth::wplusUpperBound(cfg.d, n);
      if (g > bound) overBound.push_back(n);
    }
    if (cfg.format == "csv") {
      out << n << ',' << g.get_str() << ',' << a.get_str();
      if (withBound) out << ',' << bound.get_str();
      out << '\n';
    } else {
      ordered_json row{{"n", n}, {"gamma", bigJson(g)}, {"a_n", bigJson(a)}};
      if (withBound) row["upper_bound"] = bigJson(bound);
      rows.push_back(row);
    }
  }
  if (cfg.format == "json") {
    out << ordered_json{{"mode", growth::toString(mode)}, {"d", cfg.d}, {"rows", rows}}.dump(2) << '\n';
  }
  if (!overBound.empty()) {
    err << "gamma exceeds the upper bound 2d+d+sum d*C(s+d-1,d-1) at n =";
    for (std::uint32_t n : overBound) err << ' ' << n;
    err << '\n';
    return kExitVerificationFailure;
  }
  return kExitPass;
}

// euler-fit --------------------------------------------------------------------

std::vector<std::size_t> fitPoints(std::size_t fitN) {
  std::vector<std::size_t> pts;
  for (std::size_t shift = 4; shift-- > 0;) {
    const std::size_t n = fitN >> shift;
    if (n >= 1 && (pts.empty() || pts.back() != n)) pts.push_back(n);
  }
  return pts;
}

int cmdEulerFit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  requireDims(cfg);
  requireFormat(cfg);
  if (cfg.fitN < 1) throw UsageError("--fit-n must be at least 1");
  if (cfg.tolerance <= 0) throw UsageError("--tolerance must be positive");
  const std::size_t N = 2 * cfg.fitN;
  const growth::GrowthMode mode = modeOf(cfg);

  DimSequence a;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw UsageError("cannot open " + cfg.input);
    try {
      a = readSequenceCsv(in, SequenceKind::Graded);
    } catch (const std::invalid_argument& e) {
      throw UsageError(cfg.input + ": " + e.what());
    }
    if (a.size() < N) {
      throw UsageError(cfg.input + " has " + std::to_string(a.size()) + " terms; need " + std::to_string(N));
    }
  } else {
    const growth::GrowthReport bfs = growth::growthBFS(mode, cfg.d, cfg.maxN);
    const DimSequence exact = growth::exactGradedDims(mode, cfg.d, static_cast<std::uint32_t>(std::max<std::size_t>(N, cfg.maxN)));
    for (std::uint32_t n = 1; n <= cfg.maxN; ++n) {
      if (bfs.newDims.at(n) != exact.at(n)) {
        err << "closure and closed form disagree at n = " << n << ": " << bfs.newDims.at(n).get_str() << " vs "
            << exact.at(n).get_str() << '\n';
        return kExitVerificationFailure;
      }
    }
    a = exact;
    std::copy(bfs.newDims.values.begin(), bfs.newDims.values.end(), a.values.begin());
  }

  const series::SeriesCoeffs b = series::eulerTransform(a, N);
  if (!cfg.seriesOut.empty()) {
    std::ofstream s(cfg.seriesOut);
    if (!s) throw UsageError("cannot write " + cfg.seriesOut);
    s << "n,b_n\n";
    for (std::size_t n = 0; n <= N; ++n) s << n << ',' << b[n].get_str() << '\n';
  }

  series::ExponentFit fit;
  try {
    fit = series::fitStretchedExponent(b, fitPoints(cfg.fitN));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double target = cfg.target >= 0 ? cfg.target : static_cast<double>(cfg.d) / (cfg.d + 1);
  const bool pass = std::abs(fit.finalAlpha - target) <= cfg.tolerance;

  if (cfg.format == "csv") {
    out << "n,alpha_hat\n";
    for (const auto& p : fit.points) out << p.n << ',' << fixed(p.alphaHat) << '\n';
  } else {
    ordered_json pts = ordered_json::array();
    for (const auto& p : fit.points) pts.push_back({{"n", p.n}, {"alphaHat", p.alphaHat}});
    ordered_json report{{"method", fit.method},
                        {"source", cfg.input.empty() ? growth::toString(mode) : cfg.input},
                        {"d", cfg.d},
                        {"points", pts},
                        {"final", fit.finalAlpha},
                        {"target", target},
                        {"tolerance", cfg.tolerance},
                        {"intermediate", fit.intermediate},
                        {"pass", pass}};
    out << report.dump(2) << '\n';
  }
  err << "alpha_hat(" << fit.points.back().n << ") = " << fixed(fit.finalAlpha) << ", target " << fixed(target)
      << " +/- " << fixed(cfg.tolerance, 3) << ": " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitPass : kExitVerificationFailure;
}

// verify -----------------------------------------------------------------------

ordered_json checkJson(const wreath::CheckReport& r) {
  return {{"name", r.suite}, {"checked", r.checked}, {"failures", r.failures.size()}};
}

int cmdVerify(const RunConfig& cfg, std::ostream& out) {
  requireDims(cfg);
  std::size_t checked = 0;
  std::vector<std::string> failures;
  ordered_json bounds;
  ordered_json details = ordered_json::array();
  std::string modeName = "-";

  if (cfg.suite == "presentation" || cfg.suite == "model-laws") {
    const growth::GrowthMode gm = modeOf(cfg);
    if (gm == growth::GrowthMode::Metabelian) throw UsageError("--mode must be w or wplus for this suite");
    const wreath::Mode mode = gm == growth::GrowthMode::W ? wreath::Mode::W : wreath::Mode::Wplus;
    modeName = wreath::toString(mode);
    std::vector<wreath::CheckReport> reports;
    if (cfg.suite == "presentation") {
      const std::uint32_t d = cfg.d;
      if (mode == wreath::Mode::Wplus) {
        reports.push_back(wreath::checkPresentation(wreath::finitePresentationWplus(d, d, cfg.boundS), mode));
      }
      reports.push_back(wreath::checkPresentation(wreath::infinitePresentationW(d, d, cfg.boundS + 1), mode));
      reports.push_back(wreath::checkPresentation(
          wreath::permutationIdentities(d, d, std::min<std::uint32_t>(cfg.boundS, 4), mode), mode));
      reports.push_back(wreath::checkPresentation(wreath::splittingConsequences(d, d, cfg.boundS), mode));
      bounds = {{"m", d}, {"n", d}, {"s_max", cfg.boundS}, {"r_plus_s_max", cfg.boundS + 1}};
    } else {
      reports.push_back(wreath::modelLawsSuite(cfg.d, mode, cfg.seed, cfg.samples, cfg.boundS));
      bounds = {{"samples", cfg.samples}, {"max_letters", cfg.boundS}, {"seed", cfg.seed}};
    }
    for (const auto& r : reports) {
      checked += r.checked;
      failures.insert(failures.end(), r.failures.begin(), r.failures.end());
      details.push_back(checkJson(r));
    }
  } else if (cfg.suite == "lemma5") {
    if (cfg.d < 2) throw UsageError("the lemma5 suite needs --d >= 2");
    modeName = "Wplus";
    for (const auto& inst : {wreath::lemma5Base(cfg.d), wreath::lemma5InductionStep(cfg.d)}) {
      const wreath::Lemma5Report r = wreath::lemma5Suite(inst, cfg.maxN, cfg.maxN);
      checked += r.checked;
      for (const auto& h : r.failedHypotheses) failures.push_back(r.label + ": hypothesis " + h + " fails");
      for (const auto& f : r.failures) failures.push_back(r.label + ": " + f);
      details.push_back({{"name", r.label}, {"checked", r.checked}, {"failures", r.failures.size() + r.failedHypotheses.size()}});
    }
    bounds = {{"i_max", cfg.maxN}, {"j_max", cfg.maxN}};
  } else if (cfg.suite == "embedding") {
    modeName = "W";
    const wreath::EmbeddingReport r = wreath::certifyEmbedding(cfg.d, cfg.maxN, cfg.seed, cfg.samples);
    for (const auto& dr : r.degrees) {
      details.push_back({{"n", dr.n}, {"rank", dr.rank}, {"dim", bigJson(dr.dim)}});
    }
    checked = r.degrees.size() + r.homomorphismChecked;
    failures = r.failures;
    bounds = {{"n_max", cfg.maxN}, {"samples", cfg.samples}, {"seed", cfg.seed}};
  } else {
    throw UsageError("unknown suite '" + cfg.suite + "' (expected presentation, lemma5, embedding or model-laws)");
  }

  ordered_json report{{"suite", cfg.suite}, {"mode", modeName}, {"d", cfg.d}, {"bounds", bounds},
                      {"checked", checked}, {"failures", failures}, {"details", details}};
  out << report.dump(2) << '\n';
  return failures.empty() ? kExitPass : kExitVerificationFailure;
}

// normalize --------------------------------------------------------------------

int cmdNormalize(const RunConfig& cfg, std::ostream& out) {
  lie::LieExpr e = [&] {
    try {
      return lie::parseExpr(cfg.expression);
    } catch (const lie::ParseError& pe) {
      throw UsageError(pe.what());
    }
  }();
  std::uint32_t maxX = 0, maxA = 0, maxT = 0;
  bool hasX = false, hasWreath = false, hasU = false;
  const lie::FormalCombination ln = lie::leftNormalize(e);
  for (const auto& [w, c] : ln.terms()) {
    for (const lie::Generator& g : w.letters) {
      switch (g.cls) {
        case lie::GenClass::x: hasX = true; maxX = std::max(maxX, g.index + 1); break;
        case lie::GenClass::a: hasWreath = true; maxA = std::max(maxA, g.index + 1); break;
        case lie::GenClass::t: hasWreath = true; maxT = std::max(maxT, g.index + 1); break;
        case lie::GenClass::u: hasWreath = hasU = true; maxT = std::max(maxT, g.index + 1); break;
      }
    }
  }
  if (hasX && hasWreath) throw UsageError("expressions cannot mix x-generators with a/t/u generators");
  out << "expr: " << lie::toString(e) << '\n';
  out << "left-normed: " << lie::toString(ln) << '\n';
  if (hasX) {
    out << "metabelian: " << metabelian::toString(metabelian::normalizeExpr(e)) << '\n';
  } else {
    const std::uint32_t m = std::max<std::uint32_t>(maxA, 1);
    const std::uint32_t n = std::max<std::uint32_t>(maxT, 1);
    const wreath::Mode mode = hasU ? wreath::Mode::Wplus : wreath::Mode::W;
    out << "model (" << wreath::toString(mode) << "): " << wreath::toString(wreath::evaluateInModel(e, m, n, mode))
        << '\n';
  }
  return kExitPass;
}

}  // namespace

DimSequence readSequenceCsv(std::istream& in, SequenceKind kind) {
  DimSequence seq{kind, {}};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty input");
  if (line.rfind("n,", 0) != 0) throw std::invalid_argument("expected a header starting with 'n,'");
  std::size_t expected = 1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("malformed row '" + line + "'");
    const std::string nStr = line.substr(0, comma);
    const std::string vStr = line.substr(comma + 1);
    if (nStr != std::to_string(expected)) {
      throw std::invalid_argument("expected n = " + std::to_string(expected) + ", got '" + nStr + "'");
    }
    BigInt v;
    if (vStr.empty() || v.set_str(vStr, 10) != 0) throw std::invalid_argument("bad integer '" + vStr + "'");
    if (v < 0) throw std::invalid_argument("negative value at n = " + nStr);
    seq.values.push_back(v);
    ++expected;
  }
  return seq;
}

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact growth computations for metabelian Lie algebras and their enveloping algebras", "metagrowth"};
  app.require_subcommand(1);

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "number of generators d")->capture_default_str();
    sub->add_option("--max-n", cfg.maxN, "largest length n")->capture_default_str();
    sub->add_option("--format", cfg.format, "csv or json")->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report to this file");
  };

  CLI::App* dims = app.add_subcommand("dims", "graded dimensions and growth of the free metabelian algebra");
  common(dims);

  CLI::App* growthCmd = app.add_subcommand("growth", "growth function by exact closure");
  common(growthCmd);
  growthCmd->add_option("--mode", cfg.mode, "metabelian, w or wplus")->capture_default_str();

  CLI::App* euler = app.add_subcommand("euler-fit", "Euler transform and growth exponent of the enveloping algebra");
  common(euler);
  euler->add_option("--mode", cfg.mode, "metabelian, w or wplus")->capture_default_str();
  euler->add_option("--fit-n", cfg.fitN, "final evaluation point n (uses b_2n)")->capture_default_str();
  euler->add_option("--tolerance", cfg.tolerance, "allowed |alpha_hat - target|")->capture_default_str();
  euler->add_option("--target", cfg.target, "target exponent (default d/(d+1))");
  euler->add_option("--input", cfg.input, "CSV n,a_n to use instead of the closure");
  euler->add_option("--series-out", cfg.seriesOut, "write n,b_n CSV here");

  CLI::App* verify = app.add_subcommand("verify", "relation, lemma and embedding checks in the model");
  common(verify);
  verify->add_option("--suite", cfg.suite, "presentation, lemma5, embedding or model-laws")->capture_default_str();
  verify->add_option("--mode", cfg.mode, "w or wplus")->capture_default_str();
  verify->add_option("--bound-s", cfg.boundS, "family instantiation bound")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "random samples")->capture_default_str();

  CLI::App* normalize = app.add_subcommand("normalize", "expand an expression and reduce it to normal form");
  normalize->add_option("expr", cfg.expression, "expression such as [x1,[x2,x3]]")->required();
  normalize->add_option("--out", cfg.out, "write the result to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw UsageError("cannot write " + cfg.out);
      sink = &file;
    }
    if (dims->parsed()) return cmdDims(cfg, *sink);
    if (growthCmd->parsed()) return cmdGrowth(cfg, *sink, err);
    if (euler->parsed()) return cmdEulerFit(cfg, *sink, err);
    if (verify->parsed()) return cmdVerify(cfg, *sink);
    if (normalize->parsed()) return cmdNormalize(cfg, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace metagrowth::cli
