// ohtsuki: command-line front end for the knot invariants, surgery
// formulas and the cyclotomic checks.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 bad input,
// 3 resource or precision limit, 4 file I/O.

#include "ohtsuki/corpus.hpp"
#include "ohtsuki/fermat.hpp"
#include "ohtsuki/h_function.hpp"
#include "ohtsuki/skein.hpp"
#include "ohtsuki/surgery.hpp"
#include "ohtsuki/sweep.hpp"
#include "ohtsuki/tau.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#ifndef OHTSUKI_DATA_DIR
#define OHTSUKI_DATA_DIR "data"
#endif

using namespace ohtsuki;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kVerdict = 1, kInput = 2, kResource = 3, kIo = 4 };

struct Options {
  int order = -1;
  int precision_m = 0;
  std::string primes = "5,7,11,13";
  int max_crossings = 400;
  int max_cable = 4;
  std::string cache;
  std::string format = "text";
  std::string corpus = std::string(OHTSUKI_DATA_DIR) + "/knots.txt";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  // per-command
  std::string diagram;
  std::string entry;
  std::int64_t n = 0;
  bool n_given = false;
  std::string framings;
  int framing = 1;
  int max_order = 2;
  std::string ns = "-2,-1,1,2";
  int l = 1;
  int i = 0;
  int f = 1;
  int prime = 0;
  int max_prime = 199;
  bool full_window = false;
};

std::string g_command_line;

std::string quote(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t'\"\\$") == std::string::npos) return arg;
  std::string out = "'";
  for (char c : arg) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = detail::trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "' in list '" + text + "'");
    }
    if (used != item.size()) throw ParseError("bad integer '" + item + "' in list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_primes(const std::string& text) {
  auto ps = parse_int_list(text);
  if (ps.empty()) throw ParseError("empty prime list");
  for (int p : ps)
    if (p < 3 || !is_prime(p)) throw ParseError("not an odd prime: " + std::to_string(p));
  return ps;
}

std::string cache_path(const Options& o) {
  if (const char* dir = std::getenv("OHTSUKI_CACHE_DIR"); dir && *dir)
    return (std::filesystem::path(dir) / "ohtsuki-cache.tsv").string();
  return o.cache;
}

json config_json(const Options& o) {
  return json{{"order", o.order},
              {"precision_m", o.precision_m},
              {"primes", o.primes},
              {"max_crossings", o.max_crossings},
              {"max_cable", o.max_cable},
              {"cache", cache_path(o)},
              {"format", o.format},
              {"corpus", o.corpus},
              {"jobs", o.jobs}};
}

/// Text reports start with '#' lines recording the command and config.
void print_header(const Options& o) {
  if (o.format == "json") return;
  std::cout << "# command: " << g_command_line << "\n# config:";
  const json config = config_json(o);
  for (const auto& [k, v] : config.items()) std::cout << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  std::cout << "\n";
}

void emit_json(const Options& o, const std::string& kind, json result, bool pass) {
  json out{{"command", g_command_line}, {"config", config_json(o)}, {"kind", kind}, {"pass", pass}, {"result", std::move(result)}};
  std::cout << out.dump(2) << "\n";
}

std::string str(const Rational& q) { return to_string(q); }

struct Subject {
  std::string name;
  LinkDiagram diagram;
  std::vector<int> framings;
};

Subject resolve(const Options& o) {
  if (!o.entry.empty()) {
    auto corpus = load_corpus(o.corpus);
    const auto& e = find_entry(corpus, o.entry);
    return {e.name, e.diagram(), e.framings};
  }
  if (o.diagram.empty()) throw ParseError("give a diagram (braid:... or a PD code) or --entry NAME");
  return {o.diagram, parse_diagram(o.diagram), {}};
}

SkeinConfig skein_config(const Options& o, InvariantCache* cache) {
  SkeinConfig cfg;
  cfg.bracket.max_crossings = o.max_crossings;
  cfg.cache = cache;
  return cfg;
}

json checks_json(const std::vector<CoefficientCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"prime", c.prime}, {"n", c.n}, {"computed", c.computed}, {"expected", c.expected},
                   {"pass", c.pass}, {"skipped", c.skipped}});
  return arr;
}

void print_checks(const std::vector<CoefficientCheck>& checks) {
  std::cout << "prime  n  computed  expected  verdict\n";
  for (const auto& c : checks) {
    std::cout << std::setw(5) << c.prime << std::setw(3) << c.n << std::setw(10) << c.computed
              << std::setw(10) << (c.skipped ? std::string("-") : std::to_string(c.expected)) << "  "
              << (c.skipped ? "skip" : c.pass ? "pass" : "FAIL") << "\n";
  }
}

int report_checks(const Options& o, const std::string& kind, const std::vector<CoefficientCheck>& checks,
                  json extra = json::object()) {
  const bool pass = all_pass(checks);
  if (o.format == "json") {
    extra["checks"] = checks_json(checks);
    emit_json(o, kind, extra, pass);
  } else {
    print_header(o);
    for (const auto& [k, v] : extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    print_checks(checks);
    std::cout << (pass ? "all checks pass" : "CHECK FAILED") << "\n";
  }
  return pass ? kOk : kVerdict;
}

int cmd_jones(const Options& o, InvariantCache* cache) {
  auto s = resolve(o);
  auto cfg = skein_config(o, cache);
  if (s.diagram.is_empty()) throw ParseError("the empty link has no Jones polynomial (X(empty) = 1)");
  const HalfLaurent v = jones(s.diagram, cfg);
  if (o.format == "json") {
    json terms = json::array();
    for (const auto& [e, c] : v.terms()) terms.push_back({{"twice_exponent", e}, {"coefficient", c.str()}});
    emit_json(o, "jones", {{"diagram", s.name}, {"polynomial", format_half_laurent(v)}, {"terms", terms}}, true);
  } else {
    print_header(o);
    std::cout << format_half_laurent(v) << "\n";
  }
  return kOk;
}

int cmd_conway(const Options& o, InvariantCache* cache) {
  auto s = resolve(o);
  const PolyZ c = conway(s.diagram, skein_config(o, cache));
  if (o.format == "json") {
    json coeffs = json::array();
    for (const auto& v : c.coeffs()) coeffs.push_back(v.str());
    emit_json(o, "conway", {{"diagram", s.name}, {"polynomial", c.to_string()}, {"coefficients", coeffs}}, true);
  } else {
    print_header(o);
    std::cout << c.to_string() << "\n";
  }
  return kOk;
}

int cmd_phi(const Options& o, InvariantCache* cache) {
  auto s = resolve(o);
  const int mu = s.diagram.component_count();
  const int order = o.order >= 0 ? o.order : mu + 4;
  const PhiValue p = phi(s.diagram, order, skein_config(o, cache));
  const auto vo = vanishing_order(p);
  json derivs = json::array(), smalls = json::array();
  for (int i = 0; i <= order; ++i) derivs.push_back(str(phi_i(p, i)));
  for (int i = 1; mu + i <= order; ++i) smalls.push_back(str(phi_small(p, mu, i)));
  json result{{"diagram", s.name},
              {"numerator", format_half_laurent(p.exact.numerator)},
              {"denominator_exponent", p.exact.denom_exponent},
              {"series", p.series.to_string()},
              {"vanishing_order", vo ? json(*vo) : json(nullptr)},
              {"Phi_i", derivs},
              {"phi_i", smalls}};
  if (o.format == "json") {
    emit_json(o, "phi", result, true);
  } else {
    print_header(o);
    std::cout << "Phi = (" << format_half_laurent(p.exact.numerator) << ") / (t^(1/2) + t^(-1/2))^"
              << p.exact.denom_exponent << "\n";
    std::cout << "series: " << p.series.to_string() << "\n";
    std::cout << "vanishing order: " << (vo ? std::to_string(*vo) : ">= " + std::to_string(order + 1)) << "\n";
    for (int i = 0; i <= order; ++i) std::cout << "Phi_" << i << " = " << str(phi_i(p, i)) << "\n";
    for (int i = 1; mu + i <= order; ++i) std::cout << "phi_" << i << " = " << str(phi_small(p, mu, i)) << "\n";
  }
  return kOk;
}

int cmd_lambda(const Options& o, InvariantCache* cache) {
  auto s = resolve(o);
  auto cfg = skein_config(o, cache);
  LambdaVector v;
  json extra{{"diagram", s.name}};
  std::optional<Rational> casson_expected;
  std::vector<int> framings = o.framings.empty() ? s.framings : parse_int_list(o.framings);
  if (o.n_given) {
    if (!s.diagram.is_knot()) throw ParseError("--n needs a knot");
    v = {lambda1_knot(s.diagram, o.n, cfg), lambda2_knot(s.diagram, o.n, cfg), std::nullopt, "knot surgery formulas"};
    casson_expected = Rational(o.n) * Rational(conway_coefficient(s.diagram, 2, cfg));
    extra["n"] = o.n;
  } else {
    if (framings.empty()) throw ParseError("give --n N for a knot or --framings for a link");
    if (o.max_order > o.max_cable)
      throw ResourceLimitError("lambda order " + std::to_string(o.max_order) + " needs cables beyond --max-cable " +
                               std::to_string(o.max_cable));
    FramedLink fl(s.diagram, framings);
    try {
      v = lambda_asl(fl, o.max_order, cfg);
    } catch (const InvariantViolation& e) {
      std::cerr << "ohtsuki: " << e.what() << "\n";
      return kVerdict;
    }
    extra["framings"] = framings;
  }
  const auto rep = congruence_report(v);
  bool casson_ok = true;
  if (casson_expected) casson_ok = rep.lambda1_integral_6 && v.lambda1 / 6 == *casson_expected;
  const bool pass = rep.pass() && casson_ok;
  extra["lambda1"] = str(v.lambda1);
  extra["lambda2"] = str(v.lambda2);
  if (v.lambda3) extra["lambda3"] = str(*v.lambda3);
  extra["source"] = v.source;
  extra["lambda1_in_6Z"] = rep.lambda1_integral_6;
  extra["lambda2_in_3Z"] = rep.lambda2_integral_3;
  extra["lambda1_eq_2lambda2_mod24"] = rep.mod24;
  extra["casson_form_mod4"] = rep.casson_form;
  if (casson_expected) extra["casson_equals_n_c2"] = casson_ok;
  if (o.format == "json") {
    emit_json(o, "lambda", extra, pass);
  } else {
    print_header(o);
    std::cout << "lambda1 = " << str(v.lambda1) << "\nlambda2 = " << str(v.lambda2) << "\n";
    if (v.lambda3) std::cout << "lambda3 = " << str(*v.lambda3) << "\n";
    if (rep.lambda1_integral_6) std::cout << "casson = lambda1/6 = " << str(v.lambda1 / 6) << "\n";
    std::cout << "lambda1 in 6Z: " << (rep.lambda1_integral_6 ? "yes" : "NO") << "\n"
              << "lambda2 in 3Z: " << (rep.lambda2_integral_3 ? "yes" : "NO") << "\n"
              << "lambda1 = 2 lambda2 mod 24: " << (rep.mod24 ? "yes" : "NO") << "\n";
    if (casson_expected) std::cout << "lambda1/6 = n c2: " << (casson_ok ? "yes" : "NO") << "\n";
    std::cout << (pass ? "congruence: pass" : "congruence: FAIL") << "\n";
  }
  return pass ? kOk : kVerdict;
}

int cmd_sweep(const Options& o, InvariantCache* cache) {
  const auto corpus = load_corpus(o.corpus);
  std::vector<std::int64_t> ns;
  for (int v : parse_int_list(o.ns)) ns.push_back(v);
  if (ns.empty()) throw ParseError("empty --n list");
  const auto records = congruence_sweep(corpus, ns, skein_config(o, cache), o.jobs);
  int violations = 0;
  json rows = json::array();
  for (const auto& r : records) {
    violations += r.pass() ? 0 : 1;
    rows.push_back({{"entry", r.entry}, {"n", r.n}, {"lambda1", str(r.lambda1)}, {"lambda2", str(r.lambda2)},
                    {"lambda1_in_6Z", r.congruence.lambda1_integral_6},
                    {"lambda2_in_3Z", r.congruence.lambda2_integral_3},
                    {"mod24", r.congruence.mod24}, {"casson", r.casson_ok}, {"pass", r.pass()}});
  }
  if (o.format == "json") {
    emit_json(o, "sweep", {{"records", rows}, {"violations", violations}}, violations == 0);
  } else {
    print_header(o);
    std::cout << std::left << std::setw(14) << "entry" << std::right << std::setw(4) << "n" << std::setw(10)
              << "lambda1" << std::setw(12) << "lambda2" << "  verdict\n";
    for (const auto& r : records)
      std::cout << std::left << std::setw(14) << r.entry << std::right << std::setw(4) << r.n << std::setw(10)
                << str(r.lambda1) << std::setw(12) << str(r.lambda2) << "  " << (r.pass() ? "pass" : "FAIL") << "\n";
    std::cout << records.size() << " surgeries, " << violations << " violations\n";
  }
  return violations == 0 ? kOk : kVerdict;
}

int cmd_fermat_gauss(const Options& o) {
  const int order = o.order >= 0 ? o.order : 4;
  const int m = o.precision_m > 0 ? o.precision_m : 2;
  return report_checks(o, "fermat-gauss", gauss_limit_check(o.l, parse_primes(o.primes), order, m), {{"l", o.l}});
}

int cmd_fermat_hlimit(const Options& o) {
  const int order = o.order >= 0 ? o.order : 4;
  const int m = o.precision_m > 0 ? o.precision_m : 2;
  return report_checks(o, "fermat-hlimit",
                       h_limit_check(o.i, o.f, parse_primes(o.primes), order, m, o.full_window),
                       {{"i", o.i}, {"f", o.f}, {"window", o.full_window ? "(r-3)/2" : "(r-3)/2 - i"}});
}

int cmd_fermat_tau(const Options& o, InvariantCache* cache) {
  auto s = resolve(o);
  std::vector<int> framings = !o.framings.empty() ? parse_int_list(o.framings)
                              : !s.framings.empty() ? s.framings
                                                    : std::vector<int>(s.diagram.component_count(), o.framing);
  FramedLink fl(s.diagram, framings);
  const std::vector<int> primes = o.prime > 0 ? std::vector<int>{o.prime} : parse_primes(o.primes);
  TauConfig tcfg;
  tcfg.precision_m = o.precision_m;
  tcfg.skein = skein_config(o, cache);
  std::vector<CoefficientCheck> checks;
  json taus = json::array();
  for (int r : primes) {
    if (r < 3 || !is_prime(r)) throw ParseError("not an odd prime: " + std::to_string(r));
    const int window = (r - 3) / 2;
    if (window > o.max_cable)
      throw ResourceLimitError("tau_" + std::to_string(r) + " needs " + std::to_string(window) +
                               "-cables, above --max-cable " + std::to_string(o.max_cable));
    const int lambda_order = std::max(1, std::min({3, window, o.max_cable}));
    LambdaVector expected;
    try {
      expected = lambda_asl(fl, lambda_order, tcfg.skein);
    } catch (const InvariantViolation& e) {
      std::cerr << "ohtsuki: " << e.what() << "\n";
      return kVerdict;
    }
    const CycElem tau = tau_r(fl, r, tcfg);
    auto c = tau_lambda_check(tau, expected);
    checks.insert(checks.end(), c.begin(), c.end());
    json a = json::array();
    for (auto v : q_expansion(tau)) a.push_back(v);
    taus.push_back({{"prime", r}, {"a", a}});
  }
  return report_checks(o, "fermat-tau", checks, {{"diagram", s.name}, {"framings", framings}, {"expansions", taus}});
}

int cmd_fermat_fixtures(const Options& o) {
  const auto fixtures = fermat_fixtures(o.max_prime);
  bool pass = true;
  json rows = json::array();
  for (const auto& f : fixtures) {
    pass = pass && f.pass;
    rows.push_back({{"function", f.name}, {"residue", str(f.residue)}, {"primes", f.primes.size()}, {"pass", f.pass}});
  }
  if (o.format == "json") {
    emit_json(o, "fermat-fixtures", {{"max_prime", o.max_prime}, {"fixtures", rows}}, pass);
  } else {
    print_header(o);
    for (const auto& f : fixtures)
      std::cout << std::left << std::setw(14) << f.name << " residue " << std::setw(6) << str(f.residue) << " over "
                << f.primes.size() << " primes: " << (f.pass ? "pass" : "FAIL") << "\n";
    std::cout << (pass ? "all fixtures pass" : "FIXTURE FAILED") << "\n";
  }
  return pass ? kOk : kVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  for (int k = 0; k < argc; ++k) g_command_line += (k ? " " : "") + quote(k ? argv[k] : "ohtsuki");

  Options o;
  CLI::App app{"Knot invariants, Ohtsuki surgery invariants and their cyclotomic checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--order", o.order, "Series order (default: components + 4; 4 for fermat checks)");
  app.add_option("--precision-m", o.precision_m, "Cyclotomic precision M: coefficients mod r^M");
  app.add_option("--primes", o.primes, "Comma separated odd primes")->capture_default_str();
  app.add_option("--max-crossings", o.max_crossings, "Largest diagram for the bracket")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-cable", o.max_cable, "Largest cable depth")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--cache", o.cache, "Polynomial cache file (OHTSUKI_CACHE_DIR overrides)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--corpus", o.corpus, "Corpus file")->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  auto add_subject = [&](CLI::App* sub) {
    sub->add_option("diagram", o.diagram, "braid:<strands>:<letters> or a PD code");
    sub->add_option("--entry", o.entry, "Corpus entry name");
  };
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial V(t)");
  add_subject(jones_cmd);
  auto* conway_cmd = app.add_subcommand("conway", "Conway polynomial");
  add_subject(conway_cmd);
  auto* phi_cmd = app.add_subcommand("phi", "Sublink sum Phi and its expansion at t = 1");
  add_subject(phi_cmd);
  auto* lambda_cmd = app.add_subcommand("lambda", "lambda_1, lambda_2 (, lambda_3) of a surgery");
  add_subject(lambda_cmd);
  lambda_cmd->add_option("--n", o.n, "1/n surgery on a knot")->each([&](const std::string&) { o.n_given = true; });
  lambda_cmd->add_option("--framings", o.framings, "Unit framings of a link, comma separated");
  lambda_cmd->add_option("--max-order", o.max_order, "Highest lambda for link surgery")->check(CLI::Range(1, 3));
  auto* sweep_cmd = app.add_subcommand("sweep", "Congruence sweep over the corpus knots");
  sweep_cmd->add_option("--n", o.ns, "Comma separated surgery coefficients")->capture_default_str();

  auto* fermat_cmd = app.add_subcommand("fermat", "Cyclotomic and Fermat-limit checks");
  fermat_cmd->require_subcommand(1);
  auto* gauss_cmd = fermat_cmd->add_subcommand("gauss", "Expansion of (q-1)^l G_2l / G_0 against its limit");
  gauss_cmd->add_option("--l", o.l, "Gauss sum weight l")->check(CLI::NonNegativeNumber);
  auto* hlimit_cmd = fermat_cmd->add_subcommand("hlimit", "Expansion of H_{i,f}(q) against its closed form");
  hlimit_cmd->add_option("--i", o.i, "Index i")->check(CLI::Range(0, 3));
  hlimit_cmd->add_option("--f", o.f, "Framing f")->check(CLI::IsMember({1, -1}));
  hlimit_cmd->add_flag("--full-window", o.full_window, "Compare up to (r-3)/2 instead of (r-3)/2 - i");
  auto* tau_cmd = fermat_cmd->add_subcommand("tau", "tau_r of unit-framed surgery against 1 + lambda1 u + ...");
  add_subject(tau_cmd);
  tau_cmd->add_option("--framing", o.framing, "Framing of every component")->check(CLI::IsMember({1, -1}));
  tau_cmd->add_option("--framings", o.framings, "Per-component framings");
  tau_cmd->add_option("--prime", o.prime, "Single prime (overrides --primes)");
  auto* fixtures_cmd = fermat_cmd->add_subcommand("fixtures", "Standard Fermat functions against their residues");
  fixtures_cmd->add_option("--max-prime", o.max_prime, "Largest prime")->capture_default_str()->check(CLI::Range(5, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  std::unique_ptr<InvariantCache> cache;
  try {
    const std::string path = cache_path(o);
    cache = path.empty() ? std::make_unique<InvariantCache>() : std::make_unique<InvariantCache>(path);
  } catch (const std::exception& e) {
    std::cerr << "ohtsuki: cache: " << e.what() << "\n";
    return kIo;
  }

  try {
    int code = kOk;
    if (*jones_cmd) code = cmd_jones(o, cache.get());
    else if (*conway_cmd) code = cmd_conway(o, cache.get());
    else if (*phi_cmd) code = cmd_phi(o, cache.get());
    else if (*lambda_cmd) code = cmd_lambda(o, cache.get());
    else if (*sweep_cmd) code = cmd_sweep(o, cache.get());
    else if (*gauss_cmd) code = cmd_fermat_gauss(o);
    else if (*hlimit_cmd) code = cmd_fermat_hlimit(o);
    else if (*tau_cmd) code = cmd_fermat_tau(o, cache.get());
    else if (*fixtures_cmd) code = cmd_fermat_fixtures(o);
    cache->save();
    return code;
  } catch (const CorpusError& e) {
    std::cerr << "ohtsuki: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "ohtsuki: " << e.what() << "\n";
    return kInput;
  } catch (const PrecisionError& e) {
    std::cerr << "ohtsuki: " << e.what() << " (try a larger --precision-m)\n";
    return kResource;
  } catch (const ResourceLimitError& e) {
    std::cerr << "ohtsuki: " << e.what() << "\n";
    return kResource;
  } catch (const InvariantViolation& e) {
    std::cerr << "ohtsuki: " << e.what() << "\n";
    return kVerdict;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "ohtsuki: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ohtsuki: " << e.what() << "\n";
    return kInput;
  } catch (const std::domain_error& e) {
    std::cerr << "ohtsuki: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "ohtsuki: " << e.what() << "\n";
    return kIo;
  }
}
