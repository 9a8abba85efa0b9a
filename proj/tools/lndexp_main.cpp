// Command-line front end: construct exponential automorphisms from
// locally nilpotent derivations, invert them, take logarithms of
// unipotent maps, compute minimal polynomials by both the nilpotency
// formula and the linear-algebra route, and run self-verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lndexp/combinat.hpp"
#include "lndexp/derivation.hpp"
#include "lndexp/logmap.hpp"
#include "lndexp/minpoly.hpp"
#include "lndexp/polymap.hpp"
#include "lndexp/random_poly.hpp"
#include "lndexp/textio.hpp"
#include "lndexp/unipoly.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes, stable across runs: 0 success, 1 parse error, 2 iteration
// or nilpotency cap, 3 internal verification failure, 4 not locally
// finite / not unipotent within bound.
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kCapExceeded = 2;
constexpr int kVerificationFailure = 3;
constexpr int kNotFiniteWithinBound = 4;

struct Options {
  std::string vars;
  std::string derivation;
  std::string map;
  std::string file;
  std::uint64_t max_iter = lndexp::kDefaultIterationCap;
  std::uint64_t max_degree = lndexp::kDefaultMaxDegree;
  std::string output = "text";
  bool oracle = false;
  std::uint64_t seed = 12345;
  std::uint64_t beta_d = 0;
  std::uint64_t beta_i = 0;
  std::vector<std::uint64_t> beta_table;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::vector<std::string> read_component_lines(const std::string& path) {
  std::vector<std::string> lines;
  auto consume = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      std::string t = trim(line);
      if (!t.empty()) lines.push_back(t);
    }
  };
  if (path == "-") {
    consume(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw lndexp::InvalidArgument("cannot open file '" + path + "'");
    consume(in);
  }
  return lines;
}

lndexp::RingPtr ring_from_opts(const Options& opt) {
  if (opt.vars.empty()) throw lndexp::InvalidArgument("--vars is required");
  auto names = split(opt.vars, ',');
  return lndexp::ring_from_names(names);
}

std::vector<std::string> components_from(const Options& opt, const std::string& inline_text) {
  if (!opt.file.empty()) return read_component_lines(opt.file);
  return split(inline_text, ';');
}

lndexp::Derivation derivation_from_opts(const Options& opt, const lndexp::RingPtr& ring) {
  if (opt.derivation.empty() && opt.file.empty())
    throw lndexp::InvalidArgument("--derivation (or --file) is required");
  return lndexp::parse_derivation(components_from(opt, opt.derivation), ring);
}

lndexp::PolyMap map_from_opts(const Options& opt, const lndexp::RingPtr& ring) {
  if (opt.map.empty() && opt.file.empty())
    throw lndexp::InvalidArgument("--map (or --file) is required");
  return lndexp::parse_map(components_from(opt, opt.map), ring);
}

void require_detected(const lndexp::NilpotencyReport& report, const lndexp::RingPtr& ring,
                      std::uint64_t cap) {
  if (report.detected()) return;
  for (std::size_t i = 0; i < report.per_variable.size(); ++i)
    if (!report.per_variable[i])
      throw lndexp::CapExceeded("nilpotency not detected for generator " + ring->name(i) +
                                    " within cap " + std::to_string(cap),
                                cap);
  throw lndexp::CapExceeded("nilpotency not detected within cap " + std::to_string(cap), cap);
}

ordered_json json_components(const lndexp::PolyMap& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : f.components()) arr.push_back(lndexp::format_poly(c));
  return arr;
}

ordered_json json_minpoly(const lndexp::UniPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(lndexp::to_string(c));
  return arr;
}

const char* certificate_name(lndexp::Certificate c) {
  return c == lndexp::Certificate::kTheorem ? "theorem" : "linear_algebra";
}

int cmd_exp(const Options& opt) {
  auto ring = ring_from_opts(opt);
  auto d = derivation_from_opts(opt, ring);
  auto report = lndexp::nilpotency_degree(d, opt.max_iter);
  require_detected(report, ring, opt.max_iter);
  auto f = lndexp::exp_map(d, opt.max_iter);
  if (opt.output == "json") {
    ordered_json j{{"vars", ring->names()}, {"result", json_components(f)},
                   {"d", *report.degree}};
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : f.components()) std::cout << lndexp::format_poly(c) << "\n";
  }
  return kOk;
}

int cmd_minpoly(const Options& opt) {
  auto ring = ring_from_opts(opt);
  const bool have_derivation = !opt.derivation.empty();
  const bool have_map = !opt.map.empty();
  if (have_derivation && have_map)
    throw lndexp::InvalidArgument("give exactly one of --derivation / --map");

  lndexp::MinpolyResult result;
  bool oracle_checked = false;
  if (have_map) {
    auto f = map_from_opts(opt, ring);
    auto bf = lndexp::minpoly_bruteforce(f, opt.max_degree);
    if (!bf) {
      std::cerr << "error: no annihilating polynomial of degree <= " << opt.max_degree
                << "; the map is not locally finite within the bound\n";
      return kNotFiniteWithinBound;
    }
    result = *bf;
  } else {
    auto d = derivation_from_opts(opt, ring);
    result = lndexp::minpoly_exponential(d, opt.max_iter);
    if (opt.oracle) {
      auto bf = lndexp::minpoly_bruteforce(lndexp::exp_map(d, opt.max_iter), opt.max_degree);
      if (!bf || bf->minpoly != result.minpoly) {
        std::cerr << "error: oracle disagrees with the nilpotency-degree route\n";
        return kVerificationFailure;
      }
      oracle_checked = true;
    }
  }

  const std::uint64_t degree = static_cast<std::uint64_t>(result.minpoly.degree().value_or(0));
  if (opt.output == "json") {
    ordered_json j{{"vars", ring->names()},
                   {"result", lndexp::format_unipoly(result.minpoly)},
                   {"d", degree},
                   {"minpoly", json_minpoly(result.minpoly)},
                   {"certified_by", certificate_name(result.certified_by)}};
    if (oracle_checked) j["oracle"] = "agree";
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "minpoly: " << lndexp::format_unipoly(result.minpoly) << "\n";
    std::cout << "d: " << degree << "\n";
    std::cout << "certified_by: " << certificate_name(result.certified_by) << "\n";
    if (oracle_checked) std::cout << "oracle: agree\n";
  }
  return kOk;
}

int cmd_invert(const Options& opt) {
  auto ring = ring_from_opts(opt);
  auto d = derivation_from_opts(opt, ring);
  auto report = lndexp::nilpotency_degree(d, opt.max_iter);
  require_detected(report, ring, opt.max_iter);
  auto f = lndexp::exp_map(d, opt.max_iter);
  auto inverse = lndexp::invert_exponential(d, opt.max_iter);
  auto identity = lndexp::PolyMap::identity(ring);
  if (compose(f, inverse) != identity || compose(inverse, f) != identity) {
    std::cerr << "error: inverse verification failed\n";
    return kVerificationFailure;
  }
  if (opt.output == "json") {
    ordered_json j{{"vars", ring->names()}, {"result", json_components(inverse)},
                   {"d", *report.degree}};
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : inverse.components()) std::cout << lndexp::format_poly(c) << "\n";
  }
  return kOk;
}

int cmd_log(const Options& opt) {
  auto ring = ring_from_opts(opt);
  auto f = map_from_opts(opt, ring);
  auto bf = lndexp::minpoly_bruteforce(f, opt.max_degree);
  if (!bf) {
    std::cerr << "error: no annihilating polynomial of degree <= " << opt.max_degree
              << "; the map is not locally finite within the bound\n";
    return kNotFiniteWithinBound;
  }
  auto d = lndexp::log_map(f, opt.max_degree);
  const std::uint64_t degree = static_cast<std::uint64_t>(*bf->minpoly.degree());
  if (opt.output == "json") {
    ordered_json j{{"vars", ring->names()}, {"result", ordered_json::array()}, {"d", degree}};
    for (const auto& img : d.images()) j["result"].push_back(lndexp::format_poly(img));
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& img : d.images()) std::cout << lndexp::format_poly(img) << "\n";
    std::cout << "d: " << degree << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& opt) {
  auto ring = ring_from_opts(opt);
  auto d = derivation_from_opts(opt, ring);
  auto report = lndexp::nilpotency_degree(d, opt.max_iter);
  require_detected(report, ring, opt.max_iter);
  const std::uint64_t nilpotency = *report.degree;

  auto f = lndexp::exp_map(d, opt.max_iter);
  auto theorem = lndexp::minpoly_exponential(d, opt.max_iter);

  std::vector<std::pair<std::string, bool>> checks;

  checks.emplace_back("minpoly_annihilates",
                      lndexp::eval_poly_at_map(theorem.minpoly, f).is_zero());

  bool minimal = false;
  auto bf = lndexp::minpoly_bruteforce(f, opt.max_degree);
  if (bf && bf->minpoly == theorem.minpoly) {
    auto shorter = pow(lndexp::UniPoly::t_minus(lndexp::Rational(1)), nilpotency - 1);
    minimal = !lndexp::eval_poly_at_map(shorter, f).is_zero();
  }
  checks.emplace_back("minpoly_minimal_oracle", minimal);

  auto inverse = lndexp::invert_exponential(d, opt.max_iter);
  auto identity = lndexp::PolyMap::identity(ring);
  checks.emplace_back("inverse_round_trip",
                      compose(f, inverse) == identity && compose(inverse, f) == identity);

  checks.emplace_back("log_round_trip", lndexp::log_map(f, opt.max_degree) == d);

  for (std::size_t i = 0; i < ring->size(); ++i) {
    auto independence = lndexp::iterates_linearly_independent(
        d, lndexp::Polynomial::variable(ring, i), opt.max_iter);
    checks.emplace_back("lemma1_independence_" + ring->name(i), independence.independent);
  }

  std::mt19937_64 rng(opt.seed);
  bool leibniz = true;
  for (int k = 0; k < 20; ++k) {
    auto p = lndexp::random_polynomial(ring, rng, 3, 4, 5);
    auto q = lndexp::random_polynomial(ring, rng, 3, 4, 5);
    if (d.apply(p * q) != d.apply(p) * q + p * d.apply(q)) leibniz = false;
  }
  checks.emplace_back("leibniz_random", leibniz);

  bool homomorphism = true;
  for (int k = 0; k < 8; ++k) {
    auto p = lndexp::random_polynomial(ring, rng, 2, 3, 3);
    auto q = lndexp::random_polynomial(ring, rng, 2, 3, 3);
    if (lndexp::exp_apply(d, p * q, opt.max_iter) !=
        lndexp::exp_apply(d, p, opt.max_iter) * lndexp::exp_apply(d, q, opt.max_iter))
      homomorphism = false;
  }
  checks.emplace_back("exp_homomorphism_random", homomorphism);

  bool all_pass = true;
  for (const auto& [name, pass] : checks) all_pass = all_pass && pass;

  if (opt.output == "json") {
    ordered_json results = ordered_json::array();
    for (const auto& [name, pass] : checks) results.push_back({{"check", name}, {"pass", pass}});
    ordered_json j{{"vars", ring->names()},
                   {"result", results},
                   {"d", nilpotency},
                   {"minpoly", json_minpoly(theorem.minpoly)},
                   {"certified_by", certificate_name(theorem.certified_by)},
                   {"pass", all_pass}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "d: " << nilpotency << "\n";
    for (const auto& [name, pass] : checks)
      std::cout << name << ": " << (pass ? "pass" : "fail") << "\n";
    std::cout << "verify: " << (all_pass ? "pass" : "fail") << "\n";
  }
  return all_pass ? kOk : kVerificationFailure;
}

int cmd_beta(const Options& opt) {
  if (!opt.beta_table.empty()) {
    const std::uint64_t dmax = opt.beta_table[0];
    const std::uint64_t imax = opt.beta_table[1];
    if (dmax < 1) throw lndexp::InvalidArgument("--table needs dmax >= 1");
    if (opt.output == "json") {
      ordered_json rows = ordered_json::array();
      for (std::uint64_t d = 1; d <= dmax; ++d) {
        ordered_json row = ordered_json::array();
        for (std::uint64_t i = 0; i <= imax; ++i)
          row.push_back(lndexp::to_string(lndexp::beta(d, i)));
        rows.push_back(row);
      }
      ordered_json j{{"dmax", dmax}, {"imax", imax}, {"result", rows}};
      std::cout << j.dump() << "\n";
    } else {
      for (std::uint64_t d = 1; d <= dmax; ++d) {
        std::cout << "d=" << d << ":";
        for (std::uint64_t i = 0; i <= imax; ++i)
          std::cout << " " << lndexp::to_string(lndexp::beta(d, i));
        std::cout << "\n";
      }
    }
    return kOk;
  }

  if (opt.beta_d == 0) throw lndexp::InvalidArgument("--d must be >= 1 (or use --table)");
  lndexp::BigInt value = lndexp::beta(opt.beta_d, opt.beta_i);
  if (opt.output == "json") {
    ordered_json j{{"d", opt.beta_d}, {"i", opt.beta_i}, {"result", lndexp::to_string(value)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << lndexp::to_string(value) << "\n";
  }
  return kOk;
}

template <typename Fn>
int run_guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const lndexp::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const lndexp::NotUnipotent& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotFiniteWithinBound;
  } catch (const lndexp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exponential automorphisms of polynomial rings"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool wants_derivation, bool wants_map) {
    sub->add_option("--vars", opt.vars, "comma-separated variable names, e.g. X,Y,Z");
    if (wants_derivation)
      sub->add_option("--derivation", opt.derivation,
                      "derivation images D(X_i), separated by ';'");
    if (wants_map)
      sub->add_option("--map", opt.map, "map components, separated by ';'");
    sub->add_option("--file", opt.file,
                    "read components from a file, one per line ('-' for stdin)");
    sub->add_option("--max-iter", opt.max_iter, "iteration cap for nilpotency detection");
    sub->add_option("--max-degree", opt.max_degree, "degree bound for the linear-algebra route");
    sub->add_option("--output", opt.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* exp_cmd = app.add_subcommand("exp", "exponentiate a locally nilpotent derivation");
  add_common(exp_cmd, true, false);

  auto* minpoly_cmd = app.add_subcommand("minpoly", "minimal polynomial of the induced map");
  add_common(minpoly_cmd, true, true);
  minpoly_cmd->add_flag("--oracle", opt.oracle, "cross-check against the linear-algebra route");

  auto* invert_cmd = app.add_subcommand("invert", "closed-form inverse of exp(D)");
  add_common(invert_cmd, true, false);

  auto* log_cmd = app.add_subcommand("log", "logarithm of a unipotent polynomial map");
  add_common(log_cmd, false, true);

  auto* verify_cmd = app.add_subcommand("verify", "run the full invariant suite on one input");
  add_common(verify_cmd, true, false);
  verify_cmd->add_option("--seed", opt.seed, "seed for randomized self-checks");

  auto* beta_cmd = app.add_subcommand("beta", "alternating binomial moment sums");
  beta_cmd->add_option("--d", opt.beta_d, "order d >= 1");
  beta_cmd->add_option("--i", opt.beta_i, "moment i >= 0");
  beta_cmd->add_option("--table", opt.beta_table, "print the table for d=1..dmax, i=0..imax")
      ->expected(2);
  beta_cmd->add_option("--output", opt.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int exit_code = kOk;
  exp_cmd->callback([&] { exit_code = run_guarded([&] { return cmd_exp(opt); }); });
  minpoly_cmd->callback([&] { exit_code = run_guarded([&] { return cmd_minpoly(opt); }); });
  invert_cmd->callback([&] { exit_code = run_guarded([&] { return cmd_invert(opt); }); });
  log_cmd->callback([&] { exit_code = run_guarded([&] { return cmd_log(opt); }); });
  verify_cmd->callback([&] { exit_code = run_guarded([&] { return cmd_verify(opt); }); });
  beta_cmd->callback([&] { exit_code = run_guarded([&] { return cmd_beta(opt); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }
  return exit_code;
}
