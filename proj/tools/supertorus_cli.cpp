// supertorus: dimension tables, bases, characters, skein reduction and the
// verification suites from the command line.
//
// Exit status: 0 success, 1 a checked invariant failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "supertorus/cohomology.hpp"
#include "supertorus/combinatorics.hpp"
#include "supertorus/io.hpp"
#include "supertorus/matching.hpp"
#include "supertorus/parse_error.hpp"
#include "supertorus/verify.hpp"

using namespace supertorus;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

constexpr int kVerifyGuard = 10;
constexpr int kQueryGuard = 14;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int n_max = 4;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> k;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::string literal;
  bool brute_force = false;
  std::optional<int> guard;
};

json envelope(const std::string& command) { return {{"version", 1}, {"command", command}}; }

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void require_n(int n, int guard) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (n > guard) {
    throw UsageError("n=" + std::to_string(n) + " exceeds the guard " + std::to_string(guard) +
                     " (raise it with --guard)");
  }
  if (n > rank_limit()) set_rank_limit(std::min(n, kMaxRepresentableRank));
}

int require_index(const std::optional<int>& v, const char* name, int n) {
  if (!v) throw UsageError(std::string("--") + name + " is required");
  if (*v < 0 || *v > n) throw UsageError(std::string("--") + name + " must lie in 0..n");
  return *v;
}

std::string csv_list(const std::vector<int>& v, char sep = ' ') {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t > 0) out += sep;
    out += std::to_string(v[t]);
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_dims(const Options& o) {
  require_n(o.n, o.guard.value_or(kQueryGuard));
  const int n = o.n;
  const DiagonalCensus census = diagonal_census(n);
  std::int64_t h1_total = 0;
  bool consistent = true;
  struct Row {
    int i, j;
    std::int64_t h0, h1;
  };
  std::vector<Row> rows;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Row r{i, j, h0_dimension(n, i, j), h1_dimension(n, i, j)};
      if (o.brute_force) {
        const auto dim = static_cast<std::int64_t>(monomials_of_bidegree(n, {i, j}).size());
        const auto out_rank = static_cast<std::int64_t>(rank(tau_matrix(n, {i, j})));
        const auto in_rank =
            (i >= 1 && j + 1 <= n) ? static_cast<std::int64_t>(rank(tau_matrix(n, {i - 1, j + 1}))) : 0;
        consistent = consistent && dim - out_rank == r.h0 && dim - in_rank == r.h1;
        r.h0 = dim - out_rank;
        r.h1 = dim - in_rank;
      }
      h1_total += r.h1;
      rows.push_back(r);
    }
  }

  if (o.format == "json") {
    json j = envelope("dims");
    j["n"] = n;
    j["method"] = o.brute_force ? "kernel-rank" : "closed-form";
    json table = json::array();
    for (const Row& r : rows) table.push_back({{"n", n}, {"bidegree", {r.i, r.j}}, {"h0", r.h0}, {"h1", r.h1}});
    j["rows"] = table;
    j["diagonal"] = census.diagonal;
    j["diagonal_sum"] = census.diagonal_sum;
    j["h0_total"] = census.total;
    j["h1_total"] = h1_total;
    emit_json(j);
  } else if (o.format == "csv") {
    std::cout << "n,i,j,h0,h1\n";
    for (const Row& r : rows) std::cout << n << ',' << r.i << ',' << r.j << ',' << r.h0 << ',' << r.h1 << '\n';
    std::cout << n << ",total,total," << census.total << ',' << h1_total << '\n';
  } else {
    std::cout << "n=" << n << (o.brute_force ? " (kernel ranks)" : "") << "\n";
    std::cout << "   i   j        h0        h1\n";
    for (const Row& r : rows) {
      std::cout << std::setw(4) << r.i << std::setw(4) << r.j << std::setw(10) << r.h0 << std::setw(10) << r.h1
                << '\n';
    }
    std::cout << "   total" << std::setw(10) << census.total << std::setw(10) << h1_total << '\n';
    std::cout << "diagonal h0: ";
    for (std::size_t t = 0; t < census.diagonal.size(); ++t) std::cout << (t ? " " : "") << census.diagonal[t];
    std::cout << "  sum " << census.diagonal_sum << " (Catalan " << catalan(n + 1) << ")\n";
    std::cout << "C(2n+1,n) = " << binomial(2 * n + 1, n) << '\n';
  }
  if (!consistent) {
    std::cerr << "error: kernel ranks disagree with the closed forms\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_reduce(const Options& o) {
  const LabelledMatching m = parse_matching(o.literal);
  require_n(m.n(), o.guard.value_or(kQueryGuard));
  const MatchingCombination nf = normal_form(m);
  const bool sound = expand(nf, m.n()) == f_of_matching(m);

  if (o.format == "json") {
    json j = envelope("reduce");
    j["input"] = matching_to_json(m);
    j["normal_form"] = combination_to_json(nf);
    j["expansion_matches"] = sound;
    emit_json(j);
  } else if (o.format == "csv") {
    std::cout << "coeff,matching\n";
    for (const auto& [term, c] : nf.terms()) std::cout << to_string(c) << ",\"" << to_string(term) << "\"\n";
  } else {
    std::cout << to_string(m) << "\n  =";
    if (nf.empty()) std::cout << " 0";
    for (const auto& [term, c] : nf.terms()) std::cout << "\n    " << to_string(c) << " * [" << to_string(term) << ']';
    std::cout << '\n';
  }
  if (!sound) {
    std::cerr << "error: normal form does not expand to F_m\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  if (!verify::is_suite_name(o.suite)) {
    throw UsageError("unknown suite '" + o.suite + "' (core, linalg, cohomology, matchings, all)");
  }
  if (o.n_max < 1) throw UsageError("--n-max must be at least 1");
  require_n(o.n_max, o.guard.value_or(kVerifyGuard));
  const verify::SuiteReport report = verify::run_suite(o.suite, o.n_max, o.seed);

  if (o.format == "json") {
    json j = envelope("verify");
    j["suite"] = o.suite;
    j["n_max"] = o.n_max;
    j["seed"] = o.seed;
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    j["passed"] = report.passed();
    emit_json(j);
  } else if (o.format == "csv") {
    std::cout << "check,passed,cases\n";
    for (const auto& c : report.checks) {
      std::cout << '"' << c.name << "\"," << (c.passed ? "true" : "false") << ',' << c.cases << '\n';
    }
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
      if (!c.passed) std::cout << "     " << c.detail << '\n';
    }
    std::cout << (report.passed() ? "suite passed" : "suite FAILED") << '\n';
  }
  return report.passed() ? kExitOk : kExitViolation;
}

int cmd_basis(const Options& o) {
  require_n(o.n, o.guard.value_or(kQueryGuard));
  const int n = o.n;
  std::vector<LabelledMatching> basis;
  json selector;
  if (o.k) {
    if (o.i || o.j) throw UsageError("give either --k or --i/--j, not both");
    if (*o.k < 0 || *o.k > 2 * n) throw UsageError("--k must lie in 0..2n");
    basis = enumerate_nc(n, *o.k);
    selector = {{"k", *o.k}};
  } else {
    const int i = require_index(o.i, "i", n);
    const int j = require_index(o.j, "j", n);
    for (const auto& m : enumerate_nc(n, i + j)) {
      if (m.bidegree() == Bidegree{i, j}) basis.push_back(m);
    }
    if (static_cast<std::int64_t>(basis.size()) != h0_dimension(n, i, j)) {
      std::cerr << "error: basis size differs from dim H0\n";
      return kExitViolation;
    }
    selector = {{"bidegree", {i, j}}};
  }

  if (o.format == "json") {
    json j = envelope("basis");
    j["n"] = n;
    j.update(selector);
    json rows = json::array();
    for (const auto& m : basis) rows.push_back({{"matching", matching_to_json(m)}, {"element", to_string(f_of_matching(m))}});
    j["basis"] = rows;
    emit_json(j);
  } else if (o.format == "csv") {
    std::cout << "matching,element\n";
    for (const auto& m : basis) std::cout << '"' << to_string(m) << "\",\"" << to_string(f_of_matching(m)) << "\"\n";
  } else {
    std::cout << basis.size() << " basis element" << (basis.size() == 1 ? "" : "s") << '\n';
    for (const auto& m : basis) std::cout << "[" << to_string(m) << "]  " << to_string(f_of_matching(m)) << '\n';
  }
  return kExitOk;
}

int cmd_bijection(const Options& o) {
  require_n(o.n, o.guard.value_or(kQueryGuard));
  const int n = o.n;
  if (!o.k) throw UsageError("--k is required");
  const int k = *o.k;
  if (k < 0 || k > 2 * n) throw UsageError("--k must lie in 0..2n");
  struct Row {
    SubsetPair p;
    LabelledMatching m;
    bool round_trip;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  for (const auto& a : subsets_lex(n, k / 2)) {
    for (const auto& b : subsets_lex(n, (k + 1) / 2)) {
      const SubsetPair p{a, b};
      const LabelledMatching m = matching_from_subsets(p, n, k);
      const bool ok = subsets_from_matching(m) == p;
      all_ok = all_ok && ok;
      rows.push_back({p, m, ok});
    }
  }
  const bool count_ok = static_cast<std::int64_t>(rows.size()) == static_cast<std::int64_t>(enumerate_nc(n, k).size());
  all_ok = all_ok && count_ok;

  if (o.format == "json") {
    json j = envelope("bijection");
    j["n"] = n;
    j["k"] = k;
    json table = json::array();
    for (const Row& r : rows) {
      table.push_back({{"A", r.p.a}, {"B", r.p.b}, {"matching", matching_to_json(r.m)}, {"round_trip", r.round_trip}});
    }
    j["rows"] = table;
    j["count"] = rows.size();
    j["all_round_trip"] = all_ok;
    emit_json(j);
  } else if (o.format == "csv") {
    std::cout << "A,B,matching,round_trip\n";
    for (const Row& r : rows) {
      std::cout << '"' << csv_list(r.p.a) << "\",\"" << csv_list(r.p.b) << "\",\"" << to_string(r.m) << "\","
                << (r.round_trip ? "true" : "false") << '\n';
    }
  } else {
    for (const Row& r : rows) {
      std::cout << to_string(r.p) << "  ->  " << to_string(r.m) << (r.round_trip ? "" : "  ROUND TRIP FAILED") << '\n';
    }
    std::cout << rows.size() << " pairs; |NC(" << n << "," << k << ")| = " << enumerate_nc(n, k).size() << '\n';
  }
  return all_ok ? kExitOk : kExitViolation;
}

int cmd_character(const Options& o) {
  require_n(o.n, o.guard.value_or(kQueryGuard));
  const int n = o.n;
  const int i = require_index(o.i, "i", n);
  const int j = require_index(o.j, "j", n);
  if (i < j) {
    std::cerr << "error: H0_{" << i << "," << j << "} is the zero module for i < j; its character is not tabulated\n";
    return kExitUsage;
  }
  const auto types = cycle_types(n);
  std::vector<std::int64_t> values;
  for (const auto& c : types) values.push_back(h0_character(n, i, j, c));

  if (o.format == "json") {
    json jj = envelope("character");
    jj["n"] = n;
    jj["bidegree"] = {i, j};
    json row = json::array();
    for (std::size_t t = 0; t < types.size(); ++t) {
      row.push_back({{"cycle_type", types[t].parts}, {"class_size", types[t].class_size()}, {"value", values[t]}});
    }
    jj["character"] = row;
    emit_json(jj);
  } else if (o.format == "csv") {
    std::cout << "cycle_type,class_size,value\n";
    for (std::size_t t = 0; t < types.size(); ++t) {
      std::cout << '"' << csv_list(types[t].parts) << "\"," << types[t].class_size() << ',' << values[t] << '\n';
    }
  } else {
    std::cout << "character of H0_{" << i << "," << j << "}, n=" << n << '\n';
    std::cout << "      cycle type   class     value\n";
    for (std::size_t t = 0; t < types.size(); ++t) {
      std::cout << std::setw(16) << ("(" + csv_list(types[t].parts, ',') + ")") << std::setw(8)
                << types[t].class_size() << std::setw(10) << values[t] << '\n';
    }
  }
  return kExitOk;
}

void print_parse_error(const std::string& text, const ParseError& e) {
  std::cerr << "error: " << e.what() << '\n';
  std::cerr << "  " << text << '\n';
  std::cerr << "  " << std::string(std::min(e.position(), text.size()), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the fermionic torus: H0/H1 tables, bases, characters, skein reduction"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--guard", o.guard, "Largest n accepted");
  };

  auto* dims = app.add_subcommand("dims", "h0/h1 dimensions for every bidegree");
  dims->add_option("--n", o.n, "Rank")->required();
  dims->add_flag("--brute-force", o.brute_force, "Compute from kernel ranks and compare with the closed forms");
  add_common(dims);

  auto* reduce = app.add_subcommand("reduce", "Skein normal form of a matching");
  reduce->add_option("matching", o.literal, "Matching literal, e.g. \"n=4; arcs=(1,3),(2,4)\"")->required();
  add_common(reduce);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", o.suite, "core | linalg | cohomology | matchings | all");
  verify_cmd->add_option("--n-max", o.n_max, "Largest rank exercised");
  verify_cmd->add_option("--seed", o.seed, "Seed for sampled checks");
  add_common(verify_cmd);

  auto* basis = app.add_subcommand("basis", "Noncrossing basis of H0 in one bidegree (or total degree)");
  basis->add_option("--n", o.n, "Rank")->required();
  basis->add_option("--i", o.i, "Alpha degree");
  basis->add_option("--j", o.j, "Theta degree");
  basis->add_option("--k", o.k, "Total degree");
  add_common(basis);

  auto* bijection = app.add_subcommand("bijection", "Subset pairs and their noncrossing matchings");
  bijection->add_option("--n", o.n, "Rank")->required();
  bijection->add_option("--k", o.k, "Total degree")->required();
  add_common(bijection);

  auto* character = app.add_subcommand("character", "S_n character of H0 in one bidegree");
  character->add_option("--n", o.n, "Rank")->required();
  character->add_option("--i", o.i, "Alpha degree")->required();
  character->add_option("--j", o.j, "Theta degree")->required();
  add_common(character);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dims) return cmd_dims(o);
    if (*reduce) return cmd_reduce(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*basis) return cmd_basis(o);
    if (*bijection) return cmd_bijection(o);
    if (*character) return cmd_character(o);
  } catch (const ParseError& e) {
    print_parse_error(o.literal, e);
    return kExitUsage;
  } catch (const InvalidMatching& e) {
    std::cerr << "error: invalid matching: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RankError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
