// Copyright 2026 The farey-rank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "farey/cli.hpp"

#include <algorithm>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "farey/bench.hpp"
#include "farey/errors.hpp"
#include "farey/farey.hpp"
#include "farey/geometry.hpp"
#include "farey/primitive.hpp"

namespace farey::cli {

namespace {

std::vector<std::int64_t> parse_sizes(const std::string& text) {
  std::vector<std::int64_t> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    math::Rational r = math::Rational::parse(item);
    if (!r.is_integer() || r.sign() <= 0 ||
        r.num() > std::numeric_limits<std::int64_t>::max()) {
      throw ParseError("bench size '" + item + "' is not a positive integer");
    }
    sizes.push_back(static_cast<std::int64_t>(r.num()));
  }
  return sizes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Farey-sequence ranks and primitive lattice point counts",
               args.empty() ? "farey" : args.front()};
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::string x_text;
  std::string algo_text = "improved";
  std::string k_text;
  std::string poly_path;
  bool brute = false;
  std::optional<std::int64_t> tau;
  std::uint64_t seed = 1;
  std::string scale_text = "small";
  std::string sizes_text;
  int reps = 5;
  bool fit = false;

  auto* rank_cmd = app.add_subcommand("rank", "Rank(x, n) = |F_n ∩ [0, x]|");
  rank_cmd->add_option("--n", n, "Farey order")->required();
  rank_cmd->add_option("--x", x_text, "query fraction P/Q")->required();
  rank_cmd->add_option("--algo", algo_text, "improved|pawlewicz|brute")
      ->check(CLI::IsMember({"improved", "pawlewicz", "brute"}));

  auto* stat_cmd = app.add_subcommand("stat", "k-th smallest member of F_n");
  stat_cmd->add_option("--n", n, "Farey order")->required();
  stat_cmd->add_option("--k", k_text, "1-based index")->required();

  auto* totsum_cmd =
      app.add_subcommand("totsum", "sum of Euler phi(b) for b <= n");
  totsum_cmd->add_option("--n", n, "upper limit")->required();

  auto* lattice_cmd =
      app.add_subcommand("lattice", "lattice points in a closed polygon");
  lattice_cmd->add_option("--poly", poly_path, "polygon file")->required();

  auto* primitive_cmd = app.add_subcommand(
      "primitive", "primitive lattice points in a closed polygon");
  primitive_cmd->add_option("--poly", poly_path, "polygon file")->required();
  primitive_cmd->add_flag("--brute", brute, "bounding-box scan instead");
  primitive_cmd->add_option("--tau", tau, "override the tail crossover");

  auto* selftest_cmd =
      app.add_subcommand("selftest", "run the oracle-equivalence suites");
  selftest_cmd->add_option("--seed", seed, "random seed");
  selftest_cmd->add_option("--scale", scale_text, "small|medium")
      ->check(CLI::IsMember({"small", "medium"}));

  auto* bench_cmd =
      app.add_subcommand("bench", "time a rank tier over a size grid");
  bench_cmd->add_option("--algo", algo_text, "improved|pawlewicz|brute")
      ->check(CLI::IsMember({"improved", "pawlewicz", "brute"}));
  bench_cmd->add_option("--sizes", sizes_text, "comma-separated n values")
      ->required();
  bench_cmd->add_option("--reps", reps, "timed repetitions per size");
  bench_cmd->add_flag("--fit", fit, "print the fitted log-log slope");

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1
                                                      : args.end(),
                                      args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (rank_cmd->parsed()) {
      auto x = math::Rational::parse(x_text);
      out << seq::rank(x, n, seq::parse_algo(algo_text)) << "\n";
    } else if (stat_cmd->parsed()) {
      auto k = math::Rational::parse(k_text);
      if (!k.is_integer()) throw ParseError("--k must be an integer");
      out << seq::statistic(k.num(), n) << "\n";
    } else if (totsum_cmd->parsed()) {
      out << seq::totient_sum(n) << "\n";
    } else if (lattice_cmd->parsed()) {
      out << geom::count_lattice(geom::load_polygon(poly_path)) << "\n";
    } else if (primitive_cmd->parsed()) {
      geom::Polygon p = geom::load_polygon(poly_path);
      if (brute) {
        out << prim::primitive_brute(p) << "\n";
      } else {
        prim::PrimitiveOptions opts;
        opts.tau = tau;
        out << prim::primitive_count(p, opts) << "\n";
      }
    } else if (selftest_cmd->parsed()) {
      return run_selftest(seed,
                          scale_text == "medium" ? SelftestScale::kMedium
                                                 : SelftestScale::kSmall,
                          out);
    } else if (bench_cmd->parsed()) {
      auto records =
          bench::run_grid(seq::parse_algo(algo_text), parse_sizes(sizes_text),
                          reps);
      bench::write_csv(out, records);
      if (fit) {
        err << "exponent " << algo_text << " "
            << bench::format_exponent(bench::fit_exponent(records)) << "\n";
      }
    }
  } catch (const geom::ValidationError& e) {
    err << "invalid polygon: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotFoundError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace farey::cli
