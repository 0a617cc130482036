// Command-line surface over the exact electrical-network toolkit.
// Exit codes: 0 success, 1 algorithmic failure, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "elnet/json_io.hpp"
#include "elnet/perms.hpp"
#include "elnet/suites.hpp"
#include "elnet/symplectic.hpp"

namespace {

using namespace elnet;

nlohmann::json load_json(const std::string& path) {
  nlohmann::json j;
  try {
    if (path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(path);
      if (!in) throw ParseError("cannot open \"" + path + "\"");
      in >> j;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

// Display-only decimal rendering, k digits after the point, round toward zero.
std::string rat_to_decimal(const Rat& r, unsigned k) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  Int whole = num / den, rem = num % den;
  std::string frac;
  for (unsigned i = 0; i < k; ++i) {
    rem *= 10;
    frac += char('0' + int(rem / den));
    rem %= den;
  }
  std::string out = sign + whole.str();
  if (k > 0) out += "." + frac;
  return out;
}

void print_matrix(const Mat& m, int decimal) {
  if (decimal < 0) {
    std::cout << mat_to_json(m).dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      std::cout << (j ? " " : "") << rat_to_decimal(m.at(i, j), unsigned(decimal));
    std::cout << "\n";
  }
}

GenWord parse_word(const std::string& text, std::size_t n) {
  std::vector<GenLetter> letters;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("word letter \"" + item + "\" is not of the form i:t");
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad generator index in \"" + item + "\"");
    }
    letters.push_back({index, rat_from_string(item.substr(colon + 1))});
  }
  return make_word(n, std::move(letters));
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoul(item));
    } catch (const std::logic_error&) {
      throw ParseError("bad edge index \"" + item + "\"");
    }
  }
  return out;
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e) ||
         dynamic_cast<const UnknownName*>(&e) || dynamic_cast<const IndexOutOfRange*>(&e) ||
         dynamic_cast<const NegativeParameter*>(&e) ||
         dynamic_cast<const UnsupportedType*>(&e) || dynamic_cast<const EvenSize*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact electrical-network and electrical-Lie-theory toolkit"};
  app.require_subcommand(1);
  std::function<int()> run;

  // response <net.json>
  auto* cmd_response = app.add_subcommand("response", "response matrix of a network");
  std::string resp_path;
  int resp_decimal = -1;
  cmd_response->add_option("net", resp_path, "network JSON file, or - for stdin")->required();
  cmd_response->add_option("--decimal", resp_decimal, "display-only decimal digits");
  cmd_response->callback([&] {
    run = [&]() {
      print_matrix(response(network_from_json(load_json(resp_path))), resp_decimal);
      return 0;
    };
  });

  // transform <net.json> --move <kind> --at <site>
  auto* cmd_transform = app.add_subcommand("transform", "apply one equivalence move");
  std::string tr_path, tr_move, tr_at;
  cmd_transform->add_option("net", tr_path, "network JSON file, or - for stdin")->required();
  cmd_transform->add_option("--move", tr_move, "series|parallel|loop|pendant|y_to_delta|delta_to_y")
      ->required();
  cmd_transform
      ->add_option("--at", tr_at,
                   "vertex id (series/pendant/y_to_delta) or comma-separated edge "
                   "indices (parallel/loop/delta_to_y)")
      ->required();
  cmd_transform->callback([&] {
    run = [&]() {
      Network net = network_from_json(load_json(tr_path));
      LocalMove move{move_kind_from_string(tr_move), "", {}};
      using K = LocalMove::Kind;
      if (move.kind == K::series || move.kind == K::pendant || move.kind == K::y_to_delta)
        move.vertex = tr_at;
      else
        move.edges = parse_indices(tr_at);
      std::cout << network_to_json(apply_local_move(net, move)).dump(2) << "\n";
      return 0;
    };
  });

  // act <word> (--zero n | --network net.json) [--emit network|matrix]
  auto* cmd_act = app.add_subcommand("act", "act by a generator word");
  std::string act_word_text, act_net_path, act_emit = "matrix";
  int act_decimal = -1;
  std::size_t act_zero = 0;
  auto* zero_opt = cmd_act->add_option("--zero", act_zero, "start from the rank-n zero response");
  auto* net_opt = cmd_act->add_option("--network", act_net_path, "start from this network");
  cmd_act->add_option("word", act_word_text, "comma-separated letters i:t")->required();
  cmd_act->add_option("--emit", act_emit, "network or matrix (default matrix)")
      ->check(CLI::IsMember({"network", "matrix"}));
  cmd_act->add_option("--decimal", act_decimal, "display-only decimal digits");
  zero_opt->excludes(net_opt);
  cmd_act->callback([&] {
    run = [&]() {
      if ((zero_opt->count() == 0) == (act_net_path.empty()))
        throw ParseError("act needs exactly one of --zero n or --network file");
      Network start = zero_opt->count() ? Network::empty(act_zero + 1)
                                        : network_from_json(load_json(act_net_path));
      GenWord word = parse_word(act_word_text, start.boundary_count() - 1);
      if (act_emit == "network") {
        std::cout << network_to_json(act_word(start, word)).dump(2) << "\n";
      } else {
        print_matrix(act_word(response(start), word), act_decimal);
      }
      return 0;
    };
  });

  // factorize <mat.json> -n N
  auto* cmd_factorize = app.add_subcommand("factorize", "staircase parameters of a top-cell element");
  std::string fact_path;
  std::size_t fact_n = 0;
  cmd_factorize->add_option("mat", fact_path, "matrix JSON file, or - for stdin")->required();
  cmd_factorize->add_option("-n", fact_n, "rank parameter")->required();
  cmd_factorize->callback([&] {
    run = [&]() {
      Mat m = mat_from_json(load_json(fact_path));
      std::vector<Rat> params = factorize_top_cell(SpElement{fact_n, m}, fact_n);
      nlohmann::json out{{"word", staircase_word(fact_n)}, {"params", nlohmann::json::array()}};
      for (const Rat& p : params) out["params"].push_back(to_string(p));
      std::cout << out.dump(2) << "\n";
      return 0;
    };
  });

  // efficient -n N [--list]
  auto* cmd_efficient = app.add_subcommand("efficient", "efficient permutations in S_{2n+1}");
  std::size_t eff_n = 0;
  bool eff_list = false;
  cmd_efficient->add_option("-n", eff_n, "rank parameter")->required();
  cmd_efficient->add_flag("--list", eff_list, "print the permutations in one-line notation");
  cmd_efficient->callback([&] {
    run = [&]() {
      std::vector<Permutation> all = enumerate_efficient(eff_n);
      std::cout << "count=" << all.size() << "\n";
      if (eff_list)
        for (const auto& w : all) {
          for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
          std::cout << "\n";
        }
      return 0;
    };
  });

  // verify <suite>
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, tau_text = "1";
  SuiteOptions opt;
  cmd_verify->add_option("suite", suite, "relations|braid|dims|stabilizer|b2|action|cells|efficient")
      ->required();
  cmd_verify->add_option("--tau", tau_text, "deformation parameter (rational)");
  cmd_verify->add_option("--trials", opt.trials, "randomized trials per check");
  cmd_verify->add_option("--seed", opt.seed, "deterministic seed");
  cmd_verify->add_option("-n", opt.n, "rank bound where applicable");
  cmd_verify->callback([&] {
    run = [&]() {
      opt.tau = rat_from_string(tau_text);
      return print_checks(run_suite(suite, opt), std::cout) ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e) ? 2 : 1;
  }
}
