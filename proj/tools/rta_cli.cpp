#include <array>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rta/checks.hpp"
#include "rta/classify.hpp"
#include "rta/closure.hpp"
#include "rta/gate.hpp"

namespace {

using namespace rta;

Gate load_gate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open gate file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  return gate_from_json(j);
}

std::vector<Gate> load_gates(const std::vector<std::string>& paths) {
  std::vector<Gate> gates;
  gates.reserve(paths.size());
  for (const auto& p : paths) gates.push_back(load_gate(p));
  return gates;
}

// pads every gate to the requested arity; rejects wider gates
std::vector<Gate> at_arity(std::vector<Gate> gates, int n) {
  for (Gate& g : gates) {
    if (g.arity() > n)
      throw ParseError("gate arity " + std::to_string(g.arity()) +
                       " exceeds --arity " + std::to_string(n));
    if (g.arity() < n)
      g = parallel_compose(g, identity_gate(g.alphabet(), n - g.arity()));
  }
  return gates;
}

std::array<int, 3> parse_triple(const std::string& text, int k) {
  std::array<int, 3> out{};
  std::stringstream ss(text);
  std::string part;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, part, ','))
      throw ParseError("triple needs three comma-separated symbols: " + text);
    int v = 0;
    try {
      v = std::stoi(part);
    } catch (const std::exception&) {
      throw ParseError("bad symbol in triple: " + part);
    }
    if (v < 1 || v > k)
      throw ParseError("symbol " + part + " outside 1.." + std::to_string(k));
    out[static_cast<std::size_t>(i)] = v - 1;  // symbols are 1-indexed outside
  }
  std::string rest;
  if (std::getline(ss, rest, ','))
    throw ParseError("triple has more than three symbols: " + text);
  return out;
}

const char* mode_name(ClosureMode m) {
  switch (m) {
    case ClosureMode::plain: return "plain";
    case ClosureMode::borrow: return "borrow";
    default: return "ancilla";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact computation with reversible gates over finite alphabets"};
  app.require_subcommand(1);

  std::uint64_t cap = 0;
  app.add_option("--cap", cap,
                 "degree cap in points (also: RTA_DEGREE_CAP); minimum 256");
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable JSON output");
  std::uint64_t seed = BsgsOptions{}.seed;
  app.add_option("--seed", seed, "seed for randomized group construction");

  std::function<int()> action;

  auto sub = [&app](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();  // lets --json / --seed / --cap appear after the name
    return s;
  };

  // compose
  auto* compose = sub("compose", "parallel or serial composition");
  std::string op;
  compose->add_option("--op", op, "par or ser")->required();
  std::vector<std::string> compose_files;
  compose->add_option("files", compose_files, "two gate files")
      ->expected(2)
      ->required();
  compose->callback([&] {
    action = [&]() -> int {
      if (op != "par" && op != "ser")
        throw ParseError("--op must be par or ser");
      Gate f = load_gate(compose_files[0]);
      Gate g = load_gate(compose_files[1]);
      Gate r = op == "par" ? parallel_compose(f, g) : serial_compose(f, g);
      std::cout << gate_to_json(r).dump() << "\n";
      return 0;
    };
  });

  // sign
  auto* sign = sub("sign", "parity of a gate");
  std::string sign_file;
  sign->add_option("file", sign_file, "gate file")->required();
  sign->callback([&] {
    action = [&]() -> int {
      std::cout << (gate_even(load_gate(sign_file)) ? "even" : "odd") << "\n";
      return 0;
    };
  });

  // order
  auto* order = sub("order", "order of a generated slice");
  int order_arity = 0;
  order->add_option("--arity", order_arity, "slice arity")->required();
  std::vector<std::string> order_files;
  order->add_option("files", order_files, "gate files")->required();
  order->callback([&] {
    action = [&]() -> int {
      std::vector<Gate> gates = load_gates(order_files);
      int k = gates[0].alphabet();
      GateSet F(k, std::move(gates));
      BsgsOptions opts;
      opts.seed = seed;
      std::cout << slice_order(F, order_arity, opts).str() << "\n";
      return 0;
    };
  });

  // closure
  auto* closure = sub("closure", "closure slices within a window");
  std::string mode_str = "plain";
  closure->add_option("--mode", mode_str, "plain, borrow or ancilla");
  int max_arity = 0;
  closure->add_option("--max-arity", max_arity, "arity window top")->required();
  std::vector<std::string> closure_files;
  closure->add_option("files", closure_files, "gate files")->required();
  closure->callback([&] {
    action = [&]() -> int {
      ClosureMode mode;
      if (mode_str == "plain") mode = ClosureMode::plain;
      else if (mode_str == "borrow") mode = ClosureMode::borrow;
      else if (mode_str == "ancilla") mode = ClosureMode::ancilla;
      else throw ParseError("--mode must be plain, borrow or ancilla");
      std::vector<Gate> gates = load_gates(closure_files);
      int k = gates[0].alphabet();
      GateSet F(k, std::move(gates));
      BsgsOptions opts;
      opts.seed = seed;
      ClosureReport rep = windowed_closure(F, mode, max_arity, opts);
      if (json_out) {
        nlohmann::json j;
        j["k"] = rep.k;
        j["mode"] = mode_name(rep.mode);
        j["max_arity"] = rep.max_arity;
        j["rounds"] = rep.rounds;
        j["slices"] = nlohmann::json::array();
        for (const ClosureSlice& s : rep.slices) {
          nlohmann::json js;
          js["arity"] = s.arity;
          js["order"] = s.order.str();
          js["exact"] = s.exact;
          js["is_symmetric"] = s.is_symmetric;
          js["is_alternating"] = s.is_alternating;
          j["slices"].push_back(js);
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "k=" << rep.k << " mode=" << mode_name(rep.mode)
                  << " max-arity=" << rep.max_arity << " rounds=" << rep.rounds
                  << "\n";
        for (const ClosureSlice& s : rep.slices)
          std::cout << "arity " << s.arity << ": order " << s.order.str()
                    << (s.exact ? " exact" : " lower-bound")
                    << (s.is_symmetric ? " symmetric" : "")
                    << (s.is_alternating ? " alternating" : "") << "\n";
      }
      return 0;
    };
  });

  // classify
  auto* classify = sub("classify", "structure report for a slice");
  int classify_arity = 0;
  classify->add_option("--arity", classify_arity, "slice arity")->required();
  std::vector<std::string> classify_files;
  classify->add_option("files", classify_files, "gate files")->required();
  classify->callback([&] {
    action = [&]() -> int {
      std::vector<Gate> gates =
          at_arity(load_gates(classify_files), classify_arity);
      int k = gates[0].alphabet();
      GateSet F(k, std::move(gates));
      BsgsOptions opts;
      opts.seed = seed;
      std::cout << classify_slice(F, opts).to_json().dump() << "\n";
      return 0;
    };
  });

  // maxclass
  auto* maxclass = sub("maxclass", "decision table for one (k, arity)");
  int mc_alphabet = 0, mc_arity = 0;
  maxclass->add_option("--alphabet", mc_alphabet, "alphabet size")->required();
  maxclass->add_option("--arity", mc_arity, "arity index")->required();
  maxclass->callback([&] {
    action = [&]() -> int {
      std::cout << maximal_class_options(mc_alphabet, mc_arity).to_json().dump()
                << "\n";
      return 0;
    };
  });

  // witness3
  auto* witness =
      sub("witness3", "gate word carrying three triples to the canonical ones");
  int w_alphabet = 0;
  witness->add_option("--alphabet", w_alphabet, "alphabet size, at least 3")
      ->required();
  std::vector<std::string> triples;
  witness->add_option("--triples", triples,
                      "three comma-separated triples of 1-indexed symbols")
      ->expected(3)
      ->required();
  witness->callback([&] {
    action = [&]() -> int {
      std::array<int, 3> a = parse_triple(triples[0], w_alphabet);
      std::array<int, 3> b = parse_triple(triples[1], w_alphabet);
      std::array<int, 3> c = parse_triple(triples[2], w_alphabet);
      std::vector<Gate> word = three_transitive_witness(w_alphabet, a, b, c);
      nlohmann::json j;
      j["k"] = w_alphabet;
      j["length"] = word.size();
      j["word"] = nlohmann::json::array();
      for (const Gate& g : word) j["word"].push_back(gate_to_json(g));
      std::cout << j.dump() << "\n";
      return 0;
    };
  });

  // verify
  auto* verify = sub("verify", "run named ground-truth checks");
  std::vector<std::string> verify_ids;
  verify->add_option("ids", verify_ids, "check ids, or 'all'");
  verify->callback([&] {
    action = [&]() -> int {
      std::vector<std::string> ids = verify_ids;
      if (ids.empty() || (ids.size() == 1 && ids[0] == "all"))
        ids = check_ids();
      CheckContext ctx;
      ctx.seed = seed;
      bool all_pass = true;
      nlohmann::json report = nlohmann::json::array();
      for (const std::string& id : ids) {
        CheckResult r = run_check(id, ctx);
        all_pass = all_pass && r.pass;
        if (json_out) {
          report.push_back(r.to_json());
        } else {
          std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " "
                    << r.computed;
          if (!r.pass) std::cout << " | expected " << r.expected;
          std::cout << "\n";
        }
      }
      if (json_out) std::cout << report.dump() << "\n";
      return all_pass ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (const char* env = std::getenv("RTA_DEGREE_CAP")) {
    try {
      std::uint64_t v = std::stoull(env);
      if (cap == 0) cap = v;
    } catch (const std::exception&) {
      std::cerr << "RTA_DEGREE_CAP is not a number: " << env << "\n";
      return 2;
    }
  }
  if (cap != 0) {
    if (cap < 256) {
      std::cerr << "degree cap must be at least 256\n";
      return 2;
    }
    set_degree_cap(cap);
  }

  try {
    return action();
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
