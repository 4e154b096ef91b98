// Command-line front end: type info, reduced words, element evaluation and
// the verification suites, all reported as JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include "daha/expr.hpp"
#include "daha/involution.hpp"
#include "daha/lemmas.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace daha;

namespace {

json rat_json(const Rat& r) {
  if (is_integer(r)) return json(r.numerator());
  return json(to_string(r));
}

json vec_json(const IntVec& v) { return json(v); }

json check_json(const Check& c) {
  json out{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
  if (!c.witness.empty()) out["witness"] = c.witness;
  return out;
}

json lemma_json(const std::string& label, const LemmaReport& r) {
  return json{{"type", label},
              {"check", r.id},
              {"status", r.status},
              {"notes", r.notes}};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count() / 1e3;
}

int cmd_info(const std::string& label) {
  auto d = load_cartan_datum(label);
  json out;
  out["type"] = d.label;
  out["rank"] = d.n;
  out["cartan_matrix"] = d.a;
  out["marks"] = d.marks;
  out["comarks"] = d.comarks;
  json dd = json::array(), ee = json::array();
  for (int j = 0; j <= d.n; ++j) {
    dd.push_back(rat_json(d.d[j]));
    ee.push_back(rat_json(d.e[j]));
  }
  out["d"] = dd;
  out["e"] = ee;
  out["p"] = d.p;
  out["m"] = d.m;
  json gram = json::array();
  for (const auto& row : d.gram) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_json(x));
    gram.push_back(r);
  }
  out["gram"] = gram;
  out["theta"] = d.theta.str();
  out["theta_s"] = d.theta_s.str();
  json roots = json::array();
  for (const auto& beta : d.pos_roots)
    roots.push_back(json{{"coords", vec_json(beta)},
                         {"root", d.from_qhat(beta).str()}});
  out["positive_roots"] = roots;
  out["dual_type"] = iota_datum(d).label;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_word(const std::string& label, const std::string& expr) {
  auto d = load_cartan_datum(label);
  auto w = parse_weyl_expr(d, expr);
  auto word = reduced_word(d, w);
  json jword = json::array();
  for (int j : word) jword.push_back(j);
  json invs = json::array();
  for (const auto& root : inversion_set(d, w))
    invs.push_back(json{{"coords", vec_json(root)},
                        {"root", d.from_q(root).str()}});
  json out{{"type", d.label},
           {"input", expr},
           {"word", jword},
           {"length", length(d, w)},
           {"inversions", invs}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_eval(const std::string& label, const std::string& expr) {
  auto d = load_cartan_datum(label);
  auto h = parse_daha_expr(d, expr);
  json terms = json::array();
  for (const auto& [key, coeff] : h.terms) {
    json word = json::array();
    for (int j : key.word) word.push_back(j);
    terms.push_back(json{{"beta", vec_json(key.beta)},
                         {"u_word", word},
                         {"coeff", coeff.str()}});
  }
  json out{{"type", d.label}, {"input", expr}, {"terms", terms}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify_involution(const std::string& label, int samples,
                          std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  auto d = load_cartan_datum(label);
  auto rep = verify_theorem2(d);
  if (samples > 0) {
    auto hom = verify_homomorphism_samples(d, samples, seed);
    rep.checks.insert(rep.checks.end(), hom.checks.begin(), hom.checks.end());
  }
  json checks = json::array();
  bool pass = true;
  for (const auto& c : rep.checks) {
    checks.push_back(check_json(c));
    pass = pass && c.pass;
  }
  json out{{"type", rep.label},
           {"iota_type", rep.iota_label},
           {"checks", checks},
           {"elapsed", seconds_since(t0)}};
  std::cout << out.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_verify_lemmas(const std::string& label) {
  auto d = load_cartan_datum(label);
  bool bad = false;
  for (const auto& rep : verify_all_lemmas(d)) {
    std::cout << lemma_json(d.label, rep).dump() << "\n";
    bad = bad || rep.status == "fail";
  }
  return bad ? 1 : 0;
}

struct AllConfig {
  std::vector<std::string> types;
  int samples = 200;
  std::uint64_t seed = 1;
  int maxlen = 4;
};

AllConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  AllConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "types") {
      std::string tok;
      for (char ch : val + ",") {
        if (ch == ',' || ch == ' ') {
          if (!tok.empty()) cfg.types.push_back(tok);
          tok.clear();
        } else {
          tok += ch;
        }
      }
    } else if (key == "samples") {
      cfg.samples = std::stoi(val);
    } else if (key == "seed") {
      cfg.seed = std::stoull(val);
    } else if (key == "maxlen") {
      cfg.maxlen = std::stoi(val);
    } else {
      throw std::runtime_error("unknown config key: " + key);
    }
  }
  if (cfg.types.empty()) cfg.types = supported_labels();
  return cfg;
}

int cmd_verify_all(const std::string& config_path) {
  auto cfg = parse_config(config_path);
  bool bad = false;
  for (const auto& label : cfg.types) {
    auto d = load_cartan_datum(label);

    // length cross-validation up to the configured enumeration bound
    {
      bool ok = true;
      for (const auto& w : enumerate_by_length(d, cfg.maxlen)) {
        int l = length(d, w);
        ok = ok && static_cast<int>(inversion_set(d, w).size()) == l &&
             length_formula(d, w.fin, w.mu) == l;
      }
      std::cout << json{{"type", label},
                        {"check", "length_cross_validation"},
                        {"maxlen", cfg.maxlen},
                        {"status", ok ? "pass" : "fail"}}
                       .dump()
                << "\n";
      bad = bad || !ok;
    }

    auto rep = verify_theorem2(d);
    for (const auto& c : rep.checks) {
      json line = check_json(c);
      line["type"] = label;
      line["check"] = c.name;
      line.erase("name");
      std::cout << line.dump() << "\n";
      bad = bad || !c.pass;
    }
    if (cfg.samples > 0) {
      auto hom = verify_homomorphism_samples(d, cfg.samples, cfg.seed);
      for (const auto& c : hom.checks) {
        json line = check_json(c);
        line["type"] = label;
        line["check"] = c.name;
        line.erase("name");
        std::cout << line.dump() << "\n";
        bad = bad || !c.pass;
      }
    }
    for (const auto& rep2 : verify_all_lemmas(d)) {
      std::cout << lemma_json(label, rep2).dump() << "\n";
      bad = bad || rep2.status == "fail";
    }
  }
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact affine Hecke algebra toolkit"};
  app.require_subcommand(1);

  std::string label, expr, config_path;
  int samples = 0;
  std::uint64_t seed = 1;

  auto* info = app.add_subcommand("info", "print the type datum as JSON");
  info->add_option("label", label, "affine type label, e.g. G2~")->required();

  auto* word = app.add_subcommand("word", "reduced word of a Weyl element");
  word->add_option("label", label)->required();
  word->add_option("expr", expr, "products of s0..sn and l[...]")->required();

  auto* eval = app.add_subcommand("eval", "normal form of an algebra element");
  eval->add_option("label", label)->required();
  eval->add_option("expr", expr, "generator expression")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto* inv = verify->add_subcommand("involution", "duality transport checks");
  inv->add_option("label", label)->required();
  inv->add_option("--samples", samples, "extra random homomorphism samples");
  inv->add_option("--seed", seed, "sampling seed");
  auto* lem = verify->add_subcommand("lemmas", "combinatorial lemma suite");
  lem->add_option("label", label)->required();
  auto* all = verify->add_subcommand("all", "every suite over a config file");
  all->add_option("--config", config_path, "key = value config file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(label);
    if (*word) return cmd_word(label, expr);
    if (*eval) return cmd_eval(label, expr);
    if (*inv) return cmd_verify_involution(label, samples, seed);
    if (*lem) return cmd_verify_lemmas(label);
    if (*all) return cmd_verify_all(config_path);
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
