// Command-line front end: root system dumps, Hurwitz orbits, element
// classification, lattice computations and the batch theorem verifier.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxkit/json_io.hpp"
#include "coxkit/lattice.hpp"
#include "coxkit/verify.hpp"

using namespace coxkit;

namespace {

std::vector<std::int32_t> parse_ids(const std::string& s) {
  std::vector<std::int32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void print_report(const VerificationReport& r, bool as_json) {
  if (as_json) {
    std::cout << report_json(r).dump(2) << "\n";
    return;
  }
  std::cout << "[" << (r.success() ? "PASS" : "FAIL") << "] theorem "
            << r.theorem << " on " << r.group_label << " (" << r.scope
            << "): " << r.elements_checked << " checked, "
            << r.failures.size() << " failures, " << r.caps_hit
            << " caps hit, " << r.elapsed_ms << " ms\n";
  for (const auto& f : r.failures) {
    std::cout << "  element " << f.element << ": expected " << f.expected
              << ", got " << f.got;
    if (!f.witness.empty()) std::cout << " (witness " << f.witness << ")";
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite dual Coxeter systems: factorizations, Hurwitz orbits, "
               "quasi-Coxeter classification and theorem verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string type_label = "A";
  int rank = 2;
  bool as_json = false;
  int threads = 1;
  std::uint64_t cap = default_orbit_cap();
  app.add_flag("--json", as_json, "emit JSON");
  app.add_option("--threads", threads, "worker threads for batch verification");
  app.add_option("--cap", cap, "orbit size cap (default 1e7 or HURWITZ_CAP)");

  auto add_group_opts = [&](CLI::App* cmd) {
    cmd->add_option("--type", type_label, "type label: A,B,D,E,F,H,I2")
        ->required();
    cmd->add_option("--rank", rank, "rank (m for I2)")->required();
  };

  auto* roots_cmd = app.add_subcommand("roots", "dump a root system");
  add_group_opts(roots_cmd);

  auto* orbit_cmd =
      app.add_subcommand("orbit", "Hurwitz orbit of a reflection word");
  add_group_opts(orbit_cmd);
  std::string word_str;
  bool coverage = false;
  orbit_cmd->add_option("--word", word_str,
                        "comma-separated positive-root indices")
      ->required();
  orbit_cmd->add_flag("--coverage", coverage, "report last-slot coverage");

  auto* classify_cmd =
      app.add_subcommand("classify", "classify one element");
  add_group_opts(classify_cmd);
  std::string element_str;
  classify_cmd
      ->add_option("--element", element_str,
                   "reflection word (comma-separated positive-root indices)")
      ->required();

  auto* lattice_cmd =
      app.add_subcommand("lattice", "root lattice computations");
  add_group_opts(lattice_cmd);
  std::string roots_str, sup_str, op = "closure";
  lattice_cmd->add_option("--roots", roots_str, "root indices")->required();
  lattice_cmd->add_option("--op", op, "closure | index | cindex");
  lattice_cmd->add_option("--sup", sup_str,
                          "superset roots for --op index (default: simple "
                          "system of the host)");

  auto* dn_cmd = app.add_subcommand(
      "dn-intersections", "maximal parabolic intersections in D_n");
  int dn_rank = 6;
  dn_cmd->add_option("--rank", dn_rank, "n for D_n")->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "batch verification of a theorem");
  std::string theorem = "1", scope_str = "auto";
  int samples = 200;
  std::uint64_t seed = 7;
  verify_cmd->add_option("--theorem", theorem,
                         "1 | 2 | 6.1 | 5.13 | 7.1 | d4 | table | coverage");
  verify_cmd->add_option("--type", type_label, "type label");
  verify_cmd->add_option("--rank", rank, "rank");
  verify_cmd->add_option(
      "--scope", scope_str,
      "exhaustive | class-reps | sampled (default: picked by group size)");
  verify_cmd->add_option("--samples", samples, "sample count (sampled scope)");
  verify_cmd->add_option("--seed", seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots_cmd->parsed()) {
      auto rs = RootSystem::build(parse_family(type_label), rank);
      if (as_json) {
        std::cout << root_system_json(*rs).dump(2) << "\n";
      } else {
        std::cout << rs->label() << ": " << rs->num_roots() << " roots, "
                  << rs->num_positive() << " positive, ambient dimension "
                  << rs->ambient_dim() << ", simple root ids:";
        for (auto id : rs->simple_ids()) std::cout << " " << id;
        std::cout << "\n";
      }
      return 0;
    }

    if (orbit_cmd->parsed()) {
      CoxGroup g = CoxGroup::build(parse_family(type_label), rank);
      Word word = parse_ids(word_str);
      DescentOracle oracle(g);
      GroupElement w = g.from_word(word);
      int len = oracle.get(w).length;
      if (len != int(word.size()))
        throw std::invalid_argument("word is not reduced: product has length " +
                                    std::to_string(len));
      TransitivityCheck t = is_hurwitz_transitive(oracle, w, cap);
      nlohmann::json out{{"product_len", len},
                         {"red_count", t.red_count},
                         {"orbit_size", t.orbit_size},
                         {"transitive", t.transitive()}};
      if (t.indeterminate()) out["transitive"] = nullptr;
      if (coverage) {
        CoverageCheck cov = last_slot_coverage(g, word, cap);
        out["coverage"] = cov.covered;
        out["coverage_complete"] = cov.complete;
      }
      std::cout << out.dump(2) << "\n";
      return t.indeterminate() ? 2 : 0;
    }

    if (classify_cmd->parsed()) {
      CoxGroup g = CoxGroup::build(parse_family(type_label), rank);
      DescentOracle oracle(g);
      GroupElement w = g.from_word(parse_ids(element_str));
      ClassificationRecord rec = classify_element(oracle, w, cap);
      std::cout << classification_json(g, rec).dump(2) << "\n";
      return rec.transitivity.indeterminate() ? 2 : 0;
    }

    if (lattice_cmd->parsed()) {
      auto rs = RootSystem::build(parse_family(type_label), rank);
      CoxGroup g = CoxGroup::from_roots(rs);
      auto ids = parse_ids(roots_str);
      nlohmann::json out{{"group", rs->label()}, {"op", op}};
      if (op == "closure") {
        out["closure"] = subsystem_closure(g, ids);
      } else if (op == "index") {
        std::vector<std::int32_t> sup =
            sup_str.empty()
                ? std::vector<std::int32_t>(rs->simple_ids().begin(),
                                            rs->simple_ids().end())
                : parse_ids(sup_str);
        LatticeIndex li = lattice_index(*rs, ids, sup);
        if (li.finite)
          out["index"] = li.index.get_str();
        else
          out["index"] = "infinite";
      } else if (op == "cindex") {
        out["connection_index"] = connection_index(*rs, ids).get_str();
      } else {
        throw std::invalid_argument("unknown lattice op '" + op + "'");
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (dn_cmd->parsed()) {
      auto rep = dn_maximal_parabolic_intersections(dn_rank, dn_rank <= 5);
      std::cout << dn_report_json(rep).dump(2) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions opt;
      opt.cap = cap;
      opt.threads = threads;
      opt.samples = samples;
      opt.seed = seed;
      if (scope_str == "auto") {
        // Exhaustive where the whole group fits comfortably, class
        // representatives for the mid-size groups, sampled coverage for
        // E7/E8.
        Family f = parse_family(type_label);
        std::uint64_t order = coxeter_order(f, rank);
        if (f == Family::E && rank >= 7)
          opt.scope = Scope::sampled;
        else if (order <= 2000)
          opt.scope = Scope::exhaustive;
        else
          opt.scope = Scope::class_reps;
      } else {
        opt.scope = parse_scope(scope_str);
      }
      VerificationReport r;
      if (theorem == "table") {
        r = verify_connection_table(opt);
      } else if (theorem == "d4") {
        r = verify_d4_example(opt);
      } else if (theorem == "7.1") {
        r = verify_prop_7_1(rank, opt);
      } else {
        CoxGroup g = CoxGroup::build(parse_family(type_label), rank);
        if (theorem == "1" || theorem == "1.1")
          r = verify_theorem_1(g, opt);
        else if (theorem == "2" || theorem == "1.2")
          r = verify_theorem_2(g, opt);
        else if (theorem == "6.1")
          r = verify_theorem_6_1(g, opt);
        else if (theorem == "5.13")
          r = verify_kluitmann(g, opt);
        else if (theorem == "coverage")
          r = verify_coverage_class_reps(g, opt);
        else
          throw std::invalid_argument("unknown theorem '" + theorem + "'");
      }
      print_report(r, as_json);
      return r.success() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
