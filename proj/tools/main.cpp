// Command line front end: compute the individual objects or run the whole
// cross-verification battery. --json switches to a stable machine-readable
// report; exit codes are 0 (success), 1 (verification failure), 2 (usage or
// domain error).

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dyckcells/chromatic.hpp"
#include "dyckcells/error.hpp"
#include "dyckcells/flags.hpp"
#include "dyckcells/hessenberg.hpp"
#include "dyckcells/json_io.hpp"
#include "dyckcells/orientations.hpp"
#include "dyckcells/symfunc.hpp"
#include "dyckcells/tymoczko.hpp"

using namespace dyckcells;
using nlohmann::json;

namespace {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // set on failure
};

struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::vector<CheckResult> checks;
};

json checks_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const CheckResult& c : checks) {
    json item = {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.pass) item["witness"] = c.witness;
    arr.push_back(item);
  }
  return arr;
}

void emit(const Report& report, bool as_json, const std::string& human) {
  if (as_json) {
    json j = {{"command", report.command},
              {"inputs", report.inputs},
              {"outputs", report.outputs},
              {"checks", checks_json(report.checks)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << human;
  }
}

json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<int64_t>(v.get_si());
  return v.get_str();
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string h_text;
  std::string mu_text;
  std::string basis_text = "M";
  int prime = 2;
  std::string var = "t";
  bool as_json = false;
};

int cmd_chromatic(const ComputeArgs& a) {
  auto h = HessenbergFunction::parse(a.h_text);
  QSymF x = chromatic_qsym(to_graph(h));
  Report r;
  r.command = "compute chromatic";
  r.inputs = {{"h", h.str()}, {"basis", a.basis_text}};
  std::ostringstream human;
  if (a.basis_text == "M") {
    r.outputs["qsym"] = to_json(x);
    human << "X_G for h=" << h.str() << " on the quasisymmetric M basis:\n";
    for (const auto& [alpha, c] : x.terms())
      human << "  M_" << composition_str(alpha) << ": " << c.str(a.var) << '\n';
  } else {
    auto basis = a.basis_text.size() == 1 ? basis_from_char(a.basis_text[0])
                                          : std::nullopt;
    if (!basis)
      fail(errc::parse_error, "basis must be one of M, m, e, h, s");
    SymF f = convert(qsym_to_sym(x), *basis);
    r.outputs["symf"] = to_json(f);
    human << "X_G for h=" << h.str() << " = " << f.str(a.var) << '\n';
  }
  emit(r, a.as_json, human.str());
  return 0;
}

int cmd_poincare(const ComputeArgs& a) {
  auto h = HessenbergFunction::parse(a.h_text);
  Partition mu = parse_partition(a.mu_text);
  Poly d = poincare_polynomial(h, mu);
  Report r;
  r.command = "compute poincare";
  r.inputs = {{"h", h.str()}, {"mu", mu.parts()}};
  r.outputs = {{"coeffs", to_json(d)},
               {"cells", int_json(d(Int(1)))}};
  std::ostringstream human;
  human << "d_" << mu.str() << "(" << a.var << ") = " << d.str(a.var) << "  ("
        << d(Int(1)).get_str() << " cells)\n";
  emit(r, a.as_json, human.str());
  return 0;
}

int cmd_product(const ComputeArgs& a) {
  auto h = HessenbergFunction::parse(a.h_text);
  Poly p = poincare_product(h);
  Report r;
  r.command = "compute product";
  r.inputs = {{"h", h.str()}};
  r.outputs = {{"coeffs", to_json(p)}};
  std::ostringstream human;
  human << "prod_i [h(i)-i+1]_" << a.var << " = " << p.str(a.var) << '\n';
  emit(r, a.as_json, human.str());
  return 0;
}

int cmd_orientations(const ComputeArgs& a) {
  auto h = HessenbergFunction::parse(a.h_text);
  Graph g = to_graph(h);
  auto orientations = enumerate_acyclic(g);
  Report r;
  r.command = "compute orientations";
  r.inputs = {{"h", h.str()}};
  json rows = json::array();
  Poly by_desc;
  std::ostringstream human;
  human << "acyclic orientations of h=" << h.str() << " ('1' = ascending arc, edges ";
  for (auto [i, j] : g.edges) human << '(' << i << ',' << j << ')';
  human << "):\n";
  for (const Orientation& o : orientations) {
    by_desc += Poly::monomial(o.desc_arcs());
    rows.push_back({{"bits", o.bits()},
                    {"asc", o.asc_arcs()},
                    {"desc", o.desc_arcs()},
                    {"min_extension", permutation_str(min_linear_extension(o))}});
    human << "  " << o.bits() << "  asc=" << o.asc_arcs()
          << " desc=" << o.desc_arcs()
          << "  min=" << permutation_str(min_linear_extension(o)) << '\n';
  }
  r.outputs = {{"orientations", rows},
               {"count", orientations.size()},
               {"by_desc", to_json(by_desc)}};
  human << "count = " << orientations.size() << ", sum of " << a.var
        << "^desc = " << by_desc.str(a.var) << '\n';
  emit(r, a.as_json, human.str());
  return 0;
}

int cmd_bijection(const ComputeArgs& a) {
  auto h = HessenbergFunction::parse(a.h_text);
  Graph g = to_graph(h);
  Report r;
  r.command = "compute bijection";
  r.inputs = {{"h", h.str()}};
  json rows = json::array();
  std::ostringstream human;
  human << "orientation <-> minimal extension <-> cell dimension for h="
        << h.str() << ":\n";
  for (const Orientation& o : enumerate_acyclic(g)) {
    Permutation sigma = min_linear_extension(o);
    Filling cell(Partition({g.n}), {sigma});
    int dim = h_inversions(cell, h);
    rows.push_back({{"bits", o.bits()},
                    {"sigma", permutation_str(sigma)},
                    {"dimension", dim}});
    human << "  " << o.bits() << "  sigma=" << permutation_str(sigma)
          << "  dim=" << dim << '\n';
  }
  r.outputs = {{"rows", rows}};
  emit(r, a.as_json, human.str());
  return 0;
}

int cmd_hall(const ComputeArgs& a) {
  auto h = HessenbergFunction::parse(a.h_text);
  Partition mu = parse_partition(a.mu_text);
  SymF wx = omega(qsym_to_sym(chromatic_qsym(to_graph(h))));
  Poly d = hall_scalar(wx, modified_hall_littlewood(mu));
  Report r;
  r.command = "compute hall";
  r.inputs = {{"h", h.str()}, {"mu", mu.parts()}};
  r.outputs = {{"coeffs", to_json(d)}};
  std::ostringstream human;
  human << "<omega X_G, Q~'_" << mu.str() << "> = " << d.str(a.var) << '\n';
  emit(r, a.as_json, human.str());
  return 0;
}

int cmd_flags(const ComputeArgs& a) {
  auto h = HessenbergFunction::parse(a.h_text);
  Partition mu = parse_partition(a.mu_text);
  Int count = count_points(h, mu, a.prime);
  Report r;
  r.command = "compute flags";
  r.inputs = {{"h", h.str()}, {"mu", mu.parts()}, {"prime", a.prime}};
  r.outputs = {{"count", int_json(count)}};
  std::ostringstream human;
  human << "flags over F_" << a.prime << " with N_mu V_i in V_h(i): "
        << count.get_str() << '\n';
  emit(r, a.as_json, human.str());
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  int n = 3;
  std::string level = "full";
  std::vector<int> primes = {2};
  std::string var = "t";
  bool as_json = false;
};

void check_equal(std::vector<CheckResult>& checks, const std::string& name,
                 const Poly& a, const Poly& b, const std::string& a_label,
                 const std::string& b_label, const std::string& var) {
  CheckResult c{name, a == b, ""};
  if (!c.pass)
    c.witness = a_label + " = " + a.str(var) + " but " + b_label + " = " +
                b.str(var);
  checks.push_back(std::move(c));
}

int cmd_verify(const VerifyArgs& a) {
  const bool run_full = a.level == "full";
  const bool run_flags = a.level == "flags" || (run_full && a.n <= 4);
  if (a.level != "full" && a.level != "flags")
    fail(errc::parse_error, "level must be 'full' or 'flags'");
  if (run_full && a.n > 6)
    fail(errc::too_large, "full verification supported for n <= 6");
  if (a.level == "flags" && a.n > 4)
    fail(errc::too_large, "flag verification supported for n <= 4");

  std::vector<CheckResult> checks;
  const auto hs = enumerate_hessenberg(a.n);
  const auto mus = partitions_of(a.n);

  for (const auto& h : hs) {
    const std::string tag = " h=" + h.str();
    Graph g = to_graph(h);

    if (run_full) {
      // V1: every route to the regular polynomial
      Poly product = poincare_product(h);
      check_equal(checks, "V1 cells vs product" + tag,
                  poincare_polynomial(h, Partition({a.n})), product, "cells",
                  "product", a.var);
      Poly by_desc;
      for (const Orientation& o : enumerate_acyclic(g))
        by_desc += Poly::monomial(o.desc_arcs());
      check_equal(checks, "V1 orientations vs product" + tag, by_desc, product,
                  "sum over orientations", "product", a.var);
      check_equal(checks, "V1 e-sum vs product" + tag, e_coefficient_sum(g),
                  product, "e-coefficient sum", "product", a.var);
      check_equal(checks, "V1 scalar route vs product" + tag,
                  e_coefficient_sum_via_hall(g), product, "<omega X, h_n>",
                  "product", a.var);

      // V2: scalar products against cell counts for every nilpotent type
      SymF wx = omega(qsym_to_sym(chromatic_qsym(g)));
      for (const Partition& mu : mus)
        check_equal(checks, "V2 scalar vs cells" + tag + " mu=" + mu.str(),
                    hall_scalar(wx, modified_hall_littlewood(mu)),
                    poincare_polynomial(h, mu), "scalar product", "cells",
                    a.var);

      // V3: bijection round trip and statistic bridge
      {
        CheckResult c{"V3 bijection" + tag, true, ""};
        std::map<std::vector<int>, int> minima;
        for (const Orientation& o : enumerate_acyclic(g)) {
          Permutation sigma = min_linear_extension(o);
          if (!(orientation_from_permutation(g, sigma) == o)) {
            c.pass = false;
            c.witness = "round trip failed at sigma=" + permutation_str(sigma);
            break;
          }
          if (!minima.emplace(sigma, o.desc_arcs()).second) {
            c.pass = false;
            c.witness = "duplicate minimum " + permutation_str(sigma);
            break;
          }
        }
        if (c.pass) {
          std::map<std::vector<int>, int> cells;
          for (const Filling& f : enumerate_fillings(h, Partition({a.n})))
            cells[f.reading_word()] = h_inversions(f, h);
          if (!(minima == cells)) {
            c.pass = false;
            c.witness = "minima with descent statistics do not match cells";
          }
        }
        checks.push_back(std::move(c));
      }

      // V4: the extension blocks partition the symmetric group
      {
        CheckResult c{"V4 partition of S_n" + tag, true, ""};
        std::set<Permutation> seen;
        Int total = 0;
        for (const Orientation& o : enumerate_acyclic(g))
          for (const Permutation& sigma : linear_extensions(o)) {
            ++total;
            if (!seen.insert(sigma).second) {
              c.pass = false;
              c.witness = permutation_str(sigma) + " appears in two blocks";
            }
          }
        if (c.pass && total != factorial(a.n)) {
          c.pass = false;
          c.witness = "blocks cover " + total.get_str() + " of " +
                      factorial(a.n).get_str() + " permutations";
        }
        checks.push_back(std::move(c));
      }
    }

    if (run_flags) {
      // V5: the finite-field oracle at the chosen primes
      for (const Partition& mu : mus)
        for (int p : a.primes) {
          Poly d = poincare_polynomial(h, mu);
          Int pts = count_points(h, mu, p);
          CheckResult c{"V5 flag oracle" + tag + " mu=" + mu.str() +
                            " p=" + std::to_string(p),
                        pts == d(Int(p)), ""};
          if (!c.pass)
            c.witness = "counted " + pts.get_str() + " flags but d_mu(" +
                        std::to_string(p) + ") = " + d(Int(p)).get_str();
          checks.push_back(std::move(c));
        }
    }
  }

  Report r;
  r.command = "verify";
  r.inputs = {{"n", a.n}, {"level", a.level}, {"primes", a.primes}};
  r.checks = std::move(checks);
  size_t failures = 0;
  for (const CheckResult& c : r.checks)
    if (!c.pass) ++failures;
  r.outputs = {{"hessenberg_functions", hs.size()},
               {"checks", r.checks.size()},
               {"failures", failures}};

  std::ostringstream human;
  for (const CheckResult& c : r.checks) {
    human << (c.pass ? "  pass  " : "  FAIL  ") << c.name << '\n';
    if (!c.pass) human << "         " << c.witness << '\n';
  }
  human << (failures == 0 ? "all checks passed" : "FAILURES DETECTED") << " ("
        << r.checks.size() << " checks, " << hs.size()
        << " Hessenberg functions)\n";
  emit(r, a.as_json, human.str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of Dyck graphs and Hessenberg cells"};
  app.require_subcommand(1);
  app.fallthrough();
  // --h is taken by the Hessenberg function; keep help on --help only
  app.set_help_flag("--help", "print this help message and exit");

  bool as_json = false;
  std::string var = "t";
  app.add_flag("--json", as_json, "machine-readable JSON report");
  app.add_option("--var", var, "formal variable name in human output (t or q)")
      ->check(CLI::IsMember({"t", "q"}));

  ComputeArgs ca;
  VerifyArgs va;

  CLI::App* compute = app.add_subcommand("compute", "compute a single object");
  compute->set_help_flag("--help", "print this help message and exit");
  compute->require_subcommand(1);
  compute->fallthrough();

  auto add_h = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option("--h", ca.h_text, "Hessenberg function, e.g. 233 or 2,3,3")
        ->required();
    cmd->fallthrough();
  };

  CLI::App* chromatic_cmd =
      compute->add_subcommand("chromatic", "X_G in a chosen basis");
  add_h(chromatic_cmd);
  chromatic_cmd->add_option("--basis", ca.basis_text,
                            "M (quasisymmetric), m, e, h or s");

  CLI::App* poincare_cmd =
      compute->add_subcommand("poincare", "cell generating polynomial d_mu");
  add_h(poincare_cmd);
  poincare_cmd->add_option("--mu", ca.mu_text, "nilpotent type, e.g. 21")->required();

  CLI::App* product_cmd =
      compute->add_subcommand("product", "product of t-integers [h(i)-i+1]");
  add_h(product_cmd);

  CLI::App* orientations_cmd = compute->add_subcommand(
      "orientations", "acyclic orientations with statistics");
  add_h(orientations_cmd);

  CLI::App* bijection_cmd = compute->add_subcommand(
      "bijection", "orientation <-> minimal extension <-> dimension table");
  add_h(bijection_cmd);

  CLI::App* hall_cmd = compute->add_subcommand(
      "hall", "scalar product of omega X_G with the modified Hall-Littlewood");
  add_h(hall_cmd);
  hall_cmd->add_option("--mu", ca.mu_text, "nilpotent type")->required();

  CLI::App* flags_cmd =
      compute->add_subcommand("flags", "brute-force flag count over F_p");
  add_h(flags_cmd);
  flags_cmd->add_option("--mu", ca.mu_text, "nilpotent type")->required();
  flags_cmd->add_option("--prime", ca.prime, "field size, a prime <= 13");

  CLI::App* verify = app.add_subcommand("verify", "run the cross checks");
  verify->set_help_flag("--help", "print this help message and exit");
  verify->add_option("--n", va.n, "size of the Hessenberg functions")->required();
  verify->add_option("--level", va.level, "full (n <= 6) or flags (n <= 4)");
  verify->add_option("--prime", va.primes,
                     "primes for the flag oracle (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ca.as_json = as_json;
  ca.var = var;
  va.as_json = as_json;
  va.var = var;

  try {
    if (chromatic_cmd->parsed()) return cmd_chromatic(ca);
    if (poincare_cmd->parsed()) return cmd_poincare(ca);
    if (product_cmd->parsed()) return cmd_product(ca);
    if (orientations_cmd->parsed()) return cmd_orientations(ca);
    if (bijection_cmd->parsed()) return cmd_bijection(ca);
    if (hall_cmd->parsed()) return cmd_hall(ca);
    if (flags_cmd->parsed()) return cmd_flags(ca);
    if (verify->parsed()) return cmd_verify(va);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
