#include "gcoh/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcoh/gf2poly.hpp"
#include "gcoh/grassmann.hpp"
#include "gcoh/groebner.hpp"
#include "gcoh/normal_bundle.hpp"
#include "gcoh/obstruction.hpp"
#include "gcoh/steenrod.hpp"

namespace gcoh {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timing = false;
};

struct Output {
  std::ostream& out;
  const Global& g;
  std::string command;
  int n = 0;
  json results;
  std::vector<std::string> lines;
  bool ok = true;

  bool is_json() const { return g.format == "json"; }
  void line(std::string s) { lines.push_back(std::move(s)); }
};

void check_n(int n, int min_n) {
  if (n < min_n) throw UsageError("n must be at least " + std::to_string(min_n));
  if (const char* cap = std::getenv("GC_MAX_DEGREE")) {
    long limit = 0;
    try {
      limit = std::stol(cap);
    } catch (const std::exception&) {
      throw UsageError("GC_MAX_DEGREE is not an integer");
    }
    if (3L * n > limit) throw UsageError("3n = " + std::to_string(3 * n) + " exceeds GC_MAX_DEGREE");
  }
}

std::string label(const BasisIndex& ix) {
  return "g(" + std::to_string(ix.m) + "," + std::to_string(ix.l) + ")";
}

void cmd_gb(Output& o, int n, const std::string& source, bool check, bool chain) {
  check_n(n, 3);
  o.n = n;
  const auto closed = closed_basis(n);
  const auto idx = closed_basis_indices(n);
  if (check) {
    BuchbergerOptions opts;
    opts.chain_criterion = chain;
    opts.jobs = o.g.jobs;
    const auto gens = ideal_generators(n);
    const auto computed = auto_reduce(buchberger(gens, opts));
    const bool same = same_elements(computed, closed);
    o.ok = same;
    o.results = {{"identical", same}, {"closed_size", closed.size()}, {"buchberger_size", computed.size()}};
    o.line(same ? "identical" : "differ");
    o.line("closed\t" + std::to_string(closed.size()));
    o.line("buchberger\t" + std::to_string(computed.size()));
    return;
  }
  o.results = json::array();
  if (source == "closed") {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto& p = closed.elements()[i];
      o.results.push_back({{"m", idx[i].m}, {"l", idx[i].l}, {"poly", format_polynomial(p)}});
      o.line(label(idx[i]) + "\t" + format_polynomial(p));
    }
  } else {
    BuchbergerOptions opts;
    opts.chain_criterion = chain;
    opts.jobs = o.g.jobs;
    const auto gens = ideal_generators(n);
    const auto computed = auto_reduce(buchberger(gens, opts));
    for (std::size_t i = 0; i < computed.size(); ++i) {
      const auto& p = computed.elements()[i];
      o.results.push_back({{"index", i}, {"poly", format_polynomial(p)}});
      o.line(std::to_string(i) + "\t" + format_polynomial(p));
    }
  }
}

void cmd_reduce(Output& o, int n, const std::string& text, bool cofactors) {
  check_n(n, 3);
  o.n = n;
  const Polynomial p = parse_polynomial(text);
  const GrassmannRing ring(n);
  const DivisionResult d = ring.divide(p);
  o.results = {{"normal_form", format_polynomial(d.normal_form)}};
  o.line(format_polynomial(d.normal_form));
  if (cofactors) {
    json cj = json::array();
    for (std::size_t i = 0; i < d.cofactors.size(); ++i) {
      if (d.cofactors[i].is_zero()) continue;
      const auto& ix = ring.indices()[i];
      cj.push_back({{"m", ix.m}, {"l", ix.l}, {"cofactor", format_polynomial(d.cofactors[i])}});
      o.line(label(ix) + "\t" + format_polynomial(d.cofactors[i]));
    }
    o.results["cofactors"] = cj;
  }
}

void cmd_dims(Output& o, int n) {
  check_n(n, 3);
  o.n = n;
  const GrassmannRing ring(n);
  json dims = json::array();
  for (int d = 0; d <= ring.top_degree(); ++d) {
    dims.push_back(ring.graded_basis(d).size());
    o.line(std::to_string(d) + "\t" + std::to_string(ring.graded_basis(d).size()));
  }
  const bool poincare = poincare_check(n);
  o.ok = poincare;
  o.results = {{"dims", dims}, {"total", ring.dimension()}, {"poincare", poincare}};
  o.line("total\t" + std::to_string(ring.dimension()));
  o.line(std::string("poincare\t") + (poincare ? "match" : "mismatch"));
}

void cmd_sq(Output& o, int n, unsigned i, const std::string& text) {
  check_n(n, 3);
  o.n = n;
  const Polynomial p = parse_polynomial(text);
  const GrassmannRing ring(n);
  const Polynomial r = sq(ring, i, p);
  o.results = {{"i", i}, {"result", format_polynomial(r)}};
  o.line(format_polynomial(r));
}

void cmd_nu(Output& o, int n) {
  check_n(n, 3);
  o.n = n;
  const GrassmannRing ring(n);
  const auto table = normal_total_class(ring);
  json classes = json::object();
  o.line("r\t" + std::to_string(table.r));
  for (int i = 1; i <= ring.top_degree(); ++i) {
    const auto& c = table[i];
    if (c.is_zero() && i > 4) continue;
    classes[std::to_string(i)] = format_polynomial(c);
    o.line("w" + std::to_string(i) + "(nu)\t" + format_polynomial(c));
  }
  const auto top = top_nonzero(table);
  o.results = {{"r", table.r}, {"classes", classes}, {"top_nonzero", top.value_or(0)}};
  o.line("top\t" + std::to_string(top.value_or(0)));
}

void cmd_bound(Output& o, int n, std::optional<int> last) {
  check_n(n, 3);
  o.n = n;
  const int hi = last.value_or(n);
  if (hi < n) throw UsageError("empty range");
  check_n(hi, 3);
  o.results = json::array();
  for (int k = n; k <= hi; ++k) {
    const int b = immersion_lower_bound(k);
    o.results.push_back({{"n", k}, {"bound", b}});
    o.line(last ? std::to_string(k) + "\t" + std::to_string(b) : std::to_string(b));
  }
}

int cmd_verify(Output& o, int n, const std::string& id, bool all, bool list) {
  if (list) {
    o.results = json::array();
    for (const auto& info : lemma_registry()) {
      o.results.push_back({{"id", info.id}, {"hypothesis", info.hypothesis}, {"summary", info.summary}});
      o.line(info.id + "\t" + info.hypothesis + "\t" + info.summary);
    }
    return kExitOk;
  }
  if (all == !id.empty()) throw UsageError("give exactly one of a lemma id or --all");
  if (!id.empty() && !lemma_known(id)) throw UsageError("unknown lemma id: " + id);
  check_n(n, 3);
  o.n = n;
  const GrassmannRing ring(n);
  const LemmaVerifier verifier(ring);
  std::vector<LemmaReport> reports;
  if (all) {
    reports = verifier.verify_all(o.g.jobs);
  } else {
    reports.push_back(verifier.verify(id));
  }
  o.results = json::array();
  for (const auto& rep : reports) {
    json checks = json::array();
    o.line(std::string(rep.passed() ? "PASS " : "FAIL ") + rep.id);
    for (const auto& c : rep.checks) {
      checks.push_back({{"label", c.label}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
      o.line(std::string(c.passed ? "  ok    " : "  FAIL  ") + c.label +
             (c.passed ? "" : "  expected " + c.expected + ", got " + c.actual));
    }
    o.results.push_back({{"id", rep.id}, {"passed", rep.passed()}, {"checks", checks}});
    o.ok = o.ok && rep.passed();
  }
  if (reports.empty()) o.line("no lemma applies to n = " + std::to_string(n));
  return kExitOk;
}

void emit(Output& o, double ms) {
  if (o.is_json()) {
    json j = {{"command", o.command},
              {"engine_version", kEngineVersion},
              {"status", o.ok ? "ok" : "fail"},
              {"results", o.results}};
    if (o.n > 0) j["n"] = o.n;
    if (o.g.timing) j["timing_ms"] = ms;
    o.out << j.dump(2) << '\n';
    return;
  }
  for (const auto& l : o.lines) o.out << l << '\n';
  if (o.g.timing) o.out << "time_ms\t" << ms << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of the Grassmannian of 3-planes: Groebner bases, Steenrod squares, normal classes", "gcoh"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Accepted for reproducibility; no command uses randomness");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_flag("--timing", g.timing, "Report wall time");

  int n = 0;
  std::string source = "closed";
  bool check = false, chain = false, cofactors = false, all = false, list = false;
  std::string poly, lemma;
  unsigned sq_index = 0;
  std::optional<int> last;

  auto* gb = app.add_subcommand("gb", "Print the reduced Groebner basis");
  gb->add_option("n", n, "Grassmannian parameter")->required();
  gb->add_option("--source", source, "closed or buchberger")->check(CLI::IsMember({"closed", "buchberger"}));
  gb->add_flag("--check", check, "Compare the closed form with Buchberger's algorithm");
  gb->add_flag("--chain", chain, "Use the chain criterion in Buchberger's algorithm");

  auto* red = app.add_subcommand("reduce", "Normal form modulo the ideal");
  red->add_option("n", n)->required();
  red->add_option("poly", poly)->required();
  red->add_flag("--cofactors", cofactors, "Print the division cofactors");

  auto* dims = app.add_subcommand("dims", "Graded dimensions and Poincare check");
  dims->add_option("n", n)->required();

  auto* sqc = app.add_subcommand("sq", "Apply Sq^i");
  sqc->add_option("n", n)->required();
  sqc->add_option("i", sq_index)->required();
  sqc->add_option("poly", poly)->required();

  auto* nu = app.add_subcommand("nu", "Normal Stiefel-Whitney classes");
  nu->add_option("n", n)->required();

  auto* bound = app.add_subcommand("bound", "Immersion lower bound for n, or for each n in [n, m]");
  bound->add_option("n", n)->required();
  bound->add_option("m", last);

  auto* ver = app.add_subcommand("verify", "Verify lemma identities");
  ver->add_option("n", n);
  ver->add_option("id", lemma);
  ver->add_flag("--all", all, "Every lemma whose hypothesis holds for n");
  ver->add_flag("--list", list, "List lemma ids");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Output o{out, g, app.get_subcommands().front()->get_name(), 0, json(), {}, true};
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*gb) {
      cmd_gb(o, n, source, check, chain);
    } else if (*red) {
      cmd_reduce(o, n, poly, cofactors);
    } else if (*dims) {
      cmd_dims(o, n);
    } else if (*sqc) {
      cmd_sq(o, n, sq_index, poly);
    } else if (*nu) {
      cmd_nu(o, n);
    } else if (*bound) {
      cmd_bound(o, n, last);
    } else if (*ver) {
      if (!list && ver->count("n") == 0) throw UsageError("verify needs n");
      cmd_verify(o, n, lemma, all, list);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(o, ms);
  return o.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace gcoh
