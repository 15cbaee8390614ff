#include "sigmakl/cli.hpp"

#include "sigmakl/canonical.hpp"
#include "sigmakl/cells.hpp"
#include "sigmakl/kl.hpp"
#include "sigmakl/serialize.hpp"
#include "sigmakl/specialize.hpp"
#include "sigmakl/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace sigmakl::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string type;
  std::string twisted;
  std::optional<int> max_length;
  std::string format = "json";
  int jobs = 1;
  bool classic = false;
  bool experimental = false;
  bool cells = false;
  std::size_t cell_cap = kDefaultCellCap;
  std::string out;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--type", cfg.type, "Type label, e.g. A3, B2, D4, I2(5), A1xA2")->required();
  cmd->add_option("--twisted", cfg.twisted, "Diagram automorphism, e.g. delta=2,1,0");
  cmd->add_option("--max-length", cfg.max_length, "Only report w with l(w) <= L")->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--classic", cfg.classic, "Also emit classical KL polynomials");
  cmd->add_flag("--experimental", cfg.experimental, "Allow non-crystallographic Coxeter types");
  cmd->add_option("--out", cfg.out, "Write output to this file");
}

CoxeterSystem make_system(const RunConfig& cfg) {
  SystemOptions opt;
  opt.experimental = cfg.experimental;
  if (!cfg.twisted.empty()) opt.delta = parse_delta(cfg.twisted);
  CoxeterSystem sys = CoxeterSystem::from_label(cfg.type, opt);
  sys.enumerate_all();
  return sys;
}

bool within(const RunConfig& cfg, int length) { return !cfg.max_length || length <= *cfg.max_length; }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string rational_text(const Rational& r) { return r.str(); }

nlohmann::ordered_json rational_json(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).convert_to<long long>();
  return r.str();
}

std::string cmd_table(const RunConfig& cfg) {
  const CoxeterSystem sys = make_system(cfg);
  const InvolutionModule mod(sys);
  const SigmaKL sigma(mod, CanonicalMethod::Recursive, cfg.jobs);
  std::optional<KLTable> kl;
  if (cfg.classic) kl.emplace(sys, cfg.jobs);

  std::ostringstream os;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  if (cfg.format == "csv") os << "y_word,w_word,poly" << (cfg.classic ? ",classic_poly" : "") << "\n";
  for (std::size_t w = 0; w < mod.dim(); ++w) {
    if (!within(cfg, mod.length(w))) continue;
    for (std::size_t y = 0; y <= w; ++y) {
      const Element ey = mod.involution(y), ew = mod.involution(w);
      if (!sys.bruhat_leq(ey, ew)) continue;
      const LaurentPoly ps = sigma.sigma_kl(y, w);
      if (cfg.format == "json") {
        nlohmann::ordered_json e;
        e["y"] = word_to_json(sys.word(ey));
        e["w"] = word_to_json(sys.word(ew));
        e["sigma"] = poly_to_json(ps);
        if (kl) e["classic"] = poly_to_json(kl->kl_poly(ey, ew));
        entries.push_back(std::move(e));
      } else if (cfg.format == "csv") {
        os << quoted(sys.format(ey)) << "," << quoted(sys.format(ew)) << "," << poly_to_csv(ps);
        if (kl) os << "," << poly_to_csv(kl->kl_poly(ey, ew));
        os << "\n";
      } else {
        os << sys.format(ey) << " " << sys.format(ew) << "  P^sigma = " << ps.to_string();
        if (kl) os << "  P = " << kl->kl_poly(ey, ew).to_string();
        os << "\n";
      }
    }
  }
  if (cfg.format != "json") return os.str();
  nlohmann::ordered_json j;
  j["system"] = system_to_json(sys);
  j["variable"] = "v";
  j["entries"] = std::move(entries);
  return dump(j);
}

std::string cmd_kl(const RunConfig& cfg) {
  const CoxeterSystem sys = make_system(cfg);
  const KLTable kl(sys, cfg.jobs);
  const auto& all = sys.enumerate_all();
  std::ostringstream os;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  if (cfg.format == "csv") os << "y_word,w_word,poly\n";
  for (Element w : all) {
    if (!within(cfg, sys.length(w))) continue;
    for (Element y : all) {
      if (sys.length(y) > sys.length(w)) break;
      if (!sys.bruhat_leq(y, w)) continue;
      const LaurentPoly& p = kl.kl_poly(y, w);
      if (cfg.format == "json") {
        nlohmann::ordered_json e;
        e["y"] = word_to_json(sys.word(y));
        e["w"] = word_to_json(sys.word(w));
        e["poly"] = poly_to_json(p);
        entries.push_back(std::move(e));
      } else if (cfg.format == "csv") {
        os << quoted(sys.format(y)) << "," << quoted(sys.format(w)) << "," << poly_to_csv(p) << "\n";
      } else {
        os << sys.format(y) << " " << sys.format(w) << "  P = " << p.to_string() << "\n";
      }
    }
  }
  if (cfg.format != "json") return os.str();
  nlohmann::ordered_json j;
  j["system"] = system_to_json(sys);
  j["variable"] = "v";
  j["entries"] = std::move(entries);
  return dump(j);
}

std::string status_of(const SuiteResult& r) {
  if (r.skipped) return "skip";
  if (r.passed) return "pass";
  return r.advisory ? "advisory-fail" : "fail";
}

std::string cmd_verify(const RunConfig& cfg, bool& failed) {
  const CoxeterSystem sys = make_system(cfg);
  VerifyOptions opt;
  opt.jobs = cfg.jobs;
  opt.cell_cap = cfg.cell_cap;
  if (cfg.cells) opt.cells = Toggle::On;
  const auto results = run_verification(sys, opt);
  failed = !all_passed(results);

  const SuiteResult* first = nullptr;
  for (const auto& r : results) {
    if (!r.passed && !r.advisory && !first) first = &r;
  }
  nlohmann::ordered_json cex;
  if (first) {
    cex["suite"] = first->name;
    cex["detail"] = first->note;
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["system"] = system_to_json(sys);
    j["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json s;
      s["name"] = r.name;
      s["status"] = status_of(r);
      s["count"] = r.count;
      s["advisory"] = r.advisory;
      s["note"] = r.note;
      j["suites"].push_back(std::move(s));
    }
    j["passed"] = !failed;
    j["counterexample"] = first ? cex : nlohmann::ordered_json(nullptr);
    return dump(j);
  }
  if (cfg.format == "csv") {
    os << "suite,status,count,note\n";
    for (const auto& r : results) os << r.name << "," << status_of(r) << "," << r.count << "," << quoted(r.note) << "\n";
    return os.str();
  }
  os << sys.type_label() << (sys.twisted() ? " (twisted)" : "") << ": |W| = " << sys.order()
     << ", |I| = " << sys.twisted_involutions().size() << "\n";
  for (const auto& r : results) {
    os << status_of(r) << "  " << r.name << "  " << r.count;
    if (!r.note.empty()) os << "  " << r.note;
    os << "\n";
  }
  os << (failed ? "verification failed\n" : "all suites passed\n");
  if (first) os << "counterexample: " << cex.dump() << "\n";
  return os.str();
}

std::string cmd_character(const RunConfig& cfg, bool& failed) {
  const CoxeterSystem sys = make_system(cfg);
  const InvolutionModule mod(sys);
  const WModuleM1 m1(mod);
  const auto rows = m1.class_function_table();
  failed = false;
  for (const auto& r : rows) failed = failed || r.chi_m1 != r.chi_induced;

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["system"] = system_to_json(sys);
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json c;
      c["class_rep_word"] = word_to_json(r.rep_word);
      c["class_size"] = r.class_size;
      c["chi_m1"] = rational_json(r.chi_m1);
      c["chi_induced"] = rational_json(r.chi_induced);
      j["classes"].push_back(std::move(c));
    }
    j["equal"] = !failed;
    return dump(j);
  }
  if (cfg.format == "csv") {
    os << "class_rep_word,class_size,chi_m1,chi_induced\n";
    for (const auto& r : rows) {
      os << quoted(format_word(r.rep_word)) << "," << r.class_size << "," << rational_text(r.chi_m1) << ","
         << rational_text(r.chi_induced) << "\n";
    }
    return os.str();
  }
  for (const auto& r : rows) {
    os << format_word(r.rep_word) << "  size " << r.class_size << "  chi_M1 " << rational_text(r.chi_m1)
       << "  chi_induced " << rational_text(r.chi_induced) << "\n";
  }
  os << (failed ? "characters differ\n" : "characters equal\n");
  return os.str();
}

std::string cmd_cells(const RunConfig& cfg) {
  const CoxeterSystem sys = make_system(cfg);
  const bool forced = cfg.cell_cap != kDefaultCellCap;
  if (sys.rank() > 4 && !forced) throw UsageError("cells are disabled for rank > 4; pass --cell-cap to enable");
  if (sys.order() > cfg.cell_cap) {
    throw UsageError("cells: |W| = " + std::to_string(sys.order()) + " exceeds --cell-cap " +
                     std::to_string(cfg.cell_cap));
  }
  const KLTable kl(sys, cfg.jobs);
  const InvolutionModule mod(sys);
  const CellPartition cp = compute_cells(kl, cfg.cell_cap);
  const auto counts = involutions_per_cell(cp, mod);

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["system"] = system_to_json(sys);
    j["cells"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < cp.cells.size(); ++i) {
      nlohmann::ordered_json c;
      c["size"] = cp.cells[i].size();
      c["involution_count"] = counts[i];
      c["representatives"] = nlohmann::ordered_json::array();
      for (Element x : cp.cells[i]) {
        if (mod.contains(x)) c["representatives"].push_back(word_to_json(sys.word(x)));
      }
      j["cells"].push_back(std::move(c));
    }
    return dump(j);
  }
  if (cfg.format == "csv") os << "cell,size,involution_count,representatives\n";
  for (std::size_t i = 0; i < cp.cells.size(); ++i) {
    std::string reps;
    for (Element x : cp.cells[i]) {
      if (!mod.contains(x)) continue;
      if (!reps.empty()) reps += ' ';
      reps += sys.format(x);
    }
    if (cfg.format == "csv") {
      os << i << "," << cp.cells[i].size() << "," << counts[i] << "," << quoted(reps) << "\n";
    } else {
      os << "cell " << i << "  size " << cp.cells[i].size() << "  involutions " << counts[i] << "  " << reps << "\n";
    }
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Kazhdan-Lusztig polynomials for involutions in Weyl groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto* table = app.add_subcommand("table", "P^sigma table over pairs of involutions");
  auto* kl = app.add_subcommand("kl", "Classical KL table over W");
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  auto* character = app.add_subcommand("character", "Characters of the u = 1 module");
  auto* cells = app.add_subcommand("cells", "Two-sided cells and involution counts");
  for (auto* cmd : {table, kl, verify, character, cells}) add_common(cmd, cfg);
  verify->add_flag("--cells", cfg.cells, "Force the cells suite on");
  for (auto* cmd : {verify, cells}) {
    cmd->add_option("--cell-cap", cfg.cell_cap, "Largest |W| for cell computations")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> argv_store{"sigmakl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string text;
    bool failed = false;
    if (*table) {
      text = cmd_table(cfg);
    } else if (*kl) {
      text = cmd_kl(cfg);
    } else if (*verify) {
      text = cmd_verify(cfg, failed);
    } else if (*character) {
      text = cmd_character(cfg, failed);
    } else {
      text = cmd_cells(cfg);
    }
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw UsageError("cannot open " + cfg.out + " for writing");
      f << text;
    }
    return failed ? kExitInvariant : kExitOk;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CoxeterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sigmakl::cli
