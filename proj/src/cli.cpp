#include "designcodes/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "designcodes/cache.hpp"
#include "designcodes/constructions.hpp"
#include "designcodes/design_code.hpp"
#include "designcodes/verifier.hpp"

namespace dcodes {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Globals {
  std::string budget;
  bool json = false;
  std::string cache_dir;
  unsigned threads = 0;

  ComputeOptions options() const {
    ComputeOptions o;
    if (!budget.empty()) {
      try {
        o.budget = BigInt(budget);
      } catch (const std::exception&) {
        throw BadParams("--budget must be a nonnegative integer");
      }
    }
    o.threads = threads;
    return o;
  }
};

// Exit status for a batch of reports: a completed check that failed wins over
// a refusal.
int status_of(const std::vector<Json>& reports) {
  bool failed = false, refused = false;
  for (const auto& r : reports) {
    if (r.value("pass", false)) continue;
    const auto e = r.value("error", std::string());
    if (e.rfind("budget_exceeded", 0) == 0) refused = true;
    else failed = true;
  }
  return failed ? kCheckFailed : refused ? kBudget : kAllPass;
}

void print_reports(const std::vector<Json>& reports, bool json, std::ostream& out) {
  if (json) {
    out << Json(reports).dump(2) << '\n';
    return;
  }
  for (const auto& r : reports) {
    out << r["claim_id"].get<std::string>();
    for (const auto& [k, v] : r["params"].items()) out << ' ' << k << '=' << v.dump();
    out << (r["pass"].get<bool>() ? "  pass" : "  FAIL");
    if (r.contains("error")) out << "  (" << r["error"].get<std::string>() << ')';
    else if (!r["pass"].get<bool>()) out << "  expected " << r["expected"].dump() << " computed " << r["computed"].dump();
    out << '\n';
  }
}

std::vector<Json> to_json(const std::vector<Report>& rs) {
  std::vector<Json> out;
  for (const auto& r : rs) out.push_back(r.to_json());
  return out;
}

struct Family {
  std::size_t arity;
  std::string usage;
  std::function<std::string(const std::vector<std::uint64_t>&)> make;
};

const std::map<std::string, Family>& families() {
  auto u32 = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
  static const std::map<std::string, Family> f{
      {"simplex", {2, "q m", [=](auto& a) { return code_to_text(simplex(a[0], u32(a[1]))); }}},
      {"grm", {3, "q l m", [=](auto& a) { return code_to_text(grm(a[0], a[1], u32(a[2]))); }}},
      {"grm-punctured", {3, "q l m", [=](auto& a) { return code_to_text(grm_punctured(a[0], a[1], u32(a[2]))); }}},
      {"mt", {3, "q m t", [=](auto& a) { return code_to_text(mt_code(a[0], u32(a[1]), a[2], false)); }}},
      {"mt-extended", {3, "q m t", [=](auto& a) { return code_to_text(mt_code(a[0], u32(a[1]), a[2], true)); }}},
      {"prm", {3, "q r m", [=](auto& a) { return code_to_text(prm(a[0], a[1], u32(a[2]))); }}},
      {"prm-star", {3, "q r m", [=](auto& a) { return code_to_text(prm_star(a[0], a[1], u32(a[2]))); }}},
      {"pg", {3, "q m d", [=](auto& a) { return design_to_text(pg_design(a[0], u32(a[1]), u32(a[2]))); }}},
      {"ag", {3, "q m d", [=](auto& a) { return design_to_text(ag_design(a[0], u32(a[1]), u32(a[2]))); }}},
      {"dmt", {1, "m", [=](auto& a) { return code_to_text(dmt_example_code(u32(a[0])).code); }}},
  };
  return f;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Codes of designs held in linear codes: constructions, weight distributions and claim checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "Maximum number of codewords to enumerate (default 2^27)");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default $DESIGNCODES_CACHE)");
  app.add_option("--threads", g.threads, "Worker threads, 0 for all cores");

  std::function<int()> action;

  auto* construct = app.add_subcommand("construct", "Emit a code or design file");
  std::string family;
  std::vector<std::uint64_t> fargs;
  construct->add_option("family", family, "simplex, grm, grm-punctured, mt, mt-extended, prm, prm-star, pg, ag, dmt")
      ->required();
  construct->add_option("params", fargs, "Integer parameters of the family");
  construct->callback([&] {
    action = [&] {
      auto it = families().find(family);
      if (it == families().end()) throw BadParams("unknown family " + family);
      if (fargs.size() != it->second.arity) throw BadParams(family + " takes " + it->second.usage);
      out << it->second.make(fargs);
      return int(kAllPass);
    };
  });

  auto* wd_cmd = app.add_subcommand("wd", "Weight distribution of a code file");
  std::string code_file;
  wd_cmd->add_option("code-file", code_file)->required();
  wd_cmd->callback([&] {
    action = [&] {
      const auto code = code_from_text(read_file(code_file));
      const auto cache = Cache::from_environment(g.cache_dir);
      const std::string key = "wd\n" + code_to_text(code);
      std::string text;
      if (auto hit = cache.get(key)) {
        text = *hit;
      } else {
        text = weight_distribution(code, g.options()).to_json();
        cache.put(key, text);
      }
      const auto wd = WeightDistribution::from_json(text);
      if (g.json) {
        out << text << '\n';
      } else {
        out << "[" << wd.n << "," << wd.k << "] over GF(" << wd.q << ")\n";
        for (std::size_t i = 0; i < wd.counts.size(); ++i)
          if (wd.counts[i] != 0) out << i << ' ' << wd.counts[i].str() << '\n';
      }
      return int(kAllPass);
    };
  });

  auto* design_cmd = app.add_subcommand("design", "Support design of the codewords of one weight");
  std::size_t weight = 0;
  unsigned design_t = 0;
  design_cmd->add_option("code-file", code_file)->required();
  design_cmd->add_option("--weight", weight)->required();
  design_cmd->add_option("--t", design_t, "Also check for a t-design");
  design_cmd->callback([&] {
    action = [&] {
      const auto code = code_from_text(read_file(code_file));
      const auto d = support_design(code, weight, g.options());
      std::optional<BigInt> lambda;
      if (design_t) lambda = is_t_design(d, design_t);
      if (g.json) out << design_summary_json(d, design_t, lambda) << '\n';
      else out << design_to_text(d);
      return int(design_t && !lambda ? kCheckFailed : kAllPass);
    };
  });

  auto* dc_cmd = app.add_subcommand("designcode", "Code of a design file over GF(p)");
  std::string design_file;
  std::uint64_t field_order = 0;
  dc_cmd->add_option("design-file", design_file)->required();
  dc_cmd->add_option("--p", field_order, "Field order")->required();
  dc_cmd->callback([&] {
    action = [&] {
      const auto code = code_of_design(design_from_text(read_file(design_file)), Field::of_order(field_order));
      if (g.json) {
        Json j;
        j["q"] = field_order;
        j["n"] = code.n();
        j["k"] = code.k();
        j["all_one_in"] = code.all_one_in();
        out << j.dump() << '\n';
      } else {
        out << code_to_text(code);
      }
      return int(kAllPass);
    };
  });

  auto* am_cmd = app.add_subcommand("am", "Assmus-Mattson test");
  unsigned am_t = 0;
  am_cmd->add_option("code-file", code_file)->required();
  am_cmd->add_option("--t", am_t)->required();
  am_cmd->callback([&] {
    action = [&] {
      const auto r = assmus_mattson(code_from_text(read_file(code_file)), am_t, g.options());
      if (g.json) {
        out << r.to_json().dump(2) << '\n';
      } else {
        out << "d=" << r.d << " d_dual=" << r.d_dual << " s_count=" << r.s_count << " t=" << r.t
            << (r.holds ? " holds\n" : " does not hold\n");
        if (r.holds) {
          out << "designs at weights";
          for (auto w : r.design_weights) out << ' ' << w;
          out << "\ndual designs at weights";
          for (auto w : r.design_weights_dual) out << ' ' << w;
          out << '\n';
        }
      }
      return int(r.holds ? kAllPass : kCheckFailed);
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Check a claim at one point or over its grid");
  std::string claim;
  std::map<std::string, std::int64_t> named;
  std::map<std::string, CLI::Option*> named_opts;
  bool whole_grid = false;
  verify_cmd->add_option("claim-id", claim)->required();
  for (const char* name : {"q", "m", "t", "r", "l"})
    named_opts[name] = verify_cmd->add_option(std::string("--") + name, named[name]);
  verify_cmd->add_flag("--grid", whole_grid, "Every parameter point with q^m <= 729");
  verify_cmd->callback([&] {
    action = [&] {
      const auto opts = g.options();
      std::vector<Params> points;
      if (whole_grid) {
        points = claim_grid(claim);
      } else {
        Params ps;
        for (const auto& name : claim_parameters(claim)) {
          if (!named_opts.count(name) || named_opts[name]->count() == 0) throw BadParams(claim + " needs --" + name);
          ps.emplace_back(name, named[name]);
        }
        points.push_back(ps);
      }
      const auto cache = Cache::from_environment(g.cache_dir);
      std::vector<Json> reports;
      for (const auto& ps : points) {
        std::string key = "report\n" + claim + "\nbudget " + opts.budget.str();
        for (const auto& [k, v] : ps) key += "\n" + k + " " + std::to_string(v);
        if (auto hit = cache.get(key)) {
          reports.push_back(Json::parse(*hit));
          continue;
        }
        const auto r = verify_theorem(claim, ps, opts).to_json();
        cache.put(key, r.dump());
        reports.push_back(r);
      }
      print_reports(reports, g.json, out);
      return status_of(reports);
    };
  });

  auto* table_cmd = app.add_subcommand("table", "Recompute table 1 or 2");
  int which = 0;
  table_cmd->add_option("which", which)->required()->check(CLI::IsMember({1, 2}));
  table_cmd->callback([&] {
    action = [&] {
      const auto rows = reproduce_table(which, g.options());
      if (g.json) out << Json(to_json(rows)).dump(2) << '\n';
      else out << format_table(which, rows);
      return status_of(to_json(rows));
    };
  });

  auto* conj_cmd = app.add_subcommand("conjecture", "Evaluate conjecture C1 or C2 on a grid of q,m points");
  std::string conj;
  std::vector<std::string> grid_args;
  conj_cmd->add_option("id", conj)->required()->check(CLI::IsMember({"C1", "C2"}));
  conj_cmd->add_option("grid", grid_args, "Points written q,m");
  conj_cmd->callback([&] {
    action = [&] {
      auto grid = default_conjecture_grid();
      if (!grid_args.empty()) {
        grid.clear();
        for (const auto& s : grid_args) {
          std::uint64_t q = 0;
          std::uint32_t m = 0;
          char comma = 0;
          std::istringstream in(s);
          if (!(in >> q >> comma >> m) || comma != ',') throw BadParams("grid points are written q,m");
          grid.emplace_back(q, m);
        }
      }
      const auto reports = to_json(check_conjecture(conj, grid, g.options()));
      print_reports(reports, g.json, out);
      return status_of(reports);
    };
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "Parameters of C_p(D_i(R_q(l,m))) for each weight i");
  std::uint64_t sq = 0, sl = 0;
  std::uint32_t sm = 0;
  std::size_t sweight = 0;
  sweep_cmd->add_option("q", sq)->required();
  sweep_cmd->add_option("l", sl)->required();
  sweep_cmd->add_option("m", sm)->required();
  sweep_cmd->add_option("--weight", sweight, "Only this weight");
  sweep_cmd->callback([&] {
    action = [&] {
      const auto reports = to_json(sweep(sq, sl, sm, sweight, g.options()));
      if (g.json) {
        out << Json(reports).dump(2) << '\n';
      } else {
        for (const auto& r : reports)
          out << "i=" << r["params"]["i"] << " blocks=" << r["computed"].value("blocks", Json()).dump()
              << " lambda_2=" << r["computed"].value("lambda_2", Json()).dump()
              << " code=" << r["computed"].value("code", Json()).dump()
              << (r.contains("error") ? "  (" + r["error"].get<std::string>() + ")" : "") << '\n';
      }
      return status_of(reports);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kAllPass : kUsage;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    Json j;
    j["reason"] = "budget_exceeded";
    j["message"] = e.what();
    j["min_work"] = e.min_work().str();
    (g.json ? out : err) << j.dump() << '\n';
    return kBudget;
  } catch (const BadParams& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace dcodes
