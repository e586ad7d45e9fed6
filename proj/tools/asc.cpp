#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "asc/checker.hpp"
#include "asc/endo.hpp"
#include "asc/error.hpp"
#include "asc/homology.hpp"
#include "asc/io.hpp"
#include "example_suite.hpp"

using namespace asc;

namespace {

constexpr int kUsage = 3;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 2;
}

struct Usage : Error {
  using Error::Error;
};

std::size_t get_n(const Json& job, std::size_t min) {
  if (!job.contains("n")) throw Usage("--n is required");
  long n = job.at("n").get<long>();
  if (n < static_cast<long>(min)) throw Usage("--n must be at least " + std::to_string(min));
  return static_cast<std::size_t>(n);
}

std::string get(const Json& job, const char* key, const std::string& fallback = "") {
  if (job.contains(key)) return job.at(key).get<std::string>();
  if (fallback.empty()) throw Usage(std::string("--") + key + " is required");
  return fallback;
}

CheckReport run_job(const Workspace& ws, const Json& job) {
  const std::string pred = get(job, "predicate");
  const std::size_t cap = job.value("cap", kDefaultCap);
  const bool partial = job.value("partial", false);
  AlgebraPtr a = ws.algebra(get(job, "algebra", "pi_a3"));
  auto module_cat = [&] { return AddCategory::of(ws.module(a, get(job, "module"))); };
  auto context = [&] { return ws.context(a, get(job, "context", "ambient")); };

  if (pred == "precluster") return is_precluster_IS(module_cat(), get_n(job, 1), cap);
  if (pred == "precluster-subcat") {
    auto ctx = context();
    return is_precluster_subcat(module_cat(), ctx, get_n(job, 1), partial, cap);
  }
  if (pred == "cluster") {
    std::size_t n = get_n(job, 2);
    auto ctx = context();
    return is_cluster_tilting(module_cat(), ctx, n);
  }
  if (pred == "mag") return is_min_AG_algebra(a, get_n(job, 1), partial, cap);
  if (pred == "morita-tachikawa") return is_morita_tachikawa(a, context(), cap);
  if (pred == "correspondence") return verify_correspondence(module_cat(), get_n(job, 1), cap);
  if (pred == "tensor-precluster") {
    std::size_t n = get_n(job, 2);
    AlgebraPtr g = ws.algebra(get(job, "tensor_with", "dual_numbers"));
    std::vector<Module> t = decompose(ws.module(a, get(job, "tilting", "A"))).modules();
    TensorOptions opts;
    opts.samples = job.value("samples", opts.samples);
    opts.seed = job.value("seed", opts.seed);
    return check_tensor_precluster(a, t, module_cat(), g, n, context(), opts, cap);
  }
  throw Usage("unknown predicate '" + pred + "'");
}

void print_report(const CheckReport& r, bool json) {
  if (json) {
    std::cout << r.to_json() << '\n';
    return;
  }
  std::cout << r.predicate;
  if (r.n) std::cout << " n=" << r.n;
  std::cout << ": " << to_string(r.verdict) << '\n';
  if (!r.members.empty()) {
    std::cout << "  members:";
    for (const auto& m : r.members) std::cout << ' ' << m;
    std::cout << '\n';
  }
  for (const auto& c : r.conditions) {
    std::cout << "  " << c.label << ": " << to_string(c.verdict);
    if (!c.witness.empty()) std::cout << " (" << c.witness << ")";
    if (!c.note.empty()) std::cout << " [" << c.note << "]";
    std::cout << '\n';
  }
  for (const auto& c : r.certificates) std::cout << "  certificate: " << c << '\n';
}

Workspace load(const std::string& path) { return path.empty() ? Workspace{} : load_workspace_file(path); }

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Precluster tilting and minimal Auslander-Gorenstein checks over exact rationals"};
  app.require_subcommand(1);
  std::string workspace;
  app.add_option("--workspace,-w", workspace, "Workspace JSON file");

  // check
  auto* check = app.add_subcommand("check", "Run one predicate");
  std::string pred, algebra = "pi_a3", module, context = "ambient", tensor_with = "dual_numbers", tilting = "A";
  long n = -1;
  std::size_t cap = kDefaultCap, samples = 20;
  unsigned seed = 1;
  bool partial = false, json = false;
  check->add_option("predicate", pred,
                    "precluster | precluster-subcat | cluster | mag | morita-tachikawa | correspondence | "
                    "tensor-precluster")
      ->required();
  check->add_option("--algebra", algebra, "Built-in name, workspace name, or file")->capture_default_str();
  check->add_option("--module", module, "Summands, e.g. A+P2/soc");
  check->add_option("--context", context, "ambient, gp, or a workspace context")->capture_default_str();
  check->add_option("--n", n, "The n of n-precluster tilting");
  check->add_option("--cap", cap, "Search cap for dimensions")->capture_default_str();
  check->add_flag("--partial", partial, "Partial variant");
  check->add_option("--tensor-with", tensor_with, "Selfinjective algebra for tensor-precluster")
      ->capture_default_str();
  check->add_option("--tilting", tilting, "Tilting module for tensor-precluster")->capture_default_str();
  check->add_option("--samples", samples, "Hom-transfer samples")->capture_default_str();
  check->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  check->add_flag("--json", json, "Print the JSON report");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Precluster tilting subcategories of a context");
  std::string e_algebra = "gamma", e_context = "gp", must;
  long e_n = -1;
  bool e_partial = false, e_json = false;
  std::size_t e_cap = kDefaultCap;
  enumerate->add_option("--algebra", e_algebra)->capture_default_str();
  enumerate->add_option("--context", e_context)->capture_default_str();
  enumerate->add_option("--n", e_n)->required();
  enumerate->add_option("--must-contain", must, "Comma-separated member names");
  enumerate->add_option("--cap", e_cap)->capture_default_str();
  enumerate->add_flag("--partial", e_partial);
  enumerate->add_flag("--json", e_json);

  // context
  auto* ctxcmd = app.add_subcommand("context", "List the members of a context");
  std::string c_algebra = "pi_a3", c_context = "ambient", c_out;
  ctxcmd->add_option("--algebra", c_algebra)->capture_default_str();
  ctxcmd->add_option("--context", c_context)->capture_default_str();
  ctxcmd->add_option("--output,-o", c_out, "Write the context as JSON");

  // endo
  auto* endo = app.add_subcommand("endo", "Endomorphism algebra of a module");
  std::string d_algebra = "pi_a3", d_module, d_out;
  endo->add_option("--algebra", d_algebra)->capture_default_str();
  endo->add_option("--module", d_module)->required();
  endo->add_option("--output,-o", d_out, "Write the structure constants as JSON");

  // run
  auto* run = app.add_subcommand("run", "Run the job list of a workspace");
  std::string r_file;
  run->add_option("file", r_file, "Workspace JSON file")->required();

  // paper-examples (acceptance criteria)
  auto* examples = app.add_subcommand("paper-examples", "Acceptance criteria on the worked examples");
  bool p_json = false, p_corrupt = false;
  examples->add_flag("--json", p_json);
  examples->add_flag("--corrupt-gamma", p_corrupt, "Negative control");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) {
      Workspace ws = load(workspace);
      Json job{{"predicate", pred}, {"algebra", algebra}, {"context", context},  {"cap", cap},
               {"partial", partial}, {"tensor_with", tensor_with}, {"tilting", tilting},
               {"samples", samples}, {"seed", seed}};
      if (!module.empty()) job["module"] = module;
      if (check->count("--n")) job["n"] = n;
      CheckReport r = run_job(ws, job);
      print_report(r, json);
      return exit_code(r.verdict);
    }
    if (*enumerate) {
      if (e_n < 1) throw Usage("--n must be at least 1");
      Workspace ws = load(workspace);
      AlgebraPtr a = ws.algebra(e_algebra);
      SubcatContext ctx = ws.context(a, e_context);
      std::optional<std::vector<std::size_t>> forced;
      if (!must.empty()) {
        forced.emplace();
        for (const auto& name : split_names(must)) {
          auto it = std::find(ctx.names.begin(), ctx.names.end(), name);
          if (it == ctx.names.end()) throw Usage("context has no member '" + name + "'");
          forced->push_back(static_cast<std::size_t>(it - ctx.names.begin()));
        }
      }
      auto rs = enumerate_precluster(ctx, static_cast<std::size_t>(e_n), forced, e_partial, e_cap);
      if (e_json) {
        Json out = Json::array();
        for (const auto& r : rs) out.push_back(Json::parse(r.to_json()));
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << rs.size() << " subcategories\n";
        for (const auto& r : rs) {
          std::cout << " ";
          for (const auto& m : r.members) std::cout << ' ' << m;
          std::cout << '\n';
        }
      }
      return 0;
    }
    if (*ctxcmd) {
      Workspace ws = load(workspace);
      AlgebraPtr a = ws.algebra(c_algebra);
      SubcatContext ctx = ws.context(a, c_context);
      if (!c_out.empty()) {
        std::ofstream(c_out) << context_to_json(ctx).dump(2) << '\n';
      }
      std::cout << ctx.description << '\n';
      for (std::size_t k = 0; k < ctx.size(); ++k) {
        auto in = [&](const std::vector<std::size_t>& v) { return std::find(v.begin(), v.end(), k) != v.end(); };
        std::cout << "  " << ctx.names[k] << ' ' << ctx.indecomposables[k].dimension_vector()
                  << (in(ctx.projective_members) ? " projective" : "")
                  << (in(ctx.injective_members) ? " injective" : "") << '\n';
      }
      return 0;
    }
    if (*endo) {
      Workspace ws = load(workspace);
      AlgebraPtr a = ws.algebra(d_algebra);
      EndoPackage pkg = endomorphism_algebra(ws.module(a, d_module));
      if (!pkg.notice.empty()) std::cerr << pkg.notice << '\n';
      if (!d_out.empty()) std::ofstream(d_out) << algebra_to_json(pkg.endo).dump(2) << '\n';
      const AlgebraPtr& e = pkg.endo;
      std::cout << "dim " << e->dim() << ", " << e->vertex_count() << " vertices\n";
      for (const auto& ar : e->arrows())
        std::cout << "  arrow " << e->vertex_labels()[ar.source] << " -> " << e->vertex_labels()[ar.target] << '\n';
      std::cout << "id " << injective_dimension(regular(e)).to_string() << ", domdim "
                << dominant_dimension(e).to_string() << ", gldim " << global_dimension(e).to_string() << '\n';
      return 0;
    }
    if (*run) {
      Workspace ws = load_workspace_file(r_file);
      Json out = Json::array();
      Verdict worst = Verdict::Pass;
      for (const auto& job : ws.jobs) {
        CheckReport r = run_job(ws, job);
        worst = combine(worst, r.verdict);
        out.push_back(Json::parse(r.to_json()));
      }
      std::cout << out.dump(2) << '\n';
      return exit_code(worst);
    }
    if (*examples) {
      auto rs = run_example_suite({p_corrupt, {}});
      if (p_json) std::cout << results_to_json(rs).dump(2) << '\n';
      else std::cout << format_results(rs);
      for (const auto& r : rs)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const NotGenerator& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return 2;
  }
  return kUsage;
}
