// hyperlattice: command-line front end for the hyper-root lattice pipeline.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "cache.hpp"
#include "hyperlattice/enumerate.hpp"
#include "hyperlattice/errors.hpp"
#include "hyperlattice/fusion.hpp"
#include "hyperlattice/golden.hpp"
#include "hyperlattice/lattice.hpp"
#include "hyperlattice/qseries.hpp"
#include "hyperlattice/ribbon.hpp"
#include "hyperlattice/serialize.hpp"
#include "verify.hpp"

namespace hl = hyperlattice;
using hl::json;

namespace {

constexpr int kExitBudget = 3;
constexpr int kExitConfig = 4;

// Bumped whenever cached payloads change shape or meaning.
constexpr int kCacheVersion = 1;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string system;
  std::string basis = "B1";
  int max_norm = 16;
  std::uint64_t budget = 5'000'000'000ULL;
  bool budget_given = false;
  int threads = 1;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  std::string scope = "quick";
};

void validate(const RunConfig& c, bool needs_system) {
  if (needs_system && c.system.empty()) throw ConfigError("--system is required");
  if (c.max_norm < 0 || c.max_norm % 2) throw ConfigError("--max-norm must be even and non-negative");
  if (c.budget == 0) throw ConfigError("--budget must be positive");
  if (c.threads < 1) throw ConfigError("--threads must be at least 1");
}

hl::EnumerationOptions enumeration(const RunConfig& c) {
  hl::EnumerationOptions o;
  o.node_budget = c.budget;
  o.threads = c.threads;
  return o;
}

hl::cli::ResultCache make_cache(const RunConfig& c) {
  if (c.no_cache) return {};
  return hl::cli::ResultCache(hl::cli::default_cache_dir(c.cache_dir));
}

hl::BasisLabel basis_label(const RunConfig& c) {
  try {
    return hl::parse_basis_label(c.basis);
  } catch (const hl::Error& e) {
    throw ConfigError(e.what());
  }
}

struct Pipeline {
  std::unique_ptr<hl::FusionTable> table;
  hl::OrderedBasis basis;
  hl::IntMatrix gram;
};

Pipeline build(const RunConfig& c) {
  const auto label = basis_label(c);
  hl::FusionSystem sys;
  try {
    sys = hl::load_fusion_system(c.system);
  } catch (const hl::NotShipped& e) {
    throw ConfigError(e.what());
  }
  Pipeline p;
  p.table = std::make_unique<hl::FusionTable>(std::move(sys));
  p.basis = hl::select_basis(*p.table, label);
  p.gram = hl::gram_matrix(*p.table, p.basis);
  return p;
}

json config_json(const RunConfig& c, const std::string& kind, bool with_norm) {
  json j = {{"version", kCacheVersion}, {"system", c.system}, {"basis", c.basis}, {"kind", kind}};
  if (with_norm) j["max_norm"] = c.max_norm;
  return j;
}

// Payloads are produced by the pipeline or read back from the cache; the
// cache must never change what is emitted.
json gram_payload(const RunConfig& c, const hl::cli::ResultCache& cache) {
  return cache.get_or_compute(c.system, c.basis, "gram", config_json(c, "gram", false), [&] {
    auto p = build(c);
    return hl::gram_to_json(c.system, p.basis, p.gram);
  });
}

hl::IntMatrix gram_of(const RunConfig& c, const hl::cli::ResultCache& cache) {
  return hl::matrix_from_json(gram_payload(c, cache).at("gram"));
}

void report_rejection(const hl::cli::ResultCache& cache) {
  if (!cache.last_rejection.empty()) std::cerr << "note: " << cache.last_rejection << "; recomputing\n";
}

int cmd_list(const RunConfig& c) {
  struct Row {
    std::string name, group;
    int k, n, r, rank;
    std::size_t roots;
  };
  std::vector<Row> rows;
  auto add = [&](const std::string& name) {
    hl::FusionTable t(hl::load_fusion_system(name));
    rows.push_back({name, t.group() == hl::Group::SU3 ? "SU3" : "SU2", t.system().level, t.N(), t.rank(),
                    hl::lattice_rank(t), hl::root_count(t)});
  };
  for (const auto& n : hl::shipped_su3_systems()) add(n);
  for (const auto& n : hl::shipped_su2_examples()) add(n);
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"name", r.name}, {"group", r.group}, {"k", r.k}, {"N", r.n}, {"r_E", r.r}, {"rank", r.rank},
                     {"roots", r.roots}});
    std::cout << arr.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "name,group,k,N,r_E,rank,roots\n";
    for (const auto& r : rows)
      std::cout << r.name << "," << r.group << "," << r.k << "," << r.n << "," << r.r << "," << r.rank << ","
                << r.roots << "\n";
  } else {
    std::printf("%-8s %-5s %4s %4s %5s %5s %7s\n", "name", "group", "k", "N", "r_E", "rank", "|R|");
    for (const auto& r : rows)
      std::printf("%-8s %-5s %4d %4d %5d %5d %7zu\n", r.name.c_str(), r.group.c_str(), r.k, r.n, r.r, r.rank, r.roots);
  }
  return 0;
}

int cmd_gram(const RunConfig& c) {
  const auto cache = make_cache(c);
  const json payload = gram_payload(c, cache);
  report_rejection(cache);
  const auto g = hl::matrix_from_json(payload.at("gram"));
  if (c.format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) std::cout << g(i, j) << (j + 1 < g.cols() ? "," : "\n");
  } else {
    std::cout << "# " << c.system << " " << c.basis << " Gram matrix, " << g.rows() << "x" << g.cols() << "\n"
              << hl::format_matrix_text(g);
  }
  return 0;
}

int cmd_invariants(const RunConfig& c) {
  const auto cache = make_cache(c);
  const json payload =
      cache.get_or_compute(c.system, c.basis, "invariants", config_json(c, "invariants", false), [&] {
        return hl::invariants_to_json(c.system, hl::invariants(gram_of(c, cache)));
      });
  report_rejection(cache);
  if (c.format == "json") {
    std::cout << payload.dump(2) << "\n";
    return 0;
  }
  auto list = [](const json& arr) {
    std::string s;
    for (const auto& v : arr) s += (s.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
    return s;
  };
  std::vector<std::pair<std::string, std::string>> kv = {
      {"name", payload["name"]},
      {"rank", payload["rank"].dump()},
      {"discriminant", payload["discriminant"]},
      {"discriminant_factored", payload["discriminant_factored"]},
      {"level", payload["level"]},
      {"weight", payload["weight"].dump()},
      {"dual_quotient", list(payload["dual_quotient"])},
  };
  std::string lp;
  for (const auto& e : payload["legendre_profile"])
    lp += (lp.empty() ? "" : " ") + e[0].dump() + ":" + e[1].dump();
  kv.push_back({"legendre_profile", lp});
  for (const auto& [k, v] : kv) {
    if (c.format == "csv")
      std::cout << k << "," << v << "\n";
    else
      std::cout << k << ": " << v << "\n";
  }
  return 0;
}

int cmd_theta(const RunConfig& c) {
  const auto cache = make_cache(c);
  const json payload = cache.get_or_compute(c.system, c.basis, "theta", config_json(c, "theta", true), [&] {
    return hl::theta_to_json(c.system, hl::theta_series(gram_of(c, cache), c.max_norm, enumeration(c)));
  });
  report_rejection(cache);
  const auto t = hl::theta_from_json(payload);
  if (c.format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "norm,count\n";
    for (const auto& [n, v] : t.nonzero()) std::cout << n << "," << v << "\n";
  } else {
    std::vector<std::pair<int, hl::BigInt>> terms;
    for (const auto& [n, v] : t.nonzero()) terms.push_back({n, hl::BigInt(v)});
    std::cout << hl::QSeries(hl::ExponentUnit::Q, t.max_norm, terms).to_string() << "\n";
  }
  return 0;
}

int cmd_shells(const RunConfig& c) {
  const auto cache = make_cache(c);
  const json payload = cache.get_or_compute(c.system, c.basis, "shells", config_json(c, "shells", true), [&] {
    return hl::shells_to_json(c.system, hl::shells(gram_of(c, cache), c.max_norm, enumeration(c)));
  });
  report_rejection(cache);
  if (c.format == "json") {
    std::cout << payload.dump(2) << "\n";
    return 0;
  }
  if (c.format == "csv") std::cout << "norm,coordinates\n";
  for (const auto& s : payload.at("shells")) {
    const int norm = s.at("norm");
    if (c.format == "text")
      std::cout << "# norm " << norm << ": " << s.at("count").get<std::uint64_t>() << " vectors, "
                << s.at("vectors").size() << " listed up to sign\n";
    for (const auto& v : s.at("vectors")) {
      std::string line;
      for (const auto& x : v) line += (line.empty() ? "" : (c.format == "csv" ? "," : " ")) + x.dump();
      if (c.format == "csv")
        std::cout << norm << "," << line << "\n";
      else
        std::cout << line << "\n";
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& c) {
  hl::SuiteOptions opts;
  try {
    opts.scope = hl::parse_scope(c.scope);
  } catch (const hl::Error& e) {
    throw ConfigError(e.what());
  }
  opts.enumeration = enumeration(c);
  // The full scope needs far more than the default budget.
  if (opts.scope == hl::Scope::Full && !c.budget_given) opts.enumeration.node_budget = 2'000'000'000'000ULL;
  return hl::cli::run_verify(opts, c.format, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperlattice: fusion data, hyper-root Gram matrices, lattice invariants and theta series"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  std::string budget_text;

  auto add_common = [&](CLI::App* sub, bool enumerates) {
    sub->add_option("--system", cfg.system, "system name, e.g. A2, L3, D6, E21, su2.E6");
    sub->add_option("--basis", cfg.basis, "basis label B1, B2 or B3")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--cache-dir", cfg.cache_dir, "results cache directory (default: $HYPERLATTICE_CACHE)");
    sub->add_flag("--no-cache", cfg.no_cache, "neither read nor write the cache");
    if (enumerates) {
      sub->add_option("--max-norm", cfg.max_norm, "largest norm x.A.x to enumerate (even)")->capture_default_str();
      sub->add_option("--budget", budget_text, "enumeration node budget (default 5e9)");
      sub->add_option("--threads", cfg.threads, "worker threads for enumeration")->capture_default_str();
    }
  };

  auto* list = app.add_subcommand("list", "shipped systems with k, N, r_E, rank and |R|");
  list->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  auto* gram = app.add_subcommand("gram", "Gram matrix of a hyper-root basis");
  add_common(gram, false);
  auto* inv = app.add_subcommand("invariants", "determinant, level, dual quotient, Legendre profile");
  add_common(inv, false);
  auto* theta = app.add_subcommand("theta", "theta series up to --max-norm");
  add_common(theta, true);
  auto* shells = app.add_subcommand("shells", "lattice vectors by norm up to --max-norm");
  add_common(shells, true);
  auto* verify = app.add_subcommand("verify", "run the golden suite");
  verify->add_option("--scope", cfg.scope, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  verify->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--budget", budget_text, "enumeration node budget");
  verify->add_option("--threads", cfg.threads, "worker threads for enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (!budget_text.empty()) {
      std::size_t pos = 0;
      double v = 0;
      try {
        v = std::stod(budget_text, &pos);
      } catch (const std::logic_error&) {
        throw ConfigError("--budget must be a number");
      }
      if (pos != budget_text.size() || !(v >= 1) || v > 1.8e19) throw ConfigError("--budget must be a positive number");
      cfg.budget = static_cast<std::uint64_t>(v);
      cfg.budget_given = true;
    }
    if (*list) return cmd_list(cfg);
    if (*verify) {
      validate(cfg, false);
      return cmd_verify(cfg);
    }
    validate(cfg, true);
    if (*gram) return cmd_gram(cfg);
    if (*inv) return cmd_invariants(cfg);
    if (*theta) return cmd_theta(cfg);
    if (*shells) return cmd_shells(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const hl::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (" << e.nodes << " nodes); raise --budget\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
