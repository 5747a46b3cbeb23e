#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hitcalc/arith.hpp"
#include "hitcalc/cache.hpp"
#include "hitcalc/error.hpp"
#include "hitcalc/hit_quotient.hpp"
#include "hitcalc/invariants.hpp"
#include "hitcalc/struct_maps.hpp"
#include "hitcalc/verify.hpp"

#ifndef HITCALC_DATA_DIR
#define HITCALC_DATA_DIR "tests/data"
#endif

namespace {

using namespace hitcalc;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kResource = 3 };

struct Global {
  std::string max_mem = "2G";
  bool json = false;
  bool quiet = false;
  bool no_cache = false;
};

std::size_t parse_bytes(const std::string& text) {
  std::size_t value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || p == text.data()) throw InvalidArgument(fmt::format("bad memory size '{}'", text));
  std::string unit(p, text.data() + text.size());
  std::size_t shift = 0;
  if (unit.empty() || unit == "B")
    shift = 0;
  else if (unit == "K" || unit == "KiB")
    shift = 10;
  else if (unit == "M" || unit == "MiB")
    shift = 20;
  else if (unit == "G" || unit == "GiB")
    shift = 30;
  else
    throw InvalidArgument(fmt::format("bad memory unit '{}'", unit));
  return value << shift;
}

HitOptions engine_options(const Global& g) {
  HitOptions o;
  o.max_memory = parse_bytes(g.max_mem);
  o.threads = threads_from_env();
  if (!g.quiet)
    o.progress = [](const Progress& p) {
      fmt::print(stderr, "\r{} Sq{} block {}/{} rank {}   ", p.stage, p.square, p.block, p.blocks, p.rank);
      if (p.block == p.blocks) fmt::print(stderr, "\n");
      std::fflush(stderr);
    };
  return o;
}

void emit(const json& j) { fmt::print("{}\n", j.dump()); }

std::string join_monomials(const std::vector<Monomial>& ms) {
  std::string out;
  for (const auto& m : ms) out += m.to_string() + "\n";
  return out;
}

std::vector<unsigned> parse_list(const std::string& text) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size()) throw InvalidArgument(fmt::format("bad list '{}'", text));
    out.push_back(v);
  }
  return out;
}

struct DimArgs {
  std::size_t t = 0;
  std::uint64_t n = 0;
  bool trace = false;
  bool standalone = false;
};

int cmd_dim(const Global& g, const DimArgs& a) {
  HitEngine engine(engine_options(g));
  engine.options().standalone_ranks = a.standalone;
  std::optional<Cache> cache;
  if (!g.no_cache && !a.trace) cache.emplace(Cache::from_env());
  auto qb = a.trace ? engine.basis(a.t, a.n) : basis_via_cache(engine, cache ? &*cache : nullptr, a.t, a.n);
  if (a.trace && qb->trace()) fmt::print("{}", qb->trace()->render());
  if (g.json) {
    emit({{"schema", kJsonSchema},
          {"t", a.t},
          {"n", a.n},
          {"monomials", qb->context().size()},
          {"hit_rank", qb->hit_rank()},
          {"dim", qb->dim()}});
  } else if (!a.trace) {
    fmt::print("{}\n", qb->dim());
  }
  return kOk;
}

struct BasisArgs {
  std::size_t t = 0;
  std::uint64_t n = 0;
  std::string omega;
  std::string part = "all";
  std::string out;
};

int cmd_basis(const Global& g, const BasisArgs& a) {
  HitEngine engine(engine_options(g));
  std::optional<Cache> cache;
  if (!g.no_cache) cache.emplace(Cache::from_env());
  auto qb = basis_via_cache(engine, cache ? &*cache : nullptr, a.t, a.n);
  SupportPart part = parse_support_part(a.part);
  std::vector<Monomial> list;
  if (a.omega.empty()) {
    for (const auto& m : qb->admissible())
      if (in_part(m, part)) list.push_back(m);
  } else {
    list = admissible_of_weight(*qb, WeightVector::parse(a.omega), part);
  }
  std::string body = join_monomials(list);
  if (!a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw InvalidArgument(fmt::format("cannot write {}", a.out));
    f << body;
  }
  if (g.json) {
    json j{{"schema", kJsonSchema}, {"t", a.t}, {"n", a.n}, {"part", to_string(part)}, {"count", list.size()}};
    if (!a.omega.empty()) j["omega"] = WeightVector::parse(a.omega).to_string();
    if (a.out.empty()) {
      j["monomials"] = json::array();
      for (const auto& m : list) j["monomials"].push_back(m.to_string());
    }
    emit(j);
  } else if (a.out.empty()) {
    fmt::print("{}", body);
    if (!g.quiet) fmt::print(stderr, "{} monomials\n", list.size());
  } else {
    fmt::print("{}\n", list.size());
  }
  return kOk;
}

struct KamekoArgs {
  std::size_t t = 0;
  std::uint64_t n = 0;
  bool split = false;
  bool explicit_matrix = false;
};

int cmd_kameko(const Global& g, const KamekoArgs& a) {
  HitEngine engine(engine_options(g));
  KamekoOptions o;
  o.split = a.split;
  o.explicit_matrix = a.explicit_matrix;
  auto r = kameko(engine, a.t, a.n, o);
  if (g.json) {
    json j{{"schema", kJsonSchema}, {"t", r.t}, {"n_low", r.n_low}, {"n_high", r.n_high},
           {"iso_shortcut", r.iso_shortcut}};
    if (!r.iso_shortcut) {
      j["dim_high"] = r.dim_high;
      j["dim_low"] = r.dim_low;
      j["kernel"] = r.kernel_dim;
      if (r.image_rank) j["image_rank"] = *r.image_rank;
      if (r.well_defined) j["well_defined"] = *r.well_defined;
      if (a.split) {
        j["split_zero"] = r.split_zero;
        j["split_positive"] = json::array();
        for (const auto& e : r.split_positive) j["split_positive"].push_back({{"omega", e.weight.to_string()}, {"dim", e.dim}});
      }
    } else {
      j["kernel"] = 0;
    }
    emit(j);
    return kOk;
  }
  if (r.iso_shortcut) {
    fmt::print("mu({}) = {}: Kameko map Q({},{}) -> Q({},{}) is an isomorphism; kernel 0 (no elimination)\n", r.n_high,
               r.t, r.t, r.n_high, r.t, r.n_low);
    return kOk;
  }
  fmt::print("dim Q({},{}) = {}\ndim Q({},{}) = {}\nkernel {}\n", r.t, r.n_high, r.dim_high, r.t, r.n_low, r.dim_low,
             r.kernel_dim);
  if (r.image_rank) fmt::print("image rank {}\n", *r.image_rank);
  if (r.well_defined) fmt::print("well defined {}\n", *r.well_defined ? "yes" : "no");
  if (a.split) {
    std::string line = fmt::format("split {}", r.split_zero);
    for (const auto& e : r.split_positive) line += fmt::format(" + {}", e.dim);
    fmt::print("{}\n", line);
    fmt::print("  zero support: {}\n", r.split_zero);
    for (const auto& e : r.split_positive) fmt::print("  ({}) positive: {}\n", e.weight.to_string(), e.dim);
  }
  return kOk;
}

struct InvariantArgs {
  std::size_t t = 0;
  std::uint64_t n = 0;
  std::string group = "gl";
  std::string omega;
};

int cmd_invariants(const Global& g, const InvariantArgs& a) {
  HitEngine engine(engine_options(g));
  GroupSpec group{parse_group_kind(a.group), a.t};
  InvariantResult r;
  std::vector<Monomial> coords;
  if (a.omega.empty()) {
    r = invariant_dim(engine, a.t, a.n, group);
    coords = engine.basis(a.t, a.n)->admissible();
  } else {
    WeightVector w = WeightVector::parse(a.omega);
    r = invariant_dim_omega(engine, a.t, a.n, w, group);
    coords = admissible_of_weight(*engine.basis(a.t, a.n), w, SupportPart::all);
  }
  if (g.json) {
    json j{{"schema", kJsonSchema}, {"t", a.t}, {"n", a.n}, {"group", to_string(group.kind)}, {"dim", r.dimension}};
    if (!a.omega.empty()) j["omega"] = WeightVector::parse(a.omega).to_string();
    j["basis"] = json::array();
    for (const auto& v : r.basis) {
      json terms = json::array();
      for (auto c : v.set_bits()) terms.push_back(coords[c].to_string());
      j["basis"].push_back(terms);
    }
    emit(j);
    return kOk;
  }
  fmt::print("{}\n", r.dimension);
  for (const auto& v : r.basis) {
    std::vector<std::string> terms;
    for (auto c : v.set_bits()) terms.push_back("(" + coords[c].to_string() + ")");
    fmt::print("  {}\n", fmt::join(terms, " + "));
  }
  return kOk;
}

struct MapArgs {
  std::string map = "q";
  unsigned l = 1;
  std::string L;
  std::size_t t = 5;
  bool lenient = false;
};

int cmd_maps(const Global& g, const MapArgs& a) {
  auto L = parse_list(a.L);
  PsiMode mode = a.lenient ? PsiMode::lenient : PsiMode::strict;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Monomial m = Monomial::parse(line);
    std::string image;
    if (a.map == "q") {
      image = q_insert(a.l, a.t, m).to_string();
    } else if (a.map == "psi") {
      auto r = psi(PsiSpec{a.l, L}, m, mode);
      image = r ? r->to_string() : "0";
    } else if (a.map == "p") {
      image = p_project(a.l, L, Polynomial(m)).to_string();
    } else {
      throw InvalidArgument(fmt::format("unknown map '{}' (q, psi, p)", a.map));
    }
    if (g.json)
      emit({{"schema", kJsonSchema}, {"map", a.map}, {"source", m.to_string()}, {"image", image}});
    else
      fmt::print("{}\n", image);
  }
  return kOk;
}

struct ConjectureArgs {
  std::size_t t = 0;
  std::uint64_t n = 0;
  std::string omega;
  bool lenient = false;
};

int cmd_conjecture(const Global& g, const ConjectureArgs& a) {
  HitEngine engine(engine_options(g));
  auto r = verify_sum_conjecture(engine, a.t, a.n, WeightVector::parse(a.omega),
                                 a.lenient ? PsiMode::lenient : PsiMode::strict);
  if (g.json) {
    json j{{"schema", kJsonSchema}, {"t", r.t},         {"n", r.n},          {"omega", r.weight.to_string()},
           {"sources", r.sources},  {"images", r.images}, {"holds", r.holds()}};
    j["counterexamples"] = json::array();
    for (const auto& c : r.counterexamples)
      j["counterexamples"].push_back(
          {{"source", c.source.to_string()}, {"map", c.spec.to_string()}, {"image", c.image.to_string()}});
    emit(j);
  } else {
    fmt::print("sources {}\nimages {}\n{}\n", r.sources, r.images, r.holds() ? "holds" : "fails");
    for (const auto& c : r.counterexamples)
      fmt::print("  psi_{}({}) = ({}) is not admissible\n", c.spec.to_string(), c.source.to_string(),
                 c.image.to_string());
  }
  return r.holds() ? kOk : kMismatch;
}

int cmd_verify(const Global& g, const std::string& suite, const std::string& data_dir) {
  HitEngine engine(engine_options(g));
  engine.options().progress = nullptr;
  SuiteOptions o;
  o.data_dir = data_dir;
  if (!g.json)
    o.on_check = [](const CheckResult& c) {
      fmt::print("[{}] {}\n", c.pass ? "PASS" : "FAIL", c.name);
      if (!c.pass) fmt::print("       expected: {}\n       actual:   {}\n", c.expected, c.actual);
      std::fflush(stdout);
    };
  auto report = run_suite(suite, engine, o);
  if (g.json) {
    json j{{"schema", kJsonSchema}, {"suite", report.suite}, {"checks", report.checks.size()},
           {"failures", report.failures()}};
    j["results"] = json::array();
    for (const auto& c : report.checks)
      j["results"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    emit(j);
  } else {
    fmt::print("{}: {} checks, {} failed\n", report.suite, report.checks.size(), report.failures());
  }
  return report.passed() ? kOk : kMismatch;
}

int cmd_cache(const Global& g, const std::string& action) {
  Cache cache = Cache::from_env();
  if (action == "clear") {
    std::size_t removed = cache.clear();
    if (g.json)
      emit({{"schema", kJsonSchema}, {"removed", removed}});
    else
      fmt::print("removed {} entries from {}\n", removed, cache.dir().string());
    return kOk;
  }
  auto entries = cache.entries();
  if (g.json) {
    json j{{"schema", kJsonSchema}, {"dir", cache.dir().string()}, {"entries", json::array()}};
    for (const auto& p : entries)
      j["entries"].push_back({{"file", p.filename().string()}, {"bytes", std::filesystem::file_size(p)}});
    emit(j);
  } else {
    fmt::print("{} ({} entries)\n", cache.dir().string(), entries.size());
    for (const auto& p : entries) fmt::print("  {}  {} bytes\n", p.filename().string(), std::filesystem::file_size(p));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible monomial bases and dimensions of the hit quotient Q(t,n) over F2"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--max-mem", g.max_mem, "Memory budget for an elimination, e.g. 2G or 512M")->capture_default_str();
  app.add_flag("--json", g.json, "Print a single JSON record");
  app.add_flag("-q,--quiet", g.quiet, "No progress on stderr");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the basis cache");

  DimArgs dim;
  auto* c_dim = app.add_subcommand("dim", "Dimension of Q(t,n)");
  c_dim->add_option("-t", dim.t, "Number of variables")->required()->check(CLI::Range(1, 8));
  c_dim->add_option("-n", dim.n, "Degree")->required();
  c_dim->add_flag("--trace", dim.trace, "Print the per-family rank trace");
  c_dim->add_flag("--standalone", dim.standalone, "Also rank each family on its own (with --trace)");

  DimArgs trace;
  auto* c_trace = app.add_subcommand("trace", "Per-family rank trace of the hit elimination");
  c_trace->add_option("-t", trace.t, "Number of variables")->required()->check(CLI::Range(1, 8));
  c_trace->add_option("-n", trace.n, "Degree")->required();
  c_trace->add_flag("--cumulative-only", "Skip the standalone family ranks");

  BasisArgs basis;
  auto* c_basis = app.add_subcommand("basis", "List admissible monomials");
  c_basis->add_option("-t", basis.t, "Number of variables")->required()->check(CLI::Range(1, 8));
  c_basis->add_option("-n", basis.n, "Degree")->required();
  c_basis->add_option("--omega", basis.omega, "Weight vector, e.g. 3,2,2,2");
  c_basis->add_option("--part", basis.part, "all, zero or positive")->capture_default_str();
  c_basis->add_option("--out", basis.out, "Write the list to a file");

  KamekoArgs kam;
  auto* c_kam = app.add_subcommand("kameko", "Kameko map Q(t, t+2n) -> Q(t, n)");
  c_kam->add_option("-t", kam.t, "Number of variables")->required()->check(CLI::Range(1, 8));
  c_kam->add_option("-n", kam.n, "Low degree")->required();
  c_kam->add_flag("--split", kam.split, "Split the kernel by support and weight");
  c_kam->add_flag("--explicit", kam.explicit_matrix, "Build the map matrix and check its rank");

  InvariantArgs inv;
  auto* c_inv = app.add_subcommand("invariants", "Invariants of the symmetric or general linear group");
  c_inv->add_option("-t", inv.t, "Number of variables")->required()->check(CLI::Range(1, 8));
  c_inv->add_option("-n", inv.n, "Degree")->required();
  c_inv->add_option("--group", inv.group, "gl or sym")->capture_default_str();
  c_inv->add_option("--omega", inv.omega, "Restrict to one weight component");

  MapArgs maps;
  auto* c_maps = app.add_subcommand("maps", "Apply q, psi or p to monomials read from stdin");
  c_maps->add_option("--map", maps.map, "q, psi or p")->capture_default_str();
  c_maps->add_option("-l", maps.l, "Index l")->capture_default_str();
  c_maps->add_option("-L", maps.L, "Index list, e.g. 2,3,4");
  c_maps->add_option("-t", maps.t, "Target number of variables (q)")->capture_default_str();
  c_maps->add_flag("--lenient", maps.lenient, "psi without the alpha clauses");

  ConjectureArgs conj;
  auto* c_conj = app.add_subcommand("conjecture", "Check that psi images of admissible monomials stay admissible");
  c_conj->add_option("-t", conj.t, "Number of variables")->required()->check(CLI::Range(2, 8));
  c_conj->add_option("-n", conj.n, "Degree")->required();
  c_conj->add_option("--omega", conj.omega, "Weight vector")->required();
  c_conj->add_flag("--lenient", conj.lenient, "psi without the alpha clauses");

  std::string suite = "quick";
  std::string data_dir = HITCALC_DATA_DIR;
  auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
  c_verify->add_option("suite", suite, "quick, paper or extended")
      ->check(CLI::IsMember({"quick", "paper", "extended"}))
      ->capture_default_str();
  c_verify->add_option("--data-dir", data_dir, "Directory with the published monomial lists")->capture_default_str();

  std::string cache_action = "inspect";
  auto* c_cache = app.add_subcommand("cache", "Inspect or clear the result cache");
  c_cache->add_option("action", cache_action, "inspect or clear")
      ->check(CLI::IsMember({"inspect", "clear"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_dim->parsed()) return cmd_dim(g, dim);
    if (c_trace->parsed()) {
      trace.trace = true;
      trace.standalone = c_trace->count("--cumulative-only") == 0;
      return cmd_dim(g, trace);
    }
    if (c_basis->parsed()) return cmd_basis(g, basis);
    if (c_kam->parsed()) return cmd_kameko(g, kam);
    if (c_inv->parsed()) return cmd_invariants(g, inv);
    if (c_maps->parsed()) return cmd_maps(g, maps);
    if (c_conj->parsed()) return cmd_conjecture(g, conj);
    if (c_verify->parsed()) return cmd_verify(g, suite, data_dir);
    if (c_cache->parsed()) return cmd_cache(g, cache_action);
  } catch (const ResourceLimit& e) {
    fmt::print(stderr, "resource limit: {}\n", e.what());
    return kResource;
  } catch (const CorruptCache& e) {
    fmt::print(stderr, "corrupt cache: {} (run 'hitcalc cache clear')\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  }
  return kUsage;
}
