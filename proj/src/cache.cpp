#include "hitcalc/cache.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <unistd.h>

#include "hitcalc/error.hpp"

namespace hitcalc {

namespace fs = std::filesystem;

std::string_view to_string(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::basis:
      return "basis";
    case ArtifactKind::dims:
      return "dims";
    case ArtifactKind::trace:
      return "trace";
    case ArtifactKind::invariants:
      return "invariants";
  }
  return "basis";
}

std::string CacheKey::canonical() const {
  std::string s = fmt::format("{}-t{}-n{}", to_string(kind), t, n);
  if (weight) {
    std::string w = weight->to_string();
    for (char& c : w)
      if (c == ',') c = '.';
    s += "-w" + (w.empty() ? std::string("0") : w);
  }
  if (part) s += fmt::format("-{}", to_string(*part));
  if (!qualifier.empty()) s += "-" + qualifier;
  return s;
}

std::string basis_header(std::size_t t, std::uint64_t n) {
  return fmt::format("hitcalc-basis v1 t={} n={} order=weight-then-exponent-leftlex", t, n);
}

std::string serialize_basis(std::size_t t, std::uint64_t n, const std::vector<Monomial>& admissible) {
  std::string out = basis_header(t, n) + "\n";
  for (const auto& m : admissible) out += m.to_string() + "\n";
  return out;
}

std::vector<Monomial> parse_basis(std::string_view text, std::size_t t, std::uint64_t n) {
  std::vector<Monomial> out;
  std::size_t pos = 0;
  bool header = true;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (header) {
      if (line != basis_header(t, n)) throw CorruptCache(fmt::format("basis file header mismatch: '{}'", line));
      header = false;
      continue;
    }
    if (line.empty()) continue;
    Monomial m;
    try {
      m = Monomial::parse(line);
    } catch (const Error& e) {
      throw CorruptCache(fmt::format("line {}: {}", line_no, e.what()));
    }
    if (m.variables() != t || m.degree() != n)
      throw CorruptCache(fmt::format("line {}: ({}) is not of degree {} in {} variables", line_no, line, n, t));
    if (!out.empty() && compare(out.back(), m) >= 0)
      throw CorruptCache(fmt::format("line {}: basis is not strictly ascending", line_no));
    out.push_back(m);
  }
  if (header) throw CorruptCache("basis file is empty");
  return out;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

Cache Cache::from_env() {
  const char* v = std::getenv("HITCALC_CACHE_DIR");
  return Cache(v && *v ? fs::path(v) : fs::path(".hitcalc-cache"));
}

fs::path Cache::path_for(const CacheKey& key) const {
  return dir_ / (key.canonical() + (key.kind == ArtifactKind::basis ? ".txt" : ".json"));
}

void Cache::write_atomic(const fs::path& target, const std::string& contents) {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(dir_);
  fs::path tmp = target;
  tmp += fmt::format(".tmp.{}.{}", ::getpid(), counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(fmt::format("cannot write {}", tmp.string()));
    out << contents;
    out.flush();
    if (!out) throw Error(fmt::format("write to {} failed", tmp.string()));
  }
  fs::rename(tmp, target);
}

void Cache::store_basis(std::size_t t, std::uint64_t n, const std::vector<Monomial>& admissible) {
  write_atomic(path_for({ArtifactKind::basis, t, n, {}, {}, {}}), serialize_basis(t, n, admissible));
}

static std::optional<std::string> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::vector<Monomial>> Cache::load_basis(std::size_t t, std::uint64_t n) {
  auto text = slurp(path_for({ArtifactKind::basis, t, n, {}, {}, {}}));
  if (!text) {
    ++misses_;
    return std::nullopt;
  }
  auto basis = parse_basis(*text, t, n);
  ++hits_;
  return basis;
}

void Cache::store_record(const CacheKey& key, nlohmann::json record) {
  record["schema"] = kJsonSchema;
  write_atomic(path_for(key), record.dump() + "\n");
}

std::optional<nlohmann::json> Cache::load_record(const CacheKey& key) {
  auto text = slurp(path_for(key));
  if (!text) {
    ++misses_;
    return std::nullopt;
  }
  nlohmann::json j = nlohmann::json::parse(*text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("schema", "") != kJsonSchema)
    throw CorruptCache(fmt::format("{} is not a {} record", path_for(key).string(), kJsonSchema));
  ++hits_;
  return j;
}

std::vector<fs::path> Cache::entries() const {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir_)) return out;
  for (const auto& e : fs::directory_iterator(dir_)) {
    auto name = e.path().filename().string();
    if (!e.is_regular_file() || name.find(".tmp.") != std::string::npos) continue;
    out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Cache::clear() {
  std::size_t removed = 0;
  if (!fs::is_directory(dir_)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (!e.is_regular_file()) continue;
    auto ext = e.path().extension().string();
    auto name = e.path().filename().string();
    if (ext == ".txt" || ext == ".json" || name.find(".tmp.") != std::string::npos) {
      fs::remove(e.path());
      ++removed;
    }
  }
  return removed;
}

std::shared_ptr<const QuotientBasis> basis_via_cache(HitEngine& engine, Cache* cache, std::size_t t, std::uint64_t n,
                                                     bool need_reduction) {
  if (engine.has_basis(t, n) || !cache) return engine.basis(t, n);
  if (!need_reduction) {
    if (auto stored = cache->load_basis(t, n))
      return std::make_shared<const QuotientBasis>(QuotientBasis::from_admissible(engine.context(t, n), *stored));
  }
  auto qb = engine.basis(t, n);
  cache->store_basis(t, n, qb->admissible());
  return qb;
}

}  // namespace hitcalc
