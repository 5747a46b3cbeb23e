#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "hitcalc/cache.hpp"
#include "hitcalc/error.hpp"

using namespace hitcalc;
namespace fs = std::filesystem;

namespace {
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hitcalc-cache-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
}
}  // namespace

TEST_CASE("canonical keys") {
  CHECK(CacheKey{ArtifactKind::basis, 5, 14, {}, {}, {}}.canonical() == "basis-t5-n14");
  CHECK(CacheKey{ArtifactKind::dims, 5, 31, WeightVector{3, 2, 2, 2}, SupportPart::positive, {}}.canonical() ==
        "dims-t5-n31-w3.2.2.2-positive");
  CHECK(CacheKey{ArtifactKind::invariants, 5, 14, {}, {}, "gl"}.canonical() == "invariants-t5-n14-gl");
}

TEST_CASE("basis round trip") {
  HitEngine engine;
  auto qb = engine.basis(5, 14);
  auto text = serialize_basis(5, 14, qb->admissible());
  CHECK(parse_basis(text, 5, 14) == qb->admissible());
  CHECK_THROWS_AS(parse_basis(text, 4, 14), CorruptCache);
  CHECK_THROWS_AS(parse_basis(text, 5, 13), CorruptCache);
  CHECK_THROWS_AS(parse_basis("", 5, 14), CorruptCache);
  auto header = basis_header(5, 14) + "\n";
  CHECK_THROWS_AS(parse_basis(header + "0 0 0 0 14\n0 0 0 1 13\n0 0 0 0 14\n", 5, 14), CorruptCache);
  CHECK_THROWS_AS(parse_basis(header + "0 0 0 1 12\n", 5, 14), CorruptCache);
  CHECK_THROWS_AS(parse_basis(header + "0 0 x 1 12\n", 5, 14), CorruptCache);
  CHECK(parse_basis(header, 5, 14).empty());
}

TEST_CASE("cache store and load") {
  TempDir tmp;
  Cache cache(tmp.path);
  CHECK(cache.entries().empty());
  CHECK_FALSE(cache.load_basis(5, 14).has_value());
  CHECK(cache.misses() == 1);

  HitEngine engine;
  auto computed = basis_via_cache(engine, &cache, 5, 14);
  CHECK(computed->dim() == 320);
  CHECK(fs::exists(tmp.path / "basis-t5-n14.txt"));

  HitEngine fresh;
  auto loaded = basis_via_cache(fresh, &cache, 5, 14);
  CHECK(loaded->admissible() == computed->admissible());
  CHECK_FALSE(loaded->has_reduction());
  CHECK(fresh.eliminations() == 0);
  CHECK(cache.hits() == 1);
  CHECK(basis_via_cache(fresh, &cache, 5, 14, true)->has_reduction());

  CacheKey key{ArtifactKind::dims, 5, 14, {}, {}, {}};
  cache.store_record(key, {{"dim", 320}});
  auto rec = cache.load_record(key);
  REQUIRE(rec.has_value());
  CHECK((*rec)["schema"] == kJsonSchema);
  CHECK((*rec)["dim"] == 320);
  CHECK(cache.entries().size() == 2);
  for (const auto& e : fs::directory_iterator(tmp.path)) CHECK(e.path().filename().string().find(".tmp.") == std::string::npos);

  write_file(cache.path_for(key), "{\"dim\": 320}\n");
  CHECK_THROWS_AS(cache.load_record(key), CorruptCache);
  write_file(cache.path_for(key), "not json");
  CHECK_THROWS_AS(cache.load_record(key), CorruptCache);

  write_file(tmp.path / "basis-t5-n14.txt", basis_header(4, 14) + "\n");
  CHECK_THROWS_AS(cache.load_basis(5, 14), CorruptCache);

  CHECK(cache.clear() == 2);
  CHECK(cache.entries().empty());
}
