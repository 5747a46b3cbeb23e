#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hitcalc/hit_quotient.hpp"
#include "hitcalc/monomial.hpp"

namespace hitcalc {

enum class ArtifactKind { basis, dims, trace, invariants };

std::string_view to_string(ArtifactKind kind);

struct CacheKey {
  ArtifactKind kind = ArtifactKind::basis;
  std::size_t t = 0;
  std::uint64_t n = 0;
  std::optional<WeightVector> weight;
  std::optional<SupportPart> part;
  /// Free-form qualifier, e.g. the group of an invariants record.
  std::string qualifier;

  /// "dims-t5-n31-w3.2.2.2-positive", "basis-t5-n14", ...
  std::string canonical() const;
};

inline constexpr const char* kJsonSchema = "hitcalc/1";

std::string basis_header(std::size_t t, std::uint64_t n);
std::string serialize_basis(std::size_t t, std::uint64_t n, const std::vector<Monomial>& admissible);
/// Throws CorruptCache on a bad header, a malformed or wrong-degree line,
/// or lines that are not strictly ascending in the monomial order.
std::vector<Monomial> parse_basis(std::string_view text, std::size_t t, std::uint64_t n);

/// On-disk store of admissible bases (text) and small results (JSON).
/// Writes go through a temporary file and a rename.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  /// HITCALC_CACHE_DIR, defaulting to ./.hitcalc-cache.
  static Cache from_env();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const CacheKey& key) const;

  void store_basis(std::size_t t, std::uint64_t n, const std::vector<Monomial>& admissible);
  std::optional<std::vector<Monomial>> load_basis(std::size_t t, std::uint64_t n);

  void store_record(const CacheKey& key, nlohmann::json record);
  std::optional<nlohmann::json> load_record(const CacheKey& key);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

  /// Cache files currently present, sorted by name.
  std::vector<std::filesystem::path> entries() const;
  /// Removes every cache file; returns how many were removed.
  std::size_t clear();

 private:
  void write_atomic(const std::filesystem::path& target, const std::string& contents);

  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// The basis of (t, n): from the engine's memo, then the cache, then by
/// elimination (stored back into the cache). A basis read from disk has
/// no reduction data; pass need_reduction to force a full computation.
std::shared_ptr<const QuotientBasis> basis_via_cache(HitEngine& engine, Cache* cache, std::size_t t, std::uint64_t n,
                                                     bool need_reduction = false);

}  // namespace hitcalc
