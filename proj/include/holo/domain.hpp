#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>

#include "holo/types.hpp"
#include "holo/word.hpp"

namespace holo {

enum class DomainKind { FullSpace, Punctured, HyperplaneComplement };

std::string_view to_string(DomainKind kind);

/// C^n, C^n minus the origin, or C^n minus a nonempty union of coordinate
/// hyperplanes {z_i = 0}, i in `deleted` (1-based).
class DomainSpec {
 public:
  static DomainSpec full(std::size_t n);
  static DomainSpec punctured(std::size_t n);
  static DomainSpec complement(std::size_t n, std::set<std::size_t> deleted);

  DomainKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  const std::set<std::size_t>& deleted() const noexcept { return deleted_; }
  bool deletes(std::size_t axis) const { return deleted_.contains(axis); }

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

 private:
  DomainSpec(DomainKind kind, std::size_t n, std::set<std::size_t> deleted);

  DomainKind kind_;
  std::size_t n_;
  std::set<std::size_t> deleted_;
};

/// Exact membership test; no tolerance is applied to zero coordinates.
bool contains(const DomainSpec& d, PointView z);

struct DomainClass {
  DomainKind kind;
  bool is_stein;

  friend bool operator==(const DomainClass&, const DomainClass&) = default;
};

/// Fixed table: C^n and hyperplane complements are Stein, C^n \ {0} is not for n >= 2.
DomainClass classify_domain(const DomainSpec& d);

inline constexpr std::size_t kDefaultPreservationSamples = 256;

struct PreservationVerdict {
  bool preserves;
  /// A point of the domain whose image leaves the domain (or hits a singular
  /// point of the word) when `preserves` is false.
  std::optional<Point> witness;
};

/// Decides whether every step of `w` is an automorphism of `d` (exact rules
/// per generator type), then confirms on `samples` seeded points of `d`.
PreservationVerdict word_preserves_domain(const AutomorphismWord& w, const DomainSpec& d, std::uint64_t seed,
                                          std::size_t samples = kDefaultPreservationSamples);

}  // namespace holo
