#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bsgroup/tree.hpp"
#include "bsgroup/word.hpp"

namespace bsgroup {

inline constexpr std::uint64_t kDefaultOrbitCap = 100'000;

/// Left multiplication by a fixed element, restricted to a ball.
class PartialPermutation {
 public:
  PartialPermutation(int radius, std::vector<Vertex> domain, std::vector<Vertex> image);

  int domain_radius() const { return radius_; }
  const std::vector<Vertex>& domain() const { return domain_; }
  const std::vector<Vertex>& image() const { return image_; }
  std::size_t size() const { return domain_.size(); }

  std::optional<Vertex> operator()(const Vertex& v) const;
  bool is_identity() const;
  bool is_injective() const;

 private:
  int radius_;
  std::vector<Vertex> domain_;
  std::vector<Vertex> image_;
  std::unordered_map<Vertex, std::size_t, VertexHash> lookup_;
};

/// Orbit of g<a> under <a>. `index` is empty when the orbit did not close
/// within the cap; `orbit` then holds the vertices visited so far.
struct IndexReport {
  Word element;
  std::optional<std::uint64_t> index;
  std::vector<Vertex> orbit;

  bool exceeded_cap() const { return !index.has_value(); }
};

PartialPermutation tau_on_ball(const Word& g, int radius, std::size_t ball_cap = kDefaultBallCap);

/// [<a> : <a> ∩ g<a>g^-1], computed as the length of the <a>-orbit of g<a>.
IndexReport orbit_index(const Word& g, std::uint64_t cap = kDefaultOrbitCap);

/// Every normal form a^r1 t^e1 ... a^rk t^ek with 1 <= k <= max_entries and
/// zero tail, residues in their transversals, no pinches. Each such form is
/// a distinct coset g<a> outside <a>.
std::vector<NormalForm> enumerate_prefixes(const BsParams& params, int max_entries);

/// Minimum orbit index over enumerate_prefixes(params, max_syllables).
/// Throws CapExceeded if any orbit search does.
std::uint64_t min_index_over_words(const BsParams& params, int max_syllables,
                                   std::uint64_t cap = kDefaultOrbitCap);

/// Least k > 0 with g a^k g^-1 in <a>. Throws CapExceeded.
std::uint64_t commensuration_exponent(const Word& g, std::uint64_t cap = kDefaultOrbitCap);

/// Positive generator of the intersection over i of <a> ∩ g_i<a>g_i^-1,
/// i.e. the lcm of commensuration_exponent(g_i^-1).
BigInt finite_index_intersection(std::span<const Word> reps, std::uint64_t cap = kDefaultOrbitCap);

bool acts_trivially_on_ball(const Word& g, int radius, std::size_t ball_cap = kDefaultBallCap);

}  // namespace bsgroup
