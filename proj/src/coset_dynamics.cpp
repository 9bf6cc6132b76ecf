#include "bsgroup/coset_dynamics.hpp"

#include <algorithm>
#include <unordered_set>

#include "bsgroup/errors.hpp"

namespace bsgroup {

PartialPermutation::PartialPermutation(int radius, std::vector<Vertex> domain,
                                       std::vector<Vertex> image)
    : radius_(radius), domain_(std::move(domain)), image_(std::move(image)) {
  if (domain_.size() != image_.size()) throw Error("partial permutation: domain/image size mismatch");
  for (std::size_t i = 0; i < domain_.size(); ++i) lookup_.emplace(domain_[i], i);
}

std::optional<Vertex> PartialPermutation::operator()(const Vertex& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return image_[it->second];
}

bool PartialPermutation::is_identity() const { return domain_ == image_; }

bool PartialPermutation::is_injective() const {
  std::unordered_set<Vertex, VertexHash> seen(image_.begin(), image_.end());
  return seen.size() == image_.size();
}

PartialPermutation tau_on_ball(const Word& g, int radius, std::size_t ball_cap) {
  Ball b = ball(g.params(), radius, ball_cap);
  const NormalForm g_nf = normal_form(g);
  std::vector<Vertex> image;
  image.reserve(b.size());
  for (const auto& v : b.vertices) {
    NormalForm nf = g_nf;
    nf.append(v.rep());
    image.emplace_back(std::move(nf));
  }
  return PartialPermutation(radius, std::move(b.vertices), std::move(image));
}

IndexReport orbit_index(const Word& g, std::uint64_t cap) {
  if (cap == 0) throw InvalidParameters("orbit cap must be positive");
  IndexReport report{g, std::nullopt, {}};
  const Vertex start = vertex_of(g);
  report.orbit.push_back(start);

  const Word a = Word::a(g.params());
  Vertex current = start;
  for (std::uint64_t j = 1; j <= cap; ++j) {
    current = act(a, current);
    if (current == start) {
      report.index = j;
      return report;
    }
    report.orbit.push_back(current);
  }
  return report;
}

std::vector<NormalForm> enumerate_prefixes(const BsParams& params, int max_entries) {
  std::vector<NormalForm> result;
  std::vector<PrefixEntry> stack;

  auto emit = [&] {
    NormalForm nf(params);
    for (const auto& e : stack) {
      nf.append_a(e.residue);
      nf.append_t(e.t_sign);
    }
    result.push_back(std::move(nf));
  };

  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(stack.size()) == max_entries) return;
    for (int sign : {+1, -1}) {
      const std::int64_t modulus = sign > 0 ? params.n() : params.abs_m();
      for (std::int64_t r = 0; r < modulus; ++r) {
        // A zero residue between opposite t-letters is a free cancellation or pinch.
        if (!stack.empty() && stack.back().t_sign == -sign && r == 0) continue;
        stack.push_back({sign, r});
        emit();
        self(self);
        stack.pop_back();
      }
    }
  };
  recurse(recurse);
  return result;
}

std::uint64_t min_index_over_words(const BsParams& params, int max_syllables, std::uint64_t cap) {
  if (max_syllables < 1) throw InvalidParameters("max_syllables must be at least 1");
  std::uint64_t best = 0;
  for (const auto& nf : enumerate_prefixes(params, max_syllables)) {
    const IndexReport report = orbit_index(nf.to_word(), cap);
    if (report.exceeded_cap()) throw CapExceeded("orbit", cap);
    if (best == 0 || *report.index < best) best = *report.index;
  }
  return best;
}

std::uint64_t commensuration_exponent(const Word& g, std::uint64_t cap) {
  if (cap == 0) throw InvalidParameters("exponent cap must be positive");
  const NormalForm g_nf = normal_form(g);
  const NormalForm g_inv = normal_form(invert(g));
  for (std::uint64_t k = 1; k <= cap; ++k) {
    NormalForm nf = g_nf;
    nf.append_a(k);
    nf.append(g_inv);
    if (nf.prefix().empty()) return k;
  }
  throw CapExceeded("commensuration", cap);
}

BigInt finite_index_intersection(std::span<const Word> reps, std::uint64_t cap) {
  if (reps.empty()) throw InvalidParameters("finite_index_intersection needs at least one element");
  BigInt result = 1;
  for (const auto& g : reps) {
    const BigInt k = commensuration_exponent(invert(g), cap);
    result = boost::multiprecision::lcm(result, k);
  }
  return result;
}

bool acts_trivially_on_ball(const Word& g, int radius, std::size_t ball_cap) {
  const Ball b = ball(g.params(), radius, ball_cap);
  const NormalForm g_nf = normal_form(g);
  return std::all_of(b.vertices.begin(), b.vertices.end(), [&g_nf](const Vertex& v) {
    NormalForm nf = g_nf;
    nf.append(v.rep());
    return Vertex(std::move(nf)) == v;
  });
}

}  // namespace bsgroup
