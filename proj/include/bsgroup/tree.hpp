#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bsgroup/normal_form.hpp"
#include "bsgroup/word.hpp"

namespace bsgroup {

/// A vertex g<a> of the Bass-Serre tree, stored as the zero-tail normal form
/// of g. Coset equality is syntactic equality of the representative.
class Vertex {
 public:
  explicit Vertex(NormalForm rep);

  const NormalForm& rep() const { return rep_; }
  const BsParams& params() const { return rep_.params(); }
  std::size_t depth() const { return rep_.t_length(); }
  std::string to_string() const { return rep_.to_string(); }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& x, const Vertex& y) { return x.rep_ <=> y.rep_; }

 private:
  NormalForm rep_;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const { return NormalFormHash{}(v.rep()); }
};

/// A positive edge g<a^m>, stored with tail reduced into {0,...,|m|-1}.
class OrientedEdge {
 public:
  explicit OrientedEdge(NormalForm rep);

  const NormalForm& rep() const { return rep_; }
  std::string to_string() const { return rep_.to_string(); }

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;

 private:
  NormalForm rep_;
};

enum class Orientation {
  Outgoing,  // the vertex is the source of the connecting edge
  Incoming,  // the vertex is the range of the connecting edge
};

struct Neighbor {
  Vertex vertex;
  Orientation orientation;
};

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

Vertex base_vertex(const BsParams& params);
Vertex vertex_of(const Word& w);
OrientedEdge edge_of(const Word& w);

/// s(g<a^m>) = g<a>.
Vertex edge_source(const OrientedEdge& e);
/// r(g<a^m>) = g t^-1 <a>.
Vertex edge_range(const OrientedEdge& e);

/// The |m| + n neighbours of v: first the ranges g a^j t^-1 <a> of the
/// outgoing edges (j < |m|), then the sources g a^j t <a> of the incoming
/// edges (j < n).
std::vector<Neighbor> neighbors(const Vertex& v);

/// Left multiplication g . v. Throws ParamsMismatch.
Vertex act(const Word& g, const Vertex& v);

/// Tree distance, read off the normal form of u^-1 v.
std::size_t distance(const Vertex& u, const Vertex& v);

/// All vertices within `radius` of the base vertex, in BFS order.
struct Ball {
  BsParams params;
  int radius = 0;
  std::vector<Vertex> vertices;
  std::vector<int> depth;
  std::vector<std::optional<std::size_t>> parent;
  /// Non-parent neighbours found already visited during the search; zero in a tree.
  std::size_t revisits = 0;

  std::size_t size() const { return vertices.size(); }
  std::optional<std::size_t> index_of(const Vertex& v) const;
  bool contains(const Vertex& v) const { return index_of(v).has_value(); }

  std::unordered_map<Vertex, std::size_t, VertexHash> index;
};

/// Throws CapExceeded when the ball would hold more than `cap` vertices.
Ball ball(const BsParams& params, int radius, std::size_t cap = kDefaultBallCap);

/// Directed DOT graph of the ball; arrows point from source to range.
std::string to_dot(const Ball& b);

}  // namespace bsgroup
