#include "bsgroup/tree.hpp"

#include <deque>
#include <sstream>

#include "bsgroup/errors.hpp"

namespace bsgroup {

namespace {

NormalForm with_tail(NormalForm nf, BigInt tail) {
  nf.set_tail(std::move(tail));
  return nf;
}

}  // namespace

Vertex::Vertex(NormalForm rep) : rep_(with_tail(std::move(rep), 0)) {}

OrientedEdge::OrientedEdge(NormalForm rep)
    : rep_(with_tail(rep, floor_mod(rep.tail(), BigInt(rep.params().abs_m())))) {}

Vertex base_vertex(const BsParams& params) { return Vertex(NormalForm(params)); }

Vertex vertex_of(const Word& w) { return Vertex(normal_form(w)); }

OrientedEdge edge_of(const Word& w) { return OrientedEdge(normal_form(w)); }

Vertex edge_source(const OrientedEdge& e) { return Vertex(e.rep()); }

Vertex edge_range(const OrientedEdge& e) {
  NormalForm nf = e.rep();
  nf.append_t(-1);
  return Vertex(std::move(nf));
}

std::vector<Neighbor> neighbors(const Vertex& v) {
  const BsParams& p = v.params();
  std::vector<Neighbor> result;
  result.reserve(static_cast<std::size_t>(p.abs_m() + p.n()));
  for (std::int64_t j = 0; j < p.abs_m(); ++j) {
    NormalForm nf = v.rep();
    nf.append_a(j);
    nf.append_t(-1);
    result.push_back({Vertex(std::move(nf)), Orientation::Outgoing});
  }
  for (std::int64_t j = 0; j < p.n(); ++j) {
    NormalForm nf = v.rep();
    nf.append_a(j);
    nf.append_t(+1);
    result.push_back({Vertex(std::move(nf)), Orientation::Incoming});
  }
  return result;
}

Vertex act(const Word& g, const Vertex& v) {
  if (!(g.params() == v.params())) {
    throw ParamsMismatch("acting with a word over " + g.params().to_string() + " on a vertex over " +
                         v.params().to_string());
  }
  NormalForm nf = normal_form(g);
  nf.append(v.rep());
  return Vertex(std::move(nf));
}

std::size_t distance(const Vertex& u, const Vertex& v) {
  NormalForm nf = normal_form(invert(u.rep().to_word()));
  nf.append(v.rep());
  return nf.t_length();
}

std::optional<std::size_t> Ball::index_of(const Vertex& v) const {
  auto it = index.find(v);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Ball ball(const BsParams& params, int radius, std::size_t cap) {
  if (radius < 0) throw InvalidParameters("ball radius must be nonnegative");
  Ball b{params, radius, {}, {}, {}, 0, {}};

  auto add = [&b, cap](Vertex v, int depth, std::optional<std::size_t> parent) {
    if (b.vertices.size() >= cap) throw CapExceeded("ball", cap);
    b.index.emplace(v, b.vertices.size());
    b.vertices.push_back(std::move(v));
    b.depth.push_back(depth);
    b.parent.push_back(parent);
  };

  add(base_vertex(params), 0, std::nullopt);
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    if (b.depth[i] == radius) continue;
    const auto parent = b.parent[i];
    for (auto& nb : neighbors(b.vertices[i])) {
      if (parent && nb.vertex == b.vertices[*parent]) continue;
      if (b.index.contains(nb.vertex)) {
        ++b.revisits;
        continue;
      }
      add(std::move(nb.vertex), b.depth[i] + 1, i);
    }
  }
  return b;
}

std::string to_dot(const Ball& b) {
  std::ostringstream out;
  out << "digraph bass_serre {\n";
  out << "  label=\"BS" << b.params.to_string() << " ball of radius " << b.radius << "\";\n";
  for (std::size_t i = 0; i < b.size(); ++i) {
    out << "  v" << i << " [label=\"" << b.vertices[i].to_string() << "\"];\n";
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (const auto& nb : neighbors(b.vertices[i])) {
      if (nb.orientation != Orientation::Outgoing) continue;
      if (auto j = b.index_of(nb.vertex)) out << "  v" << i << " -> v" << *j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bsgroup
