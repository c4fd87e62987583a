#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chkit/orgraph.hpp"

namespace chkit {

// A named small orgraph used as a (possibly induced) subgraph query.
struct Pattern {
  std::string name;
  Orgraph graph;
  // Vertex names in index order, e.g. {"s", "m", "t", "p"}.
  std::vector<std::string> vertex_names;
  std::string note;
};

namespace patterns {

Pattern c3();
Pattern i3();
// Out-star a->b, a->c.
Pattern k12();
// In-star a->c, b->c.
Pattern k21();
Pattern transitive_triangle();
// Path a->b->c.
Pattern path3();

// The three 4-vertex orgraphs absent from every known extremal configuration.
// Their edge sets are pinned down by the case analyses that use them:
//
// In-Pendant: transitive triangle s->m->t, s->t plus p->m with p independent of
//   s and t. Appears as {v, x, y, z} with v->x, v->z, x->z, y->x.
// Out-Pendant: the same triangle plus m->p. Appears as {u, v, w, x} with
//   u->v, u->w, v->w, v->x.
// Twisted Circle: a->b->c->d plus a->d, both diagonals absent.
Pattern in_pendant();
Pattern out_pendant();
Pattern twisted_circle();

// {in_pendant, out_pendant, twisted_circle}.
std::vector<Pattern> ch3_forbidden();

// CLI names: c3, i3, k12, k21, trans-triangle, in-pendant, out-pendant, twisted-circle.
std::optional<Pattern> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace patterns

// vertex_map[i] = host vertex that pattern vertex i is sent to.
using VertexMap = std::vector<int>;

// All induced embeddings of p into g, one per image vertex set (maps sharing an
// image differ by an automorphism of the pattern).
std::vector<VertexMap> find_induced(const Orgraph& g, const Pattern& p);
bool contains_induced(const Orgraph& g, const Pattern& p);
std::optional<VertexMap> first_induced(const Orgraph& g, const Orgraph& p);

// Not-necessarily-induced containment: every pattern edge maps to a host edge.
bool contains_subgraph(const Orgraph& g, const Pattern& p);
bool contains_subgraph(const Orgraph& g, const Orgraph& p);

bool is_pattern_free(const Orgraph& g, std::span<const Pattern> patterns, bool induced);

}  // namespace chkit
