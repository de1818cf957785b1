// Pure 2-dimensional abstract simplicial complexes.
#ifndef TORSIONFORGE_SIMPLICIAL_COMPLEX_HPP
#define TORSIONFORGE_SIMPLICIAL_COMPLEX_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace torsionforge {

using Vertex = std::uint32_t;
using Edge = std::array<Vertex, 2>;
using Triangle = std::array<Vertex, 3>;

/// Role of a vertex in a constructed complex. Indices are 1-based, as in
/// v^1_j, w^2_j, c_i^k. Vertices read from a facet file are `plain`.
struct VertexLabel {
  enum class Kind { base, v, w, c, plain };

  Kind kind = Kind::plain;
  std::size_t index = 0;     // cycle index for v/w, disc index for c, id for plain
  std::size_t position = 0;  // subdivision copy (1 or 2) for v/w, interior slot for c

  static VertexLabel base() { return {Kind::base, 0, 0}; }
  static VertexLabel v(std::size_t cycle, std::size_t copy) { return {Kind::v, cycle, copy}; }
  static VertexLabel w(std::size_t cycle, std::size_t copy) { return {Kind::w, cycle, copy}; }
  static VertexLabel c(std::size_t disc, std::size_t slot) { return {Kind::c, disc, slot}; }
  static VertexLabel plain(std::size_t id) { return {Kind::plain, id, 0}; }

  /// "0", "v1_3", "w2_3", "c4_1" (disc 4, slot 1), or "x17".
  std::string to_string() const;
  static VertexLabel parse(std::string_view text);

  bool operator==(const VertexLabel&) const = default;
};

/// Where an edge interior to some 2-cell came from. Used by the validator to
/// check that no two discs share an interior edge.
struct TaggedEdge {
  enum class Kind { disc_interior, shield, digon };

  Edge edge{};
  std::size_t owner = 0;  // disc (or digon) index, 1-based
  Kind kind = Kind::disc_interior;
};

/// Vertex ids index `vertices`; edges and triangles are stored with
/// ascending vertex ids and sorted.
struct SimplicialComplex2 {
  std::vector<VertexLabel> vertices;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  std::vector<TaggedEdge> interior_edges;

  std::size_t vertex_count() const { return vertices.size(); }
};

struct FaceVector {
  std::size_t f0 = 0;
  std::size_t f1 = 0;
  std::size_t f2 = 0;

  bool operator==(const FaceVector&) const = default;
};

FaceVector face_vector(const SimplicialComplex2& k);
long long euler_characteristic(const SimplicialComplex2& k);

Edge make_edge(Vertex a, Vertex b);
Triangle make_triangle(Vertex a, Vertex b, Vertex c);

/// Sorts and deduplicates the triangles, then derives the edge set.
SimplicialComplex2 complex_from_triangles(std::vector<VertexLabel> vertices,
                                          std::vector<Triangle> triangles);

/// Position of e in k.edges (sorted); -1 when absent.
long long edge_index(const SimplicialComplex2& k, const Edge& e);

struct ValidationReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string to_string() const;
};

/// Checks: vertex ids in range, no degenerate simplices, no duplicate
/// simplices, sortedness, every triangle edge present, every edge and
/// vertex in some triangle, and no interior edge claimed by two discs.
ValidationReport validate_complex(const SimplicialComplex2& k);

/// Throws ValidationError with the report when validation fails.
void require_valid(const SimplicialComplex2& k);

/// Facet format: one triangle per line, ids ascending within the line,
/// lines in ascending numeric order, newline-terminated.
std::string format_facets(const SimplicialComplex2& k);

/// Parses the facet format. Ids that occur are renumbered densely in
/// ascending order (a no-op for files using 0..max); each vertex is labelled
/// `plain` with its id from the file.
SimplicialComplex2 parse_facets(std::string_view text);

/// {"vertices": [labels], "triangles": [[a,b,c], ...]}
std::string format_complex_json(const SimplicialComplex2& k);
SimplicialComplex2 parse_complex_json(std::string_view text);

/// Facet or JSON input, chosen by the first non-blank character.
SimplicialComplex2 parse_complex(std::string_view text);

}  // namespace torsionforge

#endif  // TORSIONFORGE_SIMPLICIAL_COMPLEX_HPP
