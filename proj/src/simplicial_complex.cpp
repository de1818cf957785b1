#include "torsionforge/simplicial_complex.hpp"

#include "torsionforge/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace torsionforge {

std::string VertexLabel::to_string() const {
  switch (kind) {
    case Kind::base:
      return "0";
    case Kind::v:
      return "v" + std::to_string(position) + "_" + std::to_string(index);
    case Kind::w:
      return "w" + std::to_string(position) + "_" + std::to_string(index);
    case Kind::c:
      return "c" + std::to_string(index) + "_" + std::to_string(position);
    case Kind::plain:
      break;
  }
  return "x" + std::to_string(index);
}

VertexLabel VertexLabel::parse(std::string_view text) {
  if (text == "0") return base();
  auto number = [&](std::string_view digits) -> std::size_t {
    if (digits.empty()) throw ParseError("bad vertex label '" + std::string(text) + "'", 0, 0);
    std::size_t v = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError("bad vertex label '" + std::string(text) + "'", 0, 0);
      }
      v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    return v;
  };
  if (text.size() >= 2 && text[0] == 'x') return {Kind::plain, number(text.substr(1)), 0};
  auto sep = text.find('_');
  if (text.size() < 4 || sep == std::string_view::npos) {
    throw ParseError("bad vertex label '" + std::string(text) + "'", 0, 0);
  }
  std::size_t first = number(text.substr(1, sep - 1));
  std::size_t second = number(text.substr(sep + 1));
  switch (text[0]) {
    case 'v':
      return v(second, first);
    case 'w':
      return w(second, first);
    case 'c':
      return c(first, second);
    default:
      throw ParseError("bad vertex label '" + std::string(text) + "'", 0, 0);
  }
}

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

FaceVector face_vector(const SimplicialComplex2& k) {
  return {k.vertices.size(), k.edges.size(), k.triangles.size()};
}

long long euler_characteristic(const SimplicialComplex2& k) {
  auto f = face_vector(k);
  return static_cast<long long>(f.f0) - static_cast<long long>(f.f1) +
         static_cast<long long>(f.f2);
}

SimplicialComplex2 complex_from_triangles(std::vector<VertexLabel> vertices,
                                          std::vector<Triangle> triangles) {
  SimplicialComplex2 k;
  k.vertices = std::move(vertices);
  for (auto& t : triangles) std::sort(t.begin(), t.end());
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  k.edges.reserve(3 * triangles.size());
  for (const auto& t : triangles) {
    k.edges.push_back({t[0], t[1]});
    k.edges.push_back({t[0], t[2]});
    k.edges.push_back({t[1], t[2]});
  }
  std::sort(k.edges.begin(), k.edges.end());
  k.edges.erase(std::unique(k.edges.begin(), k.edges.end()), k.edges.end());
  k.triangles = std::move(triangles);
  return k;
}

long long edge_index(const SimplicialComplex2& k, const Edge& e) {
  auto it = std::lower_bound(k.edges.begin(), k.edges.end(), e);
  if (it == k.edges.end() || *it != e) return -1;
  return it - k.edges.begin();
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& f : failures) {
    if (!out.empty()) out += "; ";
    out += f;
  }
  return out;
}

ValidationReport validate_complex(const SimplicialComplex2& k) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
  const std::size_t nv = k.vertices.size();

  auto edge_str = [](const Edge& e) {
    return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "}";
  };
  auto tri_str = [](const Triangle& t) {
    return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
           "}";
  };

  for (const auto& e : k.edges) {
    if (e[0] >= nv || e[1] >= nv) fail("edge " + edge_str(e) + " uses an unknown vertex");
    if (e[0] == e[1]) fail("loop: edge " + edge_str(e) + " has equal endpoints");
    if (e[0] > e[1]) fail("edge " + edge_str(e) + " is not stored in ascending order");
  }
  for (const auto& t : k.triangles) {
    if (t[0] >= nv || t[1] >= nv || t[2] >= nv) {
      fail("triangle " + tri_str(t) + " uses an unknown vertex");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      fail("degenerate triangle " + tri_str(t));
    }
    if (!(t[0] <= t[1] && t[1] <= t[2])) {
      fail("triangle " + tri_str(t) + " is not stored in ascending order");
    }
  }

  std::set<Edge> seen_edges;
  for (const auto& e : k.edges) {
    if (!seen_edges.insert(e).second) fail("duplicate simplex: edge " + edge_str(e));
  }
  std::set<Triangle> seen_triangles;
  for (const auto& t : k.triangles) {
    if (!seen_triangles.insert(t).second) fail("duplicate simplex: triangle " + tri_str(t));
  }
  if (!std::is_sorted(k.edges.begin(), k.edges.end())) fail("edge list is not sorted");
  if (!std::is_sorted(k.triangles.begin(), k.triangles.end())) fail("triangle list is not sorted");

  std::set<Edge> edge_set(k.edges.begin(), k.edges.end());
  std::set<Edge> covered;
  std::vector<bool> vertex_used(nv, false);
  for (const auto& t : k.triangles) {
    const Edge sides[3] = {make_edge(t[0], t[1]), make_edge(t[0], t[2]), make_edge(t[1], t[2])};
    for (const auto& e : sides) {
      if (!edge_set.contains(e)) {
        fail("closure: edge " + edge_str(e) + " of triangle " + tri_str(t) + " is missing");
      }
      covered.insert(e);
    }
    for (Vertex v : t) {
      if (v < nv) vertex_used[v] = true;
    }
  }
  for (const auto& e : k.edges) {
    if (!covered.contains(e)) fail("edge " + edge_str(e) + " lies in no triangle");
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!vertex_used[v]) fail("vertex " + std::to_string(v) + " lies in no triangle");
  }

  // Digons and discs are numbered independently.
  auto owner_name = [](const TaggedEdge& t) {
    return std::string(t.kind == TaggedEdge::Kind::digon ? "digon " : "disc ") +
           std::to_string(t.owner);
  };
  std::map<Edge, std::string> owner;
  for (const auto& tagged : k.interior_edges) {
    auto name = owner_name(tagged);
    auto [it, inserted] = owner.emplace(tagged.edge, name);
    if (!inserted && it->second != name) {
      fail("interior edge " + edge_str(tagged.edge) + " is shared by " + it->second + " and " +
           name);
    }
  }
  return report;
}

void require_valid(const SimplicialComplex2& k) {
  auto report = validate_complex(k);
  if (!report.ok()) throw ValidationError("invalid simplicial complex: " + report.to_string());
}

std::string format_facets(const SimplicialComplex2& k) {
  std::vector<Triangle> sorted = k.triangles;
  for (auto& t : sorted) std::sort(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  out.reserve(sorted.size() * 16);
  for (const auto& t : sorted) {
    out += std::to_string(t[0]);
    out += ' ';
    out += std::to_string(t[1]);
    out += ' ';
    out += std::to_string(t[2]);
    out += '\n';
  }
  return out;
}

SimplicialComplex2 parse_facets(std::string_view text) {
  std::vector<Triangle> triangles;
  Vertex max_id = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::vector<Vertex> ids;
    std::size_t col = 0;
    while (col < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[col]))) {
        ++col;
        continue;
      }
      std::size_t tok_start = col;
      unsigned long long value = 0;
      while (col < line.size() && !std::isspace(static_cast<unsigned char>(line[col]))) {
        if (!std::isdigit(static_cast<unsigned char>(line[col])) || value > 0xffffffffULL / 10) {
          throw ParseError("expected a vertex id", line_no, tok_start + 1);
        }
        value = value * 10 + static_cast<unsigned long long>(line[col] - '0');
        ++col;
      }
      if (ids.size() == 3) throw ParseError("more than three vertices on a line", line_no, tok_start + 1);
      ids.push_back(static_cast<Vertex>(value));
    }
    if (!ids.empty()) {
      if (ids.size() != 3) {
        throw ParseError("a facet needs exactly three vertices", line_no, line.size() + 1);
      }
      if (ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2]) {
        throw ParseError("facet repeats a vertex", line_no, 1);
      }
      max_id = std::max({max_id, ids[0], ids[1], ids[2]});
      triangles.push_back(make_triangle(ids[0], ids[1], ids[2]));
    }
    start = end + 1;
  }
  if (triangles.empty()) throw ParseError("no facets found", 1, 1);
  // Ids that occur are renumbered densely in ascending order; a file using
  // exactly 0..max keeps its ids. Labels remember the original id.
  std::vector<Vertex> dense(static_cast<std::size_t>(max_id) + 1, 0);
  std::vector<bool> present(dense.size(), false);
  for (const auto& t : triangles) {
    for (Vertex v : t) present[v] = true;
  }
  std::vector<VertexLabel> labels;
  for (std::size_t v = 0; v < dense.size(); ++v) {
    if (!present[v]) continue;
    dense[v] = static_cast<Vertex>(labels.size());
    labels.push_back({VertexLabel::Kind::plain, v, 0});
  }
  for (auto& t : triangles) t = make_triangle(dense[t[0]], dense[t[1]], dense[t[2]]);
  return complex_from_triangles(std::move(labels), std::move(triangles));
}

std::string format_complex_json(const SimplicialComplex2& k) {
  nlohmann::json doc;
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& v : k.vertices) labels.push_back(v.to_string());
  nlohmann::json tris = nlohmann::json::array();
  for (const auto& t : k.triangles) tris.push_back({t[0], t[1], t[2]});
  doc["vertices"] = std::move(labels);
  doc["triangles"] = std::move(tris);
  return doc.dump() + "\n";
}

SimplicialComplex2 parse_complex_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 0, 0);
  }
  if (!doc.is_object() || !doc.contains("triangles") || !doc["triangles"].is_array()) {
    throw ParseError("JSON complex must have a \"triangles\" array", 0, 0);
  }
  std::vector<Triangle> triangles;
  Vertex max_id = 0;
  for (const auto& t : doc["triangles"]) {
    if (!t.is_array() || t.size() != 3) throw ParseError("each triangle needs three vertex ids", 0, 0);
    std::array<Vertex, 3> ids{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t[i].is_number_unsigned()) throw ParseError("vertex ids must be non-negative integers", 0, 0);
      ids[i] = t[i].get<Vertex>();
    }
    max_id = std::max({max_id, ids[0], ids[1], ids[2]});
    triangles.push_back(make_triangle(ids[0], ids[1], ids[2]));
  }
  std::vector<VertexLabel> labels;
  if (doc.contains("vertices")) {
    for (const auto& v : doc["vertices"]) labels.push_back(VertexLabel::parse(v.get<std::string>()));
    if (!triangles.empty() && labels.size() <= max_id) {
      throw ParseError("triangle refers to vertex " + std::to_string(max_id) +
                           " beyond the vertex list",
                       0, 0);
    }
  } else {
    labels.resize(triangles.empty() ? 0 : static_cast<std::size_t>(max_id) + 1);
    for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = {VertexLabel::Kind::plain, v, 0};
  }
  return complex_from_triangles(std::move(labels), std::move(triangles));
}

SimplicialComplex2 parse_complex(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_complex_json(text);
  return parse_facets(text);
}

}  // namespace torsionforge
