#include "torsionforge/triangulation.hpp"

#include "torsionforge/errors.hpp"

#include <map>

namespace torsionforge {

namespace {

std::size_t inner_size(std::size_t s) { return (3 * s + 1) / 2; }

void require_coherent_orientation(const DiscComplexSpec& spec) {
  for (std::size_t i = 0; i < spec.discs.size(); ++i) {
    std::map<std::size_t, int> seen;
    for (const auto& letter : spec.discs[i]) {
      auto [it, inserted] = seen.emplace(letter.cycle, letter.orientation);
      if (!inserted && it->second != letter.orientation) {
        throw ValidationError("disc " + std::to_string(i + 1) + " runs over cycle " +
                              std::to_string(letter.cycle + 1) + " in both directions");
      }
    }
  }
}

}  // namespace

std::size_t generic_vertex_count(const DiscComplexSpec& spec) {
  std::size_t count = 1 + 2 * spec.n_cycles;
  for (const auto& word : spec.discs) count += inner_size(word.size());
  return count;
}

std::size_t generic_vertex_bound(const DiscComplexSpec& spec) {
  std::size_t total = 0;
  for (const auto& word : spec.discs) total += word.size();
  return 2 * spec.n_cycles + spec.discs.size() + 1 + (3 * total) / 2;
}

SimplicialComplex2 triangulate_generic(const DiscComplexSpec& spec) {
  // Revalidate in case the spec was assembled by hand.
  DiscComplexSpec::from_words(spec.n_cycles, spec.discs);
  require_coherent_orientation(spec);

  std::vector<VertexLabel> labels;
  labels.reserve(generic_vertex_count(spec));
  labels.push_back(VertexLabel::base());
  for (std::size_t j = 0; j < spec.n_cycles; ++j) {
    labels.push_back(VertexLabel::v(j + 1, 1));
    labels.push_back(VertexLabel::v(j + 1, 2));
  }
  auto subdivision = [](std::size_t cycle, int copy) {
    return static_cast<Vertex>(1 + 2 * cycle + static_cast<std::size_t>(copy - 1));
  };

  std::vector<Triangle> triangles;
  std::vector<TaggedEdge> interior;

  for (std::size_t i = 0; i < spec.discs.size(); ++i) {
    const auto& word = spec.discs[i];
    const std::size_t disc = i + 1;

    std::vector<Vertex> boundary;
    boundary.reserve(3 * word.size());
    for (const auto& letter : word) {
      boundary.push_back(0);
      if (letter.orientation > 0) {
        boundary.push_back(subdivision(letter.cycle, 1));
        boundary.push_back(subdivision(letter.cycle, 2));
      } else {
        boundary.push_back(subdivision(letter.cycle, 2));
        boundary.push_back(subdivision(letter.cycle, 1));
      }
    }
    const std::size_t slots = boundary.size();
    const std::size_t inner = inner_size(word.size());

    const auto first_inner = static_cast<Vertex>(labels.size());
    for (std::size_t k = 1; k <= inner; ++k) labels.push_back(VertexLabel::c(disc, k));
    auto c = [&](std::size_t k) { return static_cast<Vertex>(first_inner + k % inner); };

    auto add = [&](Vertex a, Vertex b, Vertex d) { triangles.push_back(make_triangle(a, b, d)); };
    auto tag = [&](Vertex a, Vertex b) {
      interior.push_back({make_edge(a, b), disc, TaggedEdge::Kind::disc_interior});
    };

    for (std::size_t k = 0; k < inner; ++k) {
      const std::size_t p = 2 * k;
      if (p < slots) {
        add(c(k), boundary[p], boundary[(p + 1) % slots]);
        tag(c(k), boundary[p]);
        tag(c(k), boundary[(p + 1) % slots]);
      }
      if (p + 1 < slots) {
        add(c(k), boundary[p + 1], boundary[(p + 2) % slots]);
        tag(c(k), boundary[(p + 2) % slots]);
      }
      // Gap between this cone and the next one, at the last slot reached.
      const Vertex last = boundary[std::min(p + 2, slots) % slots];
      add(c(k), c(k + 1), last);
      tag(c(k), c(k + 1));
    }
    for (std::size_t k = 2; k < inner; ++k) {
      add(c(0), c(k - 1), c(k));
      tag(c(0), c(k));
    }
  }

  auto k = complex_from_triangles(std::move(labels), std::move(triangles));
  k.interior_edges = std::move(interior);
  require_valid(k);
  return k;
}

}  // namespace torsionforge
