#include "torsionforge/homology.hpp"

#include <json.hpp>

#include <future>
#include <map>

namespace torsionforge {

namespace {

nlohmann::json group_json(const AbelianGroup& g) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : g.invariant_factors) factors.push_back(f.get_str());
  nlohmann::json primary = nlohmann::json::array();
  for (const auto& p : g.primary) primary.push_back(p.value().get_str());
  return {{"free_rank", g.free_rank},
          {"invariant_factors", factors},
          {"primary", primary},
          {"text", g.to_string()}};
}

}  // namespace

long long HomologyResult::euler_characteristic() const {
  return static_cast<long long>(h0.free_rank) - static_cast<long long>(h1.free_rank) +
         static_cast<long long>(h2.free_rank);
}

std::string HomologyResult::to_string() const {
  return "H0 = " + h0.to_string() + "\nH1 = " + h1.to_string() + "\nH2 = " + h2.to_string() + "\n";
}

std::string HomologyResult::to_json() const {
  nlohmann::json doc{{"h0", group_json(h0)}, {"h1", group_json(h1)}, {"h2", group_json(h2)}};
  return doc.dump(2) + "\n";
}

SparseBoundaries sparse_boundary_matrices(const SimplicialComplex2& k) {
  const auto nv = static_cast<Index>(k.vertices.size());
  const auto ne = static_cast<Index>(k.edges.size());
  const auto nt = static_cast<Index>(k.triangles.size());
  SparseBoundaries out{SparseRows<BigInt>(ne, nv), SparseRows<BigInt>(nt, ne)};
  for (Index i = 0; i < ne; ++i) {
    const auto& e = k.edges[static_cast<std::size_t>(i)];
    out.d1.data[i] = {{static_cast<Index>(e[0]), BigInt(-1)}, {static_cast<Index>(e[1]), BigInt(1)}};
  }
  for (Index i = 0; i < nt; ++i) {
    const auto& t = k.triangles[static_cast<std::size_t>(i)];
    // Edge ids increase in this order.
    const long long ab = edge_index(k, {t[0], t[1]});
    const long long ac = edge_index(k, {t[0], t[2]});
    const long long bc = edge_index(k, {t[1], t[2]});
    if (ab < 0 || ac < 0 || bc < 0) {
      throw ValidationError("boundary_matrices: triangle edge missing from the edge list");
    }
    out.d2.data[i] = {{ab, BigInt(1)}, {ac, BigInt(-1)}, {bc, BigInt(1)}};
  }
  return out;
}

bool boundary_composite_vanishes(const SparseBoundaries& d) {
  std::map<Index, BigInt> acc;
  for (const auto& row : d.d2.data) {
    acc.clear();
    for (const auto& [edge, coeff] : row) {
      for (const auto& [vertex, c] : d.d1.data[static_cast<std::size_t>(edge)]) acc[vertex] += coeff * c;
    }
    for (const auto& [vertex, value] : acc) {
      if (value != 0) return false;
    }
  }
  return true;
}

BoundaryMatrices boundary_matrices(const SimplicialComplex2& k) {
  require_valid(k);
  auto sparse = sparse_boundary_matrices(k);
  return {sparse.d1.to_dense(), sparse.d2.to_dense()};
}

HomologyResult simplicial_homology(const SimplicialComplex2& k) {
  require_valid(k);
  auto [d1, d2] = sparse_boundary_matrices(k);
  const auto f = face_vector(k);

  auto d1_factors = std::async(std::launch::async, [m = std::move(d1)]() mutable {
    return smith_invariant_factors(std::move(m));
  });
  auto d2_factors = smith_invariant_factors(std::move(d2));
  auto d1_result = d1_factors.get();

  const std::size_t rank1 = d1_result.size();
  const std::size_t rank2 = d2_factors.size();
  // Graph incidence matrices are totally unimodular.
  for (const auto& a : d1_result) {
    if (a != 1) throw ValidationError("simplicial_homology: non-unit invariant factor in d1");
  }

  std::vector<BigInt> torsion;
  for (const auto& a : d2_factors) {
    if (a > 1) torsion.push_back(a);
  }

  HomologyResult result;
  result.h0 = group_from_factors({}, f.f0 - rank1);
  result.h1 = group_from_factors(torsion, f.f1 - rank1 - rank2);
  result.h2 = group_from_factors({}, f.f2 - rank2);
  return result;
}

}  // namespace torsionforge
