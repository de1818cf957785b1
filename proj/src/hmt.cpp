#include "torsionforge/hmt.hpp"

#include "torsionforge/errors.hpp"
#include "torsionforge/hadamard.hpp"

#include <json.hpp>

#include <bit>
#include <chrono>
#include <map>

namespace torsionforge {

SimplicialComplex2 build_hmt(const IntMatrix& h, const ValidSequence& seq,
                             const HmtOptions& options) {
  if (h.rows() != h.cols()) throw DimensionError("build_hmt: matrix must be square");
  const auto n = static_cast<std::size_t>(h.rows());
  if (n < 2) throw InputError("build_hmt: n must be at least 2 (a single disc needs no shields)");
  if (seq.n != n) throw DimensionError("build_hmt: sequence size does not match the matrix");
  if (options.validate) {
    auto validity = check_valid(seq, h);
    if (validity.ordering_failure) throw ValidationError("build_hmt: " + validity.to_string());
  }
  if (!options.keep_first_digon) {
    for (Index i = 0; i < h.rows(); ++i) {
      if (h(i, 0) != 1) {
        throw InputError("build_hmt: column 1 has a -1 entry, so the first digon must be kept");
      }
    }
  }

  const HmtVertexMap ids(n, options.keep_first_digon);
  std::vector<VertexLabel> labels(ids.vertex_count());
  labels[0] = VertexLabel::base();
  for (std::size_t j = 1; j <= n; ++j) {
    labels[ids.v(j, 1)] = VertexLabel::v(j, 1);
    labels[ids.v(j, 2)] = VertexLabel::v(j, 2);
    if (j >= 2 || options.keep_first_digon) {
      labels[ids.w(j, 1)] = VertexLabel::w(j, 1);
      labels[ids.w(j, 2)] = VertexLabel::w(j, 2);
    }
  }
  for (std::size_t i = 1; i <= n; ++i) labels[ids.c(i)] = VertexLabel::c(i, 1);

  std::vector<Triangle> triangles;
  triangles.reserve(3 * n * n + 4 * n);
  std::vector<TaggedEdge> interior;
  interior.reserve(3 * n * n + 3 * n);

  std::vector<Vertex> ring(2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& perm = seq.perms[i - 1];
    // Subdivision vertices in boundary order, skipping the copies of 0.
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t j = perm[pos];
      const bool positive = h(static_cast<Index>(i - 1), static_cast<Index>(j - 1)) > 0;
      ring[2 * pos] = positive ? ids.v(j, 1) : ids.w(j, 1);
      ring[2 * pos + 1] = positive ? ids.v(j, 2) : ids.w(j, 2);
    }
    const Vertex centre = ids.c(i);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const Vertex tail = ring[2 * pos + 1];
      const Vertex head = ring[(2 * pos + 2) % (2 * n)];
      triangles.push_back(make_triangle(tail, 0, head));
      interior.push_back({make_edge(tail, head), i, TaggedEdge::Kind::shield});
    }
    for (std::size_t u = 0; u < 2 * n; ++u) {
      triangles.push_back(make_triangle(centre, ring[u], ring[(u + 1) % (2 * n)]));
      interior.push_back({make_edge(centre, ring[u]), i, TaggedEdge::Kind::disc_interior});
    }
  }

  for (std::size_t j = options.keep_first_digon ? 1 : 2; j <= n; ++j) {
    const Vertex v1 = ids.v(j, 1);
    const Vertex v2 = ids.v(j, 2);
    const Vertex w1 = ids.w(j, 1);
    const Vertex w2 = ids.w(j, 2);
    triangles.push_back(make_triangle(0, v1, w2));
    triangles.push_back(make_triangle(v1, v2, w2));
    triangles.push_back(make_triangle(v2, w1, w2));
    triangles.push_back(make_triangle(0, v2, w1));
    interior.push_back({make_edge(v1, w2), j, TaggedEdge::Kind::digon});
    interior.push_back({make_edge(v2, w2), j, TaggedEdge::Kind::digon});
    interior.push_back({make_edge(v2, w1), j, TaggedEdge::Kind::digon});
  }

  auto k = complex_from_triangles(std::move(labels), std::move(triangles));
  k.interior_edges = std::move(interior);
  if (options.validate) require_valid(k);
  return k;
}

SimplicialComplex2 build_hmt(std::size_t n, const HmtOptions& options) {
  if (!is_power_of_two(n) || n < 2) {
    throw InputError("build_hmt: n = " + std::to_string(n) +
                     " must be a power of two >= 2; for n = 1 there is a single disc and no "
                     "shield triangles, so HMT(1) is not defined");
  }
  return build_hmt(walsh(n), valid_sequence(n), options);
}

FaceVector hmt_face_vector_formula(std::size_t n) {
  return {5 * n - 1, 3 * n * n + 9 * n - 6, 3 * n * n + 4 * n - 4};
}

IntMatrix hmt_relation_matrix(std::size_t n, const HmtOptions& options) {
  IntMatrix full = augment(walsh(n));
  if (options.keep_first_digon) return full;
  const auto size = static_cast<Index>(2 * n);
  IntMatrix out(size - 1, size - 1);
  const auto digon_row = static_cast<Index>(n);  // 0-based row of digon 1
  for (Index r = 0, rr = 0; r < size; ++r) {
    if (r == digon_row) continue;
    for (Index c = 0, cc = 0; c < size; ++c) {
      if (c == 1) continue;
      out(rr, cc++) = full(r, c);
    }
    ++rr;
  }
  return out;
}

HmtStructureReport check_hmt_structure(const SimplicialComplex2& k) {
  HmtStructureReport report;
  std::map<Edge, std::vector<std::size_t>> shield_owners;
  std::map<Edge, std::size_t> disc_edges;
  std::vector<Edge> digon_edges;
  for (const auto& t : k.interior_edges) {
    switch (t.kind) {
      case TaggedEdge::Kind::shield:
        shield_owners[t.edge].push_back(t.owner);
        ++report.shield_diagonals;
        break;
      case TaggedEdge::Kind::disc_interior:
        disc_edges.emplace(t.edge, t.owner);
        break;
      case TaggedEdge::Kind::digon:
        digon_edges.push_back(t.edge);
        ++report.digon_edges;
        break;
    }
  }
  auto edge_str = [](const Edge& e) {
    return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "}";
  };
  for (const auto& [edge, owners] : shield_owners) {
    if (owners.size() != 1) {
      report.failures.push_back("shield diagonal " + edge_str(edge) + " occurs " +
                                std::to_string(owners.size()) + " times");
    }
    if (disc_edges.contains(edge)) {
      report.failures.push_back("shield diagonal " + edge_str(edge) + " is also a cone edge");
    }
  }
  for (const auto& edge : digon_edges) {
    if (shield_owners.contains(edge)) {
      report.failures.push_back("digon edge " + edge_str(edge) + " is a shield diagonal");
    }
    if (disc_edges.contains(edge)) {
      report.failures.push_back("digon edge " + edge_str(edge) + " is a disc-interior edge");
    }
  }
  return report;
}

std::string HmtCertificate::to_json() const {
  auto fv = [](const FaceVector& f) { return nlohmann::json::array({f.f0, f.f1, f.f2}); };
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : homology.h1.invariant_factors) factors.push_back(f.get_str());
  nlohmann::json primary = nlohmann::json::array();
  for (const auto& p : homology.h1.primary) primary.push_back(p.value().get_str());
  nlohmann::json expected_primary = nlohmann::json::array();
  for (const auto& p : expected_h1_primary) expected_primary.push_back(p.value().get_str());
  nlohmann::json doc{
      {"n", n},
      {"pass", pass},
      {"face_vector", fv(face_vector)},
      {"expected_face_vector", fv(expected_face_vector)},
      {"h0", homology.h0.to_string()},
      {"h1", homology.h1.to_string()},
      {"h1_invariant_factors", factors},
      {"h1_primary", primary},
      {"expected_h1_primary", expected_primary},
      {"h1_order", h1_order.get_str()},
      {"expected_h1_order", expected_h1_order.get_str()},
      {"h2", homology.h2.to_string()},
      {"chi", chi},
      {"elapsed", elapsed_seconds},
      {"discrepancies", discrepancies},
  };
  return doc.dump(2) + "\n";
}

HmtCertificate hmt_certificate(std::size_t n) {
  if (!is_power_of_two(n) || n < 2) {
    throw InputError("hmt_certificate: n = " + std::to_string(n) + " must be a power of two >= 2");
  }
  const auto start = std::chrono::steady_clock::now();
  HmtCertificate cert;
  cert.n = n;
  cert.expected_face_vector = hmt_face_vector_formula(n);
  auto fail = [&](std::string msg) { cert.discrepancies.push_back(std::move(msg)); };

  const auto k = static_cast<unsigned>(std::countr_zero(n));
  const auto binom = binomial_row(k);
  for (unsigned j = 1; j <= k; ++j) {
    for (BigInt c = 0; c < binom[j]; ++c) cert.expected_h1_primary.push_back({BigInt(2), j});
  }
  // n^{n/2} = 2^{k n / 2}
  cert.expected_h1_order = BigInt(1) << static_cast<mp_bitcnt_t>(k * n / 2);

  SimplicialComplex2 complex;
  try {
    complex = build_hmt(n);
  } catch (const std::exception& e) {
    fail(std::string("construction failed: ") + e.what());
    return cert;
  }

  auto structure = check_hmt_structure(complex);
  for (const auto& f : structure.failures) fail(f);

  cert.face_vector = face_vector(complex);
  cert.chi = euler_characteristic(complex);
  cert.homology = simplicial_homology(complex);
  cert.h1_order = cert.homology.h1.torsion_order();

  if (cert.face_vector != cert.expected_face_vector) fail("face vector differs from the formula");
  if (cert.chi != 1) fail("Euler characteristic is " + std::to_string(cert.chi) + ", expected 1");
  if (cert.homology.h0 != group_from_factors({}, 1)) fail("H0 = " + cert.homology.h0.to_string() + ", expected Z");
  if (!cert.homology.h2.is_trivial()) fail("H2 = " + cert.homology.h2.to_string() + ", expected 0");
  if (cert.homology.h1.free_rank != 0) fail("H1 has a free part");
  if (cert.homology.h1.primary != cert.expected_h1_primary) {
    fail("H1 primary decomposition " + cert.homology.h1.primary_string() + " differs from the expected one");
  }
  if (cert.h1_order != cert.expected_h1_order) {
    fail("|H1| = " + cert.h1_order.get_str() + ", expected " + cert.expected_h1_order.get_str());
  }
  if (cert.homology.euler_characteristic() != cert.chi) fail("Euler-Poincare identity fails");

  cert.pass = cert.discrepancies.empty();
  cert.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

std::vector<ScalingSample> hmt_scaling(std::size_t max_n, double min_seconds) {
  require_power_of_two(max_n, "hmt_scaling");
  using clock = std::chrono::steady_clock;
  std::vector<ScalingSample> samples;
  HmtOptions options;
  options.validate = false;
  std::size_t checksum = 0;
  for (std::size_t n = 2; n <= max_n; n *= 2) {
    double best = 1e300;
    double total = 0.0;
    int runs = 0;
    while (runs < 3 || total < min_seconds) {
      const auto start = clock::now();
      auto seq = valid_sequence(n);
      auto complex = build_hmt(walsh(n), seq, options);
      const double dt = std::chrono::duration<double>(clock::now() - start).count();
      checksum += complex.triangles.size();
      best = std::min(best, dt);
      total += dt;
      ++runs;
    }
    ScalingSample sample{n, best, samples.empty() ? 0.0 : best / samples.back().seconds};
    samples.push_back(sample);
  }
  if (checksum == 0) samples.clear();
  return samples;
}

}  // namespace torsionforge
