#include "torsionforge/disc_complex.hpp"

#include "torsionforge/errors.hpp"

#include <json.hpp>

namespace torsionforge {

DiscComplexSpec DiscComplexSpec::from_words(std::size_t n_cycles, std::vector<EdgeWord> discs) {
  for (std::size_t i = 0; i < discs.size(); ++i) {
    if (discs[i].empty()) throw ValidationError("disc " + std::to_string(i + 1) + " has an empty word");
    for (const auto& letter : discs[i]) {
      if (letter.cycle >= n_cycles) {
        throw ValidationError("disc " + std::to_string(i + 1) + " refers to cycle " +
                              std::to_string(letter.cycle + 1) + " of " +
                              std::to_string(n_cycles));
      }
      if (letter.orientation != 1 && letter.orientation != -1) {
        throw ValidationError("disc " + std::to_string(i + 1) + " has orientation " +
                              std::to_string(letter.orientation));
      }
    }
  }
  return DiscComplexSpec{n_cycles, std::move(discs)};
}

IntMatrix DiscComplexSpec::relation_matrix() const {
  IntMatrix m = IntMatrix::Zero(static_cast<Index>(discs.size()), static_cast<Index>(n_cycles));
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (const auto& letter : discs[i]) {
      m(static_cast<Index>(i), static_cast<Index>(letter.cycle)) += letter.orientation;
    }
  }
  return m;
}

WordOrdering parse_ordering(std::string_view name) {
  if (name == "grouped") return WordOrdering::grouped;
  if (name == "interleaved") return WordOrdering::interleaved;
  throw InputError("unknown ordering '" + std::string(name) + "' (expected grouped or interleaved)");
}

void require_no_zero_lines(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw InputError("matrix is empty");
  for (Index i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < m.cols() && zero; ++j) zero = sgn(m(i, j)) == 0;
    if (zero) throw InputError("row " + std::to_string(i + 1) + " is zero");
  }
  for (Index j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < m.rows() && zero; ++i) zero = sgn(m(i, j)) == 0;
    if (zero) throw InputError("column " + std::to_string(j + 1) + " is zero");
  }
}

DiscComplexSpec from_matrix(const IntMatrix& m, WordOrdering ordering) {
  require_no_zero_lines(m);
  std::vector<EdgeWord> discs(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<unsigned long> owed(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) {
      BigInt mag = abs(m(i, j));
      if (!mag.fits_ulong_p() || mag > (1UL << 24)) {
        throw InputError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is too large to realize as a polygon");
      }
      owed[static_cast<std::size_t>(j)] = mag.get_ui();
    }
    auto& word = discs[static_cast<std::size_t>(i)];
    auto letter = [&](Index j) { return EdgeLetter{static_cast<std::size_t>(j), sgn(m(i, j))}; };
    if (ordering == WordOrdering::grouped) {
      for (Index j = 0; j < m.cols(); ++j) {
        for (unsigned long c = 0; c < owed[static_cast<std::size_t>(j)]; ++c) word.push_back(letter(j));
      }
    } else {
      bool any = true;
      while (any) {
        any = false;
        for (Index j = 0; j < m.cols(); ++j) {
          auto& left = owed[static_cast<std::size_t>(j)];
          if (left == 0) continue;
          word.push_back(letter(j));
          --left;
          any = true;
        }
      }
    }
  }
  return DiscComplexSpec::from_words(static_cast<std::size_t>(m.cols()), std::move(discs));
}

HomologyResult cellular_homology(const IntMatrix& m) {
  require_no_zero_lines(m);
  auto snf = smith_normal_form(m);
  const auto rank = static_cast<std::size_t>(snf.rank());
  std::vector<BigInt> torsion;
  for (const auto& a : snf.invariant_factors) {
    if (a > 1) torsion.push_back(a);
  }
  HomologyResult result;
  result.h0 = group_from_factors({}, 1);
  result.h1 = group_from_factors(torsion, static_cast<std::size_t>(m.cols()) - rank);
  result.h2 = group_from_factors({}, static_cast<std::size_t>(m.rows()) - rank);
  return result;
}

std::string format_spec_json(const DiscComplexSpec& spec) {
  nlohmann::json discs = nlohmann::json::array();
  for (const auto& word : spec.discs) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& letter : word) {
      w.push_back(letter.orientation * static_cast<long long>(letter.cycle + 1));
    }
    discs.push_back(std::move(w));
  }
  return nlohmann::json{{"n_cycles", spec.n_cycles}, {"discs", discs}}.dump() + "\n";
}

DiscComplexSpec parse_spec_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 0, 0);
  }
  if (!doc.is_object() || !doc.contains("n_cycles") || !doc["n_cycles"].is_number_unsigned() ||
      !doc.contains("discs") || !doc["discs"].is_array()) {
    throw ParseError("spec needs an unsigned \"n_cycles\" and a \"discs\" array", 0, 0);
  }
  std::vector<EdgeWord> discs;
  for (const auto& w : doc["discs"]) {
    if (!w.is_array()) throw ParseError("each disc must be an array of signed cycle indices", 0, 0);
    EdgeWord word;
    for (const auto& x : w) {
      if (!x.is_number_integer() || x.get<long long>() == 0) {
        throw ParseError("letters must be nonzero integers, found " + x.dump(), 0, 0);
      }
      long long v = x.get<long long>();
      word.push_back({static_cast<std::size_t>((v < 0 ? -v : v) - 1), v < 0 ? -1 : 1});
    }
    discs.push_back(std::move(word));
  }
  return DiscComplexSpec::from_words(doc["n_cycles"].get<std::size_t>(), std::move(discs));
}

}  // namespace torsionforge
