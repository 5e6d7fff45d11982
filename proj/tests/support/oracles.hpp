#pragma once

// Independent reference checks written directly from the definitions, used
// to cross-check the library. Nothing here calls reduce().

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gp/presentation.hpp"
#include "gp/words.hpp"

namespace gp::oracle {

// No trivial syllable and no pair of same-vertex syllables with everything
// in between commuting with that vertex.
inline bool reduced_by_definition(const GroupPresentation& pres, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (pres.group(w[i].vertex).is_identity(w[i].value)) return false;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].vertex == w[i].vertex) return false;
      if (!pres.adjacent(w[i].vertex, w[j].vertex)) break;
    }
  }
  return true;
}

inline Word rotate_left(const Word& w, std::size_t k) {
  Word out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

// Every cyclic permutation of the given reduced word is reduced.
inline bool cyclically_reduced_by_definition(const GroupPresentation& pres, const Word& w) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!reduced_by_definition(pres, rotate_left(w, k))) return false;
  return true;
}

// v is a first letter when some v-syllable has only link(v) before it.
inline VertexSet first_letters(const GroupPresentation& pres, const Word& w) {
  VertexSet out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = pres.adjacent(w[j].vertex, w[i].vertex);
    if (ok) out.insert(w[i].vertex);
  }
  return out;
}

inline VertexSet last_letters(const GroupPresentation& pres, const Word& w) {
  Word r(w.rbegin(), w.rend());
  return oracle::first_letters(pres, r);
}

// Vertices of a that are adjacent to every other vertex of a.
inline VertexSet central_vertices(const GroupPresentation& pres, VertexSet a) {
  VertexSet out;
  for (VertexId v : a) {
    bool ok = true;
    for (VertexId u : a)
      if (u != v && !pres.adjacent(u, v)) ok = false;
    if (ok) out.insert(v);
  }
  return out;
}

// u g u^-1 as a raw word.
inline Word conjugate_word(const GroupPresentation& pres, const Word& u, const Word& g) {
  Word out = u;
  out.insert(out.end(), g.begin(), g.end());
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back({it->vertex, pres.group(it->vertex).inverse(it->value)});
  return out;
}

}  // namespace gp::oracle
