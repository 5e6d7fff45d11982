#pragma once

#include <optional>
#include <string>

#include "gp/words.hpp"

namespace gp {

// Ordered: the first failing condition is reported.
enum class Refutation { support_mismatch, length_mismatch, p_part_not_cyclic_permutation, s_part_not_conjugate };

std::string to_string(Refutation r);
std::optional<Refutation> refutation_from_string(std::string_view s);

struct ConjugacyVerdict {
  bool conjugate = false;
  // w with w x w^-1 = y
  std::optional<Element> conjugator;
  std::optional<Refutation> refutation;
};

ConjugacyVerdict are_conjugate(const Element& x, const Element& y);

struct CliqueConjugacy {
  bool conjugate = false;
  // Product of per-vertex conjugators c with c a c^-1 = b.
  std::optional<Element> conjugator;
};

// Throws InvalidArgument if s is not a clique or a, b leave G_s.
CliqueConjugacy conjugate_in_clique_subgroup(VertexSet s, const Element& a, const Element& b);

struct BruteForceConjugacy {
  // Least conjugator found, or nullopt when the search space is exhausted.
  std::optional<Element> conjugator;
  bool exhausted() const { return !conjugator; }
};

// Searches w = a b with |a| <= ceil(r/2), |b| <= floor(r/2), integer
// syllables in [-r, r]; this covers every w of length <= r in that window.
BruteForceConjugacy brute_force_conjugate(const Element& x, const Element& y, std::size_t radius);

}  // namespace gp
