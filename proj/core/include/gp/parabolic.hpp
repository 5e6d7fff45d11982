#pragma once

#include <optional>
#include <vector>

#include "gp/words.hpp"

namespace gp {

// conjugator * G_core * conjugator^-1
struct ParabolicSubgroup {
  Element conjugator;
  VertexSet core;
};

std::string render_parabolic(const ParabolicSubgroup& p);

ParabolicSubgroup parabolic_closure_of_cyclic(const Element& g);
bool parabolic_membership(const ParabolicSubgroup& p, const Element& u);
// Formula test: supp(h^-1 u h) within S + link(S), S the nontrivial core.
bool normalizer_membership(const ParabolicSubgroup& p, const Element& u);
// Direct test: u and u^-1 conjugate every generator of p back into p.
bool normalizes_by_generators(const ParabolicSubgroup& p, const Element& u);

// h s h^-1 for every vertex-group generator s of the core.
std::vector<Element> parabolic_generators(const ParabolicSubgroup& p);
bool parabolic_contains(const ParabolicSubgroup& outer, const ParabolicSubgroup& inner);
bool parabolic_equal(const ParabolicSubgroup& a, const ParabolicSubgroup& b);

struct CentralizerStructureReport {
  ParabolicSubgroup closure;
  std::size_t ball_size = 0;
  std::vector<Element> centralizer;
  std::vector<Element> violations;
  bool passed() const { return violations.empty(); }
};

// Over the ball, u centralizes g' exactly when supp(u) lies in A + link(A)
// and the A-retraction of u centralizes g', where g = h g' h^-1 and A is
// the closure core. Ball elements are tested as conjugators of g'.
CentralizerStructureReport centralizer_structure_check(const Element& g, std::size_t radius);

struct MaximalFullAvoiding {
  VertexId vertex = 0;
  Element reduced;
  // Consonant length of reduced at vertex after amalgam cyclic reduction.
  std::size_t consonant_length = 0;
};

// Throws InvalidArgument for the identity.
MaximalFullAvoiding maximal_full_avoiding(const Element& g);

// Least (h, C) with |C| maximal, C inside both cores, h in the ball, whose
// parabolic lies in p1 and p2 and contains every ball element of p1 and p2.
std::optional<ParabolicSubgroup> parabolic_intersection_search(const ParabolicSubgroup& p1,
                                                               const ParabolicSubgroup& p2, std::size_t radius);

}  // namespace gp
