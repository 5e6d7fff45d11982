#pragma once

#include <vector>

#include "gp/words.hpp"

namespace gp {

struct PSDecomposition {
  Element s_part;
  Element p_part;
  VertexSet s_vertices;
  VertexSet p_vertices;
};

// e = s_part * p_part with S = supp(e) & star(supp(e)).
PSDecomposition ps_decompose(const Element& e);

bool is_cyclically_reduced(const Element& e);

struct CyclicReduction {
  Element reduced;
  // input = conjugator * reduced * conjugator^-1
  Element conjugator;
};

CyclicReduction cyclically_reduce(const Element& e);

struct CyclicPermutation {
  Element element;
  // element = prefix^-1 * e * prefix
  Element prefix;
};

// Closure of {e} under moving a first syllable to the end. Ordered by
// discovery, breadth first, e itself first. Throws InvalidArgument unless e is
// cyclically reduced.
std::vector<CyclicPermutation> cyclic_permutations(const Element& e);

// p with p^-1 g p = g'; throws InvalidArgument when g' is not in the closure.
Element conjugator_of_cyclic_permutation(const Element& g, const Element& g_prime);

}  // namespace gp
