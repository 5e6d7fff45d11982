#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gp/presentation.hpp"
#include "gp/words.hpp"

namespace gp::corpus {

struct NamedPresentation {
  std::string name;
  PresentationPtr pres;
};

// Path a-b-c, all vertices of order 2.
PresentationPtr path_racg();
// Center c joined to l1 and l2, all of order 2.
PresentationPtr star_racg();
// x, y infinite cyclic, no edge.
PresentationPtr free_z2();
// x, y infinite cyclic, one edge.
PresentationPtr z2();
// Complete graph on a (order 2), b (order 3), c (Z/4).
PresentationPtr triangle();
// Path a-b-c, all vertices of order 3.
PresentationPtr path_c3();
// s (symmetric group on three letters, table) joined to t (order 2), plus
// an isolated u (order 2).
PresentationPtr s3_clique();
// A single infinite cyclic vertex x.
PresentationPtr single_z();

// The five presentations of the acceptance corpus, in a fixed order.
std::vector<NamedPresentation> standard();

PresentationPtr parse(const std::string& json);

// Letters with values in the window (integers) or all nontrivial elements.
std::vector<Syllable> letters(const GroupPresentation& pres, Value window, bool with_identity = false);

Word random_word(const GroupPresentation& pres, std::mt19937_64& rng, std::size_t max_len, Value window);
Element random_element(const PresentationPtr& pres, std::mt19937_64& rng, std::size_t max_len, Value window);

// A word equal to e: a random valid shuffle of its syllables with
// cancelling pairs inserted.
Word scrambled_word(const Element& e, std::mt19937_64& rng, std::size_t insertions);

// All canonical words of length <= radius, syllables in the window.
std::vector<Element> elements_up_to(const PresentationPtr& pres, std::size_t radius, Value window);

}  // namespace gp::corpus
