#include "gp/cyclic.hpp"

#include <deque>
#include <unordered_map>

#include "gp/error.hpp"

namespace gp {

PSDecomposition ps_decompose(const Element& e) {
  const auto& pres = e.presentation();
  VertexSet supp = e.support();
  VertexSet s = supp & pres.star(supp);
  if (supp.empty()) s = VertexSet{};
  VertexSet p = supp - s;
  return {restrict_to(e, s), restrict_to(e, p), s, p};
}

bool is_cyclically_reduced(const Element& e) {
  const auto& pres = e.presentation();
  VertexSet supp = e.support();
  VertexSet s = supp & pres.star(supp);
  VertexSet fl = first_letters(pres, e.word());
  VertexSet ll = last_letters(pres, e.word());
  return ((fl & ll) - s).empty();
}

namespace {

// The first syllable of e at vertex v, which must be a first letter.
Element leading_syllable(const Element& e, VertexId v) {
  const auto& pres = e.presentation();
  VertexSet seen;
  for (const auto& s : e.word()) {
    if (s.vertex == v && seen.subset_of(pres.link(v)))
      return Element::adopt_canonical(e.presentation_ptr(), Word{s});
    seen.insert(s.vertex);
  }
  throw InvalidArgument("vertex is not a first letter");
}

}  // namespace

CyclicReduction cyclically_reduce(const Element& e) {
  const auto& pres = e.presentation();
  Element cur = e;
  Element h(e.presentation_ptr());
  for (;;) {
    VertexSet supp = cur.support();
    VertexSet s = supp & pres.star(supp);
    VertexSet bad = (first_letters(pres, cur.word()) & last_letters(pres, cur.word())) - s;
    if (bad.empty()) break;
    Element a = leading_syllable(cur, bad.least());
    cur = multiply(multiply(invert(a), cur), a);
    h = multiply(h, a);
  }
  return {cur, h};
}

std::vector<CyclicPermutation> cyclic_permutations(const Element& e) {
  if (!is_cyclically_reduced(e)) throw InvalidArgument("element is not cyclically reduced");
  const auto& pres = e.presentation();
  std::vector<CyclicPermutation> out{{e, Element(e.presentation_ptr())}};
  std::unordered_map<Element, std::size_t, ElementHash> index{{e, 0}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Element cur = out[i].element;
    const Element prefix = out[i].prefix;
    for (VertexId v : first_letters(pres, cur.word())) {
      Element s = leading_syllable(cur, v);
      Element next = multiply(multiply(invert(s), cur), s);
      if (index.emplace(next, out.size()).second) out.push_back({next, multiply(prefix, s)});
    }
  }
  return out;
}

Element conjugator_of_cyclic_permutation(const Element& g, const Element& g_prime) {
  for (const auto& c : cyclic_permutations(g))
    if (c.element == g_prime) return c.prefix;
  throw InvalidArgument("not a cyclic permutation");
}

}  // namespace gp
