#include "gp/conjugacy.hpp"

#include <unordered_map>

#include "gp/cyclic.hpp"
#include "gp/error.hpp"

namespace gp {

std::string to_string(Refutation r) {
  switch (r) {
    case Refutation::support_mismatch: return "support-mismatch";
    case Refutation::length_mismatch: return "length-mismatch";
    case Refutation::p_part_not_cyclic_permutation: return "p-part-not-cyclic-permutation";
    case Refutation::s_part_not_conjugate: return "s-part-not-conjugate";
  }
  return "?";
}

std::optional<Refutation> refutation_from_string(std::string_view s) {
  for (auto r : {Refutation::support_mismatch, Refutation::length_mismatch,
                 Refutation::p_part_not_cyclic_permutation, Refutation::s_part_not_conjugate})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

CliqueConjugacy conjugate_in_clique_subgroup(VertexSet s, const Element& a, const Element& b) {
  if (a.presentation_ptr().get() != b.presentation_ptr().get()) throw PresentationMismatch();
  const auto& pres = a.presentation();
  pres.check_vertices(s);
  if (!pres.is_clique(s)) throw InvalidArgument("vertex set " + pres.render_set(s) + " is not a clique");
  if (!a.support().subset_of(s) || !b.support().subset_of(s))
    throw InvalidArgument("elements are not supported in " + pres.render_set(s));
  Word w;
  for (VertexId v : s) {
    auto c = pres.group(v).conjugator(component(a, v), component(b, v));
    if (!c) return {false, std::nullopt};
    w.push_back({v, *c});
  }
  return {true, reduce(a.presentation_ptr(), w)};
}

ConjugacyVerdict are_conjugate(const Element& x, const Element& y) {
  if (x.presentation_ptr().get() != y.presentation_ptr().get()) throw PresentationMismatch();
  auto cx = cyclically_reduce(x);
  auto cy = cyclically_reduce(y);
  const Element& xr = cx.reduced;
  const Element& yr = cy.reduced;
  if (xr.support() != yr.support()) return {false, std::nullopt, Refutation::support_mismatch};
  if (xr.length() != yr.length()) return {false, std::nullopt, Refutation::length_mismatch};

  auto dx = ps_decompose(xr);
  auto dy = ps_decompose(yr);
  std::optional<Element> prefix;
  for (const auto& c : cyclic_permutations(dx.p_part))
    if (c.element == dy.p_part) {
      prefix = c.prefix;
      break;
    }
  if (!prefix) return {false, std::nullopt, Refutation::p_part_not_cyclic_permutation};

  auto sc = conjugate_in_clique_subgroup(dx.s_vertices, dx.s_part, dy.s_part);
  if (!sc.conjugate) return {false, std::nullopt, Refutation::s_part_not_conjugate};

  // y = hy (c q^-1) hx^-1 x hx (q c^-1) hy^-1
  Element w = cy.conjugator * *sc.conjugator * invert(*prefix) * invert(cx.conjugator);
  if (conjugate(w, x) != y) throw Error("internal: conjugator does not verify");
  return {true, w, std::nullopt};
}

BruteForceConjugacy brute_force_conjugate(const Element& x, const Element& y, std::size_t radius) {
  if (x.presentation_ptr().get() != y.presentation_ptr().get()) throw PresentationMismatch();
  const auto& pp = x.presentation_ptr();
  const Value window = static_cast<Value>(std::max<std::size_t>(radius, 1));
  std::size_t ra = (radius + 1) / 2;
  std::size_t rb = radius / 2;
  auto as = enumerate_ball(pp, {ra, window, std::nullopt});
  auto bs = ra == rb ? as : enumerate_ball(pp, {rb, window, std::nullopt});

  // b x b^-1 -> least b
  std::unordered_map<Element, Element, ElementHash> right;
  for (const auto& b : bs.elements) right.try_emplace(conjugate(b, x), b);

  std::optional<Element> best;
  for (const auto& a : as.elements) {
    // a b x b^-1 a^-1 = y  <=>  b x b^-1 = a^-1 y a
    auto it = right.find(conjugate(invert(a), y));
    if (it == right.end()) continue;
    Element w = a * it->second;
    if (!best || shortlex_less(w, *best)) best = w;
  }
  return {best};
}

}  // namespace gp
