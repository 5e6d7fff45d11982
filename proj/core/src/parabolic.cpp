#include "gp/parabolic.hpp"

#include <algorithm>

#include "gp/amalgam.hpp"
#include "gp/cyclic.hpp"
#include "gp/error.hpp"

namespace gp {

namespace {

VertexSet nontrivial(const GroupPresentation& pres, VertexSet a) {
  VertexSet out;
  for (VertexId v : a)
    if (pres.group(v).order() != 1) out.insert(v);
  return out;
}

}  // namespace

std::string render_parabolic(const ParabolicSubgroup& p) {
  return "conjugator: " + p.conjugator.str() + "\ncore: " + p.conjugator.presentation().render_set(p.core);
}

ParabolicSubgroup parabolic_closure_of_cyclic(const Element& g) {
  auto cr = cyclically_reduce(g);
  return {cr.conjugator, cr.reduced.support()};
}

bool parabolic_membership(const ParabolicSubgroup& p, const Element& u) {
  const Element& h = p.conjugator;
  return (invert(h) * u * h).support().subset_of(p.core);
}

bool normalizer_membership(const ParabolicSubgroup& p, const Element& u) {
  const auto& pres = p.conjugator.presentation();
  VertexSet s = nontrivial(pres, p.core);
  const Element& h = p.conjugator;
  return (invert(h) * u * h).support().subset_of(s | pres.link(s));
}

std::vector<Element> parabolic_generators(const ParabolicSubgroup& p) {
  const auto& pp = p.conjugator.presentation_ptr();
  std::vector<Element> out;
  for (VertexId v : p.core)
    for (Value x : pp->group(v).generators()) out.push_back(conjugate(p.conjugator, Element::syllable(pp, v, x)));
  return out;
}

bool normalizes_by_generators(const ParabolicSubgroup& p, const Element& u) {
  Element ui = invert(u);
  for (const Element& s : parabolic_generators(p))
    if (!parabolic_membership(p, u * s * ui) || !parabolic_membership(p, ui * s * u)) return false;
  return true;
}

bool parabolic_contains(const ParabolicSubgroup& outer, const ParabolicSubgroup& inner) {
  for (const Element& s : parabolic_generators(inner))
    if (!parabolic_membership(outer, s)) return false;
  return true;
}

bool parabolic_equal(const ParabolicSubgroup& a, const ParabolicSubgroup& b) {
  return parabolic_contains(a, b) && parabolic_contains(b, a);
}

CentralizerStructureReport centralizer_structure_check(const Element& g, std::size_t radius) {
  const auto& pres = g.presentation();
  CentralizerStructureReport report{parabolic_closure_of_cyclic(g), 0, {}, {}};
  const Element& h = report.closure.conjugator;
  const Element gr = invert(h) * g * h;
  const VertexSet a = report.closure.core;
  const VertexSet al = a | pres.link(a);

  Ball ball = enumerate_ball(g.presentation_ptr(), {radius, 0, std::nullopt});
  report.ball_size = ball.elements.size();
  for (const Element& u : ball.elements) {
    bool centralizes = u * gr == gr * u;
    bool structured = false;
    if (u.support().subset_of(al)) {
      Element ua = restrict_to(u, a);
      structured = ua * gr == gr * ua;
    }
    if (centralizes) report.centralizer.push_back(u);
    if (centralizes != structured) report.violations.push_back(u);
  }
  return report;
}

MaximalFullAvoiding maximal_full_avoiding(const Element& g) {
  if (g.is_identity()) throw InvalidArgument("the identity lies in every full subgroup");
  MaximalFullAvoiding out{0, cyclically_reduce(g).reduced, 0};
  out.vertex = out.reduced.support().least();
  if (g.presentation().vertex_count() == 1) {
    out.consonant_length = out.reduced.length();
    return out;
  }
  AmalgamView view = decompose_at(g.presentation_ptr(), out.vertex);
  out.consonant_length = amalgam_cyclically_reduce(view, out.reduced).form.consonant_length();
  return out;
}

std::optional<ParabolicSubgroup> parabolic_intersection_search(const ParabolicSubgroup& p1,
                                                               const ParabolicSubgroup& p2, std::size_t radius) {
  if (parabolic_contains(p2, p1)) return p1;
  if (parabolic_contains(p1, p2)) return p2;
  const auto& pp = p1.conjugator.presentation_ptr();
  Ball ball = enumerate_ball(pp, {radius, 0, std::nullopt});
  std::vector<Element> common;
  for (const Element& u : ball.elements)
    if (parabolic_membership(p1, u) && parabolic_membership(p2, u)) common.push_back(u);

  const VertexSet cores = p1.core & p2.core;
  std::vector<VertexSet> subsets;
  for (std::uint64_t bits = cores.bits();; bits = (bits - 1) & cores.bits()) {
    subsets.emplace_back(bits);
    if (bits == 0) break;
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](VertexSet x, VertexSet y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  for (VertexSet c : subsets)
    for (const Element& h : ball.elements) {
      ParabolicSubgroup cand{h, c};
      if (!parabolic_contains(p1, cand) || !parabolic_contains(p2, cand)) continue;
      bool covers = std::all_of(common.begin(), common.end(),
                                [&](const Element& u) { return parabolic_membership(cand, u); });
      if (covers) return cand;
    }
  return std::nullopt;
}

}  // namespace gp
