#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gp/words.hpp"

namespace gp {

// G = G_A *_{G_H} (G_H x G_C). decompose_at gives C = {v}, A = V - {v},
// H = link(v); amalgam_view accepts any C whose vertices all see exactly H
// inside A.
struct AmalgamView {
  PresentationPtr pres;
  VertexSet a_vertices;
  VertexSet h_vertices;
  VertexSet c_vertices;

  bool in_a(const Element& e) const { return e.support().subset_of(a_vertices); }
  bool in_h(const Element& e) const { return e.support().subset_of(h_vertices); }
};

AmalgamView decompose_at(const PresentationPtr& pres, VertexId v);
AmalgamView decompose_at(const PresentationPtr& pres, std::string_view vertex_name);
AmalgamView amalgam_view(const PresentationPtr& pres, VertexSet c_vertices);

// x_0 c_1 x_1 ... c_n x_n with x_i in G_A, c_i nontrivial in G_C and
// x_i outside G_H for 0 < i < n.
struct AmalgamForm {
  std::vector<Element> pieces;
  std::vector<Element> consonants;

  std::size_t consonant_length() const { return consonants.size(); }
  Element product() const;
};

AmalgamForm amalgam_form(const AmalgamView& view, const Element& e);
// Blocks an arbitrary (unreduced) word directly.
AmalgamForm amalgam_form_of_word(const AmalgamView& view, const Word& w);
std::string render_form(const AmalgamForm& form);

bool is_amalgam_cyclically_reduced(const AmalgamView& view, const AmalgamForm& form);

struct AmalgamCyclicReduction {
  Element reduced;
  AmalgamForm form;
  // input = conjugator * reduced * conjugator^-1
  Element conjugator;
};

AmalgamCyclicReduction amalgam_cyclically_reduce(const AmalgamView& view, const Element& e);

// c_1 x_1 ... c_l x_l for l = 0..n, of a form with trivial x_0.
std::vector<Element> form_prefixes(const AmalgamForm& form);
// c_l x_l ... c_n x_n for l = n+1 down to 1 (shortest first).
std::vector<Element> form_suffixes(const AmalgamForm& form);

enum class ConjugatorCase { a, b, c };
std::string to_string(ConjugatorCase c);

struct ConjugatorClassification {
  ConjugatorCase kind = ConjugatorCase::a;
  Element h;
  // Prefix p (case b) or suffix s (case c); identity for case a.
  Element piece;
  std::size_t piece_length = 0;
  long long l = 0;
};

// For u g u^-1 = f: (a) u = h; (b) u = h p^-1 g^-l; (c) u = h s g^l.
ConjugatorClassification conjugator_classify(const AmalgamView& view, const Element& g, const Element& f,
                                             const Element& u);

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);

struct SubgroupConjugacy {
  Tri outcome = Tri::unknown;
  // b in G_B with b g b^-1 = f
  std::optional<Element> witness;
  std::string certificate;
};

// Decides f in g^{G_B} for g with at least one consonant. Candidates are
// b = y_0 h x_0^-1 over h in the H-ball of the given radius.
SubgroupConjugacy amalgam_conjugate_by(const AmalgamView& view, VertexSet b, const Element& f, const Element& g,
                                       std::size_t radius);

struct OmegaDescription {
  std::vector<Element> prefixes;
  // h_i with h_i p_i^-1 g p_i h_i^-1 = g
  std::vector<std::optional<Element>> matched;
  std::vector<Element> omega;
  std::size_t unresolved = 0;
};

struct CentralizerReport {
  // n = 1 and x_1 in H: C(g) = C_C(c_1) x C_H(x_1).
  bool direct_product_case = false;
  OmegaDescription omega;
  std::size_t ball_size = 0;
  std::vector<Element> centralizer;
  std::vector<Element> violations;

  bool passed() const { return violations.empty(); }
};

// g must be amalgam-cyclically reduced with n >= 1.
CentralizerReport centralizer_check(const AmalgamView& view, const Element& g, std::size_t radius);

struct IntersectionReport {
  std::size_t ball_size = 0;
  std::size_t members = 0;
  std::vector<Element> mismatches;

  bool passed() const { return mismatches.empty(); }
};

// Compares b g b^-1 = g against membership of b in
// C_B(x_0...x_n) and every (x_0...x_i) H (x_0...x_i)^-1, over the B-ball.
IntersectionReport intersection_formula_check(const AmalgamView& view, VertexSet b, const Element& g,
                                               std::size_t radius);

// Graph product encoding of Q *_R S: Q-vertices, S-vertices, and each
// S-vertex adjacent to exactly the R-vertices of Q.
GroupPresentation assemble_amalgam(const GroupPresentation& q, const GroupPresentation& s,
                                   const std::vector<std::string>& r_vertices);

class SigmaMap {
 public:
  // All vertex groups must be finite.
  SigmaMap(PresentationPtr pres, VertexSet q_vertices, VertexSet r_vertices);

  const AmalgamView& view() const { return view_; }
  VertexSet q_vertices() const { return view_.a_vertices; }
  VertexSet s_vertices() const { return view_.c_vertices; }

  // (Q-component, S-component), both as elements of the ambient group.
  std::pair<Element, Element> operator()(const Element& e) const;
  bool in_kernel(const Element& e) const;
  // w * sigma-section(w)^-1
  Element kernel_projection(const Element& w) const;

  struct KernelReport {
    std::size_t samples = 0;
    std::size_t trivial = 0;
    std::vector<Element> failures;
    bool passed() const { return failures.empty(); }
  };

  KernelReport kernel_sample_check(std::size_t count, std::size_t radius, std::uint64_t seed) const;

 private:
  AmalgamView view_;
};

}  // namespace gp
