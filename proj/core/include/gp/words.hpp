#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gp/presentation.hpp"

namespace gp {

// A group element, held as its canonical reduced word.
class Element {
 public:
  // The identity of pres.
  explicit Element(PresentationPtr pres);

  // Reduces w; throws InvalidArgument on an invalid syllable.
  static Element from_word(PresentationPtr pres, const Word& w);
  static Element parse(PresentationPtr pres, std::string_view text);
  static Element syllable(PresentationPtr pres, VertexId v, Value value);
  // w must already be canonical; no checks are made.
  static Element adopt_canonical(PresentationPtr pres, Word w);

  const PresentationPtr& presentation_ptr() const { return pres_; }
  const GroupPresentation& presentation() const { return *pres_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  VertexSet support() const;
  std::string str() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  PresentationPtr pres_;
  Word word_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Shortlex: length first, then (vertex, value) lexicographically.
bool shortlex_less(const Element& a, const Element& b);
bool shortlex_less(const Word& a, const Word& b);

struct ShapeReport {
  std::size_t length = 0;
  VertexSet support;
  VertexSet first_letters;
  VertexSet last_letters;
};

Element reduce(const PresentationPtr& pres, const Word& w);
// Reduced word, not yet canonically ordered.
Word reduce_word(const GroupPresentation& pres, const Word& w);
bool is_reduced(const GroupPresentation& pres, const Word& w);
// Throws InvalidArgument if w is not reduced.
Word canonical_form(const GroupPresentation& pres, const Word& w);

ShapeReport shape(const Element& e);
VertexSet first_letters(const GroupPresentation& pres, const Word& reduced);
VertexSet last_letters(const GroupPresentation& pres, const Word& reduced);

Element multiply(const Element& a, const Element& b);
Element invert(const Element& a);
Element power(const Element& a, long long n);
// a * b * a^-1
Element conjugate(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
bool is_reduced_product(std::span<const Element> parts);

Word inverse_word(const GroupPresentation& pres, const Word& w);
void check_word(const GroupPresentation& pres, const Word& w);

// Drop syllables outside a and reduce.
Element restrict_to(const Element& e, VertexSet a);

// The reduced syllable of e at a vertex of a clique-supported element.
Value component(const Element& e, VertexId v);

enum class EqualityOutcome { equal, not_equal, exhausted };
std::string to_string(EqualityOutcome o);

// Explores the closure of w1 w2^-1 under deleting trivial syllables,
// merging adjacent syllables of one vertex, and swapping adjacent commuting
// syllables, shortest words first. budget bounds the number of expanded words.
EqualityOutcome brute_force_equal(const GroupPresentation& pres, const Word& w1, const Word& w2,
                                  std::size_t budget);

struct BallOptions {
  std::size_t radius = 0;
  // Integer-group syllables range over [-window, window]; 0 means radius.
  Value window = 0;
  // Only these vertices; empty optional means all.
  std::optional<VertexSet> within;
};

struct Ball {
  // Shortlex ordered.
  std::vector<Element> elements;
  // True when the ball is the whole (finite) group it ranges over.
  bool complete = false;
};

// All elements of length <= radius whose syllables lie in the window.
Ball enumerate_ball(const PresentationPtr& pres, const BallOptions& opts);

}  // namespace gp
