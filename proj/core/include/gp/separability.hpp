#pragma once

#include <string>
#include <vector>

#include "gp/error.hpp"
#include "gp/words.hpp"

namespace gp {

class ImpossibleFamily : public Error {
 public:
  using Error::Error;
};

// Keep a finite vertex group as is, or send it onto Z/m (m = 1 is trivial).
struct VertexQuotient {
  bool keep = true;
  Value modulus = 1;

  static VertexQuotient identity() { return {true, 1}; }
  static VertexQuotient mod(Value m) { return {false, m}; }
  bool operator==(const VertexQuotient&) const = default;
};

struct ClassMode {
  enum class Kind { all_finite, p_group };
  Kind kind = Kind::all_finite;
  Value prime = 0;

  static ClassMode all_finite() { return {}; }
  static ClassMode p_group(Value p);
  // "finite" or "p:<prime>"; throws InvalidArgument otherwise.
  static ClassMode parse(std::string_view text);
  std::string str() const;
  bool admits_order(Value n) const;
};

bool is_prime_power(Value n, Value p);

class QuotientFamily {
 public:
  // Throws InvalidArgument for a choice that is not a quotient map allowed
  // by the mode.
  QuotientFamily(PresentationPtr source, std::vector<VertexQuotient> per_vertex, ClassMode mode);

  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }
  const std::vector<VertexQuotient>& per_vertex() const { return per_vertex_; }
  ClassMode mode() const { return mode_; }
  Value map_value(VertexId v, Value x) const;

 private:
  PresentationPtr source_;
  PresentationPtr target_;
  std::vector<VertexQuotient> per_vertex_;
  ClassMode mode_;
};

Element apply_quotient(const QuotientFamily& family, const Element& e);

// Smallest moduli keeping every syllable of the listed elements, and of
// e e'^-1 for listed pairs, nontrivial.
QuotientFamily shape_preserving_family(const std::vector<Element>& elements, ClassMode mode);

struct SeparationWitness {
  enum class Kind { residual, conjugacy };
  Kind kind = Kind::residual;
  QuotientFamily family;
  std::vector<Element> inputs;
  std::vector<Element> images;
  std::string certificate_tag;
};

SeparationWitness residual_witness(const Element& g, ClassMode mode);
// Throws InvalidArgument if f and g are conjugate.
SeparationWitness conjugacy_witness(const Element& f, const Element& g, ClassMode mode);

// Recomputes the images and re-runs the decision in the target.
bool verify_witness(const SeparationWitness& w);
std::string witness_json(const SeparationWitness& w);

// Drop syllables outside a and reduce.
Element retraction(const Element& e, VertexSet a);

}  // namespace gp
