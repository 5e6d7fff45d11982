#include "gp/separability.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include <json.hpp>

#include "gp/conjugacy.hpp"
#include "gp/cyclic.hpp"

namespace gp {

namespace {

bool is_prime(Value p) {
  if (p < 2) return false;
  for (Value d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Value floor_mod(Value a, Value n) {
  Value r = a % n;
  return r < 0 ? r + n : r;
}

constexpr const char* kNontrivialImage = "nontrivial-image";

}  // namespace

bool is_prime_power(Value n, Value p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

ClassMode ClassMode::p_group(Value p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not a prime");
  return {Kind::p_group, p};
}

ClassMode ClassMode::parse(std::string_view text) {
  if (text == "finite") return all_finite();
  if (text.rfind("p:", 0) == 0) {
    Value p = 0;
    auto rest = text.substr(2);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) return p_group(p);
  }
  throw InvalidArgument("mode must be 'finite' or 'p:<prime>', got '" + std::string(text) + "'");
}

std::string ClassMode::str() const {
  return kind == Kind::all_finite ? "finite" : "p:" + std::to_string(prime);
}

bool ClassMode::admits_order(Value n) const { return kind == Kind::all_finite || is_prime_power(n, prime); }

// ---- families -------------------------------------------------------------

QuotientFamily::QuotientFamily(PresentationPtr source, std::vector<VertexQuotient> per_vertex, ClassMode mode)
    : source_(std::move(source)), per_vertex_(std::move(per_vertex)), mode_(mode) {
  const auto& pres = *source_;
  if (per_vertex_.size() != pres.vertex_count()) throw InvalidArgument("one quotient per vertex required");
  std::vector<VertexGroup> groups;
  for (VertexId v = 0; v < pres.vertex_count(); ++v) {
    const VertexGroup& g = pres.group(v);
    const VertexQuotient& q = per_vertex_[v];
    if (q.keep) {
      if (!g.finite()) throw InvalidArgument("infinite group at " + pres.name(v) + " must be quotiented");
      if (!mode_.admits_order(*g.order()))
        throw InvalidArgument("group at " + pres.name(v) + " is not in class " + mode_.str());
      groups.push_back(g);
      continue;
    }
    if (q.modulus < 1) throw InvalidArgument("modulus must be positive");
    if (!mode_.admits_order(q.modulus))
      throw InvalidArgument("modulus " + std::to_string(q.modulus) + " is not in class " + mode_.str());
    if (g.kind() == VertexGroup::Kind::integers_mod && g.modulus() % q.modulus != 0)
      throw InvalidArgument("modulus must divide " + std::to_string(g.modulus()) + " at " + pres.name(v));
    if (g.kind() == VertexGroup::Kind::finite_table && q.modulus != 1)
      throw InvalidArgument("table group at " + pres.name(v) + " only maps onto the trivial group");
    groups.push_back(VertexGroup::integers_mod(q.modulus));
  }
  target_ = std::make_shared<const GroupPresentation>(pres.with_groups(std::move(groups)));
}

Value QuotientFamily::map_value(VertexId v, Value x) const {
  const VertexQuotient& q = per_vertex_.at(v);
  if (q.keep) return x;
  if (q.modulus == 1) return 0;
  return floor_mod(x, q.modulus);
}

Element apply_quotient(const QuotientFamily& family, const Element& e) {
  if (e.presentation_ptr().get() != family.source().get()) throw PresentationMismatch();
  Word w;
  for (const auto& s : e.word()) w.push_back({s.vertex, family.map_value(s.vertex, s.value)});
  return reduce(family.target(), w);
}

QuotientFamily shape_preserving_family(const std::vector<Element>& elements, ClassMode mode) {
  if (elements.empty()) throw InvalidArgument("no elements to preserve");
  const auto& pp = elements.front().presentation_ptr();
  const auto& pres = *pp;
  std::vector<std::set<Value>> nonzero(pres.vertex_count());
  auto collect = [&](const Element& e) {
    for (const auto& s : e.word()) nonzero[s.vertex].insert(s.value);
  };
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].presentation_ptr().get() != pp.get()) throw PresentationMismatch();
    collect(elements[i]);
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] != elements[j]) collect(elements[i] * invert(elements[j]));
  }

  auto survives = [&](VertexId v, Value m) {
    return std::all_of(nonzero[v].begin(), nonzero[v].end(), [&](Value x) { return floor_mod(x, m) != 0; });
  };

  std::vector<VertexQuotient> choice;
  for (VertexId v = 0; v < pres.vertex_count(); ++v) {
    const VertexGroup& g = pres.group(v);
    if (g.finite() && mode.admits_order(*g.order())) {
      choice.push_back(VertexQuotient::identity());
      continue;
    }
    std::optional<Value> found;
    if (g.kind() == VertexGroup::Kind::integers) {
      Value bound = 1;
      for (Value x : nonzero[v]) bound = std::max(bound, x < 0 ? -x : x);
      if (mode.kind == ClassMode::Kind::all_finite) {
        for (Value m = 1; !found; ++m)
          if (survives(v, m)) found = m;
      } else {
        for (Value m = 1;; m *= mode.prime) {
          if (survives(v, m)) {
            found = m;
            break;
          }
          if (m > bound) break;
        }
      }
    } else {
      // Finite group outside the class: quotients Z/m with m | n, or trivial.
      const Value n = g.kind() == VertexGroup::Kind::integers_mod ? g.modulus() : 1;
      for (Value m = 1; m <= n && !found; m *= mode.prime)
        if (n % m == 0 && survives(v, m)) found = m;
    }
    if (!found)
      throw ImpossibleFamily("no quotient of the group at " + pres.name(v) + " in class " + mode.str() +
                             " keeps the required syllables");
    choice.push_back(VertexQuotient::mod(*found));
  }
  return QuotientFamily(pp, std::move(choice), mode);
}

// ---- witnesses ------------------------------------------------------------

Element retraction(const Element& e, VertexSet a) {
  e.presentation().check_vertices(a);
  return restrict_to(e, a);
}

SeparationWitness residual_witness(const Element& g, ClassMode mode) {
  if (g.is_identity()) throw InvalidArgument("the identity cannot be separated from itself");
  auto family = shape_preserving_family({g}, mode);
  Element image = apply_quotient(family, g);
  return {SeparationWitness::Kind::residual, family, {g}, {image}, kNontrivialImage};
}

SeparationWitness conjugacy_witness(const Element& f, const Element& g, ClassMode mode) {
  if (f.presentation_ptr().get() != g.presentation_ptr().get()) throw PresentationMismatch();
  auto verdict = are_conjugate(f, g);
  if (verdict.conjugate) throw InvalidArgument("elements are conjugate");

  const VertexSet supp = f.support() | g.support();
  const Element f0 = cyclically_reduce(retraction(f, supp)).reduced;
  const Element g0 = cyclically_reduce(retraction(g, supp)).reduced;

  std::vector<Element> keep{f0, g0};
  switch (*verdict.refutation) {
    case Refutation::support_mismatch:
    case Refutation::length_mismatch: break;
    case Refutation::p_part_not_cyclic_permutation: {
      keep.push_back(ps_decompose(f0).p_part);
      for (const auto& c : cyclic_permutations(ps_decompose(g0).p_part)) keep.push_back(c.element);
      break;
    }
    case Refutation::s_part_not_conjugate:
      keep.push_back(ps_decompose(f0).s_part);
      keep.push_back(ps_decompose(g0).s_part);
      break;
  }
  auto family = shape_preserving_family(keep, mode);
  SeparationWitness w{SeparationWitness::Kind::conjugacy, family, {f, g},
                      {apply_quotient(family, f), apply_quotient(family, g)}, ""};
  auto target = are_conjugate(w.images[0], w.images[1]);
  if (target.conjugate) throw Error("internal: images are conjugate in the quotient");
  w.certificate_tag = to_string(*target.refutation);
  return w;
}

bool verify_witness(const SeparationWitness& w) {
  QuotientFamily fresh(w.family.source(), w.family.per_vertex(), w.family.mode());
  if (w.images.size() != w.inputs.size()) return false;
  std::vector<Element> images;
  for (const auto& e : w.inputs) images.push_back(apply_quotient(fresh, e));
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i].word() != w.images[i].word()) return false;
  if (w.kind == SeparationWitness::Kind::residual)
    return images.size() == 1 && !images[0].is_identity() && w.certificate_tag == kNontrivialImage;
  if (images.size() != 2) return false;
  auto verdict = are_conjugate(images[0], images[1]);
  return !verdict.conjugate && to_string(*verdict.refutation) == w.certificate_tag;
}

std::string witness_json(const SeparationWitness& w) {
  nlohmann::json doc;
  doc["certificate_tag"] = w.certificate_tag;
  doc["images"] = nlohmann::json::array();
  for (const auto& e : w.images) doc["images"].push_back(e.str());
  doc["mode"] = w.family.mode().str();
  nlohmann::json moduli = nlohmann::json::object();
  const auto& pres = *w.family.source();
  for (VertexId v = 0; v < pres.vertex_count(); ++v) {
    const auto& q = w.family.per_vertex()[v];
    if (q.keep)
      moduli[pres.name(v)] = "id";
    else
      moduli[pres.name(v)] = q.modulus;
  }
  doc["per_vertex_moduli"] = moduli;
  return doc.dump(2);
}

}  // namespace gp
