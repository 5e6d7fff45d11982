#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gp/vertex_set.hpp"

namespace gp {

// A vertex-group element. Table groups use the element's index in table
// order; integer groups use the integer itself, reduced into [0, n) modulo n.
using Value = std::int64_t;

class VertexGroup {
 public:
  enum class Kind { finite_table, integers, integers_mod };

  static VertexGroup integers();
  static VertexGroup integers_mod(Value n);
  // Throws ParseError unless mul is a group law with the given identity.
  static VertexGroup table(std::vector<std::string> names,
                           std::vector<std::vector<std::size_t>> mul,
                           std::size_t identity);

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ != Kind::integers; }
  // Group order; nullopt for the integers.
  std::optional<Value> order() const;
  // Modulus of an integers_mod group.
  Value modulus() const { return modulus_; }
  const std::vector<std::string>& element_names() const { return names_; }

  Value identity() const { return identity_; }
  bool is_identity(Value a) const { return a == identity_; }
  bool contains(Value a) const;
  Value mul(Value a, Value b) const;
  Value inverse(Value a) const;
  // Least c in element order with c a c^-1 = b.
  std::optional<Value> conjugator(Value a, Value b) const;
  // All elements in element order (finite groups only).
  std::vector<Value> elements() const;
  // A generating set: the nontrivial elements of a table group, 1 otherwise.
  std::vector<Value> generators() const;

  std::string render(Value a) const;
  // Throws ParseError for text that does not name an element.
  Value parse(std::string_view text) const;

  bool operator==(const VertexGroup&) const = default;

 private:
  void check(Value a) const;

  Kind kind_ = Kind::integers;
  Value modulus_ = 0;
  Value identity_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
};

// Free-function spellings of the vertex-group law.
Value vertex_mul(const VertexGroup& g, Value a, Value b);
std::optional<Value> vertex_conjugate_test(const VertexGroup& g, Value a, Value b);

struct Syllable {
  VertexId vertex = 0;
  Value value = 0;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

class GroupPresentation {
 public:
  // Throws ParseError on loops, duplicate edges, out-of-range endpoints,
  // duplicate or malformed names, or more than VertexSet::kCapacity vertices.
  GroupPresentation(std::vector<std::string> names, std::vector<VertexGroup> groups,
                    std::vector<std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return names_.size(); }
  VertexSet vertices() const { return VertexSet::prefix(names_.size()); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  // Throws InvalidArgument for an unknown name.
  VertexId vertex(std::string_view name) const;
  const VertexGroup& group(VertexId v) const { return groups_.at(v); }
  const std::vector<VertexGroup>& groups() const { return groups_; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  bool adjacent(VertexId u, VertexId v) const { return adj_[u].contains(v); }
  VertexSet link(VertexId v) const { return adj_[v]; }
  VertexSet star(VertexId v) const { return adj_[v] | VertexSet::single(v); }
  // Intersections over A; both are all vertices for A empty.
  VertexSet link(VertexSet a) const;
  VertexSet star(VertexSet a) const;
  bool is_clique(VertexSet a) const;

  // Throws InvalidArgument if a contains a vertex outside the presentation.
  void check_vertices(VertexSet a) const;
  VertexSet vertex_set(const std::vector<std::string>& names) const;
  std::string render_set(VertexSet a) const;

  // Same graph, replacement vertex groups.
  GroupPresentation with_groups(std::vector<VertexGroup> groups) const;

 private:
  std::vector<std::string> names_;
  std::vector<VertexGroup> groups_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<VertexSet> adj_;
};

using PresentationPtr = std::shared_ptr<const GroupPresentation>;

GroupPresentation parse_presentation(std::string_view json_text);
GroupPresentation load_presentation(const std::filesystem::path& path);
std::string presentation_to_json(const GroupPresentation& pres);

VertexSet link_of(const GroupPresentation& pres, VertexSet a);
VertexSet star_of(const GroupPresentation& pres, VertexSet a);

// Tokens NAME[VALUE] separated by whitespace; "1" or "" is the empty word.
Word parse_word(const GroupPresentation& pres, std::string_view text);
std::string render_word(const GroupPresentation& pres, const Word& w);
std::string render_syllable(const GroupPresentation& pres, Syllable s);

bool is_identifier(std::string_view s);

}  // namespace gp
