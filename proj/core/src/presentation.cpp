#include "gp/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gp/error.hpp"

namespace gp {

namespace {

bool valid_element_name(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) || c == '[' || c == ']' || c < 0x21 || c > 0x7e;
  });
}

std::optional<Value> parse_integer(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Value v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return v;
}

Value floor_mod(Value a, Value n) {
  Value r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
    return c < 0x80 && (std::isalnum(c) || c == '_');
  });
}

// ---- VertexGroup ----------------------------------------------------------

VertexGroup VertexGroup::integers() { return VertexGroup{}; }

VertexGroup VertexGroup::integers_mod(Value n) {
  if (n < 1) throw ParseError("modulus must be at least 1, got " + std::to_string(n));
  VertexGroup g;
  g.kind_ = Kind::integers_mod;
  g.modulus_ = n;
  return g;
}

VertexGroup VertexGroup::table(std::vector<std::string> names,
                               std::vector<std::vector<std::size_t>> mul,
                               std::size_t identity) {
  const std::size_t k = names.size();
  if (k == 0) throw ParseError("table group has no elements");
  if (mul.size() != k) throw ParseError("multiplication table has wrong number of rows");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_element_name(n)) throw ParseError("bad element name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate element name '" + n + "'");
  }
  if (identity >= k) throw ParseError("identity index out of range");
  for (const auto& row : mul) {
    if (row.size() != k) throw ParseError("multiplication table is not square");
    std::vector<bool> hit(k, false);
    for (auto x : row) {
      if (x >= k) throw ParseError("table entry out of range");
      if (hit[x]) throw ParseError("table is not a Latin square");
      hit[x] = true;
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<bool> hit(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      if (hit[mul[i][j]]) throw ParseError("table is not a Latin square");
      hit[mul[i][j]] = true;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (mul[identity][i] != i || mul[i][identity] != i)
      throw ParseError("identity row/column is not fixed");
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw ParseError("table is not associative");

  VertexGroup g;
  g.kind_ = Kind::finite_table;
  g.identity_ = static_cast<Value>(identity);
  g.names_ = std::move(names);
  g.inv_.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (mul[a][b] == identity) g.inv_[a] = b;
  g.mul_ = std::move(mul);
  return g;
}

std::optional<Value> VertexGroup::order() const {
  switch (kind_) {
    case Kind::finite_table: return static_cast<Value>(names_.size());
    case Kind::integers_mod: return modulus_;
    case Kind::integers: break;
  }
  return std::nullopt;
}

bool VertexGroup::contains(Value a) const {
  switch (kind_) {
    case Kind::finite_table: return a >= 0 && a < static_cast<Value>(names_.size());
    case Kind::integers_mod: return a >= 0 && a < modulus_;
    case Kind::integers: return true;
  }
  return false;
}

void VertexGroup::check(Value a) const {
  if (!contains(a)) throw InvalidArgument("value " + std::to_string(a) + " is not a group element");
}

Value VertexGroup::mul(Value a, Value b) const {
  check(a);
  check(b);
  switch (kind_) {
    case Kind::finite_table:
      return static_cast<Value>(mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    case Kind::integers_mod: return (a + b) % modulus_;
    case Kind::integers: {
      Value r = 0;
      if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("integer overflow");
      return r;
    }
  }
  return 0;
}

Value VertexGroup::inverse(Value a) const {
  check(a);
  switch (kind_) {
    case Kind::finite_table: return static_cast<Value>(inv_[static_cast<std::size_t>(a)]);
    case Kind::integers_mod: return a == 0 ? 0 : modulus_ - a;
    case Kind::integers:
      if (a == INT64_MIN) throw InvalidArgument("integer overflow");
      return -a;
  }
  return 0;
}

std::optional<Value> VertexGroup::conjugator(Value a, Value b) const {
  check(a);
  check(b);
  if (kind_ != Kind::finite_table) {
    if (a == b) return identity_;
    return std::nullopt;
  }
  for (Value c = 0; c < static_cast<Value>(names_.size()); ++c)
    if (mul(mul(c, a), inverse(c)) == b) return c;
  return std::nullopt;
}

std::vector<Value> VertexGroup::elements() const {
  if (kind_ == Kind::integers) throw InvalidArgument("the integers are infinite");
  std::vector<Value> out(static_cast<std::size_t>(*order()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Value>(i);
  return out;
}

std::vector<Value> VertexGroup::generators() const {
  switch (kind_) {
    case Kind::finite_table: {
      std::vector<Value> out;
      for (Value a = 0; a < static_cast<Value>(names_.size()); ++a)
        if (a != identity_) out.push_back(a);
      return out;
    }
    case Kind::integers_mod:
      if (modulus_ == 1) return {};
      return {1};
    case Kind::integers: return {1};
  }
  return {};
}

std::string VertexGroup::render(Value a) const {
  check(a);
  if (kind_ == Kind::finite_table) return names_[static_cast<std::size_t>(a)];
  return std::to_string(a);
}

Value VertexGroup::parse(std::string_view text) const {
  if (kind_ == Kind::finite_table) {
    auto it = std::find(names_.begin(), names_.end(), text);
    if (it == names_.end()) throw ParseError("'" + std::string(text) + "' is not an element of the table group");
    return static_cast<Value>(it - names_.begin());
  }
  auto v = parse_integer(text);
  if (!v) throw ParseError("'" + std::string(text) + "' is not an integer");
  if (kind_ == Kind::integers_mod) return floor_mod(*v, modulus_);
  return *v;
}

Value vertex_mul(const VertexGroup& g, Value a, Value b) { return g.mul(a, b); }

std::optional<Value> vertex_conjugate_test(const VertexGroup& g, Value a, Value b) {
  return g.conjugator(a, b);
}

// ---- GroupPresentation ----------------------------------------------------

GroupPresentation::GroupPresentation(std::vector<std::string> names, std::vector<VertexGroup> groups,
                                     std::vector<std::pair<VertexId, VertexId>> edges)
    : names_(std::move(names)), groups_(std::move(groups)) {
  if (names_.size() != groups_.size()) throw ParseError("one vertex group per vertex required");
  if (names_.size() > VertexSet::kCapacity)
    throw ParseError("at most " + std::to_string(VertexSet::kCapacity) + " vertices are supported");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw ParseError("bad vertex name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate vertex '" + n + "'");
  }
  adj_.assign(names_.size(), VertexSet{});
  for (auto [u, v] : edges) {
    if (u >= names_.size() || v >= names_.size()) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("loop edge at '" + names_[u] + "'");
    if (adj_[u].contains(v))
      throw ParseError("duplicate edge {" + names_[u] + "," + names_[v] + "}");
    adj_[u].insert(v);
    adj_[v].insert(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
}

std::optional<VertexId> GroupPresentation::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId GroupPresentation::vertex(std::string_view name) const {
  auto v = find(name);
  if (!v) throw InvalidArgument("unknown vertex '" + std::string(name) + "'");
  return *v;
}

VertexSet GroupPresentation::link(VertexSet a) const {
  check_vertices(a);
  VertexSet out = vertices();
  for (VertexId v : a) out &= adj_[v];
  return out;
}

VertexSet GroupPresentation::star(VertexSet a) const {
  check_vertices(a);
  VertexSet out = vertices();
  for (VertexId v : a) out &= star(v);
  return out;
}

bool GroupPresentation::is_clique(VertexSet a) const {
  for (VertexId v : a)
    if (!(a - VertexSet::single(v)).subset_of(adj_[v])) return false;
  return true;
}

void GroupPresentation::check_vertices(VertexSet a) const {
  if (!a.subset_of(vertices())) throw InvalidArgument("vertex set refers to unknown vertices");
}

VertexSet GroupPresentation::vertex_set(const std::vector<std::string>& names) const {
  VertexSet out;
  for (const auto& n : names) out.insert(vertex(n));
  return out;
}

std::string GroupPresentation::render_set(VertexSet a) const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : a) {
    if (!first) out += ",";
    out += names_.at(v);
    first = false;
  }
  return out + "}";
}

GroupPresentation GroupPresentation::with_groups(std::vector<VertexGroup> groups) const {
  return GroupPresentation(names_, std::move(groups), edges_);
}

VertexSet link_of(const GroupPresentation& pres, VertexSet a) { return pres.link(a); }
VertexSet star_of(const GroupPresentation& pres, VertexSet a) { return pres.star(a); }

// ---- JSON -----------------------------------------------------------------

namespace {

VertexGroup group_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Z") return VertexGroup::integers();
    constexpr std::string_view prefix = "cyclic ";
    if (s.rfind(prefix, 0) == 0) {
      auto n = parse_integer(std::string_view(s).substr(prefix.size()));
      if (!n) throw ParseError("bad cyclic group '" + s + "'");
      return VertexGroup::integers_mod(*n);
    }
    throw ParseError("unknown group description '" + s + "'");
  }
  if (j.is_object() && j.contains("mod")) return VertexGroup::integers_mod(j.at("mod").get<Value>());
  if (j.is_object() && j.contains("table")) {
    const auto& t = j.at("table");
    return VertexGroup::table(t.at("elements").get<std::vector<std::string>>(),
                              t.at("mul").get<std::vector<std::vector<std::size_t>>>(),
                              t.at("identity").get<std::size_t>());
  }
  throw ParseError("unrecognised group description");
}

nlohmann::json group_to_json(const VertexGroup& g) {
  switch (g.kind()) {
    case VertexGroup::Kind::integers: return "Z";
    case VertexGroup::Kind::integers_mod: return {{"mod", g.modulus()}};
    case VertexGroup::Kind::finite_table: {
      nlohmann::json mul = nlohmann::json::array();
      for (Value a : g.elements()) {
        nlohmann::json row = nlohmann::json::array();
        for (Value b : g.elements()) row.push_back(g.mul(a, b));
        mul.push_back(row);
      }
      return {{"table", {{"elements", g.element_names()}, {"mul", mul}, {"identity", g.identity()}}}};
    }
  }
  return nullptr;
}

}  // namespace

GroupPresentation parse_presentation(std::string_view json_text) {
  try {
    auto doc = nlohmann::json::parse(json_text);
    if (!doc.is_object()) throw ParseError("presentation must be a JSON object");
    std::vector<std::string> names;
    std::vector<VertexGroup> groups;
    for (const auto& v : doc.at("vertices")) {
      names.push_back(v.at("name").get<std::string>());
      groups.push_back(group_from_json(v.at("group")));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of vertex names");
        VertexId ends[2];
        for (int i = 0; i < 2; ++i) {
          auto n = e[i].get<std::string>();
          auto it = std::find(names.begin(), names.end(), n);
          if (it == names.end()) throw ParseError("unknown vertex '" + n + "' in edge");
          ends[i] = static_cast<VertexId>(it - names.begin());
        }
        edges.emplace_back(ends[0], ends[1]);
      }
    }
    return GroupPresentation(std::move(names), std::move(groups), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed presentation: ") + e.what());
  }
}

GroupPresentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string presentation_to_json(const GroupPresentation& pres) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (VertexId v = 0; v < pres.vertex_count(); ++v)
    doc["vertices"].push_back({{"name", pres.name(v)}, {"group", group_to_json(pres.group(v))}});
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : pres.edges()) doc["edges"].push_back({pres.name(u), pres.name(v)});
  return doc.dump();
}

// ---- words ----------------------------------------------------------------

Word parse_word(const GroupPresentation& pres, std::string_view text) {
  Word out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i).find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  {
    auto rest = text.substr(i);
    auto end = rest.find_last_not_of(" \t\r\n");
    if (rest.substr(0, end + 1) == "1") return out;
  }
  while (i < text.size()) {
    std::size_t open = text.find('[', i);
    if (open == std::string_view::npos) throw ParseError("expected NAME[VALUE] at '" + std::string(text.substr(i)) + "'");
    std::string_view name = text.substr(i, open - i);
    if (!is_identifier(name)) throw ParseError("bad vertex name '" + std::string(name) + "'");
    std::size_t close = text.find(']', open);
    if (close == std::string_view::npos) throw ParseError("missing ']'");
    std::string_view value = text.substr(open + 1, close - open - 1);
    auto v = pres.find(name);
    if (!v) throw ParseError("unknown vertex '" + std::string(name) + "'");
    out.push_back({*v, pres.group(*v).parse(value)});
    i = close + 1;
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("tokens must be separated by whitespace");
    skip_space();
  }
  return out;
}

std::string render_syllable(const GroupPresentation& pres, Syllable s) {
  return pres.name(s.vertex) + "[" + pres.group(s.vertex).render(s.value) + "]";
}

std::string render_word(const GroupPresentation& pres, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += render_syllable(pres, s);
  }
  return out;
}

}  // namespace gp
