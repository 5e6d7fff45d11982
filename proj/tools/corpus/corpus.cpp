#include "corpus.hpp"

#include <memory>

namespace gp::corpus {

PresentationPtr parse(const std::string& json) {
  return std::make_shared<const GroupPresentation>(parse_presentation(json));
}

PresentationPtr path_racg() {
  static const auto p = parse(R"({"vertices":[{"name":"a","group":"cyclic 2"},{"name":"b","group":"cyclic 2"},
    {"name":"c","group":"cyclic 2"}],"edges":[["a","b"],["b","c"]]})");
  return p;
}

PresentationPtr star_racg() {
  static const auto p = parse(R"({"vertices":[{"name":"c","group":"cyclic 2"},{"name":"l1","group":"cyclic 2"},
    {"name":"l2","group":"cyclic 2"}],"edges":[["c","l1"],["c","l2"]]})");
  return p;
}

PresentationPtr free_z2() {
  static const auto p = parse(R"({"vertices":[{"name":"x","group":"Z"},{"name":"y","group":"Z"}],"edges":[]})");
  return p;
}

PresentationPtr z2() {
  static const auto p =
      parse(R"({"vertices":[{"name":"x","group":"Z"},{"name":"y","group":"Z"}],"edges":[["x","y"]]})");
  return p;
}

PresentationPtr triangle() {
  static const auto p = parse(R"({"vertices":[{"name":"a","group":"cyclic 2"},{"name":"b","group":"cyclic 3"},
    {"name":"c","group":{"mod":4}}],"edges":[["a","b"],["b","c"],["a","c"]]})");
  return p;
}

PresentationPtr path_c3() {
  static const auto p = parse(R"({"vertices":[{"name":"a","group":"cyclic 3"},{"name":"b","group":"cyclic 3"},
    {"name":"c","group":"cyclic 3"}],"edges":[["a","b"],["b","c"]]})");
  return p;
}

PresentationPtr s3_clique() {
  static const auto p = parse(R"({"vertices":[
    {"name":"s","group":{"table":{"elements":["e","r","r2","f","fr","fr2"],
      "mul":[[0,1,2,3,4,5],[1,2,0,5,3,4],[2,0,1,4,5,3],[3,4,5,0,1,2],[4,5,3,2,0,1],[5,3,4,1,2,0]],
      "identity":0}}},
    {"name":"t","group":"cyclic 2"},{"name":"u","group":"cyclic 2"}],"edges":[["s","t"]]})");
  return p;
}

PresentationPtr single_z() {
  static const auto p = parse(R"({"vertices":[{"name":"x","group":"Z"}],"edges":[]})");
  return p;
}

std::vector<NamedPresentation> standard() {
  return {{"path-racg", path_racg()},
          {"star-racg", star_racg()},
          {"free-z2", free_z2()},
          {"z2", z2()},
          {"triangle", triangle()}};
}

std::vector<Syllable> letters(const GroupPresentation& pres, Value window, bool with_identity) {
  std::vector<Syllable> out;
  for (VertexId v = 0; v < pres.vertex_count(); ++v) {
    const VertexGroup& g = pres.group(v);
    if (g.finite()) {
      for (Value x : g.elements())
        if (with_identity || !g.is_identity(x)) out.push_back({v, x});
    } else {
      for (Value x = -window; x <= window; ++x)
        if (with_identity || x != 0) out.push_back({v, x});
    }
  }
  return out;
}

Word random_word(const GroupPresentation& pres, std::mt19937_64& rng, std::size_t max_len, Value window) {
  auto ls = letters(pres, window);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
  Word w(len(rng));
  for (auto& s : w) s = ls[pick(rng)];
  return w;
}

Element random_element(const PresentationPtr& pres, std::mt19937_64& rng, std::size_t max_len, Value window) {
  return reduce(pres, random_word(*pres, rng, max_len, window));
}

Word scrambled_word(const Element& e, std::mt19937_64& rng, std::size_t insertions) {
  const auto& pres = e.presentation();
  Word w = e.word();
  // Random adjacent swaps of commuting syllables.
  for (std::size_t k = 0; k < 4 * w.size(); ++k) {
    if (w.size() < 2) break;
    std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
    std::size_t i = pos(rng);
    if (pres.adjacent(w[i].vertex, w[i + 1].vertex)) std::swap(w[i], w[i + 1]);
  }
  auto ls = letters(pres, 2);
  std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
  for (std::size_t k = 0; k < insertions; ++k) {
    std::uniform_int_distribution<std::size_t> pos(0, w.size());
    Syllable s = ls[pick(rng)];
    Syllable inv{s.vertex, pres.group(s.vertex).inverse(s.value)};
    auto at = w.begin() + static_cast<std::ptrdiff_t>(pos(rng));
    at = w.insert(at, inv);
    w.insert(at, s);
  }
  return w;
}

std::vector<Element> elements_up_to(const PresentationPtr& pres, std::size_t radius, Value window) {
  return enumerate_ball(pres, {radius, window, std::nullopt}).elements;
}

}  // namespace gp::corpus
