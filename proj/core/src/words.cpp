#include "gp/words.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "gp/error.hpp"

namespace gp {

namespace {

const GroupPresentation& same_presentation(const Element& a, const Element& b) {
  if (a.presentation_ptr() != b.presentation_ptr() &&
      !(a.presentation_ptr() && b.presentation_ptr() &&
        a.presentation_ptr().get() == b.presentation_ptr().get()))
    throw PresentationMismatch();
  return a.presentation();
}

// Index of the syllable emitted next by the greedy least-first linearization,
// scanning from the front (forward) or the back.
template <typename Indices>
std::size_t least_available(const GroupPresentation& pres, const Word& w, const Indices& order,
                            VertexSet* available) {
  VertexSet seen;
  std::size_t best = w.size();
  for (std::size_t i : order) {
    VertexId v = w[i].vertex;
    if (seen.subset_of(pres.link(v))) {
      if (available) available->insert(v);
      if (best == w.size() || v < w[best].vertex) best = i;
    }
    seen.insert(v);
    if (!available && seen.size() == pres.vertex_count()) break;
  }
  return best;
}

Word linearize(const GroupPresentation& pres, Word rest) {
  Word out;
  out.reserve(rest.size());
  std::vector<std::size_t> order;
  while (!rest.empty()) {
    order.resize(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) order[i] = i;
    std::size_t k = least_available(pres, rest, order, nullptr);
    out.push_back(rest[k]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

}  // namespace

// ---- Element --------------------------------------------------------------

Element::Element(PresentationPtr pres) : pres_(std::move(pres)) {
  if (!pres_) throw InvalidArgument("null presentation");
}

Element Element::adopt_canonical(PresentationPtr pres, Word w) {
  Element e(std::move(pres));
  e.word_ = std::move(w);
  return e;
}

Element Element::from_word(PresentationPtr pres, const Word& w) { return reduce(pres, w); }

Element Element::parse(PresentationPtr pres, std::string_view text) {
  auto w = parse_word(*pres, text);
  return reduce(pres, w);
}

Element Element::syllable(PresentationPtr pres, VertexId v, Value value) {
  return reduce(pres, Word{{v, value}});
}

VertexSet Element::support() const {
  VertexSet s;
  for (const auto& x : word_) s.insert(x.vertex);
  return s;
}

std::string Element::str() const { return render_word(*pres_, word_); }

bool operator==(const Element& a, const Element& b) {
  return a.pres_.get() == b.pres_.get() && a.word_ == b.word_;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : w) {
    h ^= std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(s.vertex) << 48) ^
                                    static_cast<std::uint64_t>(s.value));
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::size_t ElementHash::operator()(const Element& e) const { return WordHash{}(e.word()); }

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool shortlex_less(const Element& a, const Element& b) { return shortlex_less(a.word(), b.word()); }

// ---- reduction ------------------------------------------------------------

void check_word(const GroupPresentation& pres, const Word& w) {
  for (const auto& s : w) {
    if (s.vertex >= pres.vertex_count())
      throw InvalidArgument("syllable refers to unknown vertex " + std::to_string(s.vertex));
    if (!pres.group(s.vertex).contains(s.value))
      throw InvalidArgument("syllable value " + std::to_string(s.value) + " is not in the group of " +
                            pres.name(s.vertex));
  }
}

Word reduce_word(const GroupPresentation& pres, const Word& w) {
  check_word(pres, w);
  Word out;
  out.reserve(w.size());
  for (const auto& s : w) {
    const VertexGroup& g = pres.group(s.vertex);
    if (g.is_identity(s.value)) continue;
    const VertexSet lk = pres.link(s.vertex);
    bool merged = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      if (out[j].vertex == s.vertex) {
        Value m = g.mul(out[j].value, s.value);
        if (g.is_identity(m))
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        else
          out[j].value = m;
        merged = true;
        break;
      }
      if (!lk.contains(out[j].vertex)) break;
    }
    if (!merged) out.push_back(s);
  }
  return out;
}

bool is_reduced(const GroupPresentation& pres, const Word& w) {
  check_word(pres, w);
  for (const auto& s : w)
    if (pres.group(s.vertex).is_identity(s.value)) return false;
  return reduce_word(pres, w).size() == w.size();
}

Word canonical_form(const GroupPresentation& pres, const Word& w) {
  if (!is_reduced(pres, w)) throw InvalidArgument("word is not reduced");
  return linearize(pres, w);
}

Element reduce(const PresentationPtr& pres, const Word& w) {
  if (!pres) throw InvalidArgument("null presentation");
  return Element::adopt_canonical(pres, linearize(*pres, reduce_word(*pres, w)));
}

VertexSet first_letters(const GroupPresentation& pres, const Word& reduced) {
  VertexSet out;
  std::vector<std::size_t> order(reduced.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  least_available(pres, reduced, order, &out);
  return out;
}

VertexSet last_letters(const GroupPresentation& pres, const Word& reduced) {
  VertexSet out;
  std::vector<std::size_t> order(reduced.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  least_available(pres, reduced, order, &out);
  return out;
}

ShapeReport shape(const Element& e) {
  ShapeReport r;
  r.length = e.length();
  r.support = e.support();
  r.first_letters = first_letters(e.presentation(), e.word());
  r.last_letters = last_letters(e.presentation(), e.word());
  return r;
}

Word inverse_word(const GroupPresentation& pres, const Word& w) {
  check_word(pres, w);
  Word out(w.rbegin(), w.rend());
  for (auto& s : out) s.value = pres.group(s.vertex).inverse(s.value);
  return out;
}

Element multiply(const Element& a, const Element& b) {
  same_presentation(a, b);
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return reduce(a.presentation_ptr(), w);
}

Element invert(const Element& a) {
  return reduce(a.presentation_ptr(), inverse_word(a.presentation(), a.word()));
}

Element power(const Element& a, long long n) {
  Element base = n < 0 ? invert(a) : a;
  unsigned long long k = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  Element out(a.presentation_ptr());
  while (k) {
    if (k & 1ULL) out = multiply(out, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return out;
}

Element conjugate(const Element& a, const Element& b) { return multiply(multiply(a, b), invert(a)); }

bool is_reduced_product(std::span<const Element> parts) {
  if (parts.empty()) return true;
  std::size_t total = 0;
  Word w;
  for (const auto& p : parts) {
    same_presentation(parts.front(), p);
    total += p.length();
    w.insert(w.end(), p.word().begin(), p.word().end());
  }
  return reduce_word(parts.front().presentation(), w).size() == total;
}

Element restrict_to(const Element& e, VertexSet a) {
  Word w;
  for (const auto& s : e.word())
    if (a.contains(s.vertex)) w.push_back(s);
  return reduce(e.presentation_ptr(), w);
}

Value component(const Element& e, VertexId v) {
  Value out = e.presentation().group(v).identity();
  for (const auto& s : e.word())
    if (s.vertex == v) {
      if (!e.presentation().group(v).is_identity(out))
        throw InvalidArgument("element has more than one syllable at " + e.presentation().name(v));
      out = s.value;
    }
  return out;
}

// ---- brute-force equality -------------------------------------------------

std::string to_string(EqualityOutcome o) {
  switch (o) {
    case EqualityOutcome::equal: return "equal";
    case EqualityOutcome::not_equal: return "not equal";
    case EqualityOutcome::exhausted: return "exhausted";
  }
  return "?";
}

EqualityOutcome brute_force_equal(const GroupPresentation& pres, const Word& w1, const Word& w2,
                                  std::size_t budget) {
  if (budget == 0) throw InvalidArgument("budget must be at least 1");
  Word start = w1;
  Word inv = inverse_word(pres, w2);
  start.insert(start.end(), inv.begin(), inv.end());

  auto longer = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  };
  std::priority_queue<Word, std::vector<Word>, decltype(longer)> frontier(longer);
  std::unordered_set<Word, WordHash> seen;
  frontier.push(start);
  seen.insert(start);
  std::size_t expanded = 0;

  auto offer = [&](Word w) {
    if (seen.insert(w).second) frontier.push(std::move(w));
  };

  while (!frontier.empty()) {
    Word cur = frontier.top();
    frontier.pop();
    if (cur.empty()) return EqualityOutcome::equal;
    if (++expanded > budget) return EqualityOutcome::exhausted;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const VertexGroup& g = pres.group(cur[i].vertex);
      if (g.is_identity(cur[i].value)) {
        Word next = cur;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        offer(std::move(next));
      }
      if (i + 1 == cur.size()) continue;
      if (cur[i].vertex == cur[i + 1].vertex) {
        Word next = cur;
        next[i].value = g.mul(cur[i].value, cur[i + 1].value);
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        offer(std::move(next));
      } else if (pres.adjacent(cur[i].vertex, cur[i + 1].vertex)) {
        Word next = cur;
        std::swap(next[i], next[i + 1]);
        offer(std::move(next));
      }
    }
  }
  return EqualityOutcome::not_equal;
}

// ---- balls ----------------------------------------------------------------

Ball enumerate_ball(const PresentationPtr& pres, const BallOptions& opts) {
  const GroupPresentation& p = *pres;
  VertexSet allowed = opts.within.value_or(p.vertices());
  p.check_vertices(allowed);
  const Value window = opts.window > 0 ? opts.window : static_cast<Value>(std::max<std::size_t>(opts.radius, 1));

  std::vector<Syllable> letters;
  bool all_finite = true;
  for (VertexId v : allowed) {
    const VertexGroup& g = p.group(v);
    if (g.finite()) {
      for (Value x : g.elements())
        if (!g.is_identity(x)) letters.push_back({v, x});
    } else {
      all_finite = false;
      for (Value x = -window; x <= window; ++x)
        if (x != 0) letters.push_back({v, x});
    }
  }

  // w.s is canonical iff scanning back from the end through link(v) meets
  // neither v itself nor a vertex greater than v.
  auto appendable = [&](const Word& w, Syllable s) {
    const VertexSet lk = p.link(s.vertex);
    for (std::size_t j = w.size(); j-- > 0;) {
      VertexId u = w[j].vertex;
      if (u == s.vertex) return false;
      if (!lk.contains(u)) return true;
      if (u > s.vertex) return false;
    }
    return true;
  };

  Ball ball;
  std::vector<Word> layer{Word{}};
  ball.elements.push_back(Element(pres));
  for (std::size_t len = 1; len <= opts.radius && !layer.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (const Syllable& s : letters)
        if (appendable(w, s)) {
          Word x = w;
          x.push_back(s);
          next.push_back(std::move(x));
        }
    for (const Word& w : next) ball.elements.push_back(Element::adopt_canonical(pres, w));
    layer = std::move(next);
  }
  if (all_finite) {
    bool extends = false;
    for (const Word& w : layer) {
      for (const Syllable& s : letters)
        if (appendable(w, s)) {
          extends = true;
          break;
        }
      if (extends) break;
    }
    ball.complete = !extends;
  }
  return ball;
}

}  // namespace gp
