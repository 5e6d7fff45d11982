#include "gp/amalgam.hpp"

#include <functional>
#include <random>

#include "gp/conjugacy.hpp"
#include "gp/cyclic.hpp"
#include "gp/error.hpp"

namespace gp {

// ---- views ----------------------------------------------------------------

AmalgamView amalgam_view(const PresentationPtr& pres, VertexSet c_vertices) {
  pres->check_vertices(c_vertices);
  if (pres->vertex_count() < 2) throw InvalidArgument("amalgam splitting needs at least two vertices");
  if (c_vertices.empty() || c_vertices == pres->vertices())
    throw InvalidArgument("amalgam factor must be a proper nonempty vertex set");
  AmalgamView view{pres, pres->vertices() - c_vertices, VertexSet{}, c_vertices};
  bool first = true;
  for (VertexId c : c_vertices) {
    VertexSet seen = pres->link(c) & view.a_vertices;
    if (first) view.h_vertices = seen;
    if (seen != view.h_vertices)
      throw InvalidArgument("vertices of " + pres->render_set(c_vertices) + " have different links");
    first = false;
  }
  return view;
}

AmalgamView decompose_at(const PresentationPtr& pres, VertexId v) {
  if (v >= pres->vertex_count()) throw InvalidArgument("unknown vertex");
  return amalgam_view(pres, VertexSet::single(v));
}

AmalgamView decompose_at(const PresentationPtr& pres, std::string_view vertex_name) {
  return decompose_at(pres, pres->vertex(vertex_name));
}

// ---- forms ----------------------------------------------------------------

Element AmalgamForm::product() const {
  Element out = pieces.front();
  for (std::size_t i = 0; i < consonants.size(); ++i) out = out * consonants[i] * pieces[i + 1];
  return out;
}

AmalgamForm amalgam_form_of_word(const AmalgamView& view, const Word& w) {
  const auto& pp = view.pres;
  check_word(*pp, w);
  std::vector<Word> x_words(1);
  std::vector<Word> c_words;
  for (const auto& s : w) {
    if (view.c_vertices.contains(s.vertex)) {
      if (c_words.size() < x_words.size()) c_words.emplace_back();
      c_words.back().push_back(s);
    } else {
      if (x_words.size() == c_words.size()) x_words.emplace_back();
      x_words.back().push_back(s);
    }
  }
  if (x_words.size() == c_words.size()) x_words.emplace_back();

  AmalgamForm form;
  for (const auto& x : x_words) form.pieces.push_back(reduce(pp, x));
  for (const auto& c : c_words) form.consonants.push_back(reduce(pp, c));

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < form.consonants.size(); ++i) {
      if (form.consonants[i].is_identity()) {
        form.pieces[i] = form.pieces[i] * form.pieces[i + 1];
        form.pieces.erase(form.pieces.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        form.consonants.erase(form.consonants.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // Inner H-pieces commute with C: c_i x_i c_{i+1} x_{i+1} = (c_i c_{i+1})(x_i x_{i+1}).
    for (std::size_t i = 1; i + 1 < form.pieces.size(); ++i) {
      if (view.in_h(form.pieces[i])) {
        form.consonants[i - 1] = form.consonants[i - 1] * form.consonants[i];
        form.pieces[i] = form.pieces[i] * form.pieces[i + 1];
        form.consonants.erase(form.consonants.begin() + static_cast<std::ptrdiff_t>(i));
        form.pieces.erase(form.pieces.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  // An H-valued leading piece commutes with c_1.
  if (form.consonant_length() > 0 && !form.pieces[0].is_identity() && view.in_h(form.pieces[0])) {
    form.pieces[1] = form.pieces[0] * form.pieces[1];
    form.pieces[0] = Element(pp);
  }
  return form;
}

AmalgamForm amalgam_form(const AmalgamView& view, const Element& e) {
  if (e.presentation_ptr().get() != view.pres.get()) throw PresentationMismatch();
  return amalgam_form_of_word(view, e.word());
}

std::string render_form(const AmalgamForm& form) {
  std::string out = "x0 = " + form.pieces[0].str();
  for (std::size_t i = 0; i < form.consonants.size(); ++i) {
    out += "\nc" + std::to_string(i + 1) + " = " + form.consonants[i].str();
    out += "\nx" + std::to_string(i + 1) + " = " + form.pieces[i + 1].str();
  }
  return out;
}

bool is_amalgam_cyclically_reduced(const AmalgamView& view, const AmalgamForm& form) {
  if (!form.pieces.front().is_identity()) return false;
  for (const auto& c : form.consonants)
    if (c.is_identity()) return false;
  const std::size_t n = form.consonant_length();
  for (std::size_t i = 1; i + 1 < form.pieces.size(); ++i)
    if (view.in_h(form.pieces[i])) return false;
  return n < 2 || !view.in_h(form.pieces.back());
}

AmalgamCyclicReduction amalgam_cyclically_reduce(const AmalgamView& view, const Element& e) {
  Element g = e;
  Element u(view.pres);
  for (;;) {
    AmalgamForm form = amalgam_form(view, g);
    const std::size_t n = form.consonant_length();
    if (n == 0) return {g, form, u};
    if (!form.pieces.front().is_identity()) {
      const Element x0 = form.pieces.front();
      g = invert(x0) * g * x0;
      u = u * x0;
      continue;
    }
    if (n >= 2 && view.in_h(form.pieces.back())) {
      const Element t = form.consonants.back() * form.pieces.back();
      g = t * g * invert(t);
      u = u * invert(t);
      continue;
    }
    return {g, form, u};
  }
}

std::vector<Element> form_prefixes(const AmalgamForm& form) {
  std::vector<Element> out{form.pieces.front()};
  for (std::size_t i = 0; i < form.consonants.size(); ++i)
    out.push_back(out.back() * form.consonants[i] * form.pieces[i + 1]);
  return out;
}

std::vector<Element> form_suffixes(const AmalgamForm& form) {
  std::vector<Element> out{Element(form.pieces.front().presentation_ptr())};
  for (std::size_t i = form.consonants.size(); i-- > 0;)
    out.push_back(form.consonants[i] * form.pieces[i + 1] * out.back());
  return out;
}

// ---- conjugator classification --------------------------------------------

std::string to_string(ConjugatorCase c) {
  switch (c) {
    case ConjugatorCase::a: return "a";
    case ConjugatorCase::b: return "b";
    case ConjugatorCase::c: return "c";
  }
  return "?";
}

namespace {

void require_classifiable(const AmalgamView& view, const AmalgamForm& form, const char* what) {
  if (form.consonant_length() == 0 || !is_amalgam_cyclically_reduced(view, form) ||
      view.in_h(form.pieces.back()))
    throw InvalidArgument(std::string(what) +
                          " must be cyclically reduced with at least one consonant and last piece outside H");
}

}  // namespace

ConjugatorClassification conjugator_classify(const AmalgamView& view, const Element& g, const Element& f,
                                             const Element& u) {
  AmalgamForm gf = amalgam_form(view, g);
  require_classifiable(view, gf, "g");
  require_classifiable(view, amalgam_form(view, f), "f");
  if (conjugate(u, g) != f) throw InvalidArgument("u g u^-1 != f");

  const auto& pp = view.pres;
  AmalgamForm uf = amalgam_form(view, u);
  const std::size_t m = uf.consonant_length();
  ConjugatorClassification out{ConjugatorCase::a, Element(pp), Element(pp), 0, 0};
  if (m == 0) {
    if (!view.in_h(u)) throw Error("conjugator fits no case");
    out.h = u;
    return out;
  }
  const long long bound = static_cast<long long>(m) + 1;
  const Element& zm = uf.pieces.back();
  if (view.in_h(zm)) {
    auto prefixes = form_prefixes(gf);
    for (std::size_t k = 0; k < prefixes.size(); ++k)
      for (long long l = 0; l <= bound; ++l) {
        Element h = u * power(g, l) * prefixes[k];
        if (view.in_h(h)) return {ConjugatorCase::b, h, prefixes[k], k, l};
      }
  } else if (view.in_h(gf.pieces.back() * invert(zm))) {
    auto suffixes = form_suffixes(gf);
    for (std::size_t k = 0; k < suffixes.size(); ++k)
      for (long long l = 0; l <= bound; ++l) {
        Element h = u * power(g, -l) * invert(suffixes[k]);
        if (view.in_h(h)) return {ConjugatorCase::c, h, suffixes[k], k, l};
      }
  }
  throw Error("conjugator fits no case");
}

// ---- conjugacy by a full subgroup -----------------------------------------

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

SubgroupConjugacy amalgam_conjugate_by(const AmalgamView& view, VertexSet b, const Element& f, const Element& g,
                                       std::size_t radius) {
  const auto& pp = view.pres;
  if (!b.subset_of(view.a_vertices)) throw InvalidArgument("B must be a subset of the A-vertices");
  AmalgamForm gf = amalgam_form(view, g);
  AmalgamForm ff = amalgam_form(view, f);
  const std::size_t n = gf.consonant_length();
  if (n == 0) throw InvalidArgument("g must have at least one consonant");

  if (ff.consonant_length() != n) return {Tri::no, std::nullopt, "consonant-mismatch"};
  for (std::size_t i = 0; i < n; ++i)
    if (gf.consonants[i] != ff.consonants[i]) return {Tri::no, std::nullopt, "consonant-mismatch"};

  // Running products x_0...x_i and y_0...y_i.
  std::vector<Element> xs{gf.pieces[0]}, ys{ff.pieces[0]};
  for (std::size_t i = 1; i <= n; ++i) {
    xs.push_back(xs.back() * gf.pieces[i]);
    ys.push_back(ys.back() * ff.pieces[i]);
  }
  const Element& X = xs.back();
  const Element& Y = ys.back();

  auto in_a = are_conjugate(X, Y);
  if (!in_a.conjugate) return {Tri::no, std::nullopt, "a-part-not-conjugate"};

  // Every b with b g b^-1 = f lies in y_0 H x_0^-1, so a complete H-ball
  // settles the question.
  const Element x0_inv = invert(gf.pieces[0]);
  BallOptions opts{radius, 0, view.h_vertices};
  Ball hs = enumerate_ball(pp, opts);
  for (const Element& h : hs.elements) {
    Element cand = ff.pieces[0] * h * x0_inv;
    if (!cand.support().subset_of(b)) continue;
    if (conjugate(cand, X) != Y) continue;
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = view.in_h(invert(ys[i]) * cand * xs[i]);
    if (!ok) continue;
    if (conjugate(cand, g) != f) throw Error("internal: intersection element does not conjugate");
    return {Tri::yes, cand, "witness"};
  }
  if (hs.complete) return {Tri::no, std::nullopt, "empty-intersection"};
  return {Tri::unknown, std::nullopt, "search-exhausted"};
}

// ---- centralizers ---------------------------------------------------------

CentralizerReport centralizer_check(const AmalgamView& view, const Element& g, std::size_t radius) {
  const auto& pp = view.pres;
  AmalgamForm gf = amalgam_form(view, g);
  if (gf.consonant_length() == 0 || !is_amalgam_cyclically_reduced(view, gf))
    throw InvalidArgument("g must be cyclically reduced with at least one consonant");

  CentralizerReport report;
  report.direct_product_case = view.in_h(gf.pieces.back());

  std::function<bool(const Element&)> factors;
  if (report.direct_product_case) {
    // n = 1 here, since cyclically reduced forms with n >= 2 end outside H.
    const Element c1 = gf.consonants[0];
    const Element x1 = gf.pieces[1];
    const VertexSet ch = view.c_vertices | view.h_vertices;
    factors = [=](const Element& u) {
      if (!u.support().subset_of(ch)) return false;
      Element uc = restrict_to(u, view.c_vertices);
      Element uh = restrict_to(u, view.h_vertices);
      return uc * c1 == c1 * uc && uh * x1 == x1 * uh;
    };
  } else {
    auto& od = report.omega;
    od.prefixes = form_prefixes(gf);
    for (const Element& p : od.prefixes) {
      Element shifted = invert(p) * g * p;
      auto r = amalgam_conjugate_by(view, view.h_vertices, g, shifted, radius);
      if (r.outcome == Tri::yes) {
        od.matched.push_back(*r.witness);
        od.omega.push_back(*r.witness * invert(p));
      } else {
        od.matched.push_back(std::nullopt);
        if (r.outcome == Tri::unknown) ++od.unresolved;
      }
    }
    const long long bound = static_cast<long long>(radius) + 1;
    std::vector<Element> g_powers;
    for (long long l = -bound; l <= bound; ++l) g_powers.push_back(power(g, -l));
    std::vector<Element> omega_inv;
    for (const auto& w : od.omega) omega_inv.push_back(invert(w));
    factors = [=](const Element& u) {
      for (const Element& wi : omega_inv) {
        Element uw = u * wi;
        for (const Element& gp : g_powers) {
          Element h = uw * gp;
          if (view.in_h(h) && h * g == g * h) return true;
        }
      }
      return false;
    };
  }

  Ball ball = enumerate_ball(pp, {radius, 0, std::nullopt});
  report.ball_size = ball.elements.size();
  for (const Element& u : ball.elements) {
    bool centralizes = u * g == g * u;
    if (centralizes) report.centralizer.push_back(u);
    if (centralizes != factors(u)) report.violations.push_back(u);
  }
  return report;
}

IntersectionReport intersection_formula_check(const AmalgamView& view, VertexSet b, const Element& g,
                                               std::size_t radius) {
  if (!b.subset_of(view.a_vertices)) throw InvalidArgument("B must be a subset of the A-vertices");
  AmalgamForm gf = amalgam_form(view, g);
  const std::size_t n = gf.consonant_length();
  if (n == 0) throw InvalidArgument("g must have at least one consonant");
  std::vector<Element> xs{gf.pieces[0]};
  for (std::size_t i = 1; i <= n; ++i) xs.push_back(xs.back() * gf.pieces[i]);
  std::vector<Element> xs_inv;
  for (const auto& x : xs) xs_inv.push_back(invert(x));

  IntersectionReport report;
  Ball ball = enumerate_ball(view.pres, {radius, 0, b});
  report.ball_size = ball.elements.size();
  for (const Element& u : ball.elements) {
    bool centralizes = u * g == g * u;
    bool in_i = u * xs.back() == xs.back() * u;
    for (std::size_t i = 0; i < n && in_i; ++i) in_i = view.in_h(xs_inv[i] * u * xs[i]);
    if (in_i) ++report.members;
    if (centralizes != in_i) report.mismatches.push_back(u);
  }
  return report;
}

// ---- sigma ----------------------------------------------------------------

GroupPresentation assemble_amalgam(const GroupPresentation& q, const GroupPresentation& s,
                                   const std::vector<std::string>& r_vertices) {
  std::vector<std::string> names = q.names();
  std::vector<VertexGroup> groups = q.groups();
  std::vector<std::pair<VertexId, VertexId>> edges = q.edges();
  const auto offset = static_cast<VertexId>(q.vertex_count());
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    if (q.find(s.name(v))) throw InvalidArgument("vertex '" + s.name(v) + "' occurs in both factors");
    names.push_back(s.name(v));
    groups.push_back(s.group(v));
  }
  for (auto [a, b] : s.edges()) edges.emplace_back(a + offset, b + offset);
  VertexSet r = q.vertex_set(r_vertices);
  for (VertexId rv : r)
    for (VertexId v = 0; v < s.vertex_count(); ++v) edges.emplace_back(rv, v + offset);
  return GroupPresentation(std::move(names), std::move(groups), std::move(edges));
}

SigmaMap::SigmaMap(PresentationPtr pres, VertexSet q_vertices, VertexSet r_vertices)
    : view_(amalgam_view(pres, pres->vertices() - q_vertices)) {
  if (!r_vertices.subset_of(q_vertices)) throw InvalidArgument("R must lie in Q");
  if (view_.h_vertices != r_vertices)
    throw InvalidArgument("S-vertices must be adjacent to exactly the R-vertices of Q");
  for (VertexId v : pres->vertices())
    if (!pres->group(v).finite()) throw InvalidArgument("sigma needs finite vertex groups");
}

std::pair<Element, Element> SigmaMap::operator()(const Element& e) const {
  return {restrict_to(e, view_.a_vertices), restrict_to(e, view_.c_vertices)};
}

bool SigmaMap::in_kernel(const Element& e) const {
  auto [q, s] = (*this)(e);
  return q.is_identity() && s.is_identity();
}

Element SigmaMap::kernel_projection(const Element& w) const {
  auto [q, s] = (*this)(w);
  return w * invert(s) * invert(q);
}

SigmaMap::KernelReport SigmaMap::kernel_sample_check(std::size_t count, std::size_t radius,
                                                     std::uint64_t seed) const {
  const auto& pres = *view_.pres;
  std::mt19937_64 rng(seed);
  std::vector<Syllable> letters;
  for (VertexId v : pres.vertices())
    for (Value x : pres.group(v).elements())
      if (!pres.group(v).is_identity(x)) letters.push_back({v, x});
  KernelReport report;
  if (letters.empty()) return report;
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<std::size_t> len(0, radius);
  const VertexSet other_factor = view_.h_vertices | view_.c_vertices;
  for (std::size_t i = 0; i < count; ++i) {
    Word w(len(rng));
    for (auto& s : w) s = letters[pick(rng)];
    Element k = kernel_projection(reduce(view_.pres, w));
    ++report.samples;
    if (k.is_identity()) {
      ++report.trivial;
      continue;
    }
    bool ok = in_kernel(k);
    ok = ok && amalgam_cyclically_reduce(view_, k).form.consonant_length() >= 1;
    VertexSet closure = cyclically_reduce(k).reduced.support();
    ok = ok && !closure.subset_of(view_.a_vertices) && !closure.subset_of(other_factor);
    if (!ok) report.failures.push_back(k);
  }
  return report;
}

}  // namespace gp
