#include "selftest.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <string>

#include "corpus/corpus.hpp"
#include "gp/amalgam.hpp"
#include "gp/conjugacy.hpp"
#include "gp/cyclic.hpp"
#include "gp/parabolic.hpp"
#include "gp/separability.hpp"

namespace gp::cli {

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  void expect(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
};

using Suite = std::function<void(std::mt19937_64&, Tally&)>;

void normal_forms(std::mt19937_64& rng, Tally& t) {
  for (const auto& [name, pres] : corpus::standard()) {
    for (int i = 0; i < 40; ++i) {
      Word w = corpus::random_word(*pres, rng, 8, 3);
      Element e = reduce(pres, w);
      t.expect(e.length() <= w.size());
      t.expect(reduce(pres, e.word()) == e);
      t.expect(reduce(pres, corpus::scrambled_word(e, rng, 2)) == e);
      t.expect(first_letters(*pres, e.word()) == last_letters(*pres, invert(e).word()));
      if (w.size() <= 6) t.expect(brute_force_equal(*pres, w, e.word(), 20000) == EqualityOutcome::equal);
    }
  }
}

void cyclic_contract(std::mt19937_64& rng, Tally& t) {
  for (const auto& [name, pres] : corpus::standard()) {
    for (int i = 0; i < 40; ++i) {
      Element g = corpus::random_element(pres, rng, 8, 3);
      auto r = cyclically_reduce(g);
      t.expect(is_cyclically_reduced(r.reduced));
      t.expect(conjugate(r.conjugator, r.reduced) == g);
      t.expect(r.reduced.length() <= g.length());
      auto d = ps_decompose(g);
      t.expect(d.s_part * d.p_part == g);
    }
  }
}

void conjugacy(std::mt19937_64& rng, Tally& t) {
  for (const auto& [name, pres] : corpus::standard()) {
    for (int i = 0; i < 20; ++i) {
      Element x = corpus::random_element(pres, rng, 5, 2);
      Element w = corpus::random_element(pres, rng, 3, 2);
      Element y = conjugate(w, x);
      auto v = are_conjugate(x, y);
      t.expect(v.conjugate && conjugate(*v.conjugator, x) == y);
      Element z = corpus::random_element(pres, rng, 3, 2);
      auto vz = are_conjugate(x, z);
      auto oracle = brute_force_conjugate(x, z, 3);
      if (oracle.conjugator) t.expect(vz.conjugate);
      if (vz.conjugate) t.expect(conjugate(*vz.conjugator, x) == z);
    }
  }
}

void amalgams(std::mt19937_64& rng, Tally& t) {
  for (const auto& [name, pres] : corpus::standard()) {
    for (VertexId v = 0; v < pres->vertex_count(); ++v) {
      AmalgamView view = decompose_at(pres, v);
      for (int i = 0; i < 10; ++i) {
        Element e = corpus::random_element(pres, rng, 8, 2);
        AmalgamForm f = amalgam_form(view, e);
        AmalgamForm g = amalgam_form_of_word(view, corpus::scrambled_word(e, rng, 2));
        t.expect(f.consonants == g.consonants);
        t.expect(f.product() == e);
        if (f.consonant_length() > 0) t.expect(!e.is_identity());
      }
    }
  }
}

void parabolics(std::mt19937_64& rng, Tally& t) {
  auto pres = corpus::path_racg();
  auto ball = enumerate_ball(pres, {3, 0, std::nullopt}).elements;
  for (int i = 0; i < 10; ++i) {
    Element g = corpus::random_element(pres, rng, 5, 1);
    ParabolicSubgroup p = parabolic_closure_of_cyclic(g);
    t.expect(parabolic_membership(p, g));
    for (const auto& u : ball) t.expect(normalizer_membership(p, u) == normalizes_by_generators(p, u));
  }
}

void witnesses(std::mt19937_64& rng, Tally& t) {
  for (const auto& [name, pres] : corpus::standard()) {
    for (int i = 0; i < 15; ++i) {
      Element f = corpus::random_element(pres, rng, 5, 3);
      Element g = corpus::random_element(pres, rng, 5, 3);
      if (are_conjugate(f, g).conjugate) continue;
      auto w = conjugacy_witness(f, g, ClassMode::all_finite());
      t.expect(verify_witness(w));
    }
  }
}

}  // namespace

bool selftest(std::uint64_t seed, std::ostream& out) {
  const std::pair<const char*, Suite> suites[] = {
      {"normal-forms", normal_forms}, {"cyclic-reduction", cyclic_contract}, {"conjugacy", conjugacy},
      {"amalgam-forms", amalgams},    {"parabolics", parabolics},            {"witnesses", witnesses},
  };
  bool all = true;
  for (const auto& [name, suite] : suites) {
    std::mt19937_64 rng(seed);
    Tally t;
    suite(rng, t);
    all = all && t.failures == 0;
    out << name << ": " << (t.failures == 0 ? "pass" : "FAIL") << " (" << t.checks << " checks, " << t.failures
        << " failures)\n";
  }
  out << (all ? "selftest passed" : "selftest failed") << '\n';
  return all;
}

}  // namespace gp::cli
