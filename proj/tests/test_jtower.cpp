#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "weylkit/coxeter.hpp"
#include "weylkit/jtower.hpp"

using namespace weylkit;

namespace {

DiagramAut flip(DatumPtr d) {
  for (const auto& a : diagram_automorphisms(d, AutLevel::dynkin))
    if (!a.is_identity()) return a;
  throw std::runtime_error("no flip");
}

}  // namespace

TEST_CASE("piece_indices") {
  auto a2 = build_weyl('A', 2);
  auto id = DiagramAut::identity(a2);

  auto p = piece_indices(*a2, SimpleSubset::of({0}), id);
  CHECK(p.size() == 3);

  CHECK(piece_indices(*a2, SimpleSubset(), id).size() == 6);

  auto pf = piece_indices(*a2, SimpleSubset::of({0}), flip(a2));
  REQUIRE(pf.size() == 3);
  // ^{s2}W = {e, s1, s1 s2}
  std::set<std::string> words;
  for (const auto& w : pf) words.insert(w.word_str());
  CHECK(words == std::set<std::string>{"e", "s1", "s1 s2"});
}

TEST_CASE("is_stable_pair") {
  auto a2 = build_weyl('A', 2);
  auto id = DiagramAut::identity(a2);
  auto fl = flip(a2);

  for (SimpleSubset J : all_subsets(a2->simples()))
    CHECK(is_stable_pair(*a2, J, a2->identity(), id));

  CHECK_FALSE(is_stable_pair(*a2, SimpleSubset::of({0}), a2->simple_reflection(1), id));
  CHECK(is_stable_pair(*a2, SimpleSubset::of({0}), a2->from_word({0, 1}), fl));

  // w not a minimal representative is rejected
  CHECK_THROWS(is_stable_pair(*a2, SimpleSubset::of({0}), a2->simple_reflection(0), id));
}

TEST_CASE("j_infinity examples") {
  auto a2 = build_weyl('A', 2);
  auto id = DiagramAut::identity(a2);
  auto fl = flip(a2);

  // J = I, w = e: already stable
  auto c1 = j_infinity(*a2, a2->simples(), a2->identity(), id);
  CHECK(c1.steps.size() == 1);
  CHECK(c1.j_infinity == a2->simples());

  // J = {s1}, w = s2: one strict step down to the empty set
  auto c2 = j_infinity(*a2, SimpleSubset::of({0}), a2->simple_reflection(1), id);
  REQUIRE(c2.steps.size() == 2);
  CHECK(c2.steps[0].second == SimpleSubset::of({0}));
  CHECK(c2.steps[1].second == SimpleSubset());
  CHECK(c2.j_infinity == SimpleSubset());

  // flip twist: eps^{-1}(Ad(e){s1}) = {s2}, so the tower collapses
  auto c3 = j_infinity(*a2, SimpleSubset::of({0}), a2->identity(), fl);
  CHECK(c3.j_infinity == SimpleSubset());

  CHECK_THROWS(j_infinity(*a2, SimpleSubset::of({0}), a2->simple_reflection(0), id));
}

TEST_CASE("tower properties, rank <= 3 exhaustive") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}}) {
    auto d = build_weyl(s, r);
    for (const auto& eps : diagram_automorphisms(d, AutLevel::dynkin)) {
      for (SimpleSubset J : all_subsets(d->simples())) {
        auto pieces = piece_indices(*d, J, eps);
        // partition completeness
        CHECK(static_cast<int>(pieces.size()) * (d->elements().size() / pieces.size()) ==
              d->elements().size());
        for (const auto& w : pieces) {
          auto chain = j_infinity(*d, J, w, eps);
          CHECK(static_cast<int>(chain.steps.size()) <= J.size() + 1);
          // strict decrease along the chain
          for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i)
            CHECK(chain.steps[i + 1].second.size() < chain.steps[i].second.size());
          // stability at the end
          auto w0 = min_double_coset_rep(*d, eps.apply(chain.j_infinity), w, chain.j_infinity);
          CHECK(is_stable_pair(*d, chain.j_infinity, w0, eps));
          // a stable start yields a length-1 chain
          if (is_stable_pair(*d, J, min_double_coset_rep(*d, eps.apply(J), w, J), eps) &&
              w == min_double_coset_rep(*d, eps.apply(J), w, J)) {
            auto c = j_infinity(*d, J, w, eps);
            CHECK(c.steps.size() == 1);
            CHECK(c.j_infinity == J);
          }
        }
      }
    }
  }
}

TEST_CASE("cw_set") {
  auto a2 = build_weyl('A', 2);
  auto id = DiagramAut::identity(a2);
  auto fl = flip(a2);

  CHECK(cw_set(*a2, SimpleSubset(), id).size() == 6);

  auto c = cw_set(*a2, SimpleSubset::of({0}), id);
  REQUIRE(c.size() == 1);
  CHECK(c[0].is_identity());

  auto cf = cw_set(*a2, SimpleSubset::of({0}), fl);
  REQUIRE(cf.size() == 1);
  CHECK(cf[0] == a2->from_word({0, 1}));
}

TEST_CASE("cw_set is a subgroup preserving the J-root set when eps = id") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'D', 4}}) {
    auto d = build_weyl(s, r);
    auto id = DiagramAut::identity(d);
    for (SimpleSubset J : all_subsets(d->simples())) {
      auto c = cw_set(*d, J, id);
      std::set<std::string> keys;
      for (const auto& w : c) keys.insert(w.word_str());
      for (const auto& x : c)
        for (const auto& y : c) CHECK(keys.count((x * y).word_str()) == 1);
      for (const auto& x : c) CHECK(keys.count(x.inverse().word_str()) == 1);
      // stabilizer characterization on the simple roots of J
      int count = 0;
      for (int i = 0; i < d->elements().size(); ++i) {
        auto w = d->element(i);
        bool stable = true;
        for (int sgen : J.members()) {
          int img = w.act(d->simple_root_id(sgen));
          bool hits = false;
          for (int t : J.members()) hits = hits || img == d->simple_root_id(t);
          stable = stable && hits;
        }
        if (stable) ++count;
      }
      CHECK(count == static_cast<int>(c.size()));
    }
  }
}
