#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "weylkit/coxeter.hpp"

using namespace weylkit;

namespace {

// Independent oracle: closure of explicit permutation generators, with BFS
// word lengths.  Used to cross-check the root-permutation engine on small
// concrete models (S3 as permutations of 3 letters, W(B2) as signed
// permutations of 2 letters).
struct PermModel {
  std::vector<std::vector<int>> gens;
  std::map<std::vector<int>, int> length;

  explicit PermModel(std::vector<std::vector<int>> g) : gens(std::move(g)) {
    std::vector<int> id(gens[0].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    std::vector<std::vector<int>> queue{id};
    length[id] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : gens) {
        std::vector<int> next(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) next[i] = queue[head][g[i]];
        if (length.emplace(next, length[queue[head]] + 1).second) queue.push_back(next);
      }
    }
  }
  int order() const { return static_cast<int>(length.size()); }
  int diameter() const {
    int d = 0;
    for (const auto& [p, l] : length) d = std::max(d, l);
    return d;
  }
};

// Signed permutations of {1..n} encoded on 2n points (i and i+n = -i).
std::vector<int> signed_swap(int n, int a, int b) {
  std::vector<int> p(2 * n);
  for (int i = 0; i < 2 * n; ++i) p[i] = i;
  std::swap(p[a], p[b]);
  std::swap(p[a + n], p[b + n]);
  return p;
}
std::vector<int> sign_flip(int n, int a) {
  std::vector<int> p(2 * n);
  for (int i = 0; i < 2 * n; ++i) p[i] = i;
  std::swap(p[a], p[a + n]);
  return p;
}

int subgroup_order(const CoxeterDatum& d, SimpleSubset J) {
  // closure over the generating reflections, independent of coset machinery
  std::set<RootPerm> seen;
  std::vector<RootPerm> queue;
  RootPerm id(d.n_roots());
  for (int i = 0; i < d.n_roots(); ++i) id[i] = static_cast<std::uint16_t>(i);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    RootPerm p = queue.back();
    queue.pop_back();
    for (int s : J.members()) {
      RootPerm g = d.simple_reflection(s).perm();
      RootPerm q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[g[i]];
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("build_weyl rejects invalid pairs") {
  CHECK_THROWS(build_weyl('G', 3));
  CHECK_THROWS(build_weyl('G', 1));
  CHECK_THROWS(build_weyl('F', 5));
  CHECK_THROWS(build_weyl('B', 1));
  CHECK_THROWS(build_weyl('D', 2));
  CHECK_THROWS(build_weyl('H', 3));
  CHECK_THROWS(build_weyl('A', 0));
  CHECK_THROWS(build_weyl('A', 7));          // default bound
  CHECK_NOTHROW(build_weyl('A', 7, 8));      // raised bound
  CHECK_THROWS(build_weyl('E', 9, 9));
}

TEST_CASE("rank-one and small groups match explicit models") {
  auto a1 = build_weyl('A', 1);
  CHECK(a1->n_positive == 1);
  CHECK(a1->elements().size() == 2);

  // S3 as permutations of 3 letters
  PermModel s3({{1, 0, 2}, {0, 2, 1}});
  auto a2 = build_weyl('A', 2);
  CHECK(a2->n_positive == 3);
  CHECK(a2->elements().size() == s3.order());
  CHECK(s3.order() == 6);
  CHECK(s3.diameter() == 3);
  // longest element of A2 has length 3
  int maxlen = 0;
  for (int i = 0; i < a2->elements().size(); ++i)
    maxlen = std::max(maxlen, a2->elements().lengths[i]);
  CHECK(maxlen == 3);

  // W(B2) as signed permutations of 2 letters
  PermModel b2m({signed_swap(2, 0, 1), sign_flip(2, 1)});
  auto b2 = build_weyl('B', 2);
  CHECK(b2->n_positive == 4);
  CHECK(b2->elements().size() == b2m.order());
  CHECK(b2m.order() == 8);
  CHECK(b2m.diameter() == 4);
  int maxlen2 = 0;
  for (int i = 0; i < b2->elements().size(); ++i)
    maxlen2 = std::max(maxlen2, b2->elements().lengths[i]);
  CHECK(maxlen2 == 4);
}

TEST_CASE("datum invariants hold across series") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4},
                                                       {'B', 2}, {'B', 3}, {'B', 4}, {'C', 2},
                                                       {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4},
                                                       {'G', 2}, {'F', 4}}) {
    auto d = build_weyl(s, r);
    CAPTURE(d->name());
    CHECK(d->n_roots() % 2 == 0);
    CHECK(d->n_roots() == 2 * d->n_positive);
    for (int i = 0; i < d->n_positive; ++i) CHECK(d->negate(i) == i + d->n_positive);
    // every simple reflection permutes positives other than its own root
    for (int sgen = 0; sgen < r; ++sgen) {
      auto w = d->simple_reflection(sgen);
      int flipped = 0;
      for (int i = 0; i < d->n_positive; ++i)
        if (!d->is_positive(w.act(i))) ++flipped;
      CHECK(flipped == 1);
      CHECK(w.act(d->simple_root_id(sgen)) == d->negate(d->simple_root_id(sgen)));
    }
    // group order from degrees equals exhaustive enumeration
    CHECK(d->order_from_degrees() == static_cast<std::uint64_t>(d->elements().size()));
    // length equals inversion count equals word length
    const auto& t = d->elements();
    for (int i = 0; i < t.size(); ++i)
      CHECK(static_cast<int>(t.word_of(i).size()) == t.lengths[i]);
  }
}

TEST_CASE("root counts per series") {
  CHECK(build_weyl('A', 3)->n_positive == 6);
  CHECK(build_weyl('B', 3)->n_positive == 9);
  CHECK(build_weyl('C', 3)->n_positive == 9);
  CHECK(build_weyl('D', 4)->n_positive == 12);
  CHECK(build_weyl('G', 2)->n_positive == 6);
  CHECK(build_weyl('F', 4)->n_positive == 24);
}

TEST_CASE("identity and longest-element lengths") {
  auto a2 = build_weyl('A', 2);
  CHECK(a2->identity().length() == 0);
  CHECK(a2->from_word({0, 1, 0}).length() == 3);
  CHECK(a2->from_word({0, 1, 0}) == a2->from_word({1, 0, 1}));  // braid
  auto b2 = build_weyl('B', 2);
  CHECK(b2->from_word({0, 1, 0, 1}).length() == 4);
}

TEST_CASE("min_double_coset_rep") {
  auto a2 = build_weyl('A', 2);
  auto w0 = a2->from_word({0, 1, 0});
  SimpleSubset J = SimpleSubset::of({0});

  // oracle: exhaustive enumeration of W_{s1} w0 W_{s1} = {s2, s1s2, s2s1, s1s2s1}
  {
    std::vector<GroupElement> wj{a2->identity(), a2->simple_reflection(0)};
    GroupElement best = w0;
    for (const auto& x : wj)
      for (const auto& y : wj) {
        GroupElement cand = x * w0 * y;
        if (cand.length() < best.length()) best = cand;
      }
    CHECK(best == a2->simple_reflection(1));
  }

  CHECK(min_double_coset_rep(*a2, J, w0, J) == a2->simple_reflection(1));
  CHECK(min_double_coset_rep(*a2, SimpleSubset(), w0, SimpleSubset()) == w0);
  CHECK(min_double_coset_rep(*a2, a2->simples(), w0, a2->simples()).is_identity());
  // idempotence
  auto m = min_double_coset_rep(*a2, J, w0, J);
  CHECK(min_double_coset_rep(*a2, J, m, J) == m);
}

TEST_CASE("double cosets partition W (exhaustive, rank <= 3)") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}}) {
    auto d = build_weyl(s, r);
    const auto& t = d->elements();
    for (SimpleSubset J : all_subsets(d->simples()))
      for (SimpleSubset K : all_subsets(d->simples())) {
        // map each element to its double-coset minimum; minima must be the
        // distinguished representatives and fibers must cover W
        std::map<std::string, int> counts;
        std::set<std::string> reps;
        for (int i = 0; i < t.size(); ++i) {
          auto m = min_double_coset_rep(*d, J, d->element(i), K);
          counts[m.word_str()]++;
          reps.insert(m.word_str());
        }
        auto dist = coset_reps(*d, J, K);
        CHECK(dist.size() == reps.size());
        for (const auto& w : dist) CHECK(reps.count(w.word_str()) == 1);
        int total = 0;
        for (auto& [k, v] : counts) total += v;
        CHECK(total == t.size());
      }
  }
}

TEST_CASE("coset_reps sizes and examples") {
  auto a2 = build_weyl('A', 2);
  auto reps = coset_reps(*a2, SimpleSubset::of({0}));
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].word_str() == "e");
  CHECK(reps[1].word_str() == "s2");
  CHECK(reps[2].word_str() == "s2 s1");

  auto dreps = coset_reps(*a2, SimpleSubset::of({0}), SimpleSubset::of({1}));
  REQUIRE(dreps.size() == 2);
  CHECK(dreps[0].word_str() == "e");
  CHECK(dreps[1].word_str() == "s2 s1");

  CHECK(coset_reps(*a2, SimpleSubset()).size() == 6);

  // |^J W| * |W_J| = |W| for rank <= 4
  for (auto [s, r] :
       std::vector<std::pair<char, int>>{{'A', 3}, {'A', 4}, {'B', 3}, {'B', 4}, {'D', 4}}) {
    auto d = build_weyl(s, r);
    for (SimpleSubset J : all_subsets(d->simples())) {
      auto rj = coset_reps(*d, J);
      CHECK(static_cast<int>(rj.size()) * subgroup_order(*d, J) == d->elements().size());
    }
  }
}

TEST_CASE("ad_simple_subset") {
  auto a2 = build_weyl('A', 2);
  SimpleSubset J1 = SimpleSubset::of({0});
  CHECK(ad_simple_subset(*a2, a2->identity(), J1) == J1);
  CHECK(!ad_simple_subset(*a2, a2->simple_reflection(1), J1).has_value());

  auto b2 = build_weyl('B', 2);
  auto w0 = b2->from_word({0, 1, 0, 1});
  auto img = ad_simple_subset(*b2, w0, b2->simples());
  REQUIRE(img.has_value());
  CHECK(*img == b2->simples());

  // |Ad(w)J| = |J| and Coxeter matrix preserved whenever defined
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}}) {
    auto d = build_weyl(s, r);
    for (SimpleSubset J : all_subsets(d->simples()))
      for (int i = 0; i < d->elements().size(); ++i) {
        auto a = ad_simple_subset(*d, d->element(i), J);
        if (!a) continue;
        CHECK(a->size() == J.size());
        auto js = J.members();
        auto as = a->members();
        // conjugation by a fixed w maps s to a definite member; rebuild map
        auto w = d->element(i);
        std::map<int, int> to;
        for (int sgen : js) {
          int img2 = w.act(d->simple_root_id(sgen));
          int line = d->is_positive(img2) ? img2 : d->negate(img2);
          for (int tgen = 0; tgen < d->rank; ++tgen)
            if (d->simple_root_id(tgen) == line) to[sgen] = tgen;
        }
        for (int x : js)
          for (int y : js) CHECK(d->coxeter[to[x]][to[y]] == d->coxeter[x][y]);
      }
  }
}

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphisms(build_weyl('A', 1), AutLevel::dynkin).size() == 1);
  CHECK(diagram_automorphisms(build_weyl('A', 2), AutLevel::dynkin).size() == 2);
  CHECK(diagram_automorphisms(build_weyl('A', 3), AutLevel::dynkin).size() == 2);
  CHECK(diagram_automorphisms(build_weyl('D', 4), AutLevel::dynkin).size() == 6);
  CHECK(diagram_automorphisms(build_weyl('B', 2), AutLevel::dynkin).size() == 1);
  CHECK(diagram_automorphisms(build_weyl('B', 2), AutLevel::coxeter).size() == 2);

  // dynkin collection is a subgroup of the coxeter collection
  for (auto datum : {build_weyl('A', 3), build_weyl('D', 4), build_weyl('B', 3)}) {
    auto dyn = diagram_automorphisms(datum, AutLevel::dynkin);
    auto cox = diagram_automorphisms(datum, AutLevel::coxeter);
    for (const auto& a : dyn) {
      bool found = false;
      for (const auto& b : cox) found = found || a.node_map() == b.node_map();
      CHECK(found);
    }
    // closed under composition
    for (const auto& a : dyn)
      for (const auto& b : dyn) {
        auto c = a.compose(b);
        bool found = false;
        for (const auto& x : dyn) found = found || x.node_map() == c.node_map();
        CHECK(found);
      }
  }
}

TEST_CASE("dynkin automorphisms preserve root lengths") {
  for (auto datum : {build_weyl('D', 4), build_weyl('B', 3), build_weyl('A', 3)}) {
    for (const auto& eps : diagram_automorphisms(datum, AutLevel::dynkin)) {
      const auto& rho = eps.root_perm();
      for (int i = 0; i < datum->n_roots(); ++i) {
        CHECK(datum->root_norm_of(rho[i]) == datum->root_norm_of(i));
        CHECK(datum->is_positive(rho[i]) == datum->is_positive(i));
      }
      // extension is a group automorphism
      auto w = datum->from_word({0, 1});
      auto u = datum->from_word({1, 2});
      CHECK(eps.apply(w * u) == eps.apply(w) * eps.apply(u));
      CHECK(eps.apply(w).length() == w.length());
    }
  }
}

TEST_CASE("simple conjugacy classes") {
  CHECK(simple_conjugacy_classes(*build_weyl('A', 3)).size() == 1);
  CHECK(simple_conjugacy_classes(*build_weyl('B', 3)).size() == 2);
  CHECK(simple_conjugacy_classes(*build_weyl('D', 4)).size() == 1);
  CHECK(simple_conjugacy_classes(*build_weyl('G', 2)).size() == 2);
}

TEST_CASE("word parsing round-trips") {
  auto b3 = build_weyl('B', 3);
  auto w = b3->from_word(parse_word("s1 s3 s2", 3));
  CHECK(w.length() == 3);
  CHECK(parse_subset("s1 s3", 3) == SimpleSubset::of({0, 2}));
  CHECK_THROWS(parse_word("s4", 3));
  CHECK_THROWS(parse_subset("x1", 3));
  CHECK(word_to_string({}) == "e");
}
