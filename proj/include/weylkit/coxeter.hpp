#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylkit/subset.hpp"

namespace weylkit {

inline constexpr int kMaxRank = 8;
inline constexpr int kDefaultRankBound = 6;

// Root coordinates in the simple-root basis.
struct Root {
  std::array<std::int8_t, kMaxRank> c{};
  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const { return c < o.c; }
};

// Permutation of the root list, indexed by root id.
using RootPerm = std::vector<std::uint16_t>;

class CoxeterDatum;
using DatumPtr = std::shared_ptr<const CoxeterDatum>;

// A group element realized as a permutation of the root set.  The reduced
// word is reconstructed on demand for display; it is not canonical.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(DatumPtr datum, RootPerm perm);

  const DatumPtr& datum() const { return datum_; }
  const RootPerm& perm() const { return perm_; }

  bool is_identity() const;
  int length() const;
  int act(int root_id) const { return perm_[root_id]; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& o) const { return perm_ == o.perm_; }

  // l(s*w) < l(w), resp. l(w*s) < l(w).
  bool left_descent(int s) const;
  bool right_descent(int s) const;

  std::vector<int> word() const;  // one reduced expression, greedy smallest descent
  std::string word_str() const;   // "s2 s1" style, "e" for the identity

 private:
  DatumPtr datum_;
  RootPerm perm_;
};

enum class AutLevel { dynkin, coxeter };

// Bijection of the simple labels preserving the Coxeter matrix; at dynkin
// level it also preserves the Cartan matrix and extends to the roots.
class DiagramAut {
 public:
  DiagramAut() = default;
  DiagramAut(DatumPtr datum, std::vector<int> node_map, AutLevel level);
  static DiagramAut identity(DatumPtr datum);

  const DatumPtr& datum() const { return datum_; }
  const std::vector<int>& node_map() const { return node_map_; }
  AutLevel level() const { return level_; }
  bool is_identity() const;
  int order() const;

  int apply(int s) const { return node_map_[s]; }
  int apply_inverse(int s) const;
  SimpleSubset apply(SimpleSubset J) const;
  SimpleSubset apply_inverse(SimpleSubset J) const;
  DiagramAut compose(const DiagramAut& o) const;  // this after o
  DiagramAut inverse_aut() const;

  // Extension to roots / group elements (dynkin level only).
  const RootPerm& root_perm() const;
  GroupElement apply(const GroupElement& w) const;

  bool operator==(const DiagramAut& o) const { return node_map_ == o.node_map_; }
  std::string str() const;

 private:
  DatumPtr datum_;
  std::vector<int> node_map_;
  AutLevel level_ = AutLevel::dynkin;
  RootPerm root_perm_;  // nonempty iff dynkin level
};

// Canonical enumeration of the whole group: breadth-first over reduced words
// with lexicographic simple order, so element indices are reproducible.
struct ElementTable {
  std::vector<RootPerm> perms;
  std::vector<int> lengths;
  std::vector<std::pair<int, int>> parent;  // (parent index, appended simple)
  std::unordered_map<std::string, int> index;

  int size() const { return static_cast<int>(perms.size()); }
  int index_of(const RootPerm& p) const;
  std::vector<int> word_of(int i) const;
};

class CoxeterDatum : public std::enable_shared_from_this<CoxeterDatum> {
 public:
  char series;  // one of A B C D E F G
  int rank;
  std::vector<Root> roots;  // positives first (sorted by height, then coords)
  int n_positive;
  std::vector<std::vector<int>> cartan;   // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<int>> coxeter;  // orders m(s_i, s_j)
  std::vector<int> root_norm;             // (alpha_i, alpha_i)/2, short roots = 1

  SimpleSubset simples() const { return SimpleSubset::full(rank); }
  int n_roots() const { return static_cast<int>(roots.size()); }
  int negate(int root_id) const {
    return root_id < n_positive ? root_id + n_positive : root_id - n_positive;
  }
  bool is_positive(int root_id) const { return root_id < n_positive; }
  int simple_root_id(int s) const { return simple_ids_[s]; }
  int root_id(const Root& r) const;
  int root_height(int root_id) const;
  int root_norm_of(int root_id) const;  // (beta,beta)/2

  // <alpha, beta^vee> for root ids.
  int pairing(int alpha_id, int beta_id) const;

  GroupElement identity() const;
  GroupElement simple_reflection(int s) const;
  GroupElement reflection_in_root(int root_id) const;
  GroupElement from_word(const std::vector<int>& word) const;

  std::uint64_t order_from_degrees() const;
  std::string name() const;  // e.g. "B3"

  // Lazily built full element enumeration.
  const ElementTable& elements() const;
  GroupElement element(int index) const;

  friend DatumPtr build_weyl(char series, int rank, int rank_bound);

 private:
  std::vector<int> simple_ids_;
  std::map<Root, int> root_index_;
  std::vector<RootPerm> simple_perms_;
  mutable std::shared_ptr<ElementTable> elements_;
  mutable std::mutex elements_mutex_;
};

// Constructs the root datum for a finite crystallographic series; rejects
// invalid (series, rank) pairs and ranks above the bound.
DatumPtr build_weyl(char series, int rank, int rank_bound = kDefaultRankBound);

int length(const CoxeterDatum& datum, const GroupElement& w);

// Unique minimal-length element of W_J w W_K.
GroupElement min_double_coset_rep(const CoxeterDatum& datum, SimpleSubset J,
                                  const GroupElement& w, SimpleSubset K);

// ^J W when K is absent, ^J W^K otherwise, in canonical enumeration order.
std::vector<GroupElement> coset_reps(const CoxeterDatum& datum, SimpleSubset J,
                                     std::optional<SimpleSubset> K = std::nullopt);

// {w s w^-1 : s in J} when that set consists of simple reflections.
std::optional<SimpleSubset> ad_simple_subset(const CoxeterDatum& datum,
                                             const GroupElement& w, SimpleSubset J);

std::vector<DiagramAut> diagram_automorphisms(DatumPtr datum, AutLevel level);

// Conjugacy of simple reflections inside W (odd-bond connectivity).
std::vector<std::vector<int>> simple_conjugacy_classes(const CoxeterDatum& datum);

std::string word_to_string(const std::vector<int>& word);
std::vector<int> parse_word(const std::string& text, int rank);
SimpleSubset parse_subset(const std::string& text, int rank);

}  // namespace weylkit
