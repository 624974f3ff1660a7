#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylkit/coxeter.hpp"

namespace weylkit {

inline constexpr int kDefaultOrderBound = 5000;

// An explicitly enumerated finite group.  Element 0 is the identity and the
// enumeration order is canonical for the constructing data, so downstream
// outputs (class representatives, tables) are reproducible.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  virtual int order() const = 0;
  virtual int mul(int a, int b) const = 0;
  virtual int inverse(int a) const = 0;
  virtual const std::vector<int>& generators() const = 0;
  virtual std::string description() const = 0;

  int identity() const { return 0; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
  int power(int a, long k) const;
  int element_order(int a) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Group of permutations of a fixed point set, enumerated breadth-first over
// generator words in the given generator order.
class PermGroup final : public FiniteGroup {
 public:
  PermGroup(std::vector<RootPerm> generator_perms, std::string description,
            std::size_t order_cap = 1u << 20);

  int order() const override { return static_cast<int>(elems_.size()); }
  int mul(int a, int b) const override;
  int inverse(int a) const override { return inv_[a]; }
  const std::vector<int>& generators() const override { return gens_; }
  std::string description() const override { return desc_; }

  const RootPerm& perm(int a) const { return elems_[a]; }
  int index_of(const RootPerm& p) const;  // -1 if absent
  std::vector<int> word_of(int a) const;  // generator word from the BFS tree

 private:
  std::vector<RootPerm> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::pair<int, int>> parent_;
  std::string desc_;
  std::vector<int> table_;  // order^2 multiplication table when small
  int table_n_ = 0;
};

// Small explicitly tabulated group (used for the twisting groups Gamma).
class SmallGroup final : public FiniteGroup {
 public:
  SmallGroup(std::vector<std::vector<int>> table, std::vector<int> generators,
             std::string description, std::vector<std::string> element_names = {});

  static SmallGroup cyclic(int n, const std::string& gen_name = "c");
  // <a, c | a^M = 1, c^N = a^u, c a c^-1 = a^k>; elements indexed a^i c^j.
  static SmallGroup metacyclic(int M, int N, long k, long u = 0);

  int order() const override { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const override { return table_[a][b]; }
  int inverse(int a) const override { return inv_[a]; }
  const std::vector<int>& generators() const override { return gens_; }
  std::string description() const override { return desc_; }
  const std::string& element_name(int a) const { return names_[a]; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::string> names_;
  std::string desc_;
};

// Semidirect product base x Gamma for an action of Gamma on the base by
// automorphisms; element g*|base| + b stands for (b, g).
class SemidirectGroup final : public FiniteGroup {
 public:
  SemidirectGroup(GroupPtr base, std::shared_ptr<const SmallGroup> gamma,
                  std::vector<std::vector<int>> action, std::string description);

  int order() const override { return base_->order() * gamma_->order(); }
  int mul(int a, int b) const override;
  int inverse(int a) const override;
  const std::vector<int>& generators() const override { return gens_; }
  std::string description() const override { return desc_; }

  const GroupPtr& base() const { return base_; }
  const std::shared_ptr<const SmallGroup>& gamma() const { return gamma_; }
  int base_part(int a) const { return a % base_->order(); }
  int gamma_part(int a) const { return a / base_->order(); }
  int make(int b, int g) const { return g * base_->order() + b; }
  int act(int g, int b) const { return action_[g][b]; }

 private:
  GroupPtr base_;
  std::shared_ptr<const SmallGroup> gamma_;
  std::vector<std::vector<int>> action_;  // action_[g][b]
  std::vector<int> gens_;
  std::string desc_;
};

// Conjugacy data; classes are ordered by their minimal element, which is also
// the stored representative.
struct ClassData {
  std::vector<int> class_of;  // element -> class id
  std::vector<int> reps;
  std::vector<int> sizes;
  int count() const { return static_cast<int>(reps.size()); }
};

ClassData conjugacy_classes(const FiniteGroup& g, int order_bound = kDefaultOrderBound);

long group_exponent(const FiniteGroup& g, const ClassData& classes);

// Weyl group (or parabolic/reflection subgroup) as root permutations.
std::shared_ptr<const PermGroup> weyl_group(DatumPtr datum);
std::shared_ptr<const PermGroup> parabolic_group(DatumPtr datum, SimpleSubset J);
std::shared_ptr<const PermGroup> reflection_subgroup(DatumPtr datum,
                                                     const std::vector<int>& root_ids,
                                                     const std::string& description);

// Injection of sub into sup by matching underlying permutations.
std::vector<int> embed_perm_group(const PermGroup& sub, const PermGroup& sup);

}  // namespace weylkit
