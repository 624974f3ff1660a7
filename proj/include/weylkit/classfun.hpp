#pragma once

#include <memory>
#include <vector>

#include "weylkit/cyclotomic.hpp"
#include "weylkit/finite_group.hpp"

namespace weylkit {

// A group together with its conjugacy data; shared by all class functions on it.
struct GroupContext {
  GroupPtr group;
  ClassData classes;
  std::vector<int> inverse_class;  // class of rep^{-1}
  std::vector<int> rep_orders;
  long exponent = 1;

  int order() const { return group->order(); }
  int n_classes() const { return classes.count(); }
  int class_of(int element) const { return classes.class_of[element]; }

  static std::shared_ptr<const GroupContext> make(GroupPtr g,
                                                  int order_bound = kDefaultOrderBound);
};

using Ctx = std::shared_ptr<const GroupContext>;

// Exact class function: one cyclotomic value per conjugacy class.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(Ctx ctx, std::vector<Cyclotomic> values);
  static ClassFunction zero(Ctx ctx);
  static ClassFunction trivial(Ctx ctx);
  static ClassFunction regular(Ctx ctx);
  static ClassFunction indicator(Ctx ctx, int class_id);

  const Ctx& ctx() const { return ctx_; }
  const std::vector<Cyclotomic>& values() const { return vals_; }
  const Cyclotomic& value(int class_id) const { return vals_[class_id]; }
  Cyclotomic value_at_element(int g) const { return vals_[ctx_->class_of(g)]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction scaled(const Rat& r) const;
  bool operator==(const ClassFunction& o) const;
  bool is_zero() const;

 private:
  Ctx ctx_;
  std::vector<Cyclotomic> vals_;
};

// <phi, psi> = |G|^-1 sum_g phi(g) conj(psi(g)); exact.
Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi);

// Inclusion of sub into sup with precomputed class fusion.
struct Embedding {
  Ctx sub;
  Ctx sup;
  std::vector<int> element_map;  // sub element -> sup element
  std::vector<int> fusion;       // sub class -> sup class

  static Embedding make(Ctx sub, Ctx sup, std::vector<int> element_map);
};

ClassFunction induce(const Embedding& e, const ClassFunction& phi);
ClassFunction restrict_to(const Embedding& e, const ClassFunction& phi);

}  // namespace weylkit
