#include "weylkit/classfun.hpp"

#include <stdexcept>

namespace weylkit {

std::shared_ptr<const GroupContext> GroupContext::make(GroupPtr g, int order_bound) {
  auto ctx = std::make_shared<GroupContext>();
  ctx->group = std::move(g);
  ctx->classes = conjugacy_classes(*ctx->group, order_bound);
  ctx->inverse_class.resize(ctx->classes.count());
  ctx->rep_orders.resize(ctx->classes.count());
  for (int k = 0; k < ctx->classes.count(); ++k) {
    int r = ctx->classes.reps[k];
    ctx->inverse_class[k] = ctx->classes.class_of[ctx->group->inverse(r)];
    ctx->rep_orders[k] = ctx->group->element_order(r);
  }
  ctx->exponent = group_exponent(*ctx->group, ctx->classes);
  return ctx;
}

ClassFunction::ClassFunction(Ctx ctx, std::vector<Cyclotomic> values)
    : ctx_(std::move(ctx)), vals_(std::move(values)) {
  if (static_cast<int>(vals_.size()) != ctx_->n_classes())
    throw std::invalid_argument("value count does not match class count");
}

ClassFunction ClassFunction::zero(Ctx ctx) {
  int n = ctx->n_classes();
  return ClassFunction(std::move(ctx), std::vector<Cyclotomic>(n));
}

ClassFunction ClassFunction::trivial(Ctx ctx) {
  int n = ctx->n_classes();
  return ClassFunction(std::move(ctx), std::vector<Cyclotomic>(n, Cyclotomic(1)));
}

ClassFunction ClassFunction::regular(Ctx ctx) {
  std::vector<Cyclotomic> v(ctx->n_classes());
  v[ctx->class_of(ctx->group->identity())] = Cyclotomic(ctx->order());
  return ClassFunction(std::move(ctx), std::move(v));
}

ClassFunction ClassFunction::indicator(Ctx ctx, int class_id) {
  std::vector<Cyclotomic> v(ctx->n_classes());
  v.at(class_id) = Cyclotomic(1);
  return ClassFunction(std::move(ctx), std::move(v));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (ctx_.get() != o.ctx_.get()) throw std::invalid_argument("mismatched groups");
  std::vector<Cyclotomic> v(vals_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vals_[i] + o.vals_[i];
  return ClassFunction(ctx_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  if (ctx_.get() != o.ctx_.get()) throw std::invalid_argument("mismatched groups");
  std::vector<Cyclotomic> v(vals_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vals_[i] - o.vals_[i];
  return ClassFunction(ctx_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (ctx_.get() != o.ctx_.get()) throw std::invalid_argument("mismatched groups");
  std::vector<Cyclotomic> v(vals_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vals_[i] * o.vals_[i];
  return ClassFunction(ctx_, std::move(v));
}

ClassFunction ClassFunction::scaled(const Rat& r) const {
  std::vector<Cyclotomic> v(vals_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vals_[i].scaled(r);
  return ClassFunction(ctx_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (ctx_.get() != o.ctx_.get()) return false;
  for (std::size_t i = 0; i < vals_.size(); ++i)
    if (vals_[i] != o.vals_[i]) return false;
  return true;
}

bool ClassFunction::is_zero() const {
  for (const auto& v : vals_)
    if (!v.is_zero()) return false;
  return true;
}

Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  if (phi.ctx().get() != psi.ctx().get()) throw std::invalid_argument("mismatched groups");
  const auto& ctx = *phi.ctx();
  Cyclotomic total;
  for (int k = 0; k < ctx.n_classes(); ++k) {
    Cyclotomic term = phi.value(k) * psi.value(k).conj();
    total += term.scaled(Rat(ctx.classes.sizes[k]));
  }
  return total.scaled(frac(1, ctx.order()));
}

Embedding Embedding::make(Ctx sub, Ctx sup, std::vector<int> element_map) {
  if (static_cast<int>(element_map.size()) != sub->order())
    throw std::invalid_argument("element map has wrong size");
  Embedding e{std::move(sub), std::move(sup), std::move(element_map), {}};
  // spot-check the homomorphism property on generators x all elements
  for (int g : e.sub->group->generators())
    for (int x = 0; x < e.sub->order(); ++x)
      if (e.element_map[e.sub->group->mul(g, x)] !=
          e.sup->group->mul(e.element_map[g], e.element_map[x]))
        throw std::invalid_argument("element map is not a homomorphism");
  e.fusion.resize(e.sub->n_classes());
  for (int k = 0; k < e.sub->n_classes(); ++k)
    e.fusion[k] = e.sup->class_of(e.element_map[e.sub->classes.reps[k]]);
  return e;
}

ClassFunction induce(const Embedding& e, const ClassFunction& phi) {
  if (phi.ctx().get() != e.sub.get()) throw std::invalid_argument("function not on the subgroup");
  // Ind(phi)(c) = |G| / (|c| |H|) * sum_{sub classes d fused to c} |d| phi(d)
  std::vector<Cyclotomic> v(e.sup->n_classes());
  for (int d = 0; d < e.sub->n_classes(); ++d) {
    int c = e.fusion[d];
    v[c] += phi.value(d).scaled(Rat(e.sub->classes.sizes[d]));
  }
  for (int c = 0; c < e.sup->n_classes(); ++c)
    v[c] = v[c].scaled(frac(e.sup->order(), static_cast<long>(e.sup->classes.sizes[c]) *
                                                e.sub->order()));
  return ClassFunction(e.sup, std::move(v));
}

ClassFunction restrict_to(const Embedding& e, const ClassFunction& phi) {
  if (phi.ctx().get() != e.sup.get()) throw std::invalid_argument("function not on the big group");
  std::vector<Cyclotomic> v(e.sub->n_classes());
  for (int d = 0; d < e.sub->n_classes(); ++d) v[d] = phi.value(e.fusion[d]);
  return ClassFunction(e.sub, std::move(v));
}

}  // namespace weylkit
