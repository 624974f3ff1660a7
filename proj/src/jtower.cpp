#include "weylkit/jtower.hpp"

#include <stdexcept>

namespace weylkit {

namespace {

void require_dynkin(const DiagramAut& eps) {
  if (eps.level() != AutLevel::dynkin)
    throw std::invalid_argument("a dynkin-level automorphism is required");
}

bool in_piece_set(const CoxeterDatum& datum, SimpleSubset J, const GroupElement& w,
                  const DiagramAut& eps) {
  for (int s : eps.apply(J).members())
    if (w.left_descent(s)) return false;
  return true;
}

}  // namespace

std::vector<GroupElement> piece_indices(const CoxeterDatum& datum, SimpleSubset J,
                                        const DiagramAut& eps) {
  require_dynkin(eps);
  return coset_reps(datum, eps.apply(J));
}

bool is_stable_pair(const CoxeterDatum& datum, SimpleSubset J, const GroupElement& w,
                    const DiagramAut& eps) {
  require_dynkin(eps);
  if (!in_piece_set(datum, J, w, eps))
    throw std::invalid_argument("w is not a minimal coset representative for eps(J)");
  auto img = ad_simple_subset(datum, w, J);
  return img.has_value() && *img == eps.apply(J);
}

TowerChain j_infinity(const CoxeterDatum& datum, SimpleSubset J, const GroupElement& w,
                      const DiagramAut& eps) {
  require_dynkin(eps);
  if (!in_piece_set(datum, J, w, eps))
    throw std::invalid_argument("w is not a minimal coset representative for eps(J)");

  TowerChain chain{eps, J, w, {}, J};
  SimpleSubset cur = J;
  while (true) {
    GroupElement w0 = min_double_coset_rep(datum, eps.apply(cur), w, cur);
    chain.steps.emplace_back(w0, cur);
    // next = J cap eps^{-1}(Ad(w0) J), the intersection taken inside the
    // reflection set: s survives iff eps(s) = w0 t w0^{-1} for some t in J.
    SimpleSubset next;
    for (int t : cur.members()) {
      int img = w0.act(datum.simple_root_id(t));
      int line = datum.is_positive(img) ? img : datum.negate(img);
      for (int u = 0; u < datum.rank; ++u) {
        if (datum.simple_root_id(u) != line) continue;
        int s = eps.apply_inverse(u);
        if (cur.contains(s)) next = next.with(s);
        break;
      }
    }
    if (next == cur) break;
    if (!next.subset_of(cur) || next.size() >= cur.size())
      throw std::logic_error("tower failed to decrease strictly");
    cur = next;
  }
  chain.j_infinity = cur;
  return chain;
}

std::vector<GroupElement> cw_set(const CoxeterDatum& datum, SimpleSubset J,
                                 const DiagramAut& eps) {
  require_dynkin(eps);
  std::vector<GroupElement> out;
  for (const auto& w : piece_indices(datum, J, eps)) {
    auto img = ad_simple_subset(datum, w, J);
    if (img && *img == eps.apply(J)) out.push_back(w);
  }
  return out;
}

}  // namespace weylkit
