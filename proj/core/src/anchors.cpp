#include "hss/anchors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hss {
namespace {

// Anchors have the form "kind:label", optionally with a suffix naming the item
// inside a construction section.
constexpr std::pair<std::string_view, std::string_view> kAnchors[] = {
    {"chevalley.basis.cartan_abelian", "section:StcHss/chevalley-basis"},
    {"chevalley.basis.cartan_action", "section:StcHss/chevalley-basis"},
    {"chevalley.basis.coroot_integral", "section:StcHss/chevalley-basis"},
    {"chevalley.basis.n_magnitude", "section:StcHss/chevalley-basis"},
    {"chevalley.compact.closure", "section:StcHss/compact-real-form"},
    {"chevalley.compact.relations", "section:StcHss/compact-real-form"},
    {"chevalley.coroot.duality", "section:StcHss/chevalley-basis"},
    {"chevalley.determinism", "section:StcHss/chevalley-basis"},
    {"chevalley.form.compact_norm", "section:StcHss/compact-real-form"},
    {"chevalley.form.compact_orthogonality", "section:StcHss/compact-real-form"},
    {"chevalley.form.invariance", "section:StcHss/chevalley-basis"},
    {"chevalley.jacobi", "section:StcHss/chevalley-basis"},
    {"chevalley.n.antisymmetry", "section:StcHss/n-identities"},
    {"chevalley.n.cyclic", "section:StcHss/n-identities"},
    {"chevalley.n.highest_root", "section:StcHss/n-identities"},
    {"chevalley.n.quadruple", "section:StcHss/n-identities"},
    {"chevalley.n.ratio", "section:StcHss/n-identities"},
    {"chevalley.n.square", "section:StcHss/n-identities"},
    {"chevalley.n.square_scaled", "section:StcHss/n-identities"},
    {"curvature.accoeff.constant", "lemma:accoeff"},
    {"curvature.accoeff.disjoint", "lemma:accoeff"},
    {"curvature.accoeff.formula", "lemma:accoeff"},
    {"curvature.bianchi", "section:StcHss/curvature-tensor"},
    {"curvature.commutant.commutative", "theorem:Grassmann"},
    {"curvature.commutant.dimension", "theorem:nonexistence"},
    {"curvature.flat", "lemma:abelian"},
    {"curvature.j_invariance", "section:StcHss/curvature-tensor"},
    {"curvature.jacobi.j_symmetry", "prop:IRF2"},
    {"curvature.jacobi.singular", "prop:normalsingular"},
    {"curvature.jacobi.symmetric", "lemma:nJo"},
    {"curvature.k0.dims", "theorem:nonexistence/k0-action"},
    {"curvature.k0.preserves_p1", "theorem:nonexistence/k0-action"},
    {"curvature.lie_triple.cu_delta", "lemma:nJo/polars"},
    {"curvature.lie_triple.cu_delta_p0", "lemma:nJo/polars"},
    {"curvature.lie_triple.mixed_line", "lemma:nJo/polars"},
    {"curvature.lie_triple.negative_control", "lemma:nJo/polars"},
    {"curvature.lie_triple.p", "section:StcHss/curvature-tensor"},
    {"curvature.lie_triple.p0", "lemma:nJo/polars"},
    {"curvature.lie_triple.p1", "lemma:nJo/polars"},
    {"curvature.nonnegative", "section:StcHss/curvature-tensor"},
    {"curvature.pair_symmetry", "section:StcHss/curvature-tensor"},
    {"curvature.sectional.cu_delta", "prop:normalline"},
    {"curvature.spectrum.u_delta", "lemma:nJo"},
    {"curvature.split.partition", "lemma:nJo/root-split"},
    {"curvature.split.reference", "lemma:nJo/root-split"},
    {"hermitian.cartan_decomposition", "section:StcHss/hermitian-model"},
    {"hermitian.delta_m.count", "section:StcHss/root-lists"},
    {"hermitian.delta_m.display", "section:StcHss/root-lists"},
    {"hermitian.delta_m.reference", "section:StcHss/root-lists"},
    {"hermitian.delta_m.sum_not_root", "section:StcHss/hermitian-model"},
    {"hermitian.j.ad_ihk", "section:StcHss/complex-structure"},
    {"hermitian.j.isometry", "section:StcHss/complex-structure"},
    {"hermitian.j.square", "section:StcHss/complex-structure"},
    {"hermitian.metric.form", "section:StcHss/hermitian-model"},
    {"hermitian.node.marked", "section:StcHss/hermitian-model"},
    {"hermitian.omega.abelian", "lemma:abelian"},
    {"hermitian.omega.equal_length", "lemma:abelian"},
    {"hermitian.omega.maximal", "lemma:abelian"},
    {"hermitian.omega.rank", "lemma:abelian"},
    {"hermitian.omega.reference", "lemma:abelian"},
    {"hermitian.omega.strongly_orthogonal", "lemma:abelian"},
    {"hermitian.relations.primed", "section:StcHss/compact-real-form"},
    {"hermitian.split.node_coefficient", "section:StcHss/hermitian-model"},
    {"tubes.focal.contains_p0", "prop:focalsets"},
    {"tubes.focal.lie_triple", "theorem:classification/sufficiency"},
    {"tubes.focal.u_delta_normal", "theorem:classification/sufficiency"},
    {"tubes.focal_set.complementary", "prop:focalsets"},
    {"tubes.focal_set.dims", "theorem:classification"},
    {"tubes.focal_set.j_invariant", "prop:focalsets"},
    {"tubes.focal_set.lie_triple", "prop:focalsets"},
    {"tubes.focal_shape.normal_vanish", "prop:focalsets/jacobi-fields"},
    {"tubes.focal_shape.totally_geodesic", "prop:focalsets/jacobi-fields"},
    {"tubes.identity.eigen_relation", "cor:IRF6"},
    {"tubes.identity.product", "theorem:classification/principal-curvatures"},
    {"tubes.identity.quadratic", "theorem:classification/principal-curvatures"},
    {"tubes.identity.sum", "theorem:classification/principal-curvatures"},
    {"tubes.multiplicities", "theorem:classification/sufficiency"},
    {"tubes.multiplicity_sum", "theorem:classification/sufficiency"},
    {"tubes.phi.square", "prop:isomcomm"},
    {"tubes.reeb.adversarial", "prop:isomcomm"},
    {"tubes.reeb.residual", "prop:isomcomm"},
    {"tubes.reeb.structural", "prop:isomcomm"},
    {"tubes.sigma.dims", "lemma:nJo/polars"},
    {"tubes.spectrum.closed_form", "theorem:classification/principal-curvatures"},
};

const std::pair<std::string_view, std::string_view>* lookup(std::string_view id) {
  const auto* end = std::end(kAnchors);
  const auto* it = std::lower_bound(std::begin(kAnchors), end, id,
                                    [](const auto& p, std::string_view key) { return p.first < key; });
  return it != end && it->first == id ? it : nullptr;
}

}  // namespace

std::string_view anchor_for(std::string_view check_id) {
  if (const auto* p = lookup(check_id)) return p->second;
  throw std::out_of_range("no anchor registered for check '" + std::string(check_id) + "'");
}

bool has_anchor(std::string_view check_id) { return lookup(check_id) != nullptr; }

const std::vector<std::pair<std::string_view, std::string_view>>& anchor_registry() {
  static const std::vector<std::pair<std::string_view, std::string_view>> all(std::begin(kAnchors),
                                                                              std::end(kAnchors));
  return all;
}

}  // namespace hss
