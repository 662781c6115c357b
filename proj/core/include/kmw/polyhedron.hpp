#pragma once

#include "kmw/weight.hpp"
#include "kmw/weyl.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kmw {

/// D_lam = (rational dominant chamber) cap conv(W lam) for regular dominant lam.
/// Vertices are the parabolic averages b_J(lam), one per proper J; the
/// characteristic cone is the ray Q_+(-delta).
struct DominantPolyhedron {
  Weight lam;
  /// <lam, d> that was removed before computing vertices and added back after.
  Rational normalized_shift;
  std::map<ParabolicSubset, Weight> vertices;
  Weight ray;
};

/// Throws NotRegular unless lam is regular dominant integral.
DominantPolyhedron build_polyhedron(const Weight& lam);

/// b_J(lam) for every proper J, duplicates kept. Accepts any dominant integral
/// lam; for non-regular lam this lists the candidate vertex set that is only
/// conjectured to be the vertex set.
std::vector<std::pair<ParabolicSubset, Weight>> build_polyhedron_conjectural(const Weight& lam);

/// Defining inequalities: mu rational-dominant, same level, lam - mu in Q_+ span.
bool contains_root_test(const Weight& lam, const Weight& mu);

struct DecompositionCertificate {
  std::map<ParabolicSubset, Rational> weights;  // u_J
  Rational ray_length;                           // t
};

/// mu = sum_J u_J b_J - t delta with u_J, t >= 0 and sum u_J = 1, if possible.
std::optional<DecompositionCertificate> decomposition_certificate(const DominantPolyhedron& poly,
                                                                  const Weight& mu);
bool contains_decomposition_test(const DominantPolyhedron& poly, const Weight& mu);

/// mu in P(lam): its dominant representative lies below lam.
bool weight_membership(const Weight& lam, const Weight& mu);

/// Upper bounds B_j + depth * a_j on the root coordinates of lam - mu for
/// dominant mu in D_lam with alpha_0-coefficient at most depth. Requires
/// regular lam.
std::vector<int> box_bound(const Weight& lam, int depth);

/// Root coordinates c of lam - mu for all dominant integral mu <= lam with
/// c_0 <= depth, scanning the box above. Requires regular lam.
std::vector<IntCoords> dominant_coords_by_box(const Weight& lam, int depth);

/// Same set for any dominant integral lam of positive level, enumerated from
/// the finitely many level-k dominant finite parts.
std::vector<IntCoords> dominant_coords_by_alcove(const Weight& lam, int depth);

/// delta-maximal dominant weights of V(lam): dominant mu <= lam whose root
/// coordinates satisfy c_i < a_i for some i.
std::vector<Weight> delta_maximal_dominant(const Weight& lam);

/// Orders root coordinates by (c_0, height, lexicographic).
bool grade_order_less(const IntCoords& a, const IntCoords& b);

}  // namespace kmw
