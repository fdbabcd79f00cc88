// Constructors for the smooth-surface lattice models, plus adjunction and
// Riemann-Roch numerics.
//
// Two families are built in:
//   blowup_plane(n): the plane blown up at n general, pairwise distinct
//     points. Basis (H, e1..en), gram diag(1, -1, ..., -1), K = -3H + sum e_i.
//   ruled_surface(g, e): a ruled surface over a genus-g curve whose
//     section C0 has C0^2 = -e. Basis (C0, F), gram [[-e, 1], [1, 0]],
//     K = -2*C0 + (2g-2-e)*F. Classes pulled back from the base curve are
//     represented by their fiber degree alone.
//
// chi0 is the declared chi(O_Y) of the model (1 for blowups of the plane,
// 1-g for ruled models); it is input the lattice cannot see, so it is
// carried alongside rather than computed.

#pragma once

#include <string>
#include <vector>

#include "normsurf/lattice.hpp"

namespace normsurf {

enum class ModelKind { BlowupPlane, Ruled, Explicit };

struct SurfaceModel {
    ModelKind kind = ModelKind::Explicit;
    LatticePtr lattice;
    Rational chi0;
    std::string description;

    // Model parameters; meaningful per kind.
    long long blowup_points = 0; // BlowupPlane
    long long genus = 0;         // Ruled
    long long e_invariant = 0;   // Ruled
};

SurfaceModel blowup_plane(long long n);
SurfaceModel ruled_surface(long long g, long long e);
SurfaceModel explicit_model(RatMat gram,
                            std::vector<std::string> labels,
                            RatVec canonical,
                            Rational chi0);

// Class d*H - sum m_i*e_i on a blowup_plane model. mults must have one
// entry per blown-up point; other model kinds are rejected.
DivisorClass plane_curve_class(const SurfaceModel& model,
                               long long degree,
                               const std::vector<long long>& mults);

// Adjunction: 1 + (C^2 + C.K)/2, exact.
Rational arithmetic_genus(const DivisorClass& c);

// chi0 + (D^2 - D.K)/2 for the declared chi0 of the model.
Rational riemann_roch_chi(const DivisorClass& d, const Rational& chi0);

} // namespace normsurf
