#include "normsurf/models.hpp"

#include <sstream>

namespace normsurf {

SurfaceModel blowup_plane(long long n) {
    if (n < 0) {
        throw ValidationError("blowup_plane needs a nonnegative point count, got " +
                              std::to_string(n));
    }
    const std::size_t rank = static_cast<std::size_t>(n) + 1;
    RatMat gram(rank, RatVec(rank, Rational(0)));
    gram[0][0] = 1;
    std::vector<std::string> labels;
    labels.reserve(rank);
    labels.emplace_back("H");
    RatVec canonical(rank, Rational(1));
    canonical[0] = -3;
    for (long long i = 1; i <= n; ++i) {
        gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
        labels.push_back("e" + std::to_string(i));
    }

    SurfaceModel model;
    model.kind = ModelKind::BlowupPlane;
    model.lattice = IntersectionLattice::create(std::move(gram), std::move(labels),
                                                std::move(canonical));
    model.chi0 = 1;
    model.blowup_points = n;
    std::ostringstream desc;
    desc << "plane blown up at " << n << " general point" << (n == 1 ? "" : "s");
    model.description = desc.str();
    return model;
}

SurfaceModel ruled_surface(long long g, long long e) {
    if (g < 0) {
        throw ValidationError("ruled_surface needs a nonnegative base genus, got " +
                              std::to_string(g));
    }
    RatMat gram{{Rational(-e), Rational(1)}, {Rational(1), Rational(0)}};
    RatVec canonical{Rational(-2), Rational(2 * g - 2 - e)};

    SurfaceModel model;
    model.kind = ModelKind::Ruled;
    model.lattice = IntersectionLattice::create(std::move(gram), {"C0", "F"},
                                                std::move(canonical));
    model.chi0 = Rational(1 - g);
    model.genus = g;
    model.e_invariant = e;
    std::ostringstream desc;
    desc << "ruled surface over a genus-" << g << " curve, section self-intersection "
         << -e;
    model.description = desc.str();
    return model;
}

SurfaceModel explicit_model(RatMat gram,
                            std::vector<std::string> labels,
                            RatVec canonical,
                            Rational chi0) {
    SurfaceModel model;
    model.kind = ModelKind::Explicit;
    model.lattice = IntersectionLattice::create(std::move(gram), std::move(labels),
                                                std::move(canonical));
    model.chi0 = std::move(chi0);
    std::ostringstream desc;
    desc << "explicit lattice of rank " << model.lattice->rank();
    model.description = desc.str();
    return model;
}

DivisorClass plane_curve_class(const SurfaceModel& model,
                               long long degree,
                               const std::vector<long long>& mults) {
    if (model.kind != ModelKind::BlowupPlane) {
        throw ValidationError("plane_curve_class only applies to blowup_plane models");
    }
    if (mults.size() != static_cast<std::size_t>(model.blowup_points)) {
        throw ValidationError("plane curve needs " + std::to_string(model.blowup_points) +
                              " multiplicities, got " + std::to_string(mults.size()));
    }
    RatVec coeffs(model.lattice->rank(), Rational(0));
    coeffs[0] = degree;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        coeffs[i + 1] = Rational(-mults[i]);
    }
    return DivisorClass(model.lattice, std::move(coeffs));
}

Rational arithmetic_genus(const DivisorClass& c) {
    const Rational self = inner(c, c);
    const Rational with_k = inner(c, canonical_class(c.lattice()));
    return 1 + (self + with_k) / 2;
}

Rational riemann_roch_chi(const DivisorClass& d, const Rational& chi0) {
    const Rational self = inner(d, d);
    const Rational with_k = inner(d, canonical_class(d.lattice()));
    return chi0 + (self - with_k) / 2;
}

} // namespace normsurf
