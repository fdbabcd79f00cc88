// Rank-n free lattice with a symmetric rational pairing, plus the exact
// linear algebra the rest of the library runs on.
//
// An IntersectionLattice models the numerical class group of a smooth
// projective surface: a Gram matrix for the intersection form, one label
// per basis element, and the canonical class in basis coordinates.
//
// DivisorClass values are immutable and remember their owning lattice;
// combining classes from different lattice instances is a hard error,
// never a coercion.

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "normsurf/rational.hpp"

namespace normsurf {

class IntersectionLattice;
using LatticePtr = std::shared_ptr<const IntersectionLattice>;

class IntersectionLattice {
public:
    // Validates shape: gram square and symmetric, labels and canonical of
    // matching length, rank >= 1.
    static LatticePtr create(RatMat gram,
                             std::vector<std::string> labels,
                             RatVec canonical);

    std::size_t rank() const { return gram_.size(); }
    const RatMat& gram() const { return gram_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const RatVec& canonical_coeffs() const { return canonical_; }

private:
    IntersectionLattice(RatMat gram, std::vector<std::string> labels, RatVec canonical);

    RatMat gram_;
    std::vector<std::string> labels_;
    RatVec canonical_;
};

class DivisorClass {
public:
    DivisorClass(LatticePtr lattice, RatVec coeffs);

    const RatVec& coeffs() const { return coeffs_; }
    const LatticePtr& lattice() const { return lattice_; }
    bool is_zero() const;

    // Same lattice instance and equal coefficients.
    bool operator==(const DivisorClass& other) const;

    DivisorClass operator+(const DivisorClass& other) const;
    DivisorClass operator-(const DivisorClass& other) const;
    DivisorClass operator-() const;
    friend DivisorClass operator*(const Rational& scalar, const DivisorClass& cls);

private:
    LatticePtr lattice_;
    RatVec coeffs_;
};

DivisorClass zero_class(const LatticePtr& lattice);
DivisorClass basis_class(const LatticePtr& lattice, std::size_t index);
DivisorClass canonical_class(const LatticePtr& lattice);

// Exact pairing coeffs(a)^T * gram * coeffs(b). Symmetric in its arguments.
// Raises LatticeMismatchError when a and b live on different lattices.
Rational inner(const DivisorClass& a, const DivisorClass& b);

// True iff the leading principal minors alternate in sign starting negative,
// equivalently x^T m x < 0 for all nonzero x. Exact; raises ValidationError
// on a non-symmetric input. The empty matrix is vacuously negative definite.
bool is_negative_definite(const RatMat& m);

// Exact solution of m * x = rhs for invertible m (Gaussian elimination with
// exact pivoting). The result is back-substituted into the system before
// returning. Raises SingularMatrixError when no solution exists.
RatVec solve_symmetric(const RatMat& m, const RatVec& rhs);

bool is_symmetric(const RatMat& m);

// "3/2*C0 + F - 2*e1" style rendering; "0" for the zero vector.
std::string format_class(const RatVec& coeffs, const std::vector<std::string>& labels);

// Gram-matrix rendering used by error messages: "[[-2, 1], [1, -2]]".
std::string format_matrix(const RatMat& m);

} // namespace normsurf
