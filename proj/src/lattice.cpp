#include "normsurf/lattice.hpp"

#include <sstream>
#include <utility>

namespace normsurf {

namespace {

void require_lattice(const LatticePtr& lattice) {
    if (!lattice) {
        throw ValidationError("divisor class without a lattice");
    }
}

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
    if (a.lattice().get() != b.lattice().get()) {
        throw LatticeMismatchError(
            "classes live on different lattices (" +
            std::to_string(a.lattice()->rank()) + " vs " +
            std::to_string(b.lattice()->rank()) + " basis elements); "
            "combine classes only within one surface model");
    }
}

} // namespace

IntersectionLattice::IntersectionLattice(RatMat gram,
                                         std::vector<std::string> labels,
                                         RatVec canonical)
    : gram_(std::move(gram)),
      labels_(std::move(labels)),
      canonical_(std::move(canonical)) {}

LatticePtr IntersectionLattice::create(RatMat gram,
                                       std::vector<std::string> labels,
                                       RatVec canonical) {
    const std::size_t n = gram.size();
    if (n == 0) {
        throw ValidationError("lattice rank must be at least 1");
    }
    for (const RatVec& row : gram) {
        if (row.size() != n) {
            throw ValidationError("gram matrix is not square");
        }
    }
    if (!is_symmetric(gram)) {
        throw ValidationError("gram matrix is not symmetric: " + format_matrix(gram));
    }
    if (labels.size() != n) {
        throw ValidationError("expected " + std::to_string(n) + " basis labels, got " +
                              std::to_string(labels.size()));
    }
    if (canonical.size() != n) {
        throw ValidationError("canonical class has " + std::to_string(canonical.size()) +
                              " coefficients for a rank-" + std::to_string(n) + " lattice");
    }
    return LatticePtr(new IntersectionLattice(
        std::move(gram), std::move(labels), std::move(canonical)));
}

DivisorClass::DivisorClass(LatticePtr lattice, RatVec coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
    require_lattice(lattice_);
    if (coeffs_.size() != lattice_->rank()) {
        throw ValidationError("class has " + std::to_string(coeffs_.size()) +
                              " coefficients for a rank-" +
                              std::to_string(lattice_->rank()) + " lattice");
    }
}

bool DivisorClass::is_zero() const {
    for (const Rational& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool DivisorClass::operator==(const DivisorClass& other) const {
    return lattice_.get() == other.lattice_.get() && coeffs_ == other.coeffs_;
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
    require_same_lattice(*this, other);
    RatVec out(coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coeffs_[i];
    return DivisorClass(lattice_, std::move(out));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
    require_same_lattice(*this, other);
    RatVec out(coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.coeffs_[i];
    return DivisorClass(lattice_, std::move(out));
}

DivisorClass DivisorClass::operator-() const {
    RatVec out(coeffs_);
    for (Rational& c : out) c = -c;
    return DivisorClass(lattice_, std::move(out));
}

DivisorClass operator*(const Rational& scalar, const DivisorClass& cls) {
    RatVec out(cls.coeffs_);
    for (Rational& c : out) c *= scalar;
    return DivisorClass(cls.lattice_, std::move(out));
}

DivisorClass zero_class(const LatticePtr& lattice) {
    require_lattice(lattice);
    return DivisorClass(lattice, RatVec(lattice->rank(), Rational(0)));
}

DivisorClass basis_class(const LatticePtr& lattice, std::size_t index) {
    require_lattice(lattice);
    if (index >= lattice->rank()) {
        throw ValidationError("basis index " + std::to_string(index) +
                              " out of range for rank " +
                              std::to_string(lattice->rank()));
    }
    RatVec coeffs(lattice->rank(), Rational(0));
    coeffs[index] = 1;
    return DivisorClass(lattice, std::move(coeffs));
}

DivisorClass canonical_class(const LatticePtr& lattice) {
    require_lattice(lattice);
    return DivisorClass(lattice, lattice->canonical_coeffs());
}

Rational inner(const DivisorClass& a, const DivisorClass& b) {
    require_same_lattice(a, b);
    const RatMat& g = a.lattice()->gram();
    const std::size_t n = g.size();
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs()[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs()[j] == 0) continue;
            row += g[i][j] * b.coeffs()[j];
        }
        total += a.coeffs()[i] * row;
    }
    return total;
}

bool is_symmetric(const RatMat& m) {
    const std::size_t n = m.size();
    for (const RatVec& row : m) {
        if (row.size() != n) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[i][j] != m[j][i]) return false;
        }
    }
    return true;
}

bool is_negative_definite(const RatMat& m) {
    if (!is_symmetric(m)) {
        throw ValidationError("negative-definiteness is only defined for "
                              "symmetric matrices: " + format_matrix(m));
    }
    const std::size_t n = m.size();
    if (n == 0) return true;

    // Gaussian elimination without row swaps. The pivot produced at step k
    // equals det(M_k)/det(M_{k-1}), so the form is negative definite iff
    // every pivot is strictly negative; a zero or positive pivot refutes it.
    RatMat a = m;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] >= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
        }
    }
    return true;
}

RatVec solve_symmetric(const RatMat& m, const RatVec& rhs) {
    const std::size_t n = m.size();
    for (const RatVec& row : m) {
        if (row.size() != n) {
            throw ValidationError("coefficient matrix is not square");
        }
    }
    if (rhs.size() != n) {
        throw ValidationError("right-hand side has " + std::to_string(rhs.size()) +
                              " entries for a " + std::to_string(n) + "x" +
                              std::to_string(n) + " system");
    }

    RatMat a = m;
    RatVec b = rhs;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) {
            throw SingularMatrixError("singular intersection matrix: " + format_matrix(m));
        }
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            std::swap(b[pivot], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
            b[i] -= factor * b[k];
        }
    }

    RatVec x(n, Rational(0));
    for (std::size_t k = n; k-- > 0;) {
        Rational acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) {
            acc -= a[k][j] * x[j];
        }
        x[k] = acc / a[k][k];
    }

    // The solution is exact by construction; re-substitution guards against
    // elimination bugs, not rounding.
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += m[i][j] * x[j];
        }
        if (acc != rhs[i]) {
            throw InternalError("solver produced a vector that fails "
                                "back-substitution in row " + std::to_string(i));
        }
    }
    return x;
}

std::string format_class(const RatVec& coeffs, const std::vector<std::string>& labels) {
    if (coeffs.size() != labels.size()) {
        throw ValidationError("cannot format " + std::to_string(coeffs.size()) +
                              " coefficients with " + std::to_string(labels.size()) +
                              " labels");
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (mag != 1) out << to_string(mag) << "*";
        out << labels[i];
    }
    if (first) return "0";
    return out.str();
}

std::string format_matrix(const RatMat& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) out << ", ";
        out << "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j > 0) out << ", ";
            out << to_string(m[i][j]);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

} // namespace normsurf
