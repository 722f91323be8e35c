#ifndef WORDMAP_TRACE_POLY_HPP
#define WORDMAP_TRACE_POLY_HPP

#include <array>

#include "wordmap/laurent.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

/// 2x2 integer matrix with determinant 1 (constant arguments of trace
/// polynomials).
using IntMat2 = std::array<std::array<long, 2>, 2>;

/// 2x2 matrix over Z[x,y]; all matrices that occur have determinant 1,
/// so inversion is the adjugate.
struct PolyMat2 {
    LaurentPoly a, b, c, d;
};

struct PolyMat2Ops {
    using Element = PolyMat2;
    VarUniverse vars = VarUniverse::xy();

    Element identity() const;
    Element multiply(const Element& x, const Element& y) const;
    Element invert(const Element& x) const; // adjugate (det = 1)
};

/// Trace polynomial Psi(x,y) = tr(w(M(x,y), g_2, ..., g_n)) where
/// M(x,y) = [[1, x], [y, 1+xy]] and g_2..g_n are the supplied
/// determinant-1 integer constants (exactly arity-1 of them).
LaurentPoly trace_polynomial(const Word& w, const std::vector<IntMat2>& constants);

} // namespace wordmap

#endif
