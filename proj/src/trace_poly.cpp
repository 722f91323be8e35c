#include "wordmap/trace_poly.hpp"

#include <stdexcept>

namespace wordmap {

PolyMat2Ops::Element PolyMat2Ops::identity() const {
    LaurentPoly one = LaurentPoly::constant(vars, 1);
    LaurentPoly zero(vars);
    return {one, zero, zero, one};
}

PolyMat2Ops::Element PolyMat2Ops::multiply(const Element& x, const Element& y) const {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

PolyMat2Ops::Element PolyMat2Ops::invert(const Element& x) const {
    return {x.d, -x.b, -x.c, x.a};
}

LaurentPoly trace_polynomial(const Word& w, const std::vector<IntMat2>& constants) {
    int n = w.arity();
    if (static_cast<int>(constants.size()) != std::max(n - 1, 0))
        throw std::invalid_argument("trace_polynomial: need exactly arity-1 constant matrices");
    for (const IntMat2& g : constants) {
        long det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        if (det != 1)
            throw std::invalid_argument("trace_polynomial: constant with determinant != 1");
    }

    PolyMat2Ops ops;
    LaurentPoly x = LaurentPoly::variable(ops.vars, 0);
    LaurentPoly y = LaurentPoly::variable(ops.vars, 1);
    LaurentPoly one = LaurentPoly::constant(ops.vars, 1);

    std::vector<PolyMat2> tuple;
    tuple.reserve(static_cast<std::size_t>(n));
    // x_1 -> [[1, x], [y, 1+xy]], the generic non-central element
    if (n >= 1)
        tuple.push_back({one, x, y, one + x * y});
    for (const IntMat2& g : constants)
        tuple.push_back({LaurentPoly::constant(ops.vars, g[0][0]),
                         LaurentPoly::constant(ops.vars, g[0][1]),
                         LaurentPoly::constant(ops.vars, g[1][0]),
                         LaurentPoly::constant(ops.vars, g[1][1])});

    PolyMat2 m = w.evaluate(tuple, ops);
    return m.a + m.d;
}

} // namespace wordmap
