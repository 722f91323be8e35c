#ifndef WORDMAP_MAGNUS_HPP
#define WORDMAP_MAGNUS_HPP

#include <set>

#include "wordmap/laurent.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

/// Upper-triangular matrix [[alpha, beta], [0, alpha^-1]] over the ring
/// Z[t_i^{+-1}, s_i]. alpha is always a unit monomial in the t's.
struct MagnusMatrix {
    LaurentPoly alpha;
    LaurentPoly beta;

    bool is_identity() const {
        return alpha.is_unit_monomial() && alpha == LaurentPoly::constant(alpha.vars(), 1) &&
               beta.is_zero();
    }
    bool operator==(const MagnusMatrix&) const = default;
};

/// Group operations on Magnus pairs: (a,b)(c,d) = (ac, ad + b c^-1),
/// (a,b)^-1 = (a^-1, -b).
struct MagnusOps {
    using Element = MagnusMatrix;
    VarUniverse vars;

    Element identity() const {
        return {LaurentPoly::constant(vars, 1), LaurentPoly(vars)};
    }
    Element multiply(const Element& x, const Element& y) const {
        return {x.alpha * y.alpha, x.alpha * y.beta + x.beta * y.alpha.unit_inverse()};
    }
    Element invert(const Element& x) const { return {x.alpha.unit_inverse(), -x.beta}; }
    /// Generator image x_i -> [[t_i, s_i],[0, t_i^-1]] (i is 1-based).
    Element generator(int i) const;
};

/// Evaluate w at the generator matrices. Refuses words longer than
/// max_length (term counts can grow exponentially in the word length).
MagnusMatrix magnus_image(const Word& w, std::size_t max_length = 10000);

/// The obstruction polynomial: beta-entry of the Magnus image of a word
/// in the derived subgroup. Throws std::domain_error("word not in
/// derived subgroup") otherwise.
LaurentPoly f_w(const Word& w, std::size_t max_length = 10000);

/// Prime divisors of the content of f_w. Throws std::domain_error when
/// f_w = 0 (the word lies in F_n^2).
std::set<unsigned long> prime_set_S(const Word& w, std::size_t max_length = 10000);

/// True iff the Magnus image is the identity, i.e. w lies in the second
/// derived subgroup F_n^2.
bool is_in_F2(const Word& w, std::size_t max_length = 10000);

/// Prime factors of |n| (empty for n in {0, +-1}).
std::set<unsigned long> prime_factors(const BigInt& n);

} // namespace wordmap

#endif
