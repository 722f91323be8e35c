#ifndef WORDMAP_LAURENT_HPP
#define WORDMAP_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wordmap {

using BigInt = mpz_class;

/// Description of a fixed, ordered variable universe for LaurentPoly.
/// Variables flagged neg_ok admit negative exponents (units t_i); the
/// rest are ordinary polynomial variables (s_i, x, y).
struct VarUniverse {
    std::vector<std::string> names;
    std::vector<bool> neg_ok;

    std::size_t size() const { return names.size(); }
    bool operator==(const VarUniverse&) const = default;

    /// t_1..t_n (units), s_1..s_n: the coefficient ring of the Magnus
    /// embedding.
    static VarUniverse magnus(int n);
    /// Two ordinary variables x, y (trace polynomials).
    static VarUniverse xy();
};

/// Sparse multivariate Laurent polynomial with exact integer
/// coefficients. Terms are kept in a map ordered lexicographically by
/// exponent vector; zero coefficients are never stored.
class LaurentPoly {
public:
    using Exponents = std::vector<int32_t>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarUniverse vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(VarUniverse vars, BigInt c);
    static LaurentPoly monomial(VarUniverse vars, Exponents e, BigInt c);
    /// The single variable `index` (0-based) with exponent 1.
    static LaurentPoly variable(VarUniverse vars, std::size_t index);

    const VarUniverse& vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }

    bool operator==(const LaurentPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(unsigned e) const;

    /// True iff the polynomial is a single term +-1 * (product of
    /// neg_ok variables). These are exactly the units that occur as
    /// alpha-entries of Magnus matrices.
    bool is_unit_monomial() const;
    /// Multiplicative inverse of a unit monomial.
    LaurentPoly unit_inverse() const;

    /// gcd of all coefficients (0 for the zero polynomial).
    BigInt content() const;

    /// Exact evaluation over Z at the given variable values.
    BigInt evaluate_int(const std::vector<BigInt>& values) const;

    /// Reduce mod p and evaluate at field values encoded 0..p-1.
    /// Values for neg_ok variables must be nonzero mod p.
    uint32_t evaluate_mod(const std::vector<uint32_t>& values, uint32_t p) const;

    /// Canonical text form: terms in descending lexicographic order of
    /// exponent vector, "coeff*v^e*..." joined by " + " (coefficient
    /// carries its own sign). The zero polynomial prints "0".
    std::string to_string() const;

private:
    void insert_term(const Exponents& e, const BigInt& c);
    void check_compatible(const LaurentPoly& o) const;

    VarUniverse vars_;
    std::map<Exponents, BigInt> terms_;
};

} // namespace wordmap

#endif
