#ifndef WORDMAP_CYCLOTOMIC_HPP
#define WORDMAP_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace wordmap {

/// Dense univariate polynomial over Z, coefficients in ascending degree
/// order with no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly x_power_minus_one(unsigned n); // x^n - 1

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool operator==(const IntPoly&) const = default;

    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    /// Exact division; throws if the division leaves a remainder.
    IntPoly divide_exact(const IntPoly& divisor) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
/// the product of Phi_d over proper divisors d | n.
IntPoly cyclotomic_poly(unsigned n);

/// Element of Z[zeta_n] represented by its coefficient vector of length
/// deg Phi_n (reduction mod Phi_n is canonical since Phi_n is the
/// minimal polynomial of zeta_n).
class CycloElt {
public:
    explicit CycloElt(unsigned conductor);

    unsigned conductor() const { return n_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    static CycloElt zero(unsigned n) { return CycloElt(n); }
    /// zeta_n^k (k taken mod n).
    static CycloElt root_power(unsigned n, long k);

    CycloElt operator+(const CycloElt& o) const;
    CycloElt operator*(const CycloElt& o) const;

    bool operator==(const CycloElt&) const = default;

    std::string to_string() const;

private:
    void reduce(std::vector<mpz_class> raw); // mod Phi_n

    unsigned n_;
    std::vector<mpz_class> coeffs_; // length deg Phi_n
};

/// List of integer torus weights of a module, with a display label.
struct WeightModule {
    std::vector<long> weights;
    std::string label;
};

struct NgEigenvalue {
    long weight;
    CycloElt value;
    bool zero;
};

/// Analysis of N_g = 1 + g + ... + g^{m-1} acting diagonally on a
/// weight module, where g acts on the lambda-weight line by zeta^lambda
/// for a primitive g_order-th root of unity zeta. The operator is
/// singular iff some eigenvalue sum vanishes in Z[zeta]; being diagonal
/// on a finite-dimensional space, it is surjective iff nonsingular.
struct NgReport {
    bool singular;
    std::vector<long> kernel_weights;
    bool surjective;
    std::vector<NgEigenvalue> eigenvalues;
};

NgReport ng_operator_analysis(const WeightModule& module, unsigned m, unsigned g_order);

} // namespace wordmap

#endif
