#ifndef WORDMAP_ROOTSYS_HPP
#define WORDMAP_ROOTSYS_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wordmap {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major square matrices

RatMat rat_identity(int n);
RatMat rat_mul(const RatMat& x, const RatMat& y);
RatVec rat_apply(const RatMat& m, const RatVec& v);
RatMat rat_pow(RatMat m, unsigned e);
bool rat_equal(const RatMat& x, const RatMat& y);
Rat dot(const RatVec& a, const RatVec& b);

enum class RootType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string root_type_name(RootType t);
RootType root_type_from_name(const std::string& s);
bool is_classical(RootType t);
/// Valid rank ranges: A >= 1, B/C >= 2, D >= 3, fixed rank for the
/// exceptional types.
void validate_rank(RootType t, int rank);

/// Root system in the standard Bourbaki epsilon-coordinates; roots are
/// generated from the simple roots by reflection closure and checked
/// against the classical counts.
struct RootSystem {
    RootType type;
    int rank;
    int dim; // ambient dimension
    std::vector<RatVec> roots;
    std::vector<int> simple;   // indices into roots
    std::vector<int> positive; // indices into roots

    const RatVec& root(int i) const { return roots[static_cast<std::size_t>(i)]; }
    const RatVec& simple_root(int i) const { return roots[static_cast<std::size_t>(simple[static_cast<std::size_t>(i)])]; }
    /// Index of a root vector, or -1.
    int find_root(const RatVec& v) const;
};

RootSystem build_root_system(RootType t, int rank);

/// Orthogonal transformation of the ambient space, recorded with the
/// root indices of the reflections whose product (rightmost applied
/// first) it is.
struct WeylElement {
    RatMat matrix;
    std::vector<int> reflections;
};

/// Reflection in the root with the given index.
WeylElement reflection(const RootSystem& rs, int root_index);
/// Product of the rank simple reflections in the given order
/// (a permutation of 1..rank; entry order = product order as written,
/// rightmost factor applied first).
WeylElement coxeter_element(const RootSystem& rs, const std::vector<int>& ordering);
/// Composition of reflections in the listed root indices.
WeylElement reflection_product(const RootSystem& rs, const std::vector<int>& root_indices);

/// det(M - 1) != 0 on the span of the simple roots, in exact rational
/// arithmetic. (For type A the ambient space has the fixed vector
/// (1,...,1); the restriction makes the test meaningful uniformly.)
bool is_fixed_point_free(const RootSystem& rs, const WeylElement& w);

/// The D_r element w* = w_beta w_{alpha_r} w_{alpha_{r-2}} ... w_{alpha_1}
/// with beta = e_1 - e_r (skipping alpha_{r-1} only).
WeylElement d_type_cycle_element(const RootSystem& rs);

/// Whether every w in W permutes the set {+-e_i} and, if so, whether
/// all its cycles reverse sign (no positive cycle). A signed
/// permutation without positive cycles has no nonzero fixed vectors.
struct SignedPermutationShape {
    bool is_signed_permutation;
    bool all_cycles_negative;
    std::vector<int> cycle_lengths; // index-cycle lengths
};
SignedPermutationShape signed_permutation_shape(const RootSystem& rs, const WeylElement& w);

/// True iff the longest Weyl element acts as -1 on the span of the
/// simple roots (fails exactly for A_r (r >= 2), D_odd, E6).
bool longest_element_is_minus_one(RootType t, int rank);

/// Matrix of the restriction of w to the span of the simple roots, in
/// the simple-root basis.
RatMat restrict_to_root_span(const RootSystem& rs, const RatMat& m);
/// Characteristic polynomial coefficients (ascending, monic) of the
/// restriction to the root span.
std::vector<Rat> char_poly_on_span(const RootSystem& rs, const WeylElement& w);

/// Multiplicative order of a Weyl element (throws past the bound).
int weyl_element_order(const RootSystem& rs, const WeylElement& w, int bound = 1 << 12);

/// Full Weyl group as matrices, BFS over simple reflections; throws if
/// the group exceeds `limit` elements. Intended for small-rank
/// cross-checks.
std::vector<RatMat> enumerate_weyl_group(const RootSystem& rs, std::size_t limit = 4000);

bool matrix_permutes_roots(const RootSystem& rs, const RatMat& m);

/// Strictly-firm criterion for the maximal parabolic P_k of a
/// classical group: passes iff no positive root is orthogonal to every
/// simple root except alpha_k. witness = the first violating positive
/// root otherwise.
struct FirmReport {
    bool passes;
    std::optional<RatVec> witness;
};
FirmReport strictly_firm_parabolic(RootType t, int rank, int k);

enum class Isogeny { SimplyConnected, Adjoint, Custom };

/// Static isogeny data: order of the simply connected centre and the
/// product of bad primes (sources: Bourbaki tables; bad primes A: none,
/// B/C/D: 2, G2/F4/E6/E7: 2*3, E8: 2*3*5).
struct IsogenyData {
    long center_order;
    long bad_prime_product;
};
IsogenyData isogeny_data(RootType t, int rank);

/// Theorem criterion: x -> x^m is surjective iff gcd(m, p*r*z) = 1,
/// p the characteristic exponent, r the bad-prime product, z the order
/// of the centre of the isogeny form.
bool power_map_surjective(RootType t, int rank, Isogeny isogeny, long custom_z,
                          long char_exponent, long m);

} // namespace wordmap

#endif
