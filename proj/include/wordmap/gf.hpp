#ifndef WORDMAP_GF_HPP
#define WORDMAP_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordmap {

/// Ground field description: F_q with q = p^k, the extension presented
/// by an explicit irreducible monic modulus (ascending coefficients,
/// length k+1). Irreducibility is verified at construction.
struct FieldSpec {
    uint32_t p = 0;
    uint32_t k = 1;
    std::vector<uint32_t> modulus; // monic, length k+1, entries mod p
    uint32_t q = 0;

    static FieldSpec prime_field(uint32_t p, uint64_t q_bound = 1u << 16);
    /// If modulus is empty, the lexicographically least irreducible
    /// monic polynomial of degree k is sieved.
    static FieldSpec extension(uint32_t p, uint32_t k, std::vector<uint32_t> modulus = {},
                               uint64_t q_bound = 1u << 16);
    /// Dispatch on whether q = p (prime) or a prime power.
    static FieldSpec for_q(uint32_t q, std::vector<uint32_t> modulus = {},
                           uint64_t q_bound = 1u << 16);
};

/// Arithmetic in F_q. Elements are encoded as integers in [0, q):
/// base-p digits of the polynomial representative. Multiplication and
/// inversion go through discrete-log tables over a primitive element
/// (built once at construction; q <= 2^16 keeps them small).
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    uint32_t q() const { return spec_.q; }
    uint32_t p() const { return spec_.p; }

    uint32_t add(uint32_t a, uint32_t b) const {
        return spec_.k == 1 ? (a + b) % spec_.p : add_ext(a, b);
    }
    uint32_t neg(uint32_t a) const { return spec_.k == 1 ? (spec_.p - a) % spec_.p : neg_ext(a); }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0)
            return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= spec_.q - 1)
            s -= spec_.q - 1;
        return exp_[s];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0)
            throw std::domain_error("Field::inv(0)");
        uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : spec_.q - 1 - l];
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// Embedding of an integer via the prime subfield.
    uint32_t from_int(long v) const;
    bool is_square(uint32_t a) const {
        if (a == 0)
            return true;
        return spec_.p == 2 || log_[a] % 2 == 0;
    }

    std::string element_str(uint32_t a) const;

private:
    uint32_t add_ext(uint32_t a, uint32_t b) const;
    uint32_t neg_ext(uint32_t a) const;
    uint32_t mul_poly(uint32_t a, uint32_t b) const; // used only to build tables

    FieldSpec spec_;
    std::vector<uint32_t> exp_; // exp_[i] = g^i, i in [0, q-1)
    std::vector<uint32_t> log_; // log_[x] for x != 0
};

} // namespace wordmap

#endif
