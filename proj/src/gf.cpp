#include "wordmap/gf.hpp"

#include <algorithm>
#include <sstream>

namespace wordmap {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2)
        return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Polynomials over F_p as ascending coefficient vectors.
using Poly = std::vector<uint32_t>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
    a = trim(std::move(a));
    while (a.size() >= m.size()) {
        uint32_t lead = a.back(); // m is monic
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = static_cast<uint64_t>(lead) * m[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint32_t>(
                (c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint32_t p) {
    Poly acc = {1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1)
            acc = poly_mulmod(acc, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t x) {
        uint32_t r = 1;
        for (uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1)
                r = static_cast<uint32_t>(static_cast<uint64_t>(r) * x % p);
            x = static_cast<uint32_t>(static_cast<uint64_t>(x) * x % p);
        }
        return r;
    };
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // make b monic, then reduce a mod b
        uint32_t c = inv_mod_p(b.back());
        for (uint32_t& x : b)
            x = static_cast<uint32_t>(static_cast<uint64_t>(x) * c % p);
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

/// Rabin test: f (monic, degree k) is irreducible over F_p iff
/// x^{p^k} = x mod f and gcd(x^{p^{k/r}} - x, f) = 1 for prime r | k.
bool poly_irreducible(const Poly& f, uint32_t p) {
    uint32_t k = static_cast<uint32_t>(f.size()) - 1;
    if (k == 0)
        return false;
    Poly x = {0, 1};
    auto frob_power = [&](uint32_t d) {
        // x^{p^d} mod f
        Poly r = poly_mod(x, f, p);
        for (uint32_t i = 0; i < d; ++i)
            r = poly_powmod(r, p, f, p);
        return r;
    };
    if (frob_power(k) != poly_mod(x, f, p))
        return false;
    for (uint32_t r = 2; r <= k; ++r) {
        if (k % r != 0 || !is_prime_u32(r))
            continue;
        Poly diff = frob_power(k / r);
        // diff - x
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        Poly g = poly_gcd(f, trim(std::move(diff)), p);
        if (trim(g).size() != 1)
            return false;
    }
    return true;
}

uint64_t ipow(uint32_t b, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i)
        r *= b;
    return r;
}

} // namespace

FieldSpec FieldSpec::prime_field(uint32_t p, uint64_t q_bound) {
    return extension(p, 1, {}, q_bound);
}

FieldSpec FieldSpec::extension(uint32_t p, uint32_t k, std::vector<uint32_t> modulus,
                               uint64_t q_bound) {
    if (!is_prime_u32(p))
        throw std::invalid_argument("FieldSpec: characteristic must be prime");
    if (k < 1)
        throw std::invalid_argument("FieldSpec: extension degree must be >= 1");
    uint64_t q = ipow(p, k);
    if (q > q_bound)
        throw std::invalid_argument("FieldSpec: q = " + std::to_string(q) +
                                    " exceeds bound " + std::to_string(q_bound));
    FieldSpec spec;
    spec.p = p;
    spec.k = k;
    spec.q = static_cast<uint32_t>(q);
    if (modulus.empty()) {
        if (k == 1) {
            modulus = {0, 1}; // x, unused for prime fields
        } else {
            // lexicographically least irreducible: scan constant-first
            // encodings c_0 + c_1 p + ... of monic degree-k polynomials
            for (uint64_t code = 0;; ++code) {
                if (code >= q)
                    throw std::logic_error("FieldSpec: no irreducible modulus found");
                Poly f(k + 1, 0);
                uint64_t c = code;
                for (uint32_t i = 0; i < k; ++i) {
                    f[i] = static_cast<uint32_t>(c % p);
                    c /= p;
                }
                f[k] = 1;
                if (poly_irreducible(f, p)) {
                    modulus = f;
                    break;
                }
            }
        }
    } else {
        for (uint32_t& c : modulus)
            c %= p;
        if (modulus.size() != k + 1 || modulus.back() != 1)
            throw std::invalid_argument("FieldSpec: modulus must be monic of degree k");
        if (k > 1 && !poly_irreducible(modulus, p))
            throw std::invalid_argument("FieldSpec: modulus is not irreducible");
    }
    spec.modulus = std::move(modulus);
    return spec;
}

FieldSpec FieldSpec::for_q(uint32_t q, std::vector<uint32_t> modulus, uint64_t q_bound) {
    if (q < 2)
        throw std::invalid_argument("FieldSpec: q must be >= 2");
    uint32_t p = 0;
    for (uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t k = 0;
    uint64_t t = 1;
    while (t < q) {
        t *= p;
        ++k;
    }
    if (t != q)
        throw std::invalid_argument("FieldSpec: q = " + std::to_string(q) +
                                    " is not a prime power");
    return extension(p, k, std::move(modulus), q_bound);
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    uint32_t q = spec_.q;
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    std::vector<uint32_t> radicals;
    for (uint32_t m = q - 1, d = 2; m > 1; ++d) {
        if (static_cast<uint64_t>(d) * d > m) {
            radicals.push_back(m);
            break;
        }
        if (m % d == 0) {
            radicals.push_back(d);
            while (m % d == 0)
                m /= d;
        }
    }
    auto pow_enc = [this](uint32_t a, uint32_t e) {
        uint32_t r = 1;
        while (e) {
            if (e & 1)
                r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    };
    for (uint32_t g = 1; g < q; ++g) {
        bool primitive = true;
        for (uint32_t r : radicals)
            if (pow_enc(g, (q - 1) / r) == 1) {
                primitive = false;
                break;
            }
        if (!primitive)
            continue;
        uint32_t v = 1;
        for (uint32_t i = 0; i < q - 1; ++i) {
            exp_[i] = v;
            log_[v] = i;
            v = mul_poly(v, g);
        }
        return;
    }
    throw std::logic_error("Field: no primitive element found");
}

uint32_t Field::mul_poly(uint32_t a, uint32_t b) const {
    uint32_t p = spec_.p;
    if (spec_.k == 1)
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    Poly pa, pb;
    for (uint32_t x = a; x; x /= p)
        pa.push_back(x % p);
    for (uint32_t x = b; x; x /= p)
        pb.push_back(x % p);
    Poly c = poly_mulmod(pa, pb, spec_.modulus, p);
    uint32_t out = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        out = out * p + c[i];
    return out;
}

uint32_t Field::add_ext(uint32_t a, uint32_t b) const {
    uint32_t p = spec_.p;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < spec_.k; ++i) {
        out += ((a % p + b % p) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

uint32_t Field::neg_ext(uint32_t a) const {
    uint32_t p = spec_.p;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < spec_.k; ++i) {
        out += ((p - a % p) % p) * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (a == 0)
        return e == 0 ? 1 : 0;
    uint64_t l = static_cast<uint64_t>(log_[a]) * (e % (spec_.q - 1)) % (spec_.q - 1);
    return exp_[l];
}

uint32_t Field::from_int(long v) const {
    long r = v % static_cast<long>(spec_.p);
    if (r < 0)
        r += spec_.p;
    return static_cast<uint32_t>(r);
}

std::string Field::element_str(uint32_t a) const {
    if (spec_.k == 1)
        return std::to_string(a);
    std::ostringstream out;
    out << a; // digit encoding; README documents the base-p convention
    return out.str();
}

} // namespace wordmap
