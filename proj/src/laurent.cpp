#include "wordmap/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace wordmap {

VarUniverse VarUniverse::magnus(int n) {
    VarUniverse u;
    for (int i = 1; i <= n; ++i) {
        u.names.push_back("t" + std::to_string(i));
        u.neg_ok.push_back(true);
    }
    for (int i = 1; i <= n; ++i) {
        u.names.push_back("s" + std::to_string(i));
        u.neg_ok.push_back(false);
    }
    return u;
}

VarUniverse VarUniverse::xy() {
    return VarUniverse{{"x", "y"}, {false, false}};
}

LaurentPoly LaurentPoly::constant(VarUniverse vars, BigInt c) {
    LaurentPoly p(std::move(vars));
    if (c != 0)
        p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarUniverse vars, Exponents e, BigInt c) {
    LaurentPoly p(std::move(vars));
    if (e.size() != p.vars_.size())
        throw std::invalid_argument("monomial: exponent vector length mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !p.vars_.neg_ok[i])
            throw std::invalid_argument("monomial: negative exponent for polynomial variable " +
                                        p.vars_.names[i]);
    if (c != 0)
        p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(VarUniverse vars, std::size_t index) {
    Exponents e(vars.size(), 0);
    e.at(index) = 1;
    return monomial(std::move(vars), std::move(e), 1);
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("LaurentPoly: mixed variable universes");
}

void LaurentPoly::insert_term(const Exponents& e, const BigInt& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0)
            terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (auto& [e, c] : o.terms_)
        insert_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (auto& [e, c] : o.terms_)
        insert_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(vars_);
    Exponents e(vars_.size());
    for (auto& [ea, ca] : terms_) {
        for (auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly acc = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u)
            acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool LaurentPoly::is_unit_monomial() const {
    if (terms_.size() != 1)
        return false;
    auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1)
        return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !vars_.neg_ok[i])
            return false;
    return true;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit_monomial())
        throw std::domain_error("unit_inverse: not a unit monomial");
    auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        inv[i] = -e[i];
    return monomial(vars_, std::move(inv), c); // +-1 is self-inverse
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

BigInt LaurentPoly::evaluate_int(const std::vector<BigInt>& values) const {
    if (values.size() != vars_.size())
        throw std::invalid_argument("evaluate_int: value count mismatch");
    BigInt acc = 0;
    for (auto& [e, c] : terms_) {
        BigInt term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0)
                throw std::domain_error("evaluate_int: negative exponent; use evaluate_mod");
            for (int32_t k = 0; k < e[i]; ++k)
                term *= values[i];
        }
        acc += term;
    }
    return acc;
}

namespace {

uint32_t mod_pow(uint32_t base, uint32_t e, uint32_t p) {
    uint64_t acc = 1, b = base % p;
    while (e) {
        if (e & 1u)
            acc = acc * b % p;
        b = b * b % p;
        e >>= 1u;
    }
    return static_cast<uint32_t>(acc);
}

} // namespace

uint32_t LaurentPoly::evaluate_mod(const std::vector<uint32_t>& values, uint32_t p) const {
    if (values.size() != vars_.size())
        throw std::invalid_argument("evaluate_mod: value count mismatch");
    uint64_t acc = 0;
    for (auto& [e, c] : terms_) {
        uint64_t term = mpz_fdiv_ui(c.get_mpz_t(), p);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            uint32_t v = values[i] % p;
            if (e[i] > 0) {
                term = term * mod_pow(v, static_cast<uint32_t>(e[i]), p) % p;
            } else {
                if (v == 0)
                    throw std::domain_error("evaluate_mod: zero value for unit variable");
                uint32_t vinv = mod_pow(v, p - 2, p); // p prime
                term = term * mod_pow(vinv, static_cast<uint32_t>(-e[i]), p) % p;
            }
        }
        acc = (acc + term) % p;
    }
    return static_cast<uint32_t>(acc);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // descending lexicographic order of exponent vectors
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            out << " + ";
        first = false;
        out << it->second.get_str();
        for (std::size_t i = 0; i < it->first.size(); ++i)
            if (it->first[i] != 0)
                out << "*" << vars_.names[i] << "^" << it->first[i];
    }
    return out.str();
}

} // namespace wordmap
