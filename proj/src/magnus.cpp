#include "wordmap/magnus.hpp"

#include <stdexcept>

namespace wordmap {

MagnusOps::Element MagnusOps::generator(int i) const {
    int n = static_cast<int>(vars.size()) / 2;
    if (i < 1 || i > n)
        throw std::invalid_argument("MagnusOps::generator: index out of range");
    std::size_t t = static_cast<std::size_t>(i - 1);
    std::size_t s = static_cast<std::size_t>(n + i - 1);
    return {LaurentPoly::variable(vars, t), LaurentPoly::variable(vars, s)};
}

MagnusMatrix magnus_image(const Word& w, std::size_t max_length) {
    if (w.length() > max_length)
        throw std::length_error("magnus_image: word length " + std::to_string(w.length()) +
                                " exceeds bound " + std::to_string(max_length));
    MagnusOps ops{VarUniverse::magnus(w.arity())};
    std::vector<MagnusMatrix> gens;
    gens.reserve(static_cast<std::size_t>(w.arity()));
    for (int i = 1; i <= w.arity(); ++i)
        gens.push_back(ops.generator(i));
    return w.evaluate(gens, ops);
}

LaurentPoly f_w(const Word& w, std::size_t max_length) {
    if (!w.in_derived_subgroup())
        throw std::domain_error("word not in derived subgroup");
    MagnusMatrix m = magnus_image(w, max_length);
    // alpha = prod t_i^{a_i} with a = abelianization = 0; every beta
    // term is linear in the s-variables -- asserted, not assumed
    int n = w.arity();
    for (const auto& [e, c] : m.beta.terms()) {
        int s_degree = 0;
        for (int i = 0; i < n; ++i)
            s_degree += e[static_cast<std::size_t>(n + i)];
        if (s_degree != 1)
            throw std::logic_error("f_w: term with s-degree != 1; evaluation bug");
    }
    return m.beta;
}

std::set<unsigned long> prime_factors(const BigInt& n) {
    std::set<unsigned long> out;
    BigInt m = abs(n);
    if (m <= 1)
        return out;
    BigInt d = 2;
    while (d * d <= m) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            out.insert(d.get_ui());
            while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()))
                m /= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (m > 1) {
        if (!m.fits_ulong_p())
            throw std::overflow_error("prime_set_S: prime factor exceeds unsigned long");
        out.insert(m.get_ui());
    }
    return out;
}

std::set<unsigned long> prime_set_S(const Word& w, std::size_t max_length) {
    LaurentPoly f = f_w(w, max_length);
    if (f.is_zero())
        throw std::domain_error("word lies in F_n^2, S_w undefined");
    return prime_factors(f.content());
}

bool is_in_F2(const Word& w, std::size_t max_length) {
    return magnus_image(w, max_length).is_identity();
}

} // namespace wordmap
