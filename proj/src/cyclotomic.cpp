#include "wordmap/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wordmap {

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::x_power_minus_one(unsigned n) {
    std::vector<mpz_class> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero())
        return IntPoly();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> c = coeffs_;
    c.resize(std::max(c.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        c[i] -= o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("divide_exact: division by zero polynomial");
    std::vector<mpz_class> rem = coeffs_;
    const auto& d = divisor.coeffs_;
    if (rem.size() < d.size()) {
        if (std::all_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c == 0; }))
            return IntPoly();
        throw std::domain_error("divide_exact: remainder is nonzero");
    }
    std::vector<mpz_class> quot(rem.size() - d.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class q;
        mpz_class& lead = rem[k + d.size() - 1];
        if (!mpz_divisible_p(lead.get_mpz_t(), d.back().get_mpz_t()))
            throw std::domain_error("divide_exact: leading coefficient not divisible");
        q = lead / d.back();
        quot[k] = q;
        for (std::size_t i = 0; i < d.size(); ++i)
            rem[k + i] -= q * d[i];
    }
    for (const mpz_class& c : rem)
        if (c != 0)
            throw std::domain_error("divide_exact: remainder is nonzero");
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1)
            out << coeffs_[i].get_str() << (i > 0 ? "*" : "");
        if (i > 0) {
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

IntPoly cyclotomic_poly(unsigned n) {
    if (n < 1)
        throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, IntPoly> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    // Fill bottom-up over the divisors of n; every proper divisor of a
    // divisor of n is again a divisor of n, so dependencies are ready.
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d))
            continue;
        IntPoly phi = IntPoly::x_power_minus_one(d);
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0)
                phi = phi.divide_exact(cache.at(e));
        cache.emplace(d, std::move(phi));
    }
    return cache.at(n);
}

// ---------------------------------------------------------------------------

CycloElt::CycloElt(unsigned conductor) : n_(conductor) {
    if (conductor < 1)
        throw std::invalid_argument("CycloElt: conductor must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(cyclotomic_poly(conductor).degree()), 0);
}

bool CycloElt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

void CycloElt::reduce(std::vector<mpz_class> raw) {
    // Divide by Phi_n (monic) and keep the remainder.
    IntPoly phi = cyclotomic_poly(n_);
    const auto& d = phi.coeffs();
    std::size_t deg = d.size() - 1;
    while (raw.size() > deg) {
        mpz_class lead = raw.back();
        std::size_t k = raw.size() - 1 - deg;
        if (lead != 0)
            for (std::size_t i = 0; i < d.size(); ++i)
                raw[k + i] -= lead * d[i];
        raw.pop_back();
    }
    raw.resize(deg, 0);
    coeffs_ = std::move(raw);
}

CycloElt CycloElt::root_power(unsigned n, long k) {
    CycloElt e(n);
    long r = k % static_cast<long>(n);
    if (r < 0)
        r += static_cast<long>(n);
    std::vector<mpz_class> raw(static_cast<std::size_t>(r) + 1, 0);
    raw.back() = 1;
    e.reduce(std::move(raw));
    return e;
}

CycloElt CycloElt::operator+(const CycloElt& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("CycloElt: mixed conductors");
    CycloElt r(n_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

CycloElt CycloElt::operator*(const CycloElt& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("CycloElt: mixed conductors");
    std::vector<mpz_class> raw(coeffs_.size() + o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            raw[i + j] += coeffs_[i] * o.coeffs_[j];
    CycloElt r(n_);
    r.reduce(std::move(raw));
    return r;
}

std::string CycloElt::to_string() const {
    return IntPoly(coeffs_).to_string("z" + std::to_string(n_));
}

// ---------------------------------------------------------------------------

NgReport ng_operator_analysis(const WeightModule& module, unsigned m, unsigned g_order) {
    if (m < 1)
        throw std::invalid_argument("ng_operator_analysis: m must be >= 1");
    if (g_order < 1)
        throw std::invalid_argument("ng_operator_analysis: g_order must be >= 1");
    if (module.weights.empty())
        throw std::invalid_argument("ng_operator_analysis: empty weight module");

    NgReport report;
    report.singular = false;
    for (long lambda : module.weights) {
        // eigenvalue of 1 + g + ... + g^{m-1} on the lambda-weight line
        CycloElt sum = CycloElt::zero(g_order);
        for (unsigned k = 0; k < m; ++k)
            sum = sum + CycloElt::root_power(g_order, lambda * static_cast<long>(k));
        bool zero = sum.is_zero();
        if (zero) {
            report.singular = true;
            report.kernel_weights.push_back(lambda);
        }
        report.eigenvalues.push_back({lambda, sum, zero});
    }
    report.surjective = !report.singular;
    return report;
}

} // namespace wordmap
