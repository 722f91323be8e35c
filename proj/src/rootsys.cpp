#include "wordmap/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wordmap {

RatMat rat_identity(int n) {
    RatMat m(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

RatMat rat_mul(const RatMat& x, const RatMat& y) {
    std::size_t n = x.size();
    RatMat r(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                r[i][j] += x[i][k] * y[k][j];
        }
    return r;
}

RatVec rat_apply(const RatMat& m, const RatVec& v) {
    std::size_t n = m.size();
    RatVec r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

RatMat rat_pow(RatMat m, unsigned e) {
    RatMat acc = rat_identity(static_cast<int>(m.size()));
    while (e) {
        if (e & 1)
            acc = rat_mul(acc, m);
        m = rat_mul(m, m);
        e >>= 1;
    }
    return acc;
}

bool rat_equal(const RatMat& x, const RatMat& y) { return x == y; }

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// ---------------------------------------------------------------------------

std::string root_type_name(RootType t) {
    switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E6: return "E6";
    case RootType::E7: return "E7";
    case RootType::E8: return "E8";
    case RootType::F4: return "F4";
    case RootType::G2: return "G2";
    }
    return "?";
}

RootType root_type_from_name(const std::string& s) {
    if (s == "A" || s == "a") return RootType::A;
    if (s == "B" || s == "b") return RootType::B;
    if (s == "C" || s == "c") return RootType::C;
    if (s == "D" || s == "d") return RootType::D;
    if (s == "E6" || s == "e6") return RootType::E6;
    if (s == "E7" || s == "e7") return RootType::E7;
    if (s == "E8" || s == "e8") return RootType::E8;
    if (s == "F4" || s == "f4") return RootType::F4;
    if (s == "G2" || s == "g2") return RootType::G2;
    throw std::invalid_argument("unknown root system type: " + s);
}

bool is_classical(RootType t) {
    return t == RootType::A || t == RootType::B || t == RootType::C || t == RootType::D;
}

void validate_rank(RootType t, int rank) {
    switch (t) {
    case RootType::A:
        if (rank < 1)
            throw std::invalid_argument("type A requires rank >= 1");
        return;
    case RootType::B:
    case RootType::C:
        if (rank < 2)
            throw std::invalid_argument("types B and C require rank >= 2");
        return;
    case RootType::D:
        if (rank < 3)
            throw std::invalid_argument("type D requires rank >= 3");
        return;
    case RootType::E6:
        if (rank != 6) throw std::invalid_argument("E6 has rank 6");
        return;
    case RootType::E7:
        if (rank != 7) throw std::invalid_argument("E7 has rank 7");
        return;
    case RootType::E8:
        if (rank != 8) throw std::invalid_argument("E8 has rank 8");
        return;
    case RootType::F4:
        if (rank != 4) throw std::invalid_argument("F4 has rank 4");
        return;
    case RootType::G2:
        if (rank != 2) throw std::invalid_argument("G2 has rank 2");
        return;
    }
}

namespace {

std::size_t expected_root_count(RootType t, int rank) {
    std::size_t r = static_cast<std::size_t>(rank);
    switch (t) {
    case RootType::A: return r * (r + 1);
    case RootType::B:
    case RootType::C: return 2 * r * r;
    case RootType::D: return 2 * r * (r - 1);
    case RootType::E6: return 72;
    case RootType::E7: return 126;
    case RootType::E8: return 240;
    case RootType::F4: return 48;
    case RootType::G2: return 12;
    }
    return 0;
}

RatVec unit(int dim, int i, Rat c = 1) {
    RatVec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = c;
    return v;
}

std::vector<RatVec> simple_roots_of(RootType t, int rank, int& dim) {
    std::vector<RatVec> s;
    switch (t) {
    case RootType::A: {
        dim = rank + 1;
        for (int i = 0; i < rank; ++i) {
            RatVec v(static_cast<std::size_t>(dim), 0);
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(i + 1)] = -1;
            s.push_back(v);
        }
        break;
    }
    case RootType::B:
    case RootType::C:
    case RootType::D: {
        dim = rank;
        for (int i = 0; i + 1 < rank; ++i) {
            RatVec v(static_cast<std::size_t>(dim), 0);
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(i + 1)] = -1;
            s.push_back(v);
        }
        if (t == RootType::B) {
            s.push_back(unit(dim, rank - 1));
        } else if (t == RootType::C) {
            s.push_back(unit(dim, rank - 1, 2));
        } else {
            RatVec v(static_cast<std::size_t>(dim), 0);
            v[static_cast<std::size_t>(rank - 2)] = 1;
            v[static_cast<std::size_t>(rank - 1)] = 1;
            s.push_back(v);
        }
        break;
    }
    case RootType::G2: {
        dim = 3;
        RatVec a1(3, 0), a2(3, 0);
        a1[0] = 1; a1[1] = -1;
        a2[0] = -2; a2[1] = 1; a2[2] = 1;
        s = {a1, a2};
        break;
    }
    case RootType::F4: {
        dim = 4;
        RatVec a1(4, 0), a2(4, 0), a3(4, 0), a4(4, 0);
        a1[1] = 1; a1[2] = -1;
        a2[2] = 1; a2[3] = -1;
        a3[3] = 1;
        a4[0] = Rat(1, 2); a4[1] = Rat(-1, 2); a4[2] = Rat(-1, 2); a4[3] = Rat(-1, 2);
        s = {a1, a2, a3, a4};
        break;
    }
    case RootType::E6:
    case RootType::E7:
    case RootType::E8: {
        dim = 8;
        std::vector<RatVec> e8;
        RatVec a1(8, Rat(-1, 2));
        a1[0] = Rat(1, 2);
        a1[7] = Rat(1, 2);
        e8.push_back(a1);
        RatVec a2(8, 0);
        a2[0] = 1; a2[1] = 1;
        e8.push_back(a2);
        for (int i = 0; i < 6; ++i) {
            RatVec v(8, 0);
            v[static_cast<std::size_t>(i)] = -1;
            v[static_cast<std::size_t>(i + 1)] = 1;
            e8.push_back(v);
        }
        int keep = t == RootType::E6 ? 6 : t == RootType::E7 ? 7 : 8;
        s.assign(e8.begin(), e8.begin() + keep);
        break;
    }
    }
    return s;
}

RatVec reflect_vec(const RatVec& v, const RatVec& alpha) {
    Rat coeff = 2 * dot(v, alpha) / dot(alpha, alpha);
    RatVec r = v;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= coeff * alpha[i];
    return r;
}

std::string vec_key(const RatVec& v) {
    std::ostringstream out;
    for (const Rat& x : v)
        out << x.get_str() << ",";
    return out.str();
}

/// Gaussian elimination solving B X = C where B is dim x r with full
/// column rank; returns the r x r solution.
RatMat solve_in_basis(const std::vector<RatVec>& basis_cols, const std::vector<RatVec>& rhs_cols) {
    std::size_t dim = basis_cols.front().size();
    std::size_t r = basis_cols.size();
    std::size_t m = rhs_cols.size();
    // augmented matrix dim x (r + m)
    std::vector<RatVec> aug(dim, RatVec(r + m, 0));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            aug[i][j] = basis_cols[j][i];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            aug[i][r + j] = rhs_cols[j][i];

    std::size_t row = 0;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t col = 0; col < r && row < dim; ++col) {
        std::size_t pr = row;
        while (pr < dim && aug[pr][col] == 0)
            ++pr;
        if (pr == dim)
            throw std::logic_error("solve_in_basis: basis not of full column rank");
        std::swap(aug[row], aug[pr]);
        Rat inv = 1 / aug[row][col];
        for (std::size_t j = col; j < r + m; ++j)
            aug[row][j] *= inv;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || aug[i][col] == 0)
                continue;
            Rat f = aug[i][col];
            for (std::size_t j = col; j < r + m; ++j)
                aug[i][j] -= f * aug[row][j];
        }
        pivot_rows.push_back(row);
        ++row;
    }
    // consistency of the remaining rows
    for (std::size_t i = row; i < dim; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (aug[i][r + j] != 0)
                throw std::logic_error("solve_in_basis: rhs not in column span");
    RatMat x(r, RatVec(m, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m; ++j)
            x[i][j] = aug[i][r + j];
    // convert to square only when m == r; callers slice otherwise
    return x;
}

Rat rat_det(RatMat m) {
    std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && m[pr][col] == 0)
            ++pr;
        if (pr == n)
            return 0;
        if (pr != col) {
            std::swap(m[pr], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0)
                continue;
            Rat f = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j)
                m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

} // namespace

int RootSystem::find_root(const RatVec& v) const {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == v)
            return static_cast<int>(i);
    return -1;
}

RootSystem build_root_system(RootType t, int rank) {
    validate_rank(t, rank);
    RootSystem rs;
    rs.type = t;
    rs.rank = rank;
    std::vector<RatVec> simple = simple_roots_of(t, rank, rs.dim);

    // reflection closure of the simple roots
    std::map<std::string, int> seen;
    std::vector<RatVec> roots;
    auto push = [&](const RatVec& v) {
        std::string key = vec_key(v);
        auto it = seen.find(key);
        if (it != seen.end())
            return false;
        seen.emplace(key, static_cast<int>(roots.size()));
        roots.push_back(v);
        return true;
    };
    for (const RatVec& a : simple)
        push(a);
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (const RatVec& a : simple)
                if (push(reflect_vec(roots[i], a)))
                    grew = true;
    }
    if (roots.size() != expected_root_count(t, rank))
        throw std::logic_error("build_root_system: closure produced " +
                               std::to_string(roots.size()) + " roots for " +
                               root_type_name(t) + std::to_string(rank));
    rs.roots = std::move(roots);
    for (int i = 0; i < rank; ++i)
        rs.simple.push_back(rs.find_root(simple[static_cast<std::size_t>(i)]));

    // positivity: all coefficients in the simple-root basis >= 0
    std::vector<RatVec> basis = simple;
    std::vector<RatVec> rhs;
    for (const RatVec& r : rs.roots)
        rhs.push_back(r);
    RatMat coeffs = solve_in_basis(basis, rhs); // rank x |roots|
    for (std::size_t j = 0; j < rs.roots.size(); ++j) {
        bool nonneg = true, nonpos = true;
        for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
            if (coeffs[i][j] < 0)
                nonneg = false;
            if (coeffs[i][j] > 0)
                nonpos = false;
        }
        if (!nonneg && !nonpos)
            throw std::logic_error("build_root_system: root with mixed signs");
        if (nonneg)
            rs.positive.push_back(static_cast<int>(j));
    }
    if (rs.positive.size() * 2 != rs.roots.size())
        throw std::logic_error("build_root_system: positive roots are not half of all roots");
    return rs;
}

WeylElement reflection(const RootSystem& rs, int root_index) {
    const RatVec& a = rs.root(root_index);
    Rat norm = dot(a, a);
    RatMat m = rat_identity(rs.dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            m[i][j] -= 2 * a[i] * a[j] / norm;
    return {std::move(m), {root_index}};
}

WeylElement reflection_product(const RootSystem& rs, const std::vector<int>& root_indices) {
    RatMat m = rat_identity(rs.dim);
    for (int idx : root_indices)
        m = rat_mul(m, reflection(rs, idx).matrix);
    return {std::move(m), root_indices};
}

WeylElement coxeter_element(const RootSystem& rs, const std::vector<int>& ordering) {
    if (static_cast<int>(ordering.size()) != rs.rank)
        throw std::invalid_argument("coxeter_element: ordering must list every simple root once");
    std::vector<bool> used(static_cast<std::size_t>(rs.rank), false);
    std::vector<int> idx;
    for (int k : ordering) {
        if (k < 1 || k > rs.rank || used[static_cast<std::size_t>(k - 1)])
            throw std::invalid_argument("coxeter_element: not a permutation of 1..rank");
        used[static_cast<std::size_t>(k - 1)] = true;
        idx.push_back(rs.simple[static_cast<std::size_t>(k - 1)]);
    }
    return reflection_product(rs, idx);
}

RatMat restrict_to_root_span(const RootSystem& rs, const RatMat& m) {
    std::vector<RatVec> basis, image;
    for (int i = 0; i < rs.rank; ++i) {
        const RatVec& a = rs.simple_root(i);
        basis.push_back(a);
        image.push_back(rat_apply(m, a));
    }
    return solve_in_basis(basis, image);
}

bool is_fixed_point_free(const RootSystem& rs, const WeylElement& w) {
    RatMat x = restrict_to_root_span(rs, w.matrix);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i][i] -= 1;
    return rat_det(x) != 0;
}

WeylElement d_type_cycle_element(const RootSystem& rs) {
    if (rs.type != RootType::D)
        throw std::invalid_argument("d_type_cycle_element: requires type D");
    int r = rs.rank;
    RatVec beta(static_cast<std::size_t>(rs.dim), 0);
    beta[0] = 1;
    beta[static_cast<std::size_t>(r - 1)] = -1; // e_1 - e_r
    int beta_idx = rs.find_root(beta);
    if (beta_idx < 0)
        throw std::logic_error("d_type_cycle_element: e_1 - e_r is not a root");
    std::vector<int> seq{beta_idx, rs.simple[static_cast<std::size_t>(r - 1)]};
    for (int k = r - 2; k >= 1; --k)
        seq.push_back(rs.simple[static_cast<std::size_t>(k - 1)]);
    return reflection_product(rs, seq);
}

SignedPermutationShape signed_permutation_shape(const RootSystem& rs, const WeylElement& w) {
    SignedPermutationShape shape{true, true, {}};
    int n = rs.dim;
    std::vector<int> to(static_cast<std::size_t>(n), 0);   // image coordinate (1-based)
    std::vector<int> sign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        RatVec img = rat_apply(w.matrix, unit(n, i));
        int hits = 0;
        for (int j = 0; j < n; ++j) {
            const Rat& c = img[static_cast<std::size_t>(j)];
            if (c == 0)
                continue;
            if (c != 1 && c != -1) {
                shape.is_signed_permutation = false;
                return shape;
            }
            to[static_cast<std::size_t>(i)] = j;
            sign[static_cast<std::size_t>(i)] = c == 1 ? 1 : -1;
            ++hits;
        }
        if (hits != 1) {
            shape.is_signed_permutation = false;
            return shape;
        }
    }
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (visited[static_cast<std::size_t>(i)])
            continue;
        int len = 0, s = 1, j = i;
        do {
            visited[static_cast<std::size_t>(j)] = true;
            s *= sign[static_cast<std::size_t>(j)];
            j = to[static_cast<std::size_t>(j)];
            ++len;
        } while (j != i);
        shape.cycle_lengths.push_back(len);
        if (s == 1)
            shape.all_cycles_negative = false;
    }
    return shape;
}

bool longest_element_is_minus_one(RootType t, int rank) {
    validate_rank(t, rank);
    switch (t) {
    case RootType::A: return rank == 1;
    case RootType::B:
    case RootType::C: return true;
    case RootType::D: return rank % 2 == 0;
    case RootType::E6: return false;
    case RootType::E7:
    case RootType::E8:
    case RootType::F4:
    case RootType::G2: return true;
    }
    return false;
}

std::vector<Rat> char_poly_on_span(const RootSystem& rs, const WeylElement& w) {
    RatMat x = restrict_to_root_span(rs, w.matrix);
    std::size_t n = x.size();
    // Faddeev-LeVerrier: exact over Q
    std::vector<Rat> coeff(n + 1, 0);
    coeff[n] = 1;
    RatMat m = rat_identity(static_cast<int>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        m = rat_mul(x, m);
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += m[i][i];
        Rat c = -tr / static_cast<long>(k);
        coeff[n - k] = c;
        for (std::size_t i = 0; i < n; ++i)
            m[i][i] += c;
    }
    return coeff;
}

int weyl_element_order(const RootSystem& rs, const WeylElement& w, int bound) {
    RatMat id = rat_identity(rs.dim);
    RatMat acc = w.matrix;
    for (int k = 1; k <= bound; ++k) {
        if (acc == id)
            return k;
        acc = rat_mul(acc, w.matrix);
    }
    throw std::logic_error("weyl_element_order: bound exceeded");
}

std::vector<RatMat> enumerate_weyl_group(const RootSystem& rs, std::size_t limit) {
    std::vector<RatMat> gens;
    for (int i = 0; i < rs.rank; ++i)
        gens.push_back(reflection(rs, rs.simple[static_cast<std::size_t>(i)]).matrix);
    auto key = [](const RatMat& m) {
        std::ostringstream out;
        for (const RatVec& row : m)
            out << vec_key(row) << ";";
        return out.str();
    };
    std::map<std::string, std::size_t> seen;
    std::vector<RatMat> elems{rat_identity(rs.dim)};
    seen.emplace(key(elems[0]), 0);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const RatMat& g : gens) {
            RatMat next = rat_mul(elems[head], g);
            std::string k = key(next);
            if (seen.count(k))
                continue;
            if (elems.size() >= limit)
                throw std::length_error("enumerate_weyl_group: limit exceeded");
            seen.emplace(std::move(k), elems.size());
            elems.push_back(std::move(next));
        }
    }
    return elems;
}

bool matrix_permutes_roots(const RootSystem& rs, const RatMat& m) {
    for (const RatVec& r : rs.roots)
        if (rs.find_root(rat_apply(m, r)) < 0)
            return false;
    return true;
}

FirmReport strictly_firm_parabolic(RootType t, int rank, int k) {
    if (!is_classical(t))
        throw std::invalid_argument(
            "strictly_firm_parabolic: classical types only (A, B, C, D)");
    validate_rank(t, rank);
    if (k < 1 || k > rank)
        throw std::invalid_argument("strictly_firm_parabolic: k out of range");
    RootSystem rs = build_root_system(t, rank);
    std::vector<int> X;
    for (int i = 0; i < rank; ++i)
        if (i + 1 != k)
            X.push_back(rs.simple[static_cast<std::size_t>(i)]);
    for (int pi : rs.positive) {
        const RatVec& beta = rs.root(pi);
        bool orthogonal_to_all = true;
        for (int xi : X)
            if (dot(beta, rs.root(xi)) != 0) {
                orthogonal_to_all = false;
                break;
            }
        if (orthogonal_to_all)
            return {false, beta};
    }
    return {true, std::nullopt};
}

IsogenyData isogeny_data(RootType t, int rank) {
    validate_rank(t, rank);
    // centre of the simply connected form; bad primes per type
    switch (t) {
    case RootType::A: return {rank + 1, 1};
    case RootType::B: return {2, 2};
    case RootType::C: return {2, 2};
    case RootType::D: return {4, 2};
    case RootType::E6: return {3, 6};
    case RootType::E7: return {2, 6};
    case RootType::E8: return {1, 30};
    case RootType::F4: return {1, 6};
    case RootType::G2: return {1, 6};
    }
    return {1, 1};
}

bool power_map_surjective(RootType t, int rank, Isogeny isogeny, long custom_z,
                          long char_exponent, long m) {
    if (m < 1)
        throw std::invalid_argument("power_map_surjective: m must be >= 1");
    auto is_prime = [](long n) {
        if (n < 2)
            return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    };
    if (char_exponent != 1 && !is_prime(char_exponent))
        throw std::invalid_argument("power_map_surjective: characteristic exponent must be 1 or prime");
    IsogenyData data = isogeny_data(t, rank);
    long z = 0;
    switch (isogeny) {
    case Isogeny::SimplyConnected: z = data.center_order; break;
    case Isogeny::Adjoint: z = 1; break;
    case Isogeny::Custom:
        if (custom_z < 1 || data.center_order % custom_z != 0)
            throw std::invalid_argument(
                "power_map_surjective: z must divide the simply connected centre order");
        z = custom_z;
        break;
    }
    long prz = char_exponent * data.bad_prime_product * z;
    return std::gcd(m, prz) == 1;
}

} // namespace wordmap
