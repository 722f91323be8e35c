#include "wordmap/group_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordmap {

std::string kind_name(GroupKind k) {
    switch (k) {
    case GroupKind::SL2: return "sl2";
    case GroupKind::GL2: return "gl2";
    case GroupKind::PGL2: return "pgl2";
    case GroupKind::PSL2: return "psl2";
    }
    return "?";
}

GroupKind kind_from_name(const std::string& name) {
    if (name == "sl2") return GroupKind::SL2;
    if (name == "gl2") return GroupKind::GL2;
    if (name == "pgl2") return GroupKind::PGL2;
    if (name == "psl2") return GroupKind::PSL2;
    throw std::invalid_argument("unknown group kind: " + name);
}

uint64_t ElementSet::count() const {
    uint64_t n = 0;
    for (uint64_t w : bits_)
        n += static_cast<uint64_t>(__builtin_popcountll(w));
    return n;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("ElementSet: universe size mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] |= o.bits_[i];
    return *this;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("ElementSet: universe size mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i])
            return false;
    return true;
}

std::vector<uint32_t> ElementSet::to_indices() const {
    std::vector<uint32_t> out;
    for (uint64_t i = 0; i < n_; ++i)
        if (test(i))
            out.push_back(static_cast<uint32_t>(i));
    return out;
}

std::string ElementSet::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    uint64_t nibbles = (n_ + 3) / 4;
    s.reserve(nibbles);
    for (uint64_t i = 0; i < nibbles; ++i) {
        unsigned d = 0;
        for (unsigned j = 0; j < 4; ++j) {
            uint64_t idx = 4 * i + j;
            if (idx < n_ && test(idx))
                d |= 1u << j;
        }
        s.push_back(digits[d]);
    }
    return s;
}

// ---------------------------------------------------------------------------

namespace {

Mat2 mat_mul(const Field& F, const Mat2& x, const Mat2& y) {
    return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
            F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
            F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
            F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

uint32_t mat_det(const Field& F, const Mat2& m) {
    return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

Mat2 mat_adjugate(const Field& F, const Mat2& m) {
    return {m.d, F.neg(m.b), F.neg(m.c), m.a};
}

} // namespace

uint64_t GroupTable::key_of(const Mat2& m) const {
    uint64_t q = field_->q();
    return ((static_cast<uint64_t>(m.a) * q + m.b) * q + m.c) * q + m.d;
}

Mat2 GroupTable::canonicalize(Mat2 m) const {
    if (kind_ != GroupKind::PGL2 && kind_ != GroupKind::PSL2)
        return m;
    const Field& F = *field_;
    uint32_t lead = m.a ? m.a : m.b ? m.b : m.c ? m.c : m.d;
    if (lead == 0)
        throw std::invalid_argument("canonicalize: zero matrix");
    uint32_t s = F.inv(lead);
    return {F.mul(m.a, s), F.mul(m.b, s), F.mul(m.c, s), F.mul(m.d, s)};
}

uint32_t GroupTable::index_of(Mat2 m) const {
    m = canonicalize(m);
    uint64_t key = key_of(m);
    if (!direct_.empty()) {
        int32_t v = direct_[key];
        if (v < 0)
            throw std::invalid_argument("index_of: matrix not in group");
        return static_cast<uint32_t>(v);
    }
    auto it = hashed_.find(key);
    if (it == hashed_.end())
        throw std::invalid_argument("index_of: matrix not in group");
    return it->second;
}

uint32_t GroupTable::mul(uint32_t x, uint32_t y) const {
    Mat2 m = mat_mul(*field_, elems_[x], elems_[y]);
    m = canonicalize(m);
    uint64_t key = key_of(m);
    if (!direct_.empty())
        return static_cast<uint32_t>(direct_[key]);
    return hashed_.find(key)->second;
}

uint32_t GroupTable::pow(uint32_t x, long long e) const {
    if (e < 0) {
        x = inv_[x];
        e = -e;
    }
    uint32_t acc = id_;
    while (e) {
        if (e & 1)
            acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

bool GroupTable::is_central(uint32_t i) const {
    return std::find(center_.begin(), center_.end(), i) != center_.end();
}

uint32_t GroupTable::trace_of(uint32_t i) const {
    const Mat2& m = elems_[i];
    return field_->add(m.a, m.d);
}

uint32_t GroupTable::det_of(uint32_t i) const { return mat_det(*field_, elems_[i]); }

uint32_t GroupTable::invariant_of(uint32_t i) const {
    const Field& F = *field_;
    uint32_t tr = trace_of(i);
    if (kind_ == GroupKind::SL2 || kind_ == GroupKind::GL2)
        return tr;
    return F.mul(F.mul(tr, tr), F.inv(det_of(i)));
}

void GroupTable::index_elements(uint64_t max_elements) {
    uint64_t q = field_->q();
    uint64_t keyspace = q * q * q * q;
    if (elems_.size() > max_elements)
        throw std::invalid_argument("GroupTable: group order " + std::to_string(elems_.size()) +
                                    " exceeds element bound " + std::to_string(max_elements));
    if (keyspace <= (uint64_t{1} << 26)) {
        direct_.assign(keyspace, -1);
        for (uint32_t i = 0; i < elems_.size(); ++i)
            direct_[key_of(elems_[i])] = static_cast<int32_t>(i);
    } else {
        hashed_.reserve(elems_.size() * 2);
        for (uint32_t i = 0; i < elems_.size(); ++i)
            hashed_.emplace(key_of(elems_[i]), i);
    }
    inv_.resize(elems_.size());
    const Field& F = *field_;
    for (uint32_t i = 0; i < elems_.size(); ++i) {
        Mat2 adj = mat_adjugate(F, elems_[i]);
        if (kind_ == GroupKind::SL2) {
            inv_[i] = index_of(adj);
        } else if (kind_ == GroupKind::GL2) {
            uint32_t dinv = F.inv(mat_det(F, elems_[i]));
            inv_[i] = index_of({F.mul(adj.a, dinv), F.mul(adj.b, dinv), F.mul(adj.c, dinv),
                                F.mul(adj.d, dinv)});
        } else {
            // scalar factors are irrelevant in PGL2/PSL2
            inv_[i] = index_of(adj);
        }
    }
    id_ = index_of({1, 0, 0, 1});
}

GroupTable GroupTable::build(GroupKind kind, const FieldSpec& fs, uint64_t max_elements) {
    GroupTable t;
    t.kind_ = kind;
    t.field_ = std::make_shared<Field>(fs);
    const Field& F = *t.field_;
    uint32_t q = F.q();

    uint64_t expected = 0;
    switch (kind) {
    case GroupKind::SL2:
    case GroupKind::PGL2:
        expected = static_cast<uint64_t>(q) * (static_cast<uint64_t>(q) * q - 1);
        break;
    case GroupKind::GL2:
        expected = (static_cast<uint64_t>(q) * q - 1) * (static_cast<uint64_t>(q) * q - q);
        break;
    case GroupKind::PSL2:
        expected = static_cast<uint64_t>(q) * (static_cast<uint64_t>(q) * q - 1) /
                   (F.p() == 2 ? 1 : 2);
        break;
    }
    if (expected > max_elements)
        throw std::invalid_argument("GroupTable: group order " + std::to_string(expected) +
                                    " exceeds element bound " + std::to_string(max_elements));
    t.elems_.reserve(expected);

    if (kind == GroupKind::SL2) {
        for (uint32_t a = 0; a < q; ++a) {
            if (a == 0) {
                for (uint32_t b = 1; b < q; ++b) {
                    uint32_t c = F.neg(F.inv(b)); // det = -bc = 1
                    for (uint32_t d = 0; d < q; ++d)
                        t.elems_.push_back({a, b, c, d});
                }
            } else {
                uint32_t ainv = F.inv(a);
                for (uint32_t b = 0; b < q; ++b)
                    for (uint32_t c = 0; c < q; ++c)
                        t.elems_.push_back({a, b, c, F.mul(ainv, F.add(1, F.mul(b, c)))});
            }
        }
    } else if (kind == GroupKind::GL2) {
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                for (uint32_t c = 0; c < q; ++c)
                    for (uint32_t d = 0; d < q; ++d)
                        if (mat_det(F, {a, b, c, d}) != 0)
                            t.elems_.push_back({a, b, c, d});
    } else {
        // canonical PGL2 representatives; PSL2 keeps square-determinant ones
        auto keep = [&](const Mat2& m) {
            return kind == GroupKind::PGL2 || F.is_square(mat_det(F, m));
        };
        for (uint32_t b = 0; b < q; ++b)
            for (uint32_t c = 0; c < q; ++c)
                for (uint32_t d = 0; d < q; ++d) {
                    Mat2 m{1, b, c, d};
                    if (mat_det(F, m) != 0 && keep(m))
                        t.elems_.push_back(m);
                }
        for (uint32_t c = 1; c < q; ++c)
            for (uint32_t d = 0; d < q; ++d) {
                Mat2 m{0, 1, c, d};
                if (keep(m))
                    t.elems_.push_back(m);
            }
    }

    if (t.elems_.size() != expected)
        throw std::logic_error("GroupTable: enumeration size mismatch for " + kind_name(kind));
    t.index_elements(max_elements);

    // center
    if (kind == GroupKind::SL2) {
        t.center_.push_back(t.index_of({1, 0, 0, 1}));
        uint32_t m1 = F.neg(1);
        if (m1 != 1)
            t.center_.push_back(t.index_of({m1, 0, 0, m1}));
    } else if (kind == GroupKind::GL2) {
        for (uint32_t l = 1; l < q; ++l)
            t.center_.push_back(t.index_of({l, 0, 0, l}));
    } else {
        t.center_.push_back(t.identity());
    }
    std::sort(t.center_.begin(), t.center_.end());
    return t;
}

} // namespace wordmap
