#ifndef WORDMAP_GROUP_TABLE_HPP
#define WORDMAP_GROUP_TABLE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "wordmap/gf.hpp"

namespace wordmap {

enum class GroupKind { SL2, GL2, PGL2, PSL2 };

std::string kind_name(GroupKind k);
GroupKind kind_from_name(const std::string& name);

/// 2x2 matrix with entries encoded as field elements.
struct Mat2 {
    uint32_t a, b, c, d;
    bool operator==(const Mat2&) const = default;
};

/// Dense bit vector over the element indices of a group table.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(uint64_t universe)
        : n_(universe), bits_((universe + 63) / 64, 0) {}

    uint64_t universe_size() const { return n_; }
    void set(uint64_t i) { bits_[i >> 6] |= uint64_t{1} << (i & 63); }
    bool test(uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
    uint64_t count() const;

    ElementSet& operator|=(const ElementSet& o);
    bool operator==(const ElementSet&) const = default;
    bool is_subset_of(const ElementSet& o) const;
    bool is_full() const { return count() == n_; }

    std::vector<uint32_t> to_indices() const;
    /// Hex dump, one nibble per four element indices (element 4i+j at
    /// bit j of digit i).
    std::string to_hex() const;

private:
    uint64_t n_ = 0;
    std::vector<uint64_t> bits_;
};

/// Fully enumerated matrix group over F_q with dense element indexing.
/// PGL2 elements are canonical coset representatives (first nonzero
/// entry in row-major order scaled to 1); PSL2 is realized as the
/// image of SL2 inside PGL2 (the representatives whose determinant is
/// a square). Immutable after construction.
class GroupTable {
public:
    static GroupTable build(GroupKind kind, const FieldSpec& fs,
                            uint64_t max_elements = uint64_t{1} << 26);

    GroupKind kind() const { return kind_; }
    const Field& field() const { return *field_; }
    uint32_t order() const { return static_cast<uint32_t>(elems_.size()); }

    uint32_t identity() const { return id_; }
    const Mat2& element(uint32_t i) const { return elems_[i]; }
    uint32_t mul(uint32_t x, uint32_t y) const;
    uint32_t inv(uint32_t x) const { return inv_[x]; }
    uint32_t pow(uint32_t x, long long e) const;
    uint32_t conjugate(uint32_t h, uint32_t g) const { return mul(mul(h, g), inv_[h]); }

    /// Index of a matrix (canonicalized for PGL2/PSL2). Throws if the
    /// matrix does not belong to the group.
    uint32_t index_of(Mat2 m) const;
    Mat2 canonicalize(Mat2 m) const;

    const std::vector<uint32_t>& center() const { return center_; }
    bool is_central(uint32_t i) const;

    uint32_t trace_of(uint32_t i) const;
    uint32_t det_of(uint32_t i) const;
    /// Class-function invariant separating semisimple classes at rank
    /// one: trace for SL2/GL2, trace^2/det of any lift for PGL2/PSL2.
    uint32_t invariant_of(uint32_t i) const;

    /// Adapter for Word::evaluate.
    struct Ops {
        using Element = uint32_t;
        const GroupTable* t;
        Element identity() const { return t->identity(); }
        Element multiply(Element x, Element y) const { return t->mul(x, y); }
        Element invert(Element x) const { return t->inv(x); }
    };
    Ops ops() const { return Ops{this}; }

private:
    GroupTable() = default;
    void index_elements(uint64_t max_elements);
    uint64_t key_of(const Mat2& m) const;

    GroupKind kind_ = GroupKind::SL2;
    std::shared_ptr<const Field> field_; // shared: tables are copied around
    std::vector<Mat2> elems_;
    std::vector<uint32_t> inv_;
    std::vector<uint32_t> center_;
    uint32_t id_ = 0;

    // index lookup: direct-addressed when q^4 is small, hashed otherwise
    std::vector<int32_t> direct_;
    std::unordered_map<uint64_t, uint32_t> hashed_;
};

} // namespace wordmap

#endif
