#ifndef WORDMAP_CONJUGACY_HPP
#define WORDMAP_CONJUGACY_HPP

#include <optional>

#include "wordmap/image.hpp"

namespace wordmap {

struct ConjClass {
    uint32_t representative;
    ElementSet members;
    uint32_t size;
};

struct ClassPartition {
    std::vector<ConjClass> classes;
    std::vector<uint32_t> class_of; // element index -> class id
};

/// Partition of G into conjugation orbits. Class ids follow the order
/// of the smallest element index in each class, so the result is
/// deterministic.
ClassPartition conjugacy_classes(const GroupTable& G);

/// True iff the iterated product set C_1 C_2 ... C_m equals G.
bool class_product_covers(const std::vector<ElementSet>& classes, const GroupTable& G);

/// Covering numbers following the paper's convention: the minimal d
/// such that every product of m > d classes of non-central elements
/// covers G (extended), resp. every m-th power of a single such class
/// (covering). Values are std::nullopt when no finite d exists (the
/// product sets stabilize without covering), and 0 for the trivial
/// group.
struct CoveringNumbers {
    std::optional<int> covering;
    std::optional<int> extended;
};
CoveringNumbers covering_numbers(const GroupTable& G, uint32_t order_bound = 2000);

/// Least n such that every element of [G,G] is a product of n
/// commutators; 0 when the derived subgroup is trivial.
int commutator_width(const GroupTable& G, const ImageOptions& opt = {});

/// Derived subgroup as an element set (closure of the commutator
/// image).
ElementSet derived_subgroup(const GroupTable& G, const ImageOptions& opt = {});

} // namespace wordmap

#endif
