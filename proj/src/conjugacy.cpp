#include "wordmap/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wordmap {

ClassPartition conjugacy_classes(const GroupTable& G) {
    ClassPartition part;
    uint32_t n = G.order();
    part.class_of.assign(n, UINT32_MAX);
    for (uint32_t g = 0; g < n; ++g) {
        if (part.class_of[g] != UINT32_MAX)
            continue;
        uint32_t id = static_cast<uint32_t>(part.classes.size());
        ConjClass cls{g, ElementSet(n), 0};
        for (uint32_t h = 0; h < n; ++h) {
            uint32_t x = G.conjugate(h, g);
            if (!cls.members.test(x)) {
                cls.members.set(x);
                part.class_of[x] = id;
                ++cls.size;
            }
        }
        part.classes.push_back(std::move(cls));
    }
    return part;
}

bool class_product_covers(const std::vector<ElementSet>& classes, const GroupTable& G) {
    if (classes.empty())
        throw std::invalid_argument("class_product_covers: empty class list");
    ElementSet acc = classes.front();
    for (std::size_t i = 1; i < classes.size(); ++i)
        acc = product_set(acc, classes[i], G);
    return acc.is_full();
}

namespace {

using ClassMask = uint64_t;

/// classes hit by C_i * C_j; products of classes are unions of classes,
/// and every element of C_i C_j is conjugate to rep_i * b for some b.
std::vector<std::vector<ClassMask>> class_product_masks(const GroupTable& G,
                                                        const ClassPartition& part) {
    std::size_t k = part.classes.size();
    std::vector<std::vector<ClassMask>> mask(k, std::vector<ClassMask>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        uint32_t rep = part.classes[i].representative;
        for (std::size_t j = 0; j < k; ++j) {
            ClassMask m = 0;
            for (uint32_t b : part.classes[j].members.to_indices())
                m |= ClassMask{1} << part.class_of[G.mul(rep, b)];
            mask[i][j] = m;
        }
    }
    return mask;
}

ClassMask expand(ClassMask s, std::size_t j, const std::vector<std::vector<ClassMask>>& mask) {
    ClassMask out = 0;
    while (s) {
        unsigned i = static_cast<unsigned>(__builtin_ctzll(s));
        s &= s - 1;
        out |= mask[i][j];
    }
    return out;
}

} // namespace

CoveringNumbers covering_numbers(const GroupTable& G, uint32_t order_bound) {
    if (G.order() > order_bound)
        throw BudgetExceeded("covering_numbers: group order " + std::to_string(G.order()) +
                             " exceeds bound " + std::to_string(order_bound));
    if (G.order() == 1)
        return {0, 0}; // degenerate convention

    ClassPartition part = conjugacy_classes(G);
    std::size_t k = part.classes.size();
    if (k > 64)
        throw BudgetExceeded("covering_numbers: more than 64 conjugacy classes");
    ClassMask full = k == 64 ? ~ClassMask{0} : (ClassMask{1} << k) - 1;
    auto masks = class_product_masks(G, part);

    // constants range over non-central elements
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < k; ++i)
        if (!G.is_central(part.classes[i].representative))
            usable.push_back(i);
    if (usable.empty())
        return {std::nullopt, std::nullopt}; // abelian: no admissible classes

    CoveringNumbers result;

    // covering: equal classes C^m
    int worst = 0;
    bool all_finite = true;
    for (std::size_t i : usable) {
        ClassMask s = ClassMask{1} << i;
        std::set<ClassMask> seen;
        int m = 1;
        while (s != full && seen.insert(s).second) {
            s = expand(s, i, masks);
            ++m;
        }
        if (s != full) {
            all_finite = false;
            break;
        }
        worst = std::max(worst, m);
    }
    if (all_finite)
        result.covering = worst - 1;

    // extended: all products of m usable classes
    std::set<ClassMask> level;
    for (std::size_t i : usable)
        level.insert(ClassMask{1} << i);
    std::set<std::set<ClassMask>> states;
    int m = 1;
    while (true) {
        bool covered = std::all_of(level.begin(), level.end(),
                                   [&](ClassMask s) { return s == full; });
        if (covered) {
            result.extended = m - 1;
            break;
        }
        if (!states.insert(level).second)
            break; // stabilized without covering
        std::set<ClassMask> next;
        for (ClassMask s : level)
            for (std::size_t j : usable)
                next.insert(expand(s, j, masks));
        level = std::move(next);
        ++m;
    }
    return result;
}

ElementSet derived_subgroup(const GroupTable& G, const ImageOptions& opt) {
    ElementSet commutators = word_image(commutator_word(), G, opt);
    // closure under products; commutator images contain 1 and inverses
    ElementSet closure = commutators;
    while (true) {
        ElementSet next = product_set(closure, commutators, G);
        next |= closure;
        if (next == closure)
            return closure;
        closure = std::move(next);
    }
}

int commutator_width(const GroupTable& G, const ImageOptions& opt) {
    ElementSet commutators = word_image(commutator_word(), G, opt);
    ElementSet derived = derived_subgroup(G, opt);
    if (derived.count() == 1)
        return 0; // abelian convention
    ElementSet power = commutators;
    int n = 1;
    while (!derived.is_subset_of(power)) {
        power = product_set(power, commutators, G);
        ++n;
    }
    return n;
}

} // namespace wordmap
