#include "wordmap/counts.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace wordmap {

namespace {

/// Deterministic parallel counter over the tuple space: workers own
/// disjoint contiguous chunks and the partial counts are summed.
template <typename Pred>
uint64_t count_tuples(const GroupTable& G, int arity, uint64_t total, int workers, Pred&& pred) {
    int w = std::max(1, workers);
    if (static_cast<uint64_t>(w) > total)
        w = static_cast<int>(std::max<uint64_t>(1, total));
    std::vector<uint64_t> parts(static_cast<std::size_t>(w), 0);
    auto run_chunk = [&](int wi) {
        uint64_t lo = total * static_cast<uint64_t>(wi) / static_cast<uint64_t>(w);
        uint64_t hi = total * (static_cast<uint64_t>(wi) + 1) / static_cast<uint64_t>(w);
        std::vector<uint32_t> tuple(static_cast<std::size_t>(arity), 0);
        uint64_t rem = lo;
        for (int i = 0; i < arity; ++i) {
            tuple[static_cast<std::size_t>(i)] = static_cast<uint32_t>(rem % G.order());
            rem /= G.order();
        }
        uint64_t local = 0;
        for (uint64_t idx = lo; idx < hi; ++idx) {
            if (pred(tuple))
                ++local;
            for (int i = 0; i < arity; ++i) {
                std::size_t j = static_cast<std::size_t>(i);
                if (++tuple[j] < G.order())
                    break;
                tuple[j] = 0;
            }
        }
        parts[static_cast<std::size_t>(wi)] = local;
    };
    if (w == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> threads;
        for (int wi = 0; wi < w; ++wi)
            threads.emplace_back(run_chunk, wi);
        for (auto& t : threads)
            t.join();
    }
    uint64_t sum = 0;
    for (uint64_t part : parts)
        sum += part;
    return sum;
}

} // namespace

uint64_t count_Ww(const Word& w, const GroupTable& G, const ImageOptions& opt) {
    uint64_t total = tuple_space_size(G, w.arity(), opt.budget);
    auto ops = G.ops();
    uint32_t one = G.identity();
    return count_tuples(G, w.arity(), total, opt.workers,
                        [&](const std::vector<uint32_t>& t) { return w.evaluate(t, ops) == one; });
}

uint64_t count_Tw(const Word& w, const GroupTable& G, const ImageOptions& opt) {
    if (G.kind() != GroupKind::SL2)
        throw std::invalid_argument("count_Tw: requires an SL2 group table");
    uint64_t total = tuple_space_size(G, w.arity(), opt.budget);
    auto ops = G.ops();
    uint32_t two = G.field().from_int(2);
    return count_tuples(G, w.arity(), total, opt.workers, [&](const std::vector<uint32_t>& t) {
        return G.trace_of(w.evaluate(t, ops)) == two;
    });
}

namespace {

TraceImageReport invariant_report(const ElementSet& image, const GroupTable& G) {
    if (G.kind() == GroupKind::GL2)
        throw std::invalid_argument("trace_image: unsupported kind gl2 (rank-one kinds only)");
    std::set<uint32_t> values;
    for (uint32_t g : image.to_indices())
        values.insert(G.invariant_of(g));
    std::set<uint32_t> all;
    for (uint32_t g = 0; g < G.order(); ++g)
        all.insert(G.invariant_of(g));
    TraceImageReport rep;
    rep.values.assign(values.begin(), values.end());
    rep.singleton = values.size() == 1;
    rep.group_value_count = static_cast<uint32_t>(all.size());
    return rep;
}

} // namespace

TraceImageReport trace_image(const Word& w, const GroupTable& G, const ImageOptions& opt) {
    return invariant_report(word_image(w, G, opt), G);
}

TraceImageReport trace_image_with_constants(const WordWithConstants& wc,
                                            const std::vector<uint32_t>& sigma,
                                            const GroupTable& G, bool strict,
                                            const ImageOptions& opt) {
    return invariant_report(word_image_with_constants(wc, sigma, G, strict, opt), G);
}

bool is_unipotent(const GroupTable& G, uint32_t g) {
    const Field& F = G.field();
    const Mat2& m = G.element(g);
    if (G.kind() == GroupKind::PGL2 || G.kind() == GroupKind::PSL2) {
        bool scalar = m.b == 0 && m.c == 0 && m.a == m.d;
        if (scalar)
            return false;
        uint32_t tr = F.add(m.a, m.d);
        uint32_t det = F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
        return F.mul(tr, tr) == F.mul(F.from_int(4), det);
    }
    if (g == G.identity())
        return false;
    // (g - 1)^2 = 0; valid in every characteristic
    uint32_t a = F.sub(m.a, 1), d = F.sub(m.d, 1);
    uint32_t e00 = F.add(F.mul(a, a), F.mul(m.b, m.c));
    uint32_t e01 = F.mul(m.b, F.add(a, d));
    uint32_t e10 = F.mul(m.c, F.add(a, d));
    uint32_t e11 = F.add(F.mul(d, d), F.mul(m.b, m.c));
    return e00 == 0 && e01 == 0 && e10 == 0 && e11 == 0;
}

bool is_semisimple(const GroupTable& G, uint32_t g) {
    if (G.is_central(g))
        return true;
    const Field& F = G.field();
    const Mat2& m = G.element(g);
    uint32_t tr = F.add(m.a, m.d);
    uint32_t det = F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
    // separable characteristic polynomial <=> discriminant != 0
    uint32_t disc = F.sub(F.mul(tr, tr), F.mul(F.from_int(4), det));
    if (F.p() == 2)
        disc = tr; // tr^2 - 4 det = tr^2, and squaring is injective
    return disc != 0;
}

ImageStats image_stats(const ElementSet& image, const GroupTable& G) {
    const Field& F = G.field();
    ImageStats st{};
    st.minus_one_defined = G.kind() == GroupKind::SL2 && F.p() != 2;
    if (st.minus_one_defined) {
        uint32_t m1 = F.neg(1);
        st.contains_minus_one = image.test(G.index_of({m1, 0, 0, m1}));
    }
    std::set<uint32_t> ss_image, ss_group;
    for (uint32_t g = 0; g < G.order(); ++g) {
        bool in_image = image.test(g);
        if (is_unipotent(G, g)) {
            if (in_image) {
                ++st.unipotent_count;
                st.nontrivial_unipotent_present = true;
            }
        }
        if (is_semisimple(G, g)) {
            uint32_t v = G.invariant_of(g);
            ss_group.insert(v);
            if (in_image)
                ss_image.insert(v);
        }
    }
    st.semisimple_invariants_in_image = static_cast<uint32_t>(ss_image.size());
    st.semisimple_invariants_in_group = static_cast<uint32_t>(ss_group.size());
    ClassPartition part = conjugacy_classes(G);
    st.class_count = static_cast<uint32_t>(part.classes.size());
    std::vector<bool> met(part.classes.size(), false);
    for (uint32_t g : image.to_indices())
        met[part.class_of[g]] = true;
    st.classes_met = static_cast<uint32_t>(std::count(met.begin(), met.end(), true));
    return st;
}

bool is_identity_with_constants(const WordWithConstants& wc, const std::vector<uint32_t>& sigma,
                                const GroupTable& G, const ImageOptions& opt) {
    uint64_t total = tuple_space_size(G, wc.arity(), opt.budget);
    auto ops = G.ops();
    std::vector<uint32_t> tuple(static_cast<std::size_t>(wc.arity()), 0);
    uint32_t one = G.identity();
    for (uint64_t idx = 0; idx < total; ++idx) {
        if (wc.evaluate(tuple, sigma, ops) != one)
            return false;
        for (int i = 0; i < wc.arity(); ++i) {
            std::size_t j = static_cast<std::size_t>(i);
            if (++tuple[j] < G.order())
                break;
            tuple[j] = 0;
        }
    }
    return true;
}

namespace {

void scan_rec(const GroupTable& G, uint32_t sigma, unsigned weight_left, bool want_const,
              bool have_const, bool have_var, std::vector<Word>& words,
              std::vector<ConstSlot>& slots, IdentityScanResult& out, const ImageOptions& opt) {
    if (have_const && have_var) {
        WordWithConstants wc(words, slots);
        ++out.candidates;
        if (is_identity_with_constants(wc, {sigma}, G, opt))
            out.identities.push_back(wc.to_string());
    }
    if (weight_left == 0)
        return;
    if (want_const) {
        for (unsigned b = 1; b <= weight_left; ++b)
            for (int sign : {1, -1}) {
                slots.push_back({1, sign * static_cast<int>(b)});
                words.push_back(Word());
                scan_rec(G, sigma, weight_left - b, false, true, have_var, words, slots, out, opt);
                words.pop_back();
                slots.pop_back();
            }
    } else {
        for (unsigned a = 1; a <= weight_left; ++a)
            for (int sign : {1, -1}) {
                Word saved = words.back();
                words.back() = Word::generator(1, sign * static_cast<int>(a));
                scan_rec(G, sigma, weight_left - a, true, have_const, true, words, slots, out, opt);
                words.back() = saved;
            }
    }
}

} // namespace

IdentityScanResult identity_scan(const GroupTable& G, uint32_t sigma, unsigned max_weight,
                                 const ImageOptions& opt) {
    if (G.is_central(sigma))
        throw std::invalid_argument("identity_scan: constant must be non-central");
    IdentityScanResult out;
    std::vector<Word> words{Word()};
    std::vector<ConstSlot> slots;
    // first syllable may be a variable power or a constant power
    scan_rec(G, sigma, max_weight, false, false, false, words, slots, out, opt);
    scan_rec(G, sigma, max_weight, true, false, false, words, slots, out, opt);
    return out;
}

} // namespace wordmap
