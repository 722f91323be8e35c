#include "wordmap/image.hpp"

#include <algorithm>
#include <thread>

namespace wordmap {

uint64_t tuple_space_size(const GroupTable& G, int arity, uint64_t budget) {
    uint64_t n = 1;
    for (int i = 0; i < arity; ++i) {
        if (n > budget / G.order())
            throw BudgetExceeded("exhaustive enumeration of |G|^" + std::to_string(arity) +
                                 " exceeds budget " + std::to_string(budget) +
                                 "; use sampled_image");
        n *= G.order();
    }
    if (n > budget)
        throw BudgetExceeded("exhaustive enumeration exceeds budget; use sampled_image");
    return n;
}

namespace {

/// Runs fn(tuple) over every tuple in [0,|G|)^arity whose linear index
/// (base-|G| digits, position 0 least significant) lies in [lo, hi).
template <typename Fn>
void for_tuples(const GroupTable& G, int arity, uint64_t lo, uint64_t hi, Fn&& fn) {
    std::vector<uint32_t> tuple(static_cast<std::size_t>(arity), 0);
    uint64_t rem = lo;
    for (int i = 0; i < arity; ++i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<uint32_t>(rem % G.order());
        rem /= G.order();
    }
    for (uint64_t idx = lo; idx < hi; ++idx) {
        fn(tuple);
        for (int i = 0; i < arity; ++i) {
            std::size_t j = static_cast<std::size_t>(i);
            if (++tuple[j] < G.order())
                break;
            tuple[j] = 0;
        }
    }
}

/// Chunked parallel run; each worker owns a private ElementSet, merged
/// in worker order (or is commutative, so any order gives the same
/// bits).
template <typename Eval>
ElementSet parallel_image(const GroupTable& G, int arity, uint64_t total, int workers,
                          Eval&& eval) {
    int w = std::max(1, workers);
    if (static_cast<uint64_t>(w) > total)
        w = static_cast<int>(std::max<uint64_t>(1, total));
    std::vector<ElementSet> parts(static_cast<std::size_t>(w), ElementSet(G.order()));
    auto run_chunk = [&](int wi) {
        uint64_t lo = total * static_cast<uint64_t>(wi) / static_cast<uint64_t>(w);
        uint64_t hi = total * (static_cast<uint64_t>(wi) + 1) / static_cast<uint64_t>(w);
        ElementSet& local = parts[static_cast<std::size_t>(wi)];
        for_tuples(G, arity, lo, hi,
                   [&](const std::vector<uint32_t>& tuple) { local.set(eval(tuple)); });
    };
    if (w == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(w));
        for (int wi = 0; wi < w; ++wi)
            threads.emplace_back(run_chunk, wi);
        for (auto& t : threads)
            t.join();
    }
    ElementSet result(G.order());
    for (const ElementSet& part : parts)
        result |= part;
    return result;
}

} // namespace

ElementSet word_image(const Word& w, const GroupTable& G, const ImageOptions& opt) {
    uint64_t total = tuple_space_size(G, w.arity(), opt.budget);
    auto ops = G.ops();
    return parallel_image(G, w.arity(), total, opt.workers,
                          [&](const std::vector<uint32_t>& tuple) {
                              return w.evaluate(tuple, ops);
                          });
}

ElementSet word_image_with_constants(const WordWithConstants& wc,
                                     const std::vector<uint32_t>& sigma, const GroupTable& G,
                                     bool strict, const ImageOptions& opt) {
    if (static_cast<int>(sigma.size()) != wc.num_constants())
        throw std::invalid_argument("word_image_with_constants: constant tuple length mismatch");
    if (strict)
        for (uint32_t s : sigma)
            if (G.is_central(s))
                throw std::invalid_argument(
                    "word_image_with_constants: central constant (pass strict=false to allow)");
    uint64_t total = tuple_space_size(G, wc.arity(), opt.budget);
    auto ops = G.ops();
    return parallel_image(G, wc.arity(), total, opt.workers,
                          [&](const std::vector<uint32_t>& tuple) {
                              return wc.evaluate(tuple, sigma, ops);
                          });
}

uint64_t splitmix64_at(uint64_t seed, uint64_t ctr) {
    uint64_t z = seed + (ctr + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

ElementSet sampled_image(const Word& w, const GroupTable& G, uint64_t samples, uint64_t seed,
                         int workers) {
    if (samples < 1)
        throw std::invalid_argument("sampled_image: need at least one sample");
    int nw = std::max(1, workers);
    std::vector<ElementSet> parts(static_cast<std::size_t>(nw), ElementSet(G.order()));
    auto ops = G.ops();
    std::size_t arity = static_cast<std::size_t>(w.arity());
    auto run_chunk = [&](int wi) {
        uint64_t lo = samples * static_cast<uint64_t>(wi) / static_cast<uint64_t>(nw);
        uint64_t hi = samples * (static_cast<uint64_t>(wi) + 1) / static_cast<uint64_t>(nw);
        std::vector<uint32_t> tuple(arity);
        ElementSet& local = parts[static_cast<std::size_t>(wi)];
        for (uint64_t s = lo; s < hi; ++s) {
            for (std::size_t i = 0; i < arity; ++i) {
                uint64_t r = splitmix64_at(seed, s * arity + i);
                tuple[i] = static_cast<uint32_t>(
                    (static_cast<unsigned __int128>(r) * G.order()) >> 64);
            }
            local.set(w.evaluate(tuple, ops));
        }
    };
    if (nw == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> threads;
        for (int wi = 0; wi < nw; ++wi)
            threads.emplace_back(run_chunk, wi);
        for (auto& t : threads)
            t.join();
    }
    ElementSet result(G.order());
    for (const ElementSet& part : parts)
        result |= part;
    return result;
}

ElementSet product_set(const ElementSet& a, const ElementSet& b, const GroupTable& G) {
    ElementSet out(G.order());
    std::vector<uint32_t> bi = b.to_indices();
    for (uint32_t x : a.to_indices())
        for (uint32_t y : bi)
            out.set(G.mul(x, y));
    return out;
}

} // namespace wordmap
