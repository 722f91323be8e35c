#ifndef WORDMAP_IMAGE_HPP
#define WORDMAP_IMAGE_HPP

#include <stdexcept>

#include "wordmap/group_table.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

/// Refusal to enumerate G^n past the configured budget. Mapped to exit
/// code 2 by the CLI so sweeps can skip-and-continue.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ImageOptions {
    uint64_t budget = 10'000'000'000ull; // bound on |G|^arity
    int workers = 1;
};

/// Number of tuples |G|^n, or throws BudgetExceeded.
uint64_t tuple_space_size(const GroupTable& G, int arity, uint64_t budget);

/// Exact image of the word map over all tuples in G^n. The tuple index
/// space is split into contiguous chunks merged by bitwise or, so the
/// result is identical for any worker count.
ElementSet word_image(const Word& w, const GroupTable& G, const ImageOptions& opt = {});

/// Union of w(tuple) over `samples` pseudo-random tuples drawn from a
/// counter-based generator keyed by seed; a reproducible lower bound
/// for the true image.
ElementSet sampled_image(const Word& w, const GroupTable& G, uint64_t samples, uint64_t seed,
                         int workers = 1);

/// Exact image of a word with constants; sigma holds element indices
/// for the referenced constants. With strict=true (the paper's
/// definition) central constants are rejected.
ElementSet word_image_with_constants(const WordWithConstants& wc,
                                     const std::vector<uint32_t>& sigma, const GroupTable& G,
                                     bool strict = true, const ImageOptions& opt = {});

/// Elementwise product set {a*b : a in A, b in B}.
ElementSet product_set(const ElementSet& a, const ElementSet& b, const GroupTable& G);

/// Counter-based generator: value of counter `ctr` under key `seed`.
uint64_t splitmix64_at(uint64_t seed, uint64_t ctr);

} // namespace wordmap

#endif
