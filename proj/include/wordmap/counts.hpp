#ifndef WORDMAP_COUNTS_HPP
#define WORDMAP_COUNTS_HPP

#include "wordmap/conjugacy.hpp"
#include "wordmap/image.hpp"

namespace wordmap {

/// |W_w| = #{tuples with w(tuple) = 1}.
uint64_t count_Ww(const Word& w, const GroupTable& G, const ImageOptions& opt = {});

/// |T_w| = #{tuples with tr w(tuple) = 2}; SL2 only. W_w is always a
/// subset of T_w.
uint64_t count_Tw(const Word& w, const GroupTable& G, const ImageOptions& opt = {});

struct TraceImageReport {
    std::vector<uint32_t> values;  // distinct invariant values, ascending
    bool singleton;
    uint32_t group_value_count;    // #distinct invariants over the whole group
};

/// Set of trace values (SL2) or tr^2/det values of lifts (PGL2/PSL2)
/// attained by the word map. GL2 is rejected (rank-one kinds only).
TraceImageReport trace_image(const Word& w, const GroupTable& G, const ImageOptions& opt = {});
TraceImageReport trace_image_with_constants(const WordWithConstants& wc,
                                            const std::vector<uint32_t>& sigma,
                                            const GroupTable& G, bool strict = true,
                                            const ImageOptions& opt = {});

/// True iff g is unipotent: g != 1 and (g-1) nilpotent (equivalently
/// trace 2 for SL2 away from characteristic 2; for PGL2 a non-scalar
/// representative with tr^2 = 4 det).
bool is_unipotent(const GroupTable& G, uint32_t g);
/// True iff g is semisimple: central, or distinct eigenvalues over the
/// quadratic extension (separable characteristic polynomial).
bool is_semisimple(const GroupTable& G, uint32_t g);

struct ImageStats {
    bool minus_one_defined;   // only SL2 has a central -1
    bool contains_minus_one;
    uint64_t unipotent_count;
    bool nontrivial_unipotent_present;
    uint32_t semisimple_invariants_in_image;
    uint32_t semisimple_invariants_in_group;
    uint32_t classes_met;
    uint32_t class_count;
};

ImageStats image_stats(const ElementSet& image, const GroupTable& G);

/// True iff the word with constants evaluates to 1 on all of G^n.
bool is_identity_with_constants(const WordWithConstants& wc, const std::vector<uint32_t>& sigma,
                                const GroupTable& G, const ImageOptions& opt = {});

struct IdentityScanResult {
    uint64_t candidates = 0;
    std::vector<std::string> identities; // textual form of any identities found
};

/// Scans one-variable words with constants x^{a_0} s^{b_1} x^{a_1} ...
/// (alternating nonzero syllables, at least one x and one s syllable)
/// of total syllable weight <= max_weight against the single constant
/// sigma, and reports every identity found.
IdentityScanResult identity_scan(const GroupTable& G, uint32_t sigma, unsigned max_weight,
                                 const ImageOptions& opt = {});

} // namespace wordmap

#endif
