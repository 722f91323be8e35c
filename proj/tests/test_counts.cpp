#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordmap/counts.hpp"

using namespace wordmap;

TEST_CASE("commuting-pair count of SL2(F3)") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    // two independent routes: nested-loop count and |G| * #classes
    uint64_t direct = count_Ww(commutator_word(), G);
    CHECK(direct == 168);
    CHECK(direct == static_cast<uint64_t>(G.order()) * conjugacy_classes(G).classes.size());
}

TEST_CASE("W_w of the identity-detecting word x") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    CHECK(count_Ww(parse_plain_word("x"), G) == 1);
}

TEST_CASE("W_w is contained in T_w across the corpus") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    std::vector<Word> corpus;
    for (int m = 1; m <= 6; ++m)
        corpus.push_back(power_word(m));
    corpus.push_back(commutator_word());
    for (int m = 1; m <= 3; ++m)
        corpus.push_back(engel_word(m));
    corpus.push_back(parse_plain_word("[x^2,y^2]"));
    for (const Word& w : corpus)
        CHECK(count_Ww(w, G) <= count_Tw(w, G));
    CHECK(count_Tw(commutator_word(), G) == 168); // frozen nested-loop oracle value
}

TEST_CASE("count_Tw requires SL2") {
    GroupTable G = GroupTable::build(GroupKind::PGL2, FieldSpec::for_q(3));
    CHECK_THROWS_AS(count_Tw(parse_plain_word("x"), G), std::invalid_argument);
}

TEST_CASE("parallel counts match single-threaded counts") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    Word w = commutator_word();
    uint64_t base = count_Ww(w, G, {10'000'000'000ull, 1});
    for (int workers : {2, 5})
        CHECK(count_Ww(w, G, {10'000'000'000ull, workers}) == base);
}

TEST_CASE("trace images") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    uint32_t sigma = G.index_of({2, 1, 1, 1});
    // conjugation word: singleton {tr sigma}
    auto conj = std::get<WordWithConstants>(parse_word("x #1 x^-1"));
    TraceImageReport t = trace_image_with_constants(conj, {sigma}, G);
    CHECK(t.singleton);
    CHECK(t.values == std::vector<uint32_t>{G.trace_of(sigma)});

    // commutator word covers every trace value in F5
    TraceImageReport full = trace_image(commutator_word(), G);
    CHECK(full.values.size() == 5);
    CHECK(full.group_value_count == 5);

    // Thompson word with unipotent sigma: frozen oracle cardinality 3 of 5
    auto th = std::get<WordWithConstants>(parse_word("x #1 x^-1 y #1 y^-1"));
    uint32_t u = G.index_of({1, 1, 0, 1});
    TraceImageReport tu = trace_image_with_constants(th, {u}, G);
    CHECK(tu.values.size() == 3);
    CHECK(!tu.singleton);

    // GL2 is rejected
    GroupTable gl = GroupTable::build(GroupKind::GL2, FieldSpec::for_q(3));
    CHECK_THROWS_AS(trace_image(parse_plain_word("x"), gl), std::invalid_argument);
}

TEST_CASE("pgl2 invariants separate lifted classes") {
    GroupTable G = GroupTable::build(GroupKind::PGL2, FieldSpec::for_q(5));
    auto conj = std::get<WordWithConstants>(parse_word("x #1 x^-1"));
    uint32_t sigma = G.index_of({1, 1, 0, 1});
    TraceImageReport t = trace_image_with_constants(conj, {sigma}, G);
    CHECK(t.singleton);
}

TEST_CASE("element classification") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    const Field& F = G.field();
    uint32_t u = G.index_of({1, 1, 0, 1});
    CHECK(is_unipotent(G, u));
    CHECK(!is_semisimple(G, u));
    CHECK(!is_unipotent(G, G.identity()));
    CHECK(is_semisimple(G, G.identity()));
    uint32_t t = G.index_of({2, 0, 0, 3});
    CHECK(is_semisimple(G, t));
    CHECK(!is_unipotent(G, t));
    uint32_t m1 = G.index_of({F.neg(1), 0, 0, F.neg(1)});
    CHECK(is_semisimple(G, m1));
    // -u has trace -2: neither unipotent nor semisimple
    uint32_t mu = G.index_of({F.neg(1), F.neg(1), 0, F.neg(1)});
    CHECK(!is_unipotent(G, mu));
    CHECK(!is_semisimple(G, mu));

    // characteristic 2: trace-0 non-identity elements with (g-1)^2 = 0
    GroupTable G2 = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(2));
    uint32_t u2 = G2.index_of({1, 1, 0, 1});
    CHECK(is_unipotent(G2, u2));
    CHECK(!is_semisimple(G2, u2));
    uint32_t w2 = G2.index_of({0, 1, 1, 1}); // order 3, trace 1 != 0
    CHECK(is_semisimple(G2, w2));

    // unipotent classes of PGL2: non-scalar representatives with tr^2 = 4 det
    GroupTable P = GroupTable::build(GroupKind::PGL2, FieldSpec::for_q(5));
    CHECK(is_unipotent(P, P.index_of({1, 1, 0, 1})));
    CHECK(!is_unipotent(P, P.identity()));
    CHECK(!is_unipotent(P, P.index_of({2, 0, 0, 3})));
}

TEST_CASE("image stats") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    // trivial image
    ElementSet triv(G.order());
    triv.set(G.identity());
    ImageStats st = image_stats(triv, G);
    CHECK(st.unipotent_count == 0);
    CHECK(!st.contains_minus_one);
    CHECK(!st.nontrivial_unipotent_present);
    CHECK(st.classes_met == 1);
    CHECK(st.class_count == 7);

    // frozen nested-loop classification for the squares of SL2(F3)
    ElementSet sq = word_image(parse_plain_word("x^2"), G);
    ImageStats sq_st = image_stats(sq, G);
    CHECK(sq_st.minus_one_defined);
    CHECK(sq_st.contains_minus_one);
    CHECK(sq_st.unipotent_count == 8);
    CHECK(sq_st.nontrivial_unipotent_present);
    CHECK(sq_st.semisimple_invariants_in_image == 2);
    CHECK(sq_st.semisimple_invariants_in_group == 3);
    CHECK(sq_st.classes_met == 4);

    // independent per-element classification cross-check
    uint64_t unip = 0;
    for (uint32_t g : sq.to_indices()) {
        const Mat2& m = G.element(g);
        const Field& F = G.field();
        bool trace2 = F.add(m.a, m.d) == F.from_int(2);
        if (trace2 && g != G.identity())
            ++unip;
    }
    CHECK(unip == sq_st.unipotent_count);
}

TEST_CASE("identities with constants") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    uint32_t sigma = G.index_of({2, 1, 1, 1});
    // x^{|G|} #1 x^{-|G|} #1^-1 is a finite-exponent artifact identity
    std::string text = "x^" + std::to_string(G.order()) + " #1 x^-" + std::to_string(G.order()) +
                       " #1^-1";
    auto artifact = std::get<WordWithConstants>(parse_word(text));
    CHECK(is_identity_with_constants(artifact, {sigma}, G));
    // x #1 x^-1 #1^-1 is not an identity for non-central sigma
    auto comm = std::get<WordWithConstants>(parse_word("x #1 x^-1 #1^-1"));
    CHECK(!is_identity_with_constants(comm, {sigma}, G));
}

TEST_CASE("identity scan finds nothing at small weight over SL2(F5)") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    for (Mat2 m : {Mat2{1, 1, 0, 1}, Mat2{2, 1, 1, 1}}) {
        IdentityScanResult res = identity_scan(G, G.index_of(m), 6);
        CHECK(res.candidates > 0);
        CHECK(res.identities.empty());
    }
    uint32_t central = G.index_of({G.field().neg(1), 0, 0, G.field().neg(1)});
    CHECK_THROWS_AS(identity_scan(G, central, 4), std::invalid_argument);
}
