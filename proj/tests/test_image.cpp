#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordmap/conjugacy.hpp"
#include "wordmap/image.hpp"

using namespace wordmap;

namespace {

/// Naive single-threaded oracle, independent of word_image's chunked
/// engine: direct base-|G| odometer and letter-by-letter products.
ElementSet naive_image(const Word& w, const GroupTable& G) {
    ElementSet out(G.order());
    int n = w.arity();
    std::vector<uint32_t> tuple(static_cast<std::size_t>(n), 0);
    uint64_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= G.order();
    for (uint64_t it = 0; it < total; ++it) {
        uint32_t acc = G.identity();
        for (const Letter& l : w.letters())
            acc = G.mul(acc, G.pow(tuple[static_cast<std::size_t>(l.gen - 1)], l.exp));
        out.set(acc);
        for (int i = 0; i < n; ++i) {
            std::size_t j = static_cast<std::size_t>(i);
            if (++tuple[j] < G.order())
                break;
            tuple[j] = 0;
        }
    }
    return out;
}

} // namespace

TEST_CASE("identity word maps onto the whole group") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    CHECK(word_image(parse_plain_word("x"), G).is_full());
    CHECK(word_image(parse_plain_word("x"), G).count() == 120);
}

TEST_CASE("squares in SL2(F3)") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    ElementSet image = word_image(parse_plain_word("x^2"), G);
    CHECK(image == naive_image(parse_plain_word("x^2"), G));
    CHECK(image.count() == 10); // frozen from the naive two-loop oracle
}

TEST_CASE("parallel chunks give bit-identical images") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    for (const char* text : {"[x,y]", "x^4", "[x^2,y^2]"}) {
        Word w = parse_plain_word(text);
        ElementSet base = word_image(w, G, {10'000'000'000ull, 1});
        for (int workers : {2, 3, 8})
            CHECK(word_image(w, G, {10'000'000'000ull, workers}) == base);
        CHECK(base == naive_image(w, G));
    }
}

TEST_CASE("budget refusal points at sampling") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    CHECK_THROWS_AS(word_image(parse_plain_word("[x,y]"), G, {100, 1}), BudgetExceeded);
    try {
        word_image(parse_plain_word("[x,y]"), G, {100, 1});
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("sampled_image") != std::string::npos);
    }
}

TEST_CASE("sampled image is a reproducible subset") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    Word w = parse_plain_word("[x,y]");
    ElementSet exact = word_image(w, G);
    ElementSet s1 = sampled_image(w, G, 500, 42);
    CHECK(s1.is_subset_of(exact));
    CHECK(s1 == sampled_image(w, G, 500, 42));
    CHECK(s1 == sampled_image(w, G, 500, 42, 4)); // worker count cannot matter
    ElementSet single = sampled_image(parse_plain_word("x"), G, 1, 7);
    CHECK(single.count() == 1);
    // engel 2 with a modest sample count still lands inside the image
    ElementSet e2 = sampled_image(engel_word(2), G, 2000, 1);
    CHECK(e2.is_subset_of(word_image(engel_word(2), G)));
}

TEST_CASE("one is always in the image and images are conjugation invariant") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    for (const char* text : {"[x,y]", "x^2", "x^3", "[y,[y,x]]"}) {
        ElementSet image = word_image(parse_plain_word(text), G);
        CHECK(image.test(G.identity()));
        for (uint32_t h = 0; h < G.order(); h += 5)
            for (uint32_t g : image.to_indices())
                CHECK(image.test(G.conjugate(h, g)));
    }
}

TEST_CASE("nielsen equivalent words have equal images") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    Word x = parse_plain_word("x1", 2);
    Word xy = x.nielsen_right_multiply(1, 2); // x -> xy
    CHECK(word_image(x, G) == word_image(xy, G));
    // a longer random chain of moves
    Word w = parse_plain_word("[x,y]");
    Word moved = w.nielsen_swap(1, 2).nielsen_invert(1).nielsen_right_multiply(2, 1);
    CHECK(word_image(w, G) == word_image(moved, G));
}

TEST_CASE("disjoint products multiply images") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    Word w = parse_plain_word("x^2");
    Word disjoint = w * w.shifted(1); // x1^2 x2^2
    ElementSet im = word_image(w, G);
    CHECK(word_image(disjoint, G) == product_set(im, im, G));
}

TEST_CASE("images of words with constants") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    uint32_t sigma = G.index_of({1, 1, 0, 1});
    auto conj = std::get<WordWithConstants>(parse_word("x #1 x^-1"));
    ElementSet image = word_image_with_constants(conj, {sigma}, G);
    // exactly the conjugacy class of sigma
    ClassPartition part = conjugacy_classes(G);
    CHECK(image == part.classes[part.class_of[sigma]].members);

    // Thompson word image = C_sigma * C_sigma
    auto th = std::get<WordWithConstants>(parse_word("x #1 x^-1 y #1 y^-1"));
    ElementSet th_image = word_image_with_constants(th, {sigma}, G);
    const ElementSet& cls = part.classes[part.class_of[sigma]].members;
    CHECK(th_image == product_set(cls, cls, G));
    CHECK(th_image.count() == 45); // frozen from the product-set oracle

    // w tau w^-1 lands inside the class of tau
    auto conj_tau = std::get<WordWithConstants>(parse_word("x y #1 y^-1 x^-1"));
    uint32_t tau = G.index_of({2, 0, 0, 3});
    ElementSet tau_image = word_image_with_constants(conj_tau, {tau}, G);
    CHECK(tau_image.is_subset_of(part.classes[part.class_of[tau]].members));

    // central constants are rejected under the strict flag
    uint32_t central = G.index_of({4, 0, 0, 4}); // -I
    CHECK_THROWS_AS(word_image_with_constants(conj, {central}, G), std::invalid_argument);
    CHECK_NOTHROW(word_image_with_constants(conj, {central}, G, false));
}
