#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordmap/image.hpp"
#include "wordmap/word.hpp"

using namespace wordmap;

namespace {

std::vector<Letter> random_raw(uint64_t seed, int len, int arity) {
    std::vector<Letter> out;
    for (int i = 0; i < len; ++i) {
        uint64_t r = splitmix64_at(seed, static_cast<uint64_t>(i));
        int gen = static_cast<int>(r % static_cast<uint64_t>(arity)) + 1;
        int exp = static_cast<int>((r >> 32) % 5) - 2;
        out.push_back({gen, exp});
    }
    return out;
}

} // namespace

TEST_CASE("free reduction") {
    // x y y^-1 x -> x^2
    Word w({{1, 1}, {2, 1}, {2, -1}, {1, 1}});
    CHECK(w.letters() == std::vector<Letter>{{1, 2}});
    CHECK(Word(std::vector<Letter>{}).empty());
    // x y x^-1 x y^-1 -> x
    Word v({{1, 1}, {2, 1}, {1, -1}, {1, 1}, {2, -1}});
    CHECK(v.letters() == std::vector<Letter>{{1, 1}});
}

TEST_CASE("free_reduce is idempotent and length-nonincreasing") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        auto raw = random_raw(seed, 12, 3);
        auto once = free_reduce(raw);
        CHECK(free_reduce(once) == once);
        std::size_t raw_len = 0, red_len = 0;
        for (const Letter& l : raw)
            raw_len += static_cast<std::size_t>(std::abs(l.exp));
        for (const Letter& l : once)
            red_len += static_cast<std::size_t>(std::abs(l.exp));
        CHECK(red_len <= raw_len);
    }
}

TEST_CASE("parsing the spec grammar") {
    Word comm = parse_plain_word("[x1,x2]");
    CHECK(comm.letters() == std::vector<Letter>{{1, 1}, {2, 1}, {1, -1}, {2, -1}});
    CHECK(comm.arity() == 2);

    CHECK(parse_plain_word("x1^3 * x1^-3").empty());

    auto thompson = std::get<WordWithConstants>(parse_word("x1 #1 x1^-1 x2 #1 x2^-1"));
    CHECK(thompson.num_slots() == 2);
    CHECK(thompson.num_constants() == 1);
    CHECK(thompson.slots()[0] == ConstSlot{1, 1});
    CHECK(!thompson.words()[1].empty()); // interior word nonempty

    // named variables map to x1..x5
    CHECK(parse_plain_word("x y z u v").arity() == 5);
    CHECK(parse_plain_word("[x,y]") == parse_plain_word("[x1,x2]"));
    // juxtaposition and explicit * agree
    CHECK(parse_plain_word("x y") == parse_plain_word("x*y"));
    // parentheses and powers
    CHECK(parse_plain_word("(x y)^2") == parse_plain_word("x y x y"));
    CHECK(parse_plain_word("(x y)^-1") == parse_plain_word("y^-1 x^-1"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_plain_word("x^0"), ParseError);
    CHECK_THROWS_AS(parse_plain_word("#0"), ParseError);
    CHECK_THROWS_AS(parse_plain_word("[x,y"), ParseError);
    CHECK_THROWS_AS(parse_plain_word("x )"), ParseError);
    CHECK_THROWS_AS(parse_plain_word(""), ParseError);
    CHECK_THROWS_AS(parse_plain_word("q"), ParseError);
    try {
        parse_plain_word("x ^ 0");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("abelianization") {
    CHECK(parse_plain_word("[x,y]").abelianization() == std::vector<long>{0, 0});
    CHECK(parse_plain_word("x^2 y^-1").abelianization() == std::vector<long>{2, -1});
    CHECK(parse_plain_word("x y x").abelianization() == std::vector<long>{2, 1});
    CHECK(parse_plain_word("[x,y]").in_derived_subgroup());
    CHECK(!parse_plain_word("x y x").in_derived_subgroup());
}

TEST_CASE("families") {
    CHECK(power_word(3) == parse_plain_word("x^3"));
    CHECK_THROWS_AS(power_word(0), std::invalid_argument);
    CHECK(engel_word(1) == parse_plain_word("y x y^-1 x^-1")); // [y,x]
    CHECK(engel_word(2) == parse_plain_word("[y,[y,x]]"));
    CHECK(engel_word(1).arity() == 2);
    CHECK_THROWS_AS(engel_word(0), std::invalid_argument);
    CHECK(multi_commutator_word({1, 2}) == commutator_word());
    CHECK(multi_commutator_word({1, 2, 3}) == parse_plain_word("[[x,y],z]"));
}

TEST_CASE("shift_variables") {
    Word c = parse_plain_word("[x1,x2]");
    CHECK(c.shifted(2) == parse_plain_word("[x3,x4]"));
    CHECK(parse_plain_word("x1").shifted(0) == parse_plain_word("x1"));
    Word prod = parse_plain_word("x1^2").shifted(1) * parse_plain_word("x1^2");
    CHECK(prod == parse_plain_word("x2^2 x1^2"));
    CHECK(prod.arity() == 2);
}

TEST_CASE("evaluation over SL2") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    auto ops = G.ops();
    uint32_t g = G.index_of({1, 1, 0, 1});
    // unipotent power: x^3 at [[1,1],[0,1]] = [[1,3],[0,1]]
    CHECK(parse_plain_word("x^3").evaluate({g}, ops) == G.index_of({1, 3, 0, 1}));
    // [g,g] = 1
    for (uint32_t h : {g, G.index_of({2, 1, 1, 1})})
        CHECK(parse_plain_word("[x,y]").evaluate({h, h}, ops) == G.identity());
    // engel 1 = t h t^-1 h^-1
    uint32_t t = G.index_of({2, 0, 0, 3});
    uint32_t lhs = engel_word(1).evaluate({g, t}, ops);
    uint32_t rhs = G.mul(G.mul(t, g), G.mul(G.inv(t), G.inv(g)));
    CHECK(lhs == rhs);
    // evaluate at the identity tuple is the identity, for several words
    for (const char* text : {"[x,y]", "x^5", "[[x,y],z]", "x y^2 x^-1"}) {
        Word w = parse_plain_word(text);
        std::vector<uint32_t> ones(static_cast<std::size_t>(w.arity()), G.identity());
        CHECK(w.evaluate(ones, ops) == G.identity());
    }
    CHECK_THROWS_AS(parse_plain_word("x y").evaluate({g}, ops), std::invalid_argument);
}

TEST_CASE("evaluate respects free reduction") {
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(3));
    auto ops = G.ops();
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        auto raw = random_raw(seed, 10, 2);
        Word reduced(raw);
        std::vector<uint32_t> tuple{
            static_cast<uint32_t>(splitmix64_at(seed, 100) % G.order()),
            static_cast<uint32_t>(splitmix64_at(seed, 101) % G.order())};
        // raw left-to-right product
        uint32_t acc = G.identity();
        for (const Letter& l : raw)
            acc = G.mul(acc, G.pow(tuple[static_cast<std::size_t>(l.gen - 1)], l.exp));
        CHECK(acc == reduced.evaluate(tuple, ops));
    }
}

TEST_CASE("words with constants") {
    auto wc = std::get<WordWithConstants>(parse_word("x #1 x^-1"));
    GroupTable G = GroupTable::build(GroupKind::SL2, FieldSpec::for_q(5));
    auto ops = G.ops();
    uint32_t sigma = G.index_of({1, 1, 0, 1});
    // x = identity -> sigma
    CHECK(wc.evaluate({G.identity()}, {sigma}, ops) == sigma);
    // commuting x -> identity for x #1 x^-1 #1^-1
    auto wc2 = std::get<WordWithConstants>(parse_word("x #1 x^-1 #1^-1"));
    CHECK(wc2.evaluate({sigma}, {sigma}, ops) == G.identity());
    // Thompson word at (1,1) -> sigma^2
    auto th = std::get<WordWithConstants>(parse_word("x #1 x^-1 y #1 y^-1"));
    CHECK(th.evaluate({G.identity(), G.identity()}, {sigma}, ops) == G.mul(sigma, sigma));
    CHECK_THROWS_AS(th.evaluate({G.identity(), G.identity()}, {sigma, sigma}, ops),
                    std::invalid_argument);
    // adjacent same-constant powers merge: x #1 x^-1 x #1 x^-1 -> x #1^2 x^-1
    auto merged = std::get<WordWithConstants>(parse_word("x #1 x^-1 x #1 x^-1"));
    CHECK(merged.num_slots() == 1);
    CHECK(merged.slots()[0] == ConstSlot{1, 2});
    // distinct adjacent constants are rejected
    CHECK_THROWS_AS(parse_word("#1 #2"), std::invalid_argument);
    // inversion
    auto inv = std::get<WordWithConstants>(parse_word("(x #1 y)^-1"));
    CHECK(inv == std::get<WordWithConstants>(parse_word("y^-1 #1^-1 x^-1")));
}

TEST_CASE("nielsen transformations") {
    Word w = parse_plain_word("x y^-1 x");
    CHECK(w.nielsen_swap(1, 2) == parse_plain_word("y x^-1 y"));
    CHECK(w.nielsen_invert(2) == parse_plain_word("x y x"));
    // x -> xy turns x into xy
    CHECK(parse_plain_word("x").nielsen_right_multiply(1, 2) == parse_plain_word("x y"));
    // inverse letters expand correctly: x^-1 -> y^-1 x^-1
    CHECK(parse_plain_word("x^-1").nielsen_right_multiply(1, 2) ==
          parse_plain_word("y^-1 x^-1"));
}

TEST_CASE("arity hints") {
    Word w = parse_plain_word("x1", 3);
    CHECK(w.arity() == 3);
    CHECK(w.abelianization() == std::vector<long>{1, 0, 0});
}
