#ifndef WORDMAP_WORD_HPP
#define WORDMAP_WORD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wordmap {

/// One syllable x_gen^exp of a reduced word. gen is 1-based, exp != 0.
struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in F_n. Immutable value; constructors reduce
/// eagerly, so equal words compare equal structurally.
class Word {
public:
    Word() = default;
    /// Reduces the raw letter sequence. arity = max generator index
    /// used, or arity_hint if larger.
    explicit Word(std::vector<Letter> raw, int arity_hint = 0);

    static Word generator(int gen, int exp = 1) { return Word({{gen, exp}}); }
    static Word commutator(const Word& a, const Word& b);

    const std::vector<Letter>& letters() const { return letters_; }
    int arity() const { return arity_; }
    bool empty() const { return letters_.empty(); }
    /// Number of group letters counted with multiplicity (sum |exp|).
    std::size_t length() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }

    Word inverse() const;
    Word operator*(const Word& o) const;
    Word pow(int e) const;

    std::vector<long> abelianization() const;
    bool in_derived_subgroup() const;

    /// Renames x_i -> x_{i+offset}; arity grows by offset.
    Word shifted(int offset) const;

    /// Elementary Nielsen transformations (generators of Aut(F_n)).
    Word nielsen_swap(int i, int j) const;
    Word nielsen_invert(int i) const;
    /// x_i -> x_i x_j (i != j), other generators fixed.
    Word nielsen_right_multiply(int i, int j) const;

    std::string to_string() const;

    /// Left-to-right evaluation over any group presented as an Ops
    /// object with Element, identity(), multiply(a,b), invert(a).
    template <typename Ops>
    typename Ops::Element evaluate(const std::vector<typename Ops::Element>& tuple,
                                   const Ops& ops) const {
        if (static_cast<int>(tuple.size()) < arity_)
            throw std::invalid_argument("evaluate: tuple shorter than word arity");
        auto acc = ops.identity();
        for (const Letter& l : letters_) {
            auto base = tuple[static_cast<std::size_t>(l.gen - 1)];
            int e = l.exp;
            if (e < 0) {
                base = ops.invert(base);
                e = -e;
            }
            // square-and-multiply keeps x^|G| style exponents cheap
            auto p = ops.identity();
            while (e) {
                if (e & 1)
                    p = ops.multiply(p, base);
                if (e >>= 1)
                    base = ops.multiply(base, base);
            }
            acc = ops.multiply(acc, p);
        }
        return acc;
    }

private:
    std::vector<Letter> letters_;
    int arity_ = 0;
};

/// One constant position inside a word with constants: sigma_index^exp.
struct ConstSlot {
    int index; // 1-based index into the constant tuple Sigma
    int exp;   // != 0
    bool operator==(const ConstSlot&) const = default;
};

/// Word with constants w_1 c_1 w_2 c_2 ... w_r c_r w_{r+1}, an element
/// of G * F_n. Interior words w_2..w_r are nonempty (generalized
/// monomial); adjacent powers of the same constant are merged. The
/// constant tuple length required for evaluation is the largest slot
/// index referenced.
class WordWithConstants {
public:
    WordWithConstants() = default;
    /// words.size() must be slots.size() + 1. Canonicalizes; throws if
    /// two distinct constants end up adjacent.
    WordWithConstants(std::vector<Word> words, std::vector<ConstSlot> slots, int arity_hint = 0);

    const std::vector<Word>& words() const { return words_; }
    const std::vector<ConstSlot>& slots() const { return slots_; }
    int arity() const { return arity_; }
    /// Number of constant positions (r).
    int num_slots() const { return static_cast<int>(slots_.size()); }
    /// Required length of the constant tuple = max referenced index.
    int num_constants() const;

    bool operator==(const WordWithConstants&) const = default;

    WordWithConstants inverse() const;
    WordWithConstants operator*(const WordWithConstants& o) const;
    WordWithConstants pow(int e) const;
    static WordWithConstants commutator(const WordWithConstants& a, const WordWithConstants& b);
    static WordWithConstants from_word(Word w);

    std::string to_string() const;

    template <typename Ops>
    typename Ops::Element evaluate(const std::vector<typename Ops::Element>& tuple,
                                   const std::vector<typename Ops::Element>& constants,
                                   const Ops& ops) const {
        if (static_cast<int>(constants.size()) != num_constants())
            throw std::invalid_argument("evaluate: constant tuple length mismatch");
        auto acc = words_.front().evaluate(tuple, ops);
        for (std::size_t j = 0; j < slots_.size(); ++j) {
            auto sigma = constants[static_cast<std::size_t>(slots_[j].index - 1)];
            int e = slots_[j].exp;
            if (e < 0) {
                sigma = ops.invert(sigma);
                e = -e;
            }
            for (int k = 0; k < e; ++k)
                acc = ops.multiply(acc, sigma);
            acc = ops.multiply(acc, words_[j + 1].evaluate(tuple, ops));
        }
        return acc;
    }

private:
    void canonicalize();

    std::vector<Word> words_;      // size slots_+1
    std::vector<ConstSlot> slots_;
    int arity_ = 0;
};

/// Raised by parse_word with the 0-based position of the offending
/// character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

using ParsedWord = std::variant<Word, WordWithConstants>;

/// Grammar:
///   expr := term { "*"? term }
///   term := atom [ "^" int ]
///   atom := var | const | "[" expr "," expr "]" | "(" expr ")"
///   var  := "x" digits | one of x y z u v (indices 1..5)
///   const:= "#" digits
/// Exponents are nonzero integers; whitespace is ignored.
ParsedWord parse_word(const std::string& text, std::optional<int> arity_hint = std::nullopt);

/// Convenience: parse and require a plain word (no constants).
Word parse_plain_word(const std::string& text, std::optional<int> arity_hint = std::nullopt);

/// Word families.
Word power_word(int m);                                // x^m, m >= 1
Word commutator_word();                                // [x,y]
Word engel_word(int m);                                // [y,[y,...[y,x]...]], m >= 1
Word multi_commutator_word(const std::vector<int>& gens); // [[x_a,x_b],x_c]... left-nested

/// Reduce a raw letter sequence (exposed for tests; Word's constructor
/// uses the same routine).
std::vector<Letter> free_reduce(std::vector<Letter> raw);

} // namespace wordmap

#endif
