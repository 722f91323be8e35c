#include "wordmap/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wordmap {

std::vector<Letter> free_reduce(std::vector<Letter> raw) {
    std::vector<Letter> out;
    for (const Letter& l : raw) {
        if (l.exp == 0)
            continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0)
                out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word::Word(std::vector<Letter> raw, int arity_hint) {
    for (const Letter& l : raw)
        if (l.gen < 1)
            throw std::invalid_argument("Word: generator index must be >= 1");
    letters_ = free_reduce(std::move(raw));
    arity_ = arity_hint;
    for (const Letter& l : letters_)
        arity_ = std::max(arity_, l.gen);
}

std::size_t Word::length() const {
    std::size_t n = 0;
    for (const Letter& l : letters_)
        n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
}

Word Word::inverse() const {
    std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
    for (Letter& l : rev)
        l.exp = -l.exp;
    Word w;
    w.letters_ = std::move(rev); // reversal of a reduced word is reduced
    w.arity_ = arity_;
    return w;
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(cat), std::max(arity_, o.arity_));
}

Word Word::pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    Word acc;
    acc.arity_ = arity_;
    for (int i = 0; i < n; ++i)
        acc = acc * base;
    return acc;
}

Word Word::commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

std::vector<long> Word::abelianization() const {
    std::vector<long> v(static_cast<std::size_t>(arity_), 0);
    for (const Letter& l : letters_)
        v[static_cast<std::size_t>(l.gen - 1)] += l.exp;
    return v;
}

bool Word::in_derived_subgroup() const {
    auto v = abelianization();
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

Word Word::shifted(int offset) const {
    if (offset < 0)
        throw std::invalid_argument("shifted: offset must be >= 0");
    std::vector<Letter> ls = letters_;
    for (Letter& l : ls)
        l.gen += offset;
    return Word(std::move(ls), arity_ + offset);
}

Word Word::nielsen_swap(int i, int j) const {
    std::vector<Letter> ls = letters_;
    for (Letter& l : ls) {
        if (l.gen == i)
            l.gen = j;
        else if (l.gen == j)
            l.gen = i;
    }
    return Word(std::move(ls), arity_);
}

Word Word::nielsen_invert(int i) const {
    std::vector<Letter> ls = letters_;
    for (Letter& l : ls)
        if (l.gen == i)
            l.exp = -l.exp;
    return Word(std::move(ls), arity_);
}

Word Word::nielsen_right_multiply(int i, int j) const {
    if (i == j)
        throw std::invalid_argument("nielsen_right_multiply: i and j must differ");
    std::vector<Letter> ls;
    for (const Letter& l : letters_) {
        if (l.gen != i) {
            ls.push_back(l);
            continue;
        }
        // x_i^e -> (x_i x_j)^e, expanded letter by letter
        int e = l.exp;
        int step = e < 0 ? -1 : 1;
        for (int k = 0; k != e; k += step) {
            if (step > 0) {
                ls.push_back({i, 1});
                ls.push_back({j, 1});
            } else {
                ls.push_back({j, -1});
                ls.push_back({i, -1});
            }
        }
    }
    return Word(std::move(ls), std::max(arity_, j));
}

std::string Word::to_string() const {
    if (letters_.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const Letter& l : letters_) {
        if (!first)
            out << "*";
        first = false;
        out << "x" << l.gen;
        if (l.exp != 1)
            out << "^" << l.exp;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Words with constants

WordWithConstants::WordWithConstants(std::vector<Word> words, std::vector<ConstSlot> slots,
                                     int arity_hint)
    : words_(std::move(words)), slots_(std::move(slots)), arity_(arity_hint) {
    if (words_.size() != slots_.size() + 1)
        throw std::invalid_argument("WordWithConstants: need one more word than slots");
    for (const ConstSlot& s : slots_)
        if (s.index < 1)
            throw std::invalid_argument("WordWithConstants: constant index must be >= 1");
    canonicalize();
    for (const Word& w : words_)
        arity_ = std::max(arity_, w.arity());
}

void WordWithConstants::canonicalize() {
    // Drop zero-exponent slots, splice the surrounding words, and merge
    // adjacent powers of the same constant until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < slots_.size(); ++j) {
            if (slots_[j].exp == 0) {
                words_[j] = words_[j] * words_[j + 1];
                words_.erase(words_.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                slots_.erase(slots_.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
                break;
            }
            if (j + 1 < slots_.size() && words_[j + 1].empty()) {
                if (slots_[j].index != slots_[j + 1].index)
                    throw std::invalid_argument(
                        "WordWithConstants: empty interior word between distinct constants");
                slots_[j].exp += slots_[j + 1].exp;
                words_.erase(words_.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                slots_.erase(slots_.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                changed = true;
                break;
            }
        }
    }
}

int WordWithConstants::num_constants() const {
    int m = 0;
    for (const ConstSlot& s : slots_)
        m = std::max(m, s.index);
    return m;
}

WordWithConstants WordWithConstants::from_word(Word w) {
    WordWithConstants wc;
    int arity = w.arity();
    wc.words_.push_back(std::move(w));
    wc.arity_ = arity;
    return wc;
}

WordWithConstants WordWithConstants::inverse() const {
    std::vector<Word> words(words_.rbegin(), words_.rend());
    for (Word& w : words)
        w = w.inverse();
    std::vector<ConstSlot> slots(slots_.rbegin(), slots_.rend());
    for (ConstSlot& s : slots)
        s.exp = -s.exp;
    return WordWithConstants(std::move(words), std::move(slots), arity_);
}

WordWithConstants WordWithConstants::operator*(const WordWithConstants& o) const {
    std::vector<Word> words(words_.begin(), words_.end() - 1);
    words.push_back(words_.back() * o.words_.front());
    words.insert(words.end(), o.words_.begin() + 1, o.words_.end());
    std::vector<ConstSlot> slots = slots_;
    slots.insert(slots.end(), o.slots_.begin(), o.slots_.end());
    return WordWithConstants(std::move(words), std::move(slots), std::max(arity_, o.arity_));
}

WordWithConstants WordWithConstants::pow(int e) const {
    WordWithConstants base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    WordWithConstants acc = from_word(Word());
    acc.arity_ = arity_;
    for (int i = 0; i < n; ++i)
        acc = acc * base;
    return acc;
}

WordWithConstants WordWithConstants::commutator(const WordWithConstants& a,
                                                const WordWithConstants& b) {
    return a * b * a.inverse() * b.inverse();
}

std::string WordWithConstants::to_string() const {
    std::ostringstream out;
    bool printed = false;
    auto put = [&](const std::string& s) {
        if (printed)
            out << "*";
        out << s;
        printed = true;
    };
    for (std::size_t j = 0; j < words_.size(); ++j) {
        if (!words_[j].empty())
            put(words_[j].to_string());
        if (j < slots_.size()) {
            std::string s = "#" + std::to_string(slots_[j].index);
            if (slots_[j].exp != 1)
                s += "^" + std::to_string(slots_[j].exp);
            put(s);
        }
    }
    if (!printed)
        return "1";
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    WordWithConstants parse() {
        WordWithConstants e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool atom_ahead() {
        skip_ws();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == '[' || c == '(' || c == '#' || std::string("xyzuv").find(c) != std::string::npos;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(pos_, std::string("expected '") + c + "' " + what);
        ++pos_;
    }

    long parse_int(bool nonzero, const char* what) {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, std::string("expected integer ") + what);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000)
                throw ParseError(start, "integer literal too large");
            ++pos_;
        }
        if (neg)
            v = -v;
        if (nonzero && v == 0)
            throw ParseError(start, std::string("zero ") + what);
        return v;
    }

    WordWithConstants parse_expr() {
        WordWithConstants acc = parse_term();
        while (true) {
            if (peek_is('*')) {
                ++pos_;
                acc = acc * parse_term();
            } else if (atom_ahead()) {
                acc = acc * parse_term();
            } else {
                return acc;
            }
        }
    }

    WordWithConstants parse_term() {
        WordWithConstants a = parse_atom();
        if (peek_is('^')) {
            ++pos_;
            long e = parse_int(true, "exponent literal");
            a = a.pow(static_cast<int>(e));
        }
        return a;
    }

    WordWithConstants parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            WordWithConstants e = parse_expr();
            expect(')', "to close group");
            return e;
        }
        if (c == '[') {
            ++pos_;
            WordWithConstants a = parse_expr();
            expect(',', "between commutator arguments");
            WordWithConstants b = parse_expr();
            expect(']', "to close commutator");
            return WordWithConstants::commutator(a, b);
        }
        if (c == '#') {
            std::size_t at = pos_;
            ++pos_;
            long idx = parse_int(false, "constant index");
            if (idx < 1)
                throw ParseError(at, "constant index must be >= 1");
            return WordWithConstants({Word(), Word()}, {{static_cast<int>(idx), 1}});
        }
        if (c == 'x') {
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                std::size_t at = pos_;
                long idx = parse_int(false, "variable index");
                if (idx == 0)
                    throw ParseError(at, "variable index must be >= 1");
                return WordWithConstants::from_word(Word::generator(static_cast<int>(idx)));
            }
            return WordWithConstants::from_word(Word::generator(1));
        }
        std::size_t named = std::string("xyzuv").find(c);
        if (named != std::string::npos) {
            ++pos_;
            return WordWithConstants::from_word(Word::generator(static_cast<int>(named) + 1));
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

ParsedWord parse_word(const std::string& text, std::optional<int> arity_hint) {
    Parser p(text);
    WordWithConstants wc = p.parse();
    int hint = arity_hint.value_or(0);
    if (wc.num_slots() == 0) {
        Word w = wc.words().front();
        if (hint > w.arity()) {
            std::vector<Letter> ls = w.letters();
            return Word(std::move(ls), hint);
        }
        return w;
    }
    if (hint > wc.arity())
        return WordWithConstants(wc.words(), wc.slots(), hint);
    return wc;
}

Word parse_plain_word(const std::string& text, std::optional<int> arity_hint) {
    ParsedWord p = parse_word(text, arity_hint);
    if (auto* w = std::get_if<Word>(&p))
        return *w;
    throw std::invalid_argument("expected a word without constants: " + text);
}

// ---------------------------------------------------------------------------
// Families

Word power_word(int m) {
    if (m < 1)
        throw std::invalid_argument("power_word: m must be >= 1");
    return Word::generator(1, m);
}

Word commutator_word() {
    return Word::commutator(Word::generator(1), Word::generator(2));
}

Word engel_word(int m) {
    if (m < 1)
        throw std::invalid_argument("engel_word: m must be >= 1");
    // reduced length grows like 2^{m+1}
    if (m > 20)
        throw std::length_error("engel_word: m > 20 would materialize a gigabyte-scale word");
    Word w = Word::generator(1); // x
    Word y = Word::generator(2);
    for (int i = 0; i < m; ++i)
        w = Word::commutator(y, w);
    std::vector<Letter> ls = w.letters();
    return Word(std::move(ls), 2);
}

Word multi_commutator_word(const std::vector<int>& gens) {
    if (gens.size() < 2)
        throw std::invalid_argument("multi_commutator_word: need at least two generators");
    Word w = Word::generator(gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i)
        w = Word::commutator(w, Word::generator(gens[i]));
    return w;
}

} // namespace wordmap
