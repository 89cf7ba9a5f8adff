#include "l2betti/words.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "l2betti/errors.hpp"

namespace l2betti {

unsigned long ExtNat::value() const {
    if (!value_) throw std::logic_error("value() on infinite cardinal");
    return *value_;
}

Rational reciprocal_or_zero(const ExtNat& n) {
    if (!n.finite()) return Rational(0);
    if (n.value() == 0) throw std::invalid_argument("reciprocal of zero");
    return make_rational(1, static_cast<long>(n.value()));
}

std::string to_string(const ExtNat& n) {
    return n.finite() ? std::to_string(n.value()) : std::string("inf");
}

namespace {

constexpr std::string_view kReserved = "^[],#";

} // namespace

bool Alphabet::valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (kReserved.find(c) != std::string_view::npos) return false;
    }
    // a leading digit or sign would collide with exponent syntax
    const char c0 = name.front();
    if (std::isdigit(static_cast<unsigned char>(c0)) || c0 == '-' || c0 == '+') return false;
    return true;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_name(names_[i]))
            throw ParseError("invalid generator name '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j])
                throw ParseError("duplicate generator name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
}

std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    // positive letter before its inverse
    return b.sign <=> a.sign;
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw std::invalid_argument("word without alphabet");
}

Word Word::reduce(AlphabetPtr alphabet, const std::vector<Letter>& raw) {
    Word w(std::move(alphabet));
    w.letters_.reserve(raw.size());
    for (const Letter& l : raw) {
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
        if (l.gen >= w.alphabet_->size()) throw std::invalid_argument("letter outside alphabet");
        if (!w.letters_.empty() && cancels(w.letters_.back(), l))
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

Word Word::generator(AlphabetPtr alphabet, std::size_t gen, int sign) {
    return reduce(std::move(alphabet), {Letter{gen, sign}});
}

bool Word::operator==(const Word& other) const {
    if (letters_ != other.letters_) return false;
    return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
}

bool WordOrder::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                        b.letters().begin(), b.letters().end());
}

bool same_alphabet(const Word& a, const Word& b) {
    return a.alphabet() == b.alphabet() || *a.alphabet() == *b.alphabet();
}

Word operator*(const Word& u, const Word& v) {
    if (!same_alphabet(u, v)) throw std::invalid_argument("alphabet mismatch in word product");
    std::vector<Letter> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return Word::reduce(u.alphabet(), raw);
}

Word inverse(const Word& w) {
    std::vector<Letter> raw(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : raw) l = l.inverse();
    return Word::reduce(w.alphabet(), raw);
}

Word power(const Word& w, long k) {
    const Word base = k < 0 ? inverse(w) : w;
    long reps = k < 0 ? -k : k;
    // a reduced word powers by plain concatenation only when cyclically
    // reduced, so go through the generic product
    Word acc(w.alphabet());
    for (long i = 0; i < reps; ++i) acc = acc * base;
    return acc;
}

CyclicWord make_cyclic(Word w) {
    const auto& ls = w.letters();
    if (!ls.empty() && ls.size() > 1 && cancels(ls.front(), ls.back()))
        throw std::invalid_argument("word is not cyclically reduced");
    return CyclicWord(std::move(w));
}

CyclicDecomposition cyclic_reduce(const Word& w) {
    const auto& ls = w.letters();
    std::size_t i = 0, j = ls.size();
    while (j - i >= 2 && cancels(ls[i], ls[j - 1])) {
        ++i;
        --j;
    }
    Word conj = Word::reduce(w.alphabet(), {ls.begin(), ls.begin() + static_cast<long>(i)});
    Word core = Word::reduce(w.alphabet(), {ls.begin() + static_cast<long>(i), ls.begin() + static_cast<long>(j)});
    return {std::move(conj), make_cyclic(std::move(core))};
}

namespace {

// Is the letter sequence periodic with period p (p divides n)?
bool has_period(const std::vector<Letter>& ls, std::size_t p) {
    for (std::size_t i = p; i < ls.size(); ++i)
        if (ls[i] != ls[i - p]) return false;
    return true;
}

std::size_t smallest_divisor_period(const std::vector<Letter>& ls) {
    const std::size_t n = ls.size();
    for (std::size_t p = 1; p < n; ++p)
        if (n % p == 0 && has_period(ls, p)) return p;
    return n;
}

} // namespace

ExtNat exponent(const Word& r) {
    if (r.empty()) return ExtNat::infinity();
    const CyclicDecomposition dec = cyclic_reduce(r);
    const auto& core = dec.core.word().letters();
    return static_cast<unsigned long>(core.size() / smallest_divisor_period(core));
}

RootDecomposition root(const Word& r) {
    if (r.empty()) throw PreconditionError("root of the empty word is undefined");
    const CyclicDecomposition dec = cyclic_reduce(r);
    const auto& core = dec.core.word().letters();
    const std::size_t p = smallest_divisor_period(core);
    Word seed = Word::reduce(r.alphabet(), {core.begin(), core.begin() + static_cast<long>(p)});
    Word base = dec.conjugator * seed * inverse(dec.conjugator);
    return {std::move(base), static_cast<unsigned long>(core.size() / p)};
}

std::vector<long> exponent_sums(const Word& w) {
    std::vector<long> sums(w.alphabet()->size(), 0);
    for (const Letter& l : w.letters()) sums[l.gen] += l.sign;
    return sums;
}

namespace {

struct WordParser {
    std::string_view text;
    std::size_t pos = 0;
    const AlphabetPtr& alphabet;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    char peek() { return text[pos]; }

    // longest alphabet name starting at pos
    std::optional<std::size_t> match_generator() {
        std::size_t best_len = 0;
        std::optional<std::size_t> best;
        for (std::size_t g = 0; g < alphabet->size(); ++g) {
            const std::string& name = alphabet->name(g);
            if (name.size() > best_len && text.substr(pos, name.size()) == name) {
                best_len = name.size();
                best = g;
            }
        }
        if (best) pos += best_len;
        return best;
    }

    long parse_exponent() {
        ++pos;  // consume '^'
        skip_space();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        long value = 0;
        const auto res = std::from_chars(text.data() + start, text.data() + pos, value);
        if (res.ec != std::errc{} || res.ptr != text.data() + pos || start == pos)
            throw ParseError("malformed exponent");
        if (value == 0) throw ParseError("malformed exponent: must be nonzero");
        return negative ? -value : value;
    }

    // one atom, as a reduced word
    Word parse_atom() {
        skip_space();
        if (peek() == '[') {
            ++pos;
            Word u = parse_until(",");
            ++pos;  // consume ','
            Word v = parse_until("]");
            ++pos;  // consume ']'
            return u * v * inverse(u) * inverse(v);
        }
        const auto gen = match_generator();
        if (!gen) {
            std::size_t end = pos;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
                   kReserved.find(text[end]) == std::string_view::npos)
                ++end;
            throw ParseError("unknown generator '" + std::string(text.substr(pos, std::max<std::size_t>(end - pos, 1))) + "'");
        }
        return Word::generator(alphabet, *gen);
    }

    Word parse_until(std::string_view stoppers) {
        Word acc(alphabet);
        while (true) {
            skip_space();
            if (pos >= text.size()) {
                if (stoppers.empty()) return acc;
                throw ParseError(std::string("unbalanced '[': expected '") + std::string(stoppers) + "'");
            }
            if (stoppers.find(peek()) != std::string_view::npos) return acc;
            if (peek() == ']' || peek() == ',')
                throw ParseError(std::string("unexpected '") + peek() + "' in word literal");
            Word atom = parse_atom();
            skip_space();
            long exp = 1;
            if (pos < text.size() && peek() == '^') exp = parse_exponent();
            acc = acc * power(atom, exp);
        }
    }
};

} // namespace

Word parse_word(std::string_view text, AlphabetPtr alphabet) {
    WordParser parser{text, 0, alphabet};
    Word w = parser.parse_until("");
    return w;
}

std::string to_string(const Word& w) {
    std::ostringstream out;
    const auto& ls = w.letters();
    std::size_t i = 0;
    while (i < ls.size()) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        const long run = static_cast<long>(j - i) * ls[i].sign;
        if (i > 0) out << ' ';
        out << w.alphabet()->name(ls[i].gen);
        if (run != 1) out << '^' << run;
        i = j;
    }
    return out.str();
}

} // namespace l2betti
