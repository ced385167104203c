#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ncszego {

/* A word over the alphabet {1,...,N}: an element of the unital free
 * semigroup on N generators.  The empty word is the identity.  Words are
 * value types; the alphabet size N is a context parameter passed to the
 * operations that need it, never stored in the word itself.
 *
 * The total order used everywhere is graded lexicographic: shorter words
 * come first, words of equal length are compared letter by letter.
 */
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
    Word(std::initializer_list<int> ls) : letters(ls) {}

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend bool operator==(const Word& a, const Word& b) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() <=> b.letters.size();
        return a.letters <=> b.letters;
    }
};

// Graded lexicographic comparison, as a named function.
std::strong_ordering compare(const Word& u, const Word& v);

// All words of length <= max_len, strictly increasing; the first is the
// empty word, sizeof result = sum_{k<=max_len} N^k.
std::vector<Word> enumerate_words(int n_letters, int max_len);

// All words of exactly length `len`, in lexicographic order.
std::vector<Word> words_of_length(int n_letters, int len);

// Adjacent words in the graded lexicographic order.  predecessor of the
// empty word is a domain error.
Word successor(const Word& w, int n_letters);
Word predecessor(const Word& w, int n_letters);

// The largest word of length n: the letter N repeated n times.
Word sigma_max(int n_letters, int n);

// Juxtaposition uv; the empty word is a two-sided identity.
Word concat(const Word& u, const Word& v);

// Position of w in enumerate_words(n_letters, ...), starting at 0.
std::size_t word_index(const Word& w, int n_letters);

// sum_{k < len} N^k: index of the first word of length `len`.
std::size_t level_offset(int n_letters, int len);

// sum_{k <= max_len} N^k.
std::size_t count_words(int n_letters, int max_len);

/* String encoding shared by all file formats: for N <= 9 a word is the
 * concatenation of its digits ("", "1", "12"); for N > 9 the letters are
 * dot-separated decimals ("10.3.2").  The empty string encodes the empty
 * word.
 */
std::string word_to_string(const Word& w, int n_letters);
Word parse_word(const std::string& s, int n_letters);

}  // namespace ncszego
