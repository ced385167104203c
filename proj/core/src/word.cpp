#include "ncszego/word.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ncszego {

namespace {

void check_alphabet(int n_letters) {
    if (n_letters < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

void check_letters(const Word& w, int n_letters) {
    for (int l : w.letters)
        if (l < 1 || l > n_letters)
            throw std::invalid_argument("letter out of range 1.." + std::to_string(n_letters));
}

}  // namespace

std::strong_ordering compare(const Word& u, const Word& v) { return u <=> v; }

std::vector<Word> words_of_length(int n_letters, int len) {
    check_alphabet(n_letters);
    if (len < 0) throw std::invalid_argument("negative word length");
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(std::pow(double(n_letters), len)) + 1);
    Word w(std::vector<int>(static_cast<std::size_t>(len), 1));
    while (true) {
        out.push_back(w);
        // increment as a base-N counter with digits 1..N
        int pos = len - 1;
        while (pos >= 0 && w.letters[static_cast<std::size_t>(pos)] == n_letters) {
            w.letters[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++w.letters[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<Word> enumerate_words(int n_letters, int max_len) {
    check_alphabet(n_letters);
    if (max_len < 0) throw std::invalid_argument("negative max_len");
    std::vector<Word> out;
    out.reserve(count_words(n_letters, max_len));
    for (int k = 0; k <= max_len; ++k) {
        auto lvl = words_of_length(n_letters, k);
        out.insert(out.end(), lvl.begin(), lvl.end());
    }
    return out;
}

Word successor(const Word& w, int n_letters) {
    check_alphabet(n_letters);
    check_letters(w, n_letters);
    Word s = w;
    int pos = static_cast<int>(s.length()) - 1;
    while (pos >= 0 && s.letters[static_cast<std::size_t>(pos)] == n_letters) {
        s.letters[static_cast<std::size_t>(pos)] = 1;
        --pos;
    }
    if (pos < 0) {
        // w was N...N: the successor is 1...1 one longer
        s.letters.assign(w.length() + 1, 1);
        return s;
    }
    ++s.letters[static_cast<std::size_t>(pos)];
    return s;
}

Word predecessor(const Word& w, int n_letters) {
    check_alphabet(n_letters);
    check_letters(w, n_letters);
    if (w.empty()) throw std::domain_error("the empty word has no predecessor");
    Word p = w;
    int pos = static_cast<int>(p.length()) - 1;
    while (pos >= 0 && p.letters[static_cast<std::size_t>(pos)] == 1) {
        p.letters[static_cast<std::size_t>(pos)] = n_letters;
        --pos;
    }
    if (pos < 0) {
        // w was 1...1: the predecessor is N...N one shorter
        p.letters.assign(w.length() - 1, n_letters);
        return p;
    }
    --p.letters[static_cast<std::size_t>(pos)];
    return p;
}

Word sigma_max(int n_letters, int n) {
    check_alphabet(n_letters);
    if (n < 0) throw std::invalid_argument("negative length");
    return Word(std::vector<int>(static_cast<std::size_t>(n), n_letters));
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

std::size_t level_offset(int n_letters, int len) {
    std::size_t total = 0, pw = 1;
    for (int k = 0; k < len; ++k) {
        total += pw;
        pw *= static_cast<std::size_t>(n_letters);
    }
    return total;
}

std::size_t count_words(int n_letters, int max_len) {
    return level_offset(n_letters, max_len + 1);
}

std::size_t word_index(const Word& w, int n_letters) {
    check_alphabet(n_letters);
    check_letters(w, n_letters);
    std::size_t rank = 0;
    for (int l : w.letters) rank = rank * static_cast<std::size_t>(n_letters) + static_cast<std::size_t>(l - 1);
    return level_offset(n_letters, static_cast<int>(w.length())) + rank;
}

std::string word_to_string(const Word& w, int n_letters) {
    check_alphabet(n_letters);
    check_letters(w, n_letters);
    std::string s;
    if (n_letters <= 9) {
        for (int l : w.letters) s += static_cast<char>('0' + l);
    } else {
        for (std::size_t i = 0; i < w.length(); ++i) {
            if (i) s += '.';
            s += std::to_string(w.letters[i]);
        }
    }
    return s;
}

Word parse_word(const std::string& s, int n_letters) {
    check_alphabet(n_letters);
    Word w;
    if (s.empty()) return w;
    if (n_letters <= 9) {
        w.letters.reserve(s.size());
        for (char c : s) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("invalid word character '" + std::string(1, c) + "'");
            w.letters.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t dot = s.find('.', pos);
            std::string tok = s.substr(pos, dot == std::string::npos ? dot : dot - pos);
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw std::invalid_argument("invalid word token '" + tok + "'");
            w.letters.push_back(v);
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
    }
    check_letters(w, n_letters);
    return w;
}

}  // namespace ncszego
