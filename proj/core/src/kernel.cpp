#include "ncszego/kernel.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

#include "ncszego/lattice.hpp"

namespace ncszego {

namespace {

void check_word(const Word& w, int n_letters) {
    for (int l : w.letters)
        if (l < 1 || l > n_letters) throw std::invalid_argument("word letter out of range");
}

}  // namespace

MomentSpec::MomentSpec(int n_letters, std::map<Word, Complex> s)
    : n_letters_(n_letters), s_(std::move(s)) {
    if (n_letters < 1) throw std::invalid_argument("alphabet size must be >= 1");
    auto it = s_.find(Word{});
    if (it != s_.end()) {
        if (it->second != Complex(1, 0))
            throw std::invalid_argument("the empty-word moment must be 1");
        s_.erase(it);
    }
    for (const auto& [w, c] : s_) {
        (void)c;
        check_word(w, n_letters_);
    }
}

Complex MomentSpec::moment(const Word& w) const {
    if (w.empty()) return Complex(1, 0);
    auto it = s_.find(w);
    return it == s_.end() ? Complex(0, 0) : it->second;
}

ParamSpec::ParamSpec(int n_letters, std::map<Word, Complex> gamma)
    : n_letters_(n_letters), gamma_(std::move(gamma)) {
    if (n_letters < 1) throw std::invalid_argument("alphabet size must be >= 1");
    auto it = gamma_.find(Word{});
    if (it != gamma_.end()) {
        if (it->second != Complex(0, 0))
            throw std::invalid_argument("the empty-word parameter must be 0");
        gamma_.erase(it);
    }
    for (const auto& [w, g] : gamma_) {
        check_word(w, n_letters_);
        if (std::abs(g) >= 1.0)
            throw std::invalid_argument("parameter out of open disk at word '" +
                                        word_to_string(w, n_letters_) + "'");
    }
}

Complex ParamSpec::gamma(const Word& w) const {
    auto it = gamma_.find(w);
    return it == gamma_.end() ? Complex(0, 0) : it->second;
}

double ParamSpec::d(const Word& w) const {
    const double m = std::abs(gamma(w));
    return std::sqrt(1.0 - m * m);
}

Complex kernel_eval(const MomentSpec& m, const Word& sigma, const Word& tau) {
    std::span<const int> s(sigma.letters), t(tau.letters);
    while (!s.empty() && !t.empty()) {
        if (s.front() != t.front()) return Complex(0, 0);
        s = s.subspan(1);
        t = t.subspan(1);
    }
    if (s.empty())
        return m.moment(Word(std::vector<int>(t.begin(), t.end())));
    return std::conj(m.moment(Word(std::vector<int>(s.begin(), s.end()))));
}

Matrix gram(const MomentSpec& m, const std::vector<Word>& ws) {
    const Index n = static_cast<Index>(ws.size());
    Matrix g(n, n);
    for (Index a = 0; a < n; ++a) {
        g(a, a) = kernel_eval(m, ws[static_cast<std::size_t>(a)], ws[static_cast<std::size_t>(a)]);
        for (Index b = a + 1; b < n; ++b) {
            const Complex v =
                kernel_eval(m, ws[static_cast<std::size_t>(a)], ws[static_cast<std::size_t>(b)]);
            g(a, b) = v;
            g(b, a) = std::conj(v);
        }
    }
    return g;
}

Complex inner_product(const MomentSpec& m, const NcPoly& p, const NcPoly& q) {
    if (p.n_letters() != m.n_letters() || q.n_letters() != m.n_letters())
        throw std::invalid_argument("polynomial alphabet does not match the kernel");
    Complex acc(0, 0);
    for (const auto& [sigma, cp] : p.coeffs())
        for (const auto& [tau, cq] : q.coeffs())
            acc += kernel_eval(m, sigma, tau) * cq * std::conj(cp);
    return acc;
}

ParamSpec extract_params(const MomentSpec& m, int max_len) {
    if (max_len < 0) throw std::invalid_argument("negative max_len");
    const auto ws = enumerate_words(m.n_letters(), max_len);
    const Matrix g = gram(m, ws);
    require_positive_definite(g);
    std::map<Word, Complex> out;
    for (std::size_t j = 1; j < ws.size(); ++j) {
        const Complex r = partial_correlation(g, 0, static_cast<Index>(j));
        if (r != Complex(0, 0)) out[ws[j]] = r;
    }
    return ParamSpec(m.n_letters(), std::move(out));
}

MomentSpec synthesize_moments(const ParamSpec& p, int max_len) {
    if (max_len < 0) throw std::invalid_argument("negative max_len");
    const auto ws = enumerate_words(p.n_letters(), max_len);
    std::map<Word, Complex> s;
    for (std::size_t j = 1; j < ws.size(); ++j) {
        const Word& tau = ws[j];
        const Complex g = p.gamma(tau);
        if (j == 1) {
            if (g != Complex(0, 0)) s[tau] = g;
            continue;
        }
        // Gram of the strict chain below tau; only shorter or earlier
        // moments are touched, all already synthesized.
        const MomentSpec partial(p.n_letters(), s);
        const Index n = static_cast<Index>(j);
        Matrix mid(n - 1, n - 1);
        Vector b2(n - 1);
        RowVector b1(n - 1);
        for (Index a = 1; a < n; ++a) {
            b1(a - 1) = partial.moment(ws[static_cast<std::size_t>(a)]);
            b2(a - 1) = kernel_eval(partial, ws[static_cast<std::size_t>(a)], tau);
            for (Index b = 1; b < n; ++b)
                mid(a - 1, b - 1) =
                    kernel_eval(partial, ws[static_cast<std::size_t>(a)], ws[static_cast<std::size_t>(b)]);
        }
        Eigen::LDLT<Matrix> ldlt(mid);
        const Vector x2 = ldlt.solve(b2);
        const Vector x1 = ldlt.solve(b1.adjoint());
        const double vi = (Complex(1, 0) - (b1 * x1).value()).real();
        const double vj = (Complex(1, 0) - b2.dot(x2)).real();
        if (vi <= 0.0 || vj <= 0.0)
            throw NotPositiveDefinite("synthesis produced a degenerate chain");
        const Complex val = (b1 * x2).value() + g * std::sqrt(vi * vj);
        if (val != Complex(0, 0)) s[tau] = val;
    }
    return MomentSpec(p.n_letters(), std::move(s));
}

Complex pair_gamma(const ParamSpec& p, const Word& sigma, const Word& tau) {
    if (compare(sigma, tau) == std::strong_ordering::greater)
        throw std::domain_error("pair_gamma requires sigma <= tau");
    std::span<const int> s(sigma.letters), t(tau.letters);
    while (true) {
        if (s.size() == t.size() && std::equal(s.begin(), s.end(), t.begin())) return Complex(0, 0);
        if (s.empty()) return p.gamma(Word(std::vector<int>(t.begin(), t.end())));
        if (s.front() != t.front()) return Complex(0, 0);
        s = s.subspan(1);
        t = t.subspan(1);
    }
}

double det_D(const ParamSpec& p, const Word& sigma) {
    const auto all = enumerate_words(p.n_letters(), static_cast<int>(sigma.length()));
    const std::size_t last = word_index(sigma, p.n_letters());
    double prod = 1.0;
    for (std::size_t i = 0; i <= last; ++i)
        for (std::size_t j = i + 1; j <= last; ++j) {
            const double m = std::abs(pair_gamma(p, all[i], all[j]));
            prod *= 1.0 - m * m;
        }
    return prod;
}

}  // namespace ncszego
