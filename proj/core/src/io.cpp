#include "ncszego/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace ncszego {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_to_json(Complex c) { return ordered_json::array({c.real(), c.imag()}); }

Complex complex_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex values must be [re, im] number pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

int get_n_letters(const ordered_json& j) {
    if (!j.contains("n_letters") || !j["n_letters"].is_number_integer())
        throw std::invalid_argument("missing integer field 'n_letters'");
    const int n = j["n_letters"].get<int>();
    if (n < 1) throw std::invalid_argument("'n_letters' must be >= 1");
    return n;
}

int get_max_len(const ordered_json& j) {
    if (!j.contains("max_len") || !j["max_len"].is_number_integer())
        throw std::invalid_argument("missing integer field 'max_len'");
    const int l = j["max_len"].get<int>();
    if (l < 0) throw std::invalid_argument("'max_len' must be >= 0");
    return l;
}

std::map<Word, Complex> word_map_from_json(const ordered_json& j, int n_letters,
                                           const std::string& field) {
    if (!j.contains(field) || !j[field].is_object())
        throw std::invalid_argument("missing object field '" + field + "'");
    std::map<Word, Complex> out;
    for (const auto& [key, val] : j[field].items())
        out[parse_word(key, n_letters)] = complex_from_json(val);
    return out;
}

ordered_json word_map_to_json(const std::map<Word, Complex>& m, int n_letters) {
    ordered_json obj = ordered_json::object();
    for (const auto& [w, c] : m) obj[word_to_string(w, n_letters)] = complex_to_json(c);
    return obj;
}

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

}  // namespace

std::string to_json(const ParamSpec& p, int max_len) {
    ordered_json j;
    j["n_letters"] = p.n_letters();
    j["max_len"] = max_len;
    j["gamma"] = word_map_to_json(p.gammas(), p.n_letters());
    return j.dump(2);
}

ParamFile param_file_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    const int n = get_n_letters(j);
    const int max_len = get_max_len(j);
    auto gamma = word_map_from_json(j, n, "gamma");
    return ParamFile{ParamSpec(n, std::move(gamma)), max_len};
}

std::string to_json(const MomentSpec& m, int max_len) {
    ordered_json j;
    j["n_letters"] = m.n_letters();
    j["max_len"] = max_len;
    j["s"] = word_map_to_json(m.moments(), m.n_letters());
    return j.dump(2);
}

MomentFile moment_file_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    const int n = get_n_letters(j);
    const int max_len = get_max_len(j);
    auto s = word_map_from_json(j, n, "s");
    return MomentFile{MomentSpec(n, std::move(s)), max_len};
}

std::string to_json(const NcPoly& p) {
    ordered_json j;
    j["n_letters"] = p.n_letters();
    j["coeffs"] = word_map_to_json(p.coeffs(), p.n_letters());
    return j.dump(2);
}

NcPoly poly_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    const int n = get_n_letters(j);
    NcPoly p(n);
    for (const auto& [w, c] : word_map_from_json(j, n, "coeffs")) p.set_coeff(w, c);
    return p;
}

std::string to_json(const MatrixTuple& z) {
    ordered_json j;
    j["d"] = z.dim();
    ordered_json letters = ordered_json::array();
    for (const Matrix& m : z.matrices) {
        ordered_json rows = ordered_json::array();
        for (Index r = 0; r < m.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
            rows.push_back(std::move(row));
        }
        letters.push_back(std::move(rows));
    }
    j["Z"] = std::move(letters);
    return j.dump(2);
}

MatrixTuple tuple_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw std::invalid_argument("missing integer field 'd'");
    const Index d = j["d"].get<Index>();
    if (d < 1) throw std::invalid_argument("'d' must be >= 1");
    if (!j.contains("Z") || !j["Z"].is_array() || j["Z"].empty())
        throw std::invalid_argument("missing nonempty array field 'Z'");
    std::vector<Matrix> ms;
    for (const auto& rows : j["Z"]) {
        if (!rows.is_array() || static_cast<Index>(rows.size()) != d)
            throw std::invalid_argument("each letter of 'Z' must have d rows");
        Matrix m(d, d);
        for (Index r = 0; r < d; ++r) {
            const auto& row = rows[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Index>(row.size()) != d)
                throw std::invalid_argument("each row of 'Z' must have d entries");
            for (Index c = 0; c < d; ++c)
                m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
        ms.push_back(std::move(m));
    }
    return MatrixTuple(std::move(ms));
}

std::string family_to_json(const std::map<Word, NcPoly>& phi, int n_letters) {
    ordered_json j = ordered_json::object();
    for (const auto& [w, poly] : phi) {
        ordered_json doc;
        doc["n_letters"] = poly.n_letters();
        doc["coeffs"] = word_map_to_json(poly.coeffs(), poly.n_letters());
        j[word_to_string(w, n_letters)] = std::move(doc);
    }
    return j.dump(2);
}

std::map<Word, NcPoly> family_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("family document must be an object");
    std::map<Word, NcPoly> out;
    for (const auto& [key, doc] : j.items()) {
        const int n = get_n_letters(doc);
        NcPoly p(n);
        for (const auto& [w, c] : word_map_from_json(doc, n, "coeffs")) p.set_coeff(w, c);
        out.insert_or_assign(parse_word(key, n), std::move(p));
    }
    return out;
}

std::string gram_to_csv(const MomentSpec& m, const std::vector<Word>& ws) {
    const Matrix g = gram(m, ws);
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ',';
        out += word_to_string(ws[i], m.n_letters());
    }
    out += '\n';
    for (Index r = 0; r < g.rows(); ++r) {
        for (Index c = 0; c < g.cols(); ++c) {
            if (c) out += ',';
            const Complex v = g(r, c);
            out += format_double(v.real());
            if (!std::signbit(v.imag())) out += '+';
            out += format_double(v.imag());
            out += 'j';
        }
        out += '\n';
    }
    return out;
}

std::pair<int, int> line_and_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace ncszego
