#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncszego/ball.hpp"
#include "ncszego/kernel.hpp"
#include "ncszego/ncpoly.hpp"
#include "ncszego/szego.hpp"

namespace ncszego {

// Parsed kernel files carry the truncation depth they were produced at.
struct ParamFile {
    ParamSpec spec;
    int max_len;
};
struct MomentFile {
    MomentSpec spec;
    int max_len;
};

// {"n_letters": n, "max_len": L, "gamma": {"<word>": [re, im], ...}}
// Missing words are zero; the "" key must be absent or [0,0].
std::string to_json(const ParamSpec& p, int max_len);
ParamFile param_file_from_json(const std::string& text);

// {"n_letters": n, "max_len": L, "s": {"<word>": [re, im], ...}}
// The "" key is optional and must be [1,0] when present.
std::string to_json(const MomentSpec& m, int max_len);
MomentFile moment_file_from_json(const std::string& text);

// {"n_letters": n, "coeffs": {"<word>": [re, im], ...}}
std::string to_json(const NcPoly& p);
NcPoly poly_from_json(const std::string& text);

// {"d": n, "Z": [[row-major rows of [re, im]] per letter]}
std::string to_json(const MatrixTuple& z);
MatrixTuple tuple_from_json(const std::string& text);

// word -> polynomial document, graded-lex key order
std::string family_to_json(const std::map<Word, NcPoly>& phi, int n_letters);
std::map<Word, NcPoly> family_from_json(const std::string& text);

// Gram matrix as CSV: header row of word strings, entries "re+imj".
std::string gram_to_csv(const MomentSpec& m, const std::vector<Word>& ws);

// 1-based line and column of a byte offset, for parse diagnostics.
std::pair<int, int> line_and_column(const std::string& text, std::size_t byte);

}  // namespace ncszego
