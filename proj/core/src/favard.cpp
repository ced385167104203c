#include "ncszego/favard.hpp"

#include <cmath>
#include <stdexcept>

namespace ncszego {

FavardReport favard(const ParamSpec& p, int max_len) {
    if (max_len < 1) throw std::invalid_argument("favard needs max_len >= 1");
    MomentSpec moments = synthesize_moments(p, max_len);
    SzegoFamily family = szego_recursion(p, max_len);
    const double ortho = family_gram_residual(family, moments);

    const ParamSpec back = extract_params(moments, max_len);
    double round_trip = 0.0;
    for (const Word& w : enumerate_words(p.n_letters(), max_len))
        round_trip = std::max(round_trip, std::abs(back.gamma(w) - p.gamma(w)));

    return FavardReport{std::move(moments), std::move(family), ortho, round_trip};
}

}  // namespace ncszego
