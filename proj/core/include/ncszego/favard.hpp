#pragma once

#include "ncszego/kernel.hpp"
#include "ncszego/szego.hpp"

namespace ncszego {

// Certificate of the inverse construction: the kernel synthesized from a
// contractive parameter family, the recursion's polynomial family, and the
// residuals certifying orthonormality and the parameter round trip.
struct FavardReport {
    MomentSpec moments;
    SzegoFamily family;
    double ortho_residual;
    double param_roundtrip_residual;
};

FavardReport favard(const ParamSpec& p, int max_len);

}  // namespace ncszego
