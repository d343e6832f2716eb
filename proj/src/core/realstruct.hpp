#pragma once

#include "klfield.hpp"

#include <utility>

namespace cw {

/// Real structure sigma: coefficientwise conjugation in a real eigenbasis,
/// an isometric anti-linear involution.
FieldSample conjugate(const FieldSample& field);

/// X = sqrt(2) Re Z, Y = sqrt(2) Im Z, both tagged Real. For a standard
/// proper field the parts are i.i.d. centred standard real fields.
std::pair<FieldSample, FieldSample> decompose(const FieldSample& z);

/// Z = (X + iY)/sqrt(2) from two Real-tagged fields on the same basis.
FieldSample compose(const FieldSample& x, const FieldSample& y);

/// Product-topology norm sqrt(||Re Z||^2 + ||Im Z||^2); equals the plain
/// coefficient l2 norm since sigma is isometric here.
double pt_norm(const FieldSample& z);

/// ((X + X')/sqrt 2, (X - X')/sqrt 2): for i.i.d. centred Gaussian inputs
/// the output pair has the law of the input pair (Fernique's rotation).
std::pair<FieldSample, FieldSample> rotation_pair(const FieldSample& x,
                                                 const FieldSample& xp);

// Coefficient-vector versions, shared with path samples.
std::pair<std::vector<cplx>, std::vector<cplx>> rotation_pair_values(
    std::span<const cplx> x, std::span<const cplx> xp);

} // namespace cw
