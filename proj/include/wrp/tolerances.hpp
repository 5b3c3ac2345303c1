#pragma once

namespace wrp {

/// User-facing tolerance knobs. eig_group and weight_regular are relative
/// (scaled by max(1, lambda_1) where they are applied); hoffman is absolute
/// on the bound value.
struct Tolerances {
    double eig_group = 1e-9;
    double weight_regular = 1e-7;
    double hoffman = 1e-6;
};

} // namespace wrp
