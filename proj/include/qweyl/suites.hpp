#pragma once

// Whole verification suites shared by the CLI and the acceptance runner.

#include <cstdint>
#include <vector>

#include "qweyl/params.hpp"
#include "qweyl/presentation.hpp"
#include "qweyl/report.hpp"

namespace qweyl {

Report relation_suite(const PresentationId& p, const CoefficientHook& hook = {});

/// Images under theta of every AJ-B relation (evaluated letter by letter in
/// Malt-B) vanish, and the images of the b_k z^m with |k|_1, |m|_1 <= 1 are
/// linearly independent.
Report theta_suite(const ParamContext& ctx);

/// Relations of the Lambda-presentation of the AJ algebra (localized or
/// not) realized on the Lambda = (1) algebra with the twisted product, and
/// tau_g tau_h = tau_{g+h} on `samples` random (g, h, element) triples.
Report twist_suite(const ParamContext& ctx, bool localized, int samples, std::uint64_t seed);

/// Rank over the scalar field of a family of elements of one algebra.
std::size_t rank_of(const std::vector<NormalElement>& elements);

}  // namespace qweyl
