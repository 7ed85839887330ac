#include "daublet/types.hpp"

#include <cmath>
#include <string>

namespace daublet {

const char* errc_name(errc code) {
  switch (code) {
    case errc::ok: return "Ok";
    case errc::order_unsupported: return "OrderUnsupported";
    case errc::grid_too_large: return "GridTooLarge";
    case errc::grid_too_coarse: return "GridTooCoarse";
    case errc::branch_singularity: return "BranchSingularity";
    case errc::tangent_singularity: return "TangentSingularity";
    case errc::input_not_sorted: return "InputNotSorted";
    case errc::underdetermined: return "Underdetermined";
    case errc::bad_input: return "BadInput";
    case errc::degenerate_target: return "DegenerateTarget";
    case errc::no_such_preset: return "NoSuchPreset";
    case errc::bad_scales: return "BadScales";
    case errc::io_failure: return "IoFailure";
    case errc::parse_failure: return "ParseFailure";
  }
  return "Unknown";
}

void validate(const SumOfSines& model) {
  if (model.terms.empty())
    fail(errc::bad_input, "model needs at least one sine term");
  if (model.terms.size() > kMaxSineTerms)
    fail(errc::bad_input, "model exceeds " + std::to_string(kMaxSineTerms) +
                              " sine terms");
  if (!(model.support > 0.0))
    fail(errc::bad_input, "model support must be positive");
  for (const SineTerm& term : model.terms) {
    if (!std::isfinite(term.amplitude) || !std::isfinite(term.frequency) ||
        !std::isfinite(term.phase))
      fail(errc::bad_input, "model coefficients must be finite");
  }
}

}  // namespace daublet
