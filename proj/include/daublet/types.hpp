#ifndef DAUBLET_TYPES_HPP
#define DAUBLET_TYPES_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace daublet {

// Failure categories surfaced through daublet::error. The C API maps these
// one-to-one onto its status codes.
enum class errc {
  ok = 0,
  order_unsupported,
  grid_too_large,
  grid_too_coarse,
  branch_singularity,
  tangent_singularity,
  input_not_sorted,
  underdetermined,
  bad_input,
  degenerate_target,
  no_such_preset,
  bad_scales,
  io_failure,
  parse_failure,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

// Real samples on a uniform time grid. Sample i sits at t0 + i*dt.
struct SampledWaveform {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> values;

  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  std::size_t size() const { return values.size(); }
  double duration() const { return static_cast<double>(values.size()) * dt; }
};

// One a*sin(b*t + c) component.
struct SineTerm {
  double amplitude = 0.0;  // a
  double frequency = 0.0;  // b, rad per time unit
  double phase = 0.0;      // c, rad
};

// Sum of sine terms with the support length the gated evaluation uses.
struct SumOfSines {
  std::vector<SineTerm> terms;
  double support = 0.0;  // T, time units

  std::size_t size() const { return terms.size(); }
};

constexpr std::size_t kMaxSineTerms = 16;

// Validates the structural invariants (1 <= K <= 16, support > 0, finite
// coefficients). Frequencies may be negative here; canonicalize() folds them.
void validate(const SumOfSines& model);

struct FitReport {
  double r_squared = 0.0;
  double rmse = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  double final_lambda = 0.0;
};

}  // namespace daublet

#endif  // DAUBLET_TYPES_HPP
