#pragma once

#include <stdexcept>
#include <string>

namespace eigc {

// Root finding -----------------------------------------------------------

struct NoSignChange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MaxIterations : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature / limits ----------------------------------------------------

// Carries the best estimate so callers can decide whether it is usable.
struct NonConvergence : std::runtime_error {
  double best = 0.0;
  double error_bound = 0.0;
  NonConvergence(const std::string& msg, double best_, double err_)
      : std::runtime_error(msg), best(best_), error_bound(err_) {}
};

struct NoLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain / classification ------------------------------------------------

struct OutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};

struct WrongClass : std::logic_error {
  using std::logic_error::logic_error;
};

struct AtBandEdge : std::domain_error {
  using std::domain_error::domain_error;
};

struct InGap : std::domain_error {
  using std::domain_error::domain_error;
};

struct OutOfSpectrum : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnknownFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotImplementedError : std::logic_error {
  using std::logic_error::logic_error;
};

struct BadParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SupportExceedsBox : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace eigc
