#include "mudef/context.hpp"

#include <cmath>
#include <string>

#include "mudef/errors.hpp"

namespace mudef {

MuContext::MuContext(double mu) : mu_(mu) {
  if (!(mu > -0.5 + kMuGuard) || !std::isfinite(mu)) {
    throw DomainError("mu must exceed -1/2 + 1e-6, got " + std::to_string(mu));
  }
  norm_const_ = 1.0 / (std::pow(2.0, mu + 0.5) * std::tgamma(mu + 0.5));
}

}  // namespace mudef
