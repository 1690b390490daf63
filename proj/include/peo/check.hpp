#pragma once

namespace peo {

/// Measured residual of an identity together with the verdict against a tolerance.
struct ResidualCheck {
  double residual;
  bool pass;
};

}  // namespace peo
