#include "jsobolev/params.hpp"

#include <cmath>
#include <sstream>

namespace jsobolev {

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "Jacobi exponents must satisfy alpha, beta > -1 (got alpha=" << alpha
        << ", beta=" << beta << ")";
    throw DomainError(msg.str());
  }
}

SobolevParams::SobolevParams(double alpha, double beta, int m) : jacobi_(alpha, beta), m_(m) {
  if (m < 1) {
    throw DomainError("Sobolev order m must be >= 1 (got " + std::to_string(m) + ")");
  }
}

std::string to_string(const JacobiParams& params) {
  std::ostringstream out;
  out << "(alpha=" << params.alpha() << ", beta=" << params.beta() << ")";
  return out.str();
}

std::string to_string(const SobolevParams& params) {
  std::ostringstream out;
  out << "(alpha=" << params.alpha() << ", beta=" << params.beta() << ", m=" << params.m() << ")";
  return out.str();
}

}  // namespace jsobolev
