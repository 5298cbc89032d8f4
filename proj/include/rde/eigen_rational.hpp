#pragma once

// Lets Eigen fixed-size matrices hold exact rationals.

#include <Eigen/Core>
#include <gmpxx.h>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline mpq_class epsilon() { return mpq_class(0); }
  static inline mpq_class dummy_precision() { return mpq_class(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
