#pragma once

// Direct iteration of x_{n+1} = x_{n-1} / (a + b x_n x_{n-1}) and the
// closed-form evaluation x_{2k+1} = x_{-1} P_k, x_{2k+2} = x_0 Q_k with
// P_k = prod_{i<=k} h(2i), Q_k = prod_{i<=k} h(2i+1).
//
// Public indices follow the recurrence: x_{-1} is index -1. Storage is
// shifted by one, so x_n lives in slot n + 1.

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rde/admissibility.hpp"
#include "rde/params.hpp"
#include "rde/riccati.hpp"

namespace rde {

enum class Termination { Completed, SingularAt, NonFiniteAt };

struct IterateOptions {
  std::size_t max_bits = 1'000'000;  // per-term cap in Exact mode
};

template <Scalar T>
class Orbit {
 public:
  Orbit(Params<T> params, SeedPair<T> seed, std::vector<T> storage, Termination termination,
        std::int64_t failure_step, bool ill_conditioned)
      : params_(std::move(params)),
        seed_(std::move(seed)),
        storage_(std::move(storage)),
        termination_(termination),
        failure_step_(failure_step),
        ill_conditioned_(ill_conditioned) {}

  const Params<T>& params() const { return params_; }
  const SeedPair<T>& seed() const { return seed_; }

  // Largest index present (>= 0).
  std::int64_t last_index() const { return static_cast<std::int64_t>(storage_.size()) - 2; }

  const T& operator[](std::int64_t n) const { return storage_.at(static_cast<std::size_t>(n + 1)); }

  // x_{-1}, x_0, x_1, ...
  std::span<const T> storage() const { return storage_; }

  Termination termination() const { return termination_; }

  // Index m whose computation failed; 0 when Completed.
  std::int64_t failure_step() const { return failure_step_; }

  // Float mode: some denominator was tiny relative to its summands.
  bool ill_conditioned() const { return ill_conditioned_; }

 private:
  Params<T> params_;
  SeedPair<T> seed_;
  std::vector<T> storage_;
  Termination termination_;
  std::int64_t failure_step_;
  bool ill_conditioned_;
};

// Computes x_1 .. x_{n_max}, stopping early at a zero denominator (SingularAt)
// or, in Float mode, a non-finite value (NonFiniteAt). Throws ResourceLimit if
// an exact term exceeds opts.max_bits.
template <Scalar T>
Orbit<T> iterate(const Params<T>& params, const SeedPair<T>& seed, std::int64_t n_max,
                 const IterateOptions& opts = {}) {
  validate_params(params);
  validate_seed(seed);
  if (n_max < 0) throw Error(Errc::InvalidArgument, "n_max must be nonnegative");

  std::vector<T> x;
  x.reserve(static_cast<std::size_t>(n_max) + 2);
  x.push_back(seed.x_prev);
  x.push_back(seed.x_zero);

  Termination termination = Termination::Completed;
  std::int64_t failure = 0;
  bool ill_conditioned = false;

  for (std::int64_t m = 1; m <= n_max; ++m) {
    const T& older = x[static_cast<std::size_t>(m - 1)];  // x_{m-2}
    const T& newer = x[static_cast<std::size_t>(m)];      // x_{m-1}
    const T coupling = params.b * newer * older;
    const T den = params.a + coupling;
    if (is_zero(den)) {
      termination = Termination::SingularAt;
      failure = m;
      break;
    }
    T next = older / den;
    if constexpr (is_exact_v<T>) {
      if (bit_size(next) > opts.max_bits)
        throw Error(Errc::ResourceLimit, "term x_" + std::to_string(m) + " exceeds the bit-size cap");
    } else {
      if (!std::isfinite(next) || !std::isfinite(den)) {
        termination = Termination::NonFiniteAt;
        failure = m;
        break;
      }
      if (std::fabs(den) < 1e-12 * (std::fabs(params.a) + std::fabs(coupling))) ill_conditioned = true;
    }
    x.push_back(std::move(next));
  }
  return Orbit<T>(params, seed, std::move(x), termination, failure, ill_conditioned);
}

template <Scalar T>
struct PartialProducts {
  std::vector<T> even_products;  // P_k = prod_{i=0}^{k} h(2i)
  std::vector<T> odd_products;   // Q_k = prod_{i=0}^{k} h(2i+1)
};

namespace detail {

template <Scalar T>
void require_admissible(const Params<T>& params, const SeedPair<T>& seed) {
  const AdmissibilityVerdict v = check_admissible(params, seed);
  if (v.kind == VerdictKind::NonAdmissible)
    throw Error(Errc::NotAdmissible, "denominator vanishes at step " + std::to_string(v.step));
}

}  // namespace detail

template <Scalar T>
PartialProducts<T> partial_products(const Params<T>& params, const SeedPair<T>& seed, std::int64_t k_max) {
  detail::require_admissible(params, seed);
  if (k_max < 0) throw Error(Errc::InvalidArgument, "k_max must be nonnegative");
  PartialProducts<T> out;
  out.even_products.reserve(static_cast<std::size_t>(k_max) + 1);
  out.odd_products.reserve(static_cast<std::size_t>(k_max) + 1);
  CoefficientSequence<T> h(params.a, alpha_of(params, seed));
  T even(1), odd(1);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    even *= h.next();
    odd *= h.next();
    out.even_products.push_back(even);
    out.odd_products.push_back(odd);
  }
  return out;
}

// x_{-1} .. x_{n_max} from the product representation (slot-shifted like Orbit).
template <Scalar T>
std::vector<T> closed_form_terms(const Params<T>& params, const SeedPair<T>& seed, std::int64_t n_max) {
  detail::require_admissible(params, seed);
  std::vector<T> x;
  x.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)) + 2);
  x.push_back(seed.x_prev);
  x.push_back(seed.x_zero);
  CoefficientSequence<T> h(params.a, alpha_of(params, seed));
  T even(1), odd(1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    // x_n uses h(n-1): odd n extends P, even n extends Q.
    if (n % 2 == 1) {
      even *= h.next();
      x.push_back(T(seed.x_prev * even));
    } else {
      odd *= h.next();
      x.push_back(T(seed.x_zero * odd));
    }
  }
  return x;
}

template <Scalar T>
T closed_form_term(const Params<T>& params, const SeedPair<T>& seed, std::int64_t n) {
  if (n < -1) throw Error(Errc::InvalidArgument, "index must be >= -1");
  if (n == -1) {
    detail::require_admissible(params, seed);
    return seed.x_prev;
  }
  return closed_form_terms(params, seed, n).back();
}

// ({x_0, x_2, ...}, {x_{-1}, x_1, ...})
template <Scalar T>
std::pair<std::vector<T>, std::vector<T>> even_odd_split(const Orbit<T>& orbit) {
  std::pair<std::vector<T>, std::vector<T>> out;
  for (std::int64_t n = -1; n <= orbit.last_index(); ++n) {
    if (n % 2 == 0)
      out.first.push_back(orbit[n]);
    else
      out.second.push_back(orbit[n]);
  }
  return out;
}

}  // namespace rde
