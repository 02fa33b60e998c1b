#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hs/geometry.hpp"

namespace hs {

// An evaluable scalar field with gradient.  Value-type wrapper over a shared
// immutable implementation, so copies are cheap and evaluation is pure.
class TestFunction {
 public:
  struct Impl {
    virtual ~Impl() = default;
    virtual int dim() const = 0;
    virtual double value(std::span<const double> x) const = 0;
    // Writes the gradient into g (g.size() == x.size()) and returns the value.
    virtual double value_and_gradient(std::span<const double> x,
                                      std::span<double> g) const = 0;
  };

  TestFunction() = default;
  explicit TestFunction(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  bool valid() const { return impl_ != nullptr; }
  int dim() const { return impl_->dim(); }
  double value(std::span<const double> x) const { return impl_->value(x); }
  double value_and_gradient(std::span<const double> x,
                            std::span<double> g) const {
    return impl_->value_and_gradient(x, g);
  }

  // Metadata driving truncation and tail estimates.  support_radius is the
  // radius (around the origin) beyond which the function vanishes; infinity
  // for decaying families, in which case decay_exponent d means |u| ~ r^-d.
  double support_radius = std::numeric_limits<double>::infinity();
  double decay_exponent = std::numeric_limits<double>::infinity();
  // Short human/JSON description, used in certificates.
  std::string descriptor;

 private:
  std::shared_ptr<const Impl> impl_;
};

// Piecewise-linear radial profile around a center: f(|x - center|) with
// f interpolating (knots[i], values[i]) and f = 0 at and beyond the last
// knot.  Knots must be sorted, starting at 0.
struct RadialProfileData {
  Point center;
  std::vector<double> knots;
  std::vector<double> values;
};

TestFunction make_radial_profile(RadialProfileData data);

// Build from arbitrary callables (tests, wrappers).
TestFunction make_lambda_function(
    int dim, std::function<double(std::span<const double>)> value,
    std::function<void(std::span<const double>, std::span<double>)> gradient);

// u((x - x0)/R): pushforward under dilation + translation.
TestFunction scale_translate(const TestFunction& u, double R, Point x0);

// c * u
TestFunction scalar_multiple(const TestFunction& u, double c);

// v = u / t (last coordinate); only evaluated at t > 0.
TestFunction divide_by_t(const TestFunction& u);

// u * t^{gamma/2}, used by the weighted-inequality checkers.
TestFunction times_t_power(const TestFunction& u, double exponent);

// u(x) * cutoff(|x - center|) with a C^1 smoothstep cutoff: 1 on [0, r0],
// 0 beyond r0 + w.
TestFunction radial_cutoff(const TestFunction& u, Point center, double r0,
                           double w);

// Central finite-difference gradient, for validating analytic gradients.
Point fd_gradient(const TestFunction& u, std::span<const double> x,
                  double h = 1e-5);

}  // namespace hs
