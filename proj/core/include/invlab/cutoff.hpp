#pragma once

namespace invlab {

// Smooth cutoff family eta_R: identically 1 on (0, R], identically 0 on
// [R+1, inf), with a C^infinity bump-function transition on [R, R+1].
// Any derivative order is available analytically; smoothness_order caps
// what callers may request.
class SmoothCutoff {
 public:
  explicit SmoothCutoff(int smoothness_order = 6);

  int smoothness_order() const { return order_; }
  double evaluate(double R, double r) const;
  // d^m/dr^m eta_R(r); continuous everywhere, vanishing at r = R and r = R+1.
  double derivative(int order, double R, double r) const;

  // The underlying smooth step p on [0,1] with p(0)=0, p(1)=1 and all
  // derivatives vanishing at both ends; deriv-th derivative at u.
  static double step(int deriv, double u);

 private:
  int order_;
};

}  // namespace invlab
