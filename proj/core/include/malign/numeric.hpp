#ifndef MALIGN_NUMERIC_HPP
#define MALIGN_NUMERIC_HPP

#include <cmath>

namespace malign {

// Neumaier compensated summation. Keeps long reductions accurate to a
// few ulps so that oracle-equivalence tolerances can stay tight.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace malign

#endif  // MALIGN_NUMERIC_HPP
