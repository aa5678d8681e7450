// Copyright 2026 The loqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOQSIM_NUMERIC_HPP
#define LOQSIM_NUMERIC_HPP

namespace loqsim {

/// Neumaier-compensated running sum (TwoSum error term carried separately).
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        const double z = t - sum_;
        carry_ += (sum_ - (t - z)) + (x - z);
        sum_ = t;
    }

    CompensatedSum &operator+=(double x) {
        add(x);
        return *this;
    }

    double value() const { return sum_ + carry_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace loqsim

#endif  // LOQSIM_NUMERIC_HPP
