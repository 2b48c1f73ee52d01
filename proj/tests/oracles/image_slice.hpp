/*
   Copyright 2026 The mathieu-workbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MWB_TESTS_ORACLES_IMAGE_SLICE_HPP
#define MWB_TESTS_ORACLES_IMAGE_SLICE_HPP

#include <vector>

#include "mwb/core/laurent.hpp"
#include "mwb/core/linalg.hpp"

namespace mwb::oracle {

/// Membership of g in Phi_lambda(span{z^k : |k| <= K + 1}) by an exact linear
/// solve, with Phi_lambda z^k = k z^(k-1) + lambda z^(k-1) computed here
/// from the derivative rule alone.
class ImageSlice {
 public:
  ImageSlice(const Rational& lambda, int K) : K_(K) {
    for (int k = -K - 1; k <= K + 1; ++k) {
      LaurentPoly col(1);
      const LaurentPoly zk = LaurentPoly::variable(1, 0, k);
      col += partial(zk, 0);
      col += lambda * mul_monomial(zk, Monomial{-1});
      columns_.push_back(col);
    }
    for (int j = K + 1; j >= -K - 2; --j) rows_.push_back(Monomial{j});
    a_ = coefficient_matrix<Rational>(columns_, rows_);
  }

  bool contains(const LaurentPoly& g) const {
    const RationalMatrix b = coefficient_matrix<Rational>(std::span<const LaurentPoly>(&g, 1), rows_);
    return solve_exact<Rational>(a_, b.col(0)).has_value();
  }

  int bound() const { return K_; }

 private:
  int K_;
  std::vector<LaurentPoly> columns_;
  std::vector<Monomial> rows_;
  RationalMatrix a_;
};

}  // namespace mwb::oracle

#endif  // MWB_TESTS_ORACLES_IMAGE_SLICE_HPP
