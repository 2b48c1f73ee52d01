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

#include "mwb/core/monomial.hpp"

namespace mwb {

namespace {

void fill_degree(std::size_t pos, int remaining, Monomial& current, std::vector<Monomial>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current[pos] = k;
    fill_degree(pos + 1, remaining - k, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Monomial> multi_indices_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(n);
  fill_degree(0, d, current, out);
  return out;
}

std::vector<Monomial> graded_multi_indices(std::size_t n, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto level = multi_indices_of_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace mwb
