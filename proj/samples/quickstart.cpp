// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// A short tour: parse a decorated permutation, look at its necklace, and
// test a few quotient relations.

#include <iostream>

#include "positroid/io.hpp"
#include "positroid/positroid.hpp"

int main() {
  using namespace positroid;

  const DecoratedPermutation dp = io::parse_dp_text("2 6 1 5 3 4");
  std::cout << "dp " << to_text(dp) << ", rank " << rank(dp) << '\n';
  std::cout << "necklace   " << to_necklace(dp) << '\n';
  std::cout << "conecklace " << conecklace(dp) << '\n';

  // Every necklace entry is contained in the matching entry of U_{4,6},
  // yet the rank inequality fails, so this is not a quotient.
  const Containment c = containment_check(dp, uniform_dp(4, 6));
  const QuotientVerdict v = is_quotient_rank(positroid_of(dp), uniform_matroid(4, 6));
  std::cout << "containment " << c.necklace << c.conecklace << ", quotient of U(4,6): " << v.is_quotient << '\n';

  // Freezing {1,3,5,8} in pi_{4,8} gives an elementary quotient.
  const DecoratedPermutation pi = uniform_dp(4, 8);
  const Subset frozen = Subset::of({1, 3, 5, 8});
  const DecoratedPermutation sigma = cyclic_shift(pi, frozen);
  std::cout << to_text(pi) << " -> " << to_text(sigma) << " (recovered shift set "
            << recover_shift_set(pi, sigma) << ")\n";
  return 0;
}
