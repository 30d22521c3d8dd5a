/*
   Copyright 2026 The cgprob Authors

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

#ifndef CGPROB_TESTS_SUPPORT_HPP
#define CGPROB_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "cgprob/laurent_series.hpp"
#include "cgprob/power_series.hpp"
#include "cgprob/rational.hpp"

namespace cgprob::testing {

inline std::vector<Rational> ints(std::initializer_list<long> v)
{
    return std::vector<Rational>(v.begin(), v.end());
}

inline LaurentSeries series(std::initializer_list<long> v, int order)
{
    return LaurentSeries::from_coefficients(ints(v), order);
}

/// 1 + sum_{i=1}^{order} a_i x^i with a_i uniform in [-bound, bound], times `scale`.
inline RationalSeries random_unit_series(std::mt19937& rng, int order, int bound, int scale = 1)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    RationalSeries s = RationalSeries::one(order);
    for (int i = 1; i <= order; ++i) s[i] = Rational(scale * dist(rng));
    return s;
}

} // namespace cgprob::testing

#endif
