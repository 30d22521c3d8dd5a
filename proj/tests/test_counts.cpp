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

#include <gtest/gtest.h>

#include "cgprob/counts.hpp"

using namespace cgprob;

namespace {

TEST(Counts, Mobius)
{
    const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(mobius(n), expected[n - 1]) << n;
    EXPECT_THROW(mobius(0), std::invalid_argument);
    EXPECT_EQ(divisors(12), (std::vector<int>{1, 2, 3, 4, 6, 12}));
}

TEST(Counts, IrreducibleCountsOverF2)
{
    const long expected[] = {1, 1, 2, 3, 6, 9, 18, 30};
    for (int d = 1; d <= 8; ++d) EXPECT_EQ(count_N(d, Integer(2)), expected[d - 1]) << d;
}

TEST(Counts, NecklaceIdentity)
{
    // sum_{d | n} d N(d, q) = q^n - 1 (every nonzero root of z^{q^n} - z).
    for (long qv : {2, 3, 4, 5, 7, 9}) {
        for (int n = 1; n <= 8; ++n) {
            Integer sum = 0;
            for (int d : divisors(n)) sum += d * count_N(d, Integer(qv));
            EXPECT_EQ(sum, ipow(Integer(qv), n) - 1);
        }
    }
}

TEST(Counts, SymbolicAgreesWithConcrete)
{
    for (long qv : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25}) {
        const Integer q0 = qv;
        const CharParity par = parity_of(q0);
        for (int d = 1; d <= 10; ++d) {
            EXPECT_EQ(count_N(d).evaluate(q0), Rational(count_N(d, q0)));
            EXPECT_EQ(count_Ntilde(d).evaluate(q0), Rational(count_Ntilde(d, q0)));
            EXPECT_EQ(count_Mtilde(d).evaluate(q0), Rational(count_Mtilde(d, q0)));
            EXPECT_EQ(count_Nstar(d, par).evaluate(q0), Rational(count_Nstar(d, q0)));
            EXPECT_EQ(count_Mstar(d, par).evaluate(q0), Rational(count_Mstar(d, q0)));
        }
    }
}

TEST(Counts, SmallValues)
{
    const Integer two = 2, three = 3;
    EXPECT_EQ(count_Ntilde(1, three), 4);
    EXPECT_EQ(count_Ntilde(2, three), 0);
    EXPECT_EQ(count_Nstar(1, two), 1);
    EXPECT_EQ(count_Nstar(1, three), 2);
    EXPECT_EQ(count_Nstar(3, three), 0);
    EXPECT_EQ(count_Mstar(1, Integer(5)), 1);
    EXPECT_EQ(e_value(parity_of(Integer(4))), 1);
    EXPECT_EQ(e_value(parity_of(Integer(9))), 2);
}

TEST(Counts, DegreeOfSymbolicCounts)
{
    for (int d = 1; d <= 8; ++d) {
        EXPECT_EQ(count_N(d).degree(), d);
        EXPECT_LE(count_Mtilde(d).degree(), 2 * d);
        EXPECT_LE(count_Nstar(2 * d, CharParity::Odd).degree(), d);
        EXPECT_LE(count_Mstar(d, CharParity::Even).degree(), d);
    }
}

} // namespace
