#pragma once
#include <cstdint>
#include <vector>

#include "hilbreg/rational.hpp"

namespace hilbreg {

// C(a,b) as an exact big integer. Returns 0 when b < 0, a < 0, or b > a >= 0;
// C(a,0) = 1 for a >= 0.
Int binomial(long a, long b);

// Parity of the shuffle sorting the concatenation (A,B) ascending, A and B
// themselves ascending and disjoint. Returns +1 or -1.
int shuffle_sign(const std::vector<long>& A, const std::vector<long>& B);

// All b-element subsets of {1,...,a}, ascending tuples in lexicographic order.
std::vector<std::vector<long>> subsets(long a, long b);

// Complement of ascending `I` inside {1,...,N}, ascending.
std::vector<long> complement_in(long N, const std::vector<long>& I);

}  // namespace hilbreg
