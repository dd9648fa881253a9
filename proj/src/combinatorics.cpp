#include "hilbreg/combinatorics.hpp"

namespace hilbreg {

Int binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

int shuffle_sign(const std::vector<long>& A, const std::vector<long>& B) {
    long inversions = 0;
    for (long x : A)
        for (long y : B)
            if (x > y) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<long>> subsets(long a, long b) {
    std::vector<std::vector<long>> out;
    if (b < 0 || b > a) return out;
    std::vector<long> cur(b);
    for (long i = 0; i < b; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        long i = b - 1;
        while (i >= 0 && cur[i] == a - (b - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (long j = i + 1; j < b; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<long> complement_in(long N, const std::vector<long>& I) {
    std::vector<long> out;
    out.reserve(N - static_cast<long>(I.size()));
    std::size_t k = 0;
    for (long j = 1; j <= N; ++j) {
        if (k < I.size() && I[k] == j) { ++k; continue; }
        out.push_back(j);
    }
    return out;
}

}  // namespace hilbreg
