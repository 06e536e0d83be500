#include "gridknot/state.hpp"

namespace gridknot {

std::uint64_t lex_rank(const GridState& s) {
    int n = s.size();
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = s[i];
        for (int j = 0; j < i; ++j)
            if (s[j] < s[i]) --smaller;
        rank += static_cast<std::uint64_t>(smaller) * factorial(n - i - 1);
    }
    return rank;
}

GridState from_lex_rank(int n, std::uint64_t rank) {
    std::vector<int> avail(n), sigma(n);
    for (int i = 0; i < n; ++i) avail[i] = i;
    for (int i = 0; i < n; ++i) {
        std::uint64_t f = factorial(n - i - 1);
        int k = static_cast<int>(rank / f);
        rank %= f;
        sigma[i] = avail[k];
        avail.erase(avail.begin() + k);
    }
    return GridState(sigma);
}

}  // namespace gridknot
