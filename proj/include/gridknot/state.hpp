#pragma once
// Grid states: permutations of {0..n-1}, one per vertical line, packed four
// bits per entry into a single machine word. Lexicographic rank serves as
// the state index throughout.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gridknot {

// Hard cap on the state-enumeration machinery (4-bit packing and 64-bit
// factorial arithmetic are comfortable well beyond it; heavier operations
// impose their own, smaller caps).
inline constexpr int kMaxEnumerationSize = 12;

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GridState {
public:
    GridState() = default;
    GridState(const std::vector<int>& sigma) : n_(static_cast<int>(sigma.size())) {
        for (int i = 0; i < n_; ++i) bits_ |= static_cast<std::uint64_t>(sigma[i]) << (4 * i);
    }

    int size() const { return n_; }
    int operator[](int i) const { return static_cast<int>((bits_ >> (4 * i)) & 0xF); }

    void set(int i, int v) {
        bits_ = (bits_ & ~(std::uint64_t{0xF} << (4 * i))) |
                (static_cast<std::uint64_t>(v) << (4 * i));
    }

    std::vector<int> to_vector() const {
        std::vector<int> v(n_);
        for (int i = 0; i < n_; ++i) v[i] = (*this)[i];
        return v;
    }

    // State reached by swapping the rows on vertical lines i and j.
    GridState swapped(int i, int j) const {
        GridState s = *this;
        int a = (*this)[i], b = (*this)[j];
        s.set(i, b);
        s.set(j, a);
        return s;
    }

    std::uint64_t packed() const { return bits_; }
    bool operator==(const GridState&) const = default;
    bool operator<(const GridState& o) const { return key() < o.key(); }

    // Lexicographic comparison key: entry 0 in the most significant nibble.
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (int i = 0; i < n_; ++i) k = (k << 4) | static_cast<std::uint64_t>((*this)[i]);
        return k;
    }

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Number of permutations preceding sigma lexicographically.
std::uint64_t lex_rank(const GridState& s);

// Inverse of lex_rank.
GridState from_lex_rank(int n, std::uint64_t rank);

// Calls fn(state, rank) for all n! states in lexicographic order.
// Throws CapacityError above kMaxEnumerationSize.
template <typename Fn>
void for_each_state(int n, Fn&& fn) {
    if (n < 2 || n > kMaxEnumerationSize)
        throw CapacityError("state enumeration supports 2 <= n <= 12");
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    std::uint64_t rank = 0;
    for (;;) {
        fn(GridState(sigma), rank);
        ++rank;
        // next_permutation, spelled out to keep the loop allocation-free
        int i = n - 2;
        while (i >= 0 && sigma[i] > sigma[i + 1]) --i;
        if (i < 0) break;
        int j = n - 1;
        while (sigma[j] < sigma[i]) --j;
        std::swap(sigma[i], sigma[j]);
        for (int a = i + 1, b = n - 1; a < b; ++a, --b) std::swap(sigma[a], sigma[b]);
    }
}

}  // namespace gridknot
