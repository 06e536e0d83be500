#pragma once
// Dense F2 row vectors and incremental Gaussian elimination.
//
// Rows are packed 64 bits per word. Elimination keeps a basis of reduced rows
// indexed by pivot column, which is enough for every rank / membership /
// kernel computation in the chain-complex code.

#include <cstdint>
#include <cstddef>
#include <vector>

namespace gridknot::f2 {

class Row {
public:
    Row() = default;
    explicit Row(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    void operator^=(const Row& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    // Index of the lowest set bit, or npos if zero.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
        return npos;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Incremental eliminator over a fixed column dimension. Feed rows one at a
// time; each is reduced against the current basis and, if nonzero, stored as
// a new pivot row. rank() is the number of stored pivots.
class Eliminator {
public:
    explicit Eliminator(std::size_t ncols) : ncols_(ncols), pivot_of_col_(ncols, SIZE_MAX) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces `r` in place against the basis. Returns true if the reduced row
    // is nonzero (i.e. r was independent of the basis).
    bool reduce(Row& r) const {
        for (;;) {
            std::size_t lead = r.lowest();
            if (lead == Row::npos) return false;
            std::size_t p = pivot_of_col_[lead];
            if (p == SIZE_MAX) return true;
            r ^= rows_[p];
        }
    }

    // Reduce and absorb: returns true if the row increased the rank.
    bool add(Row r) {
        if (!reduce(r)) return false;
        std::size_t lead = r.lowest();
        pivot_of_col_[lead] = rows_.size();
        rows_.push_back(std::move(r));
        return true;
    }

    // Does `r` lie in the row span?
    bool contains(Row r) const { return !reduce(r); }

    // Approximate heap footprint, for capacity guards.
    std::size_t bytes() const { return rows_.size() * ((ncols_ + 63) / 64) * 8; }

private:
    std::size_t ncols_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivot_of_col_;
};

// Rank of a sparse matrix given as rows of column indices.
inline std::size_t rank_of_rows(const std::vector<std::vector<std::uint32_t>>& rows,
                                std::size_t ncols) {
    Eliminator elim(ncols);
    for (const auto& sparse : rows) {
        Row r(ncols);
        for (auto c : sparse) r.flip(c);
        elim.add(std::move(r));
    }
    return elim.rank();
}

}  // namespace gridknot::f2
