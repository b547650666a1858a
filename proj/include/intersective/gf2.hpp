#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace intersective {

/// Dense bit vector over F_2.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (v) {
            words_[i / 64] |= bit;
        } else {
            words_[i / 64] &= ~bit;
        }
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool is_zero() const;
    std::size_t popcount() const;
    Gf2Vector& operator^=(const Gf2Vector& other);
    /// Inner product <a, b> over F_2.
    bool dot(const Gf2Vector& other) const;

    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Outcome of solving <x, rows[i]> = rhs[i] for all i.
struct Gf2Solution {
    std::size_t rank = 0;
    /// Input rows that raised the rank, in input order; a basis of the span.
    std::vector<std::size_t> basis_rows;
    /// For every input row, its coordinates over basis_rows (width = rank).
    std::vector<Gf2Vector> coordinates;
    /// Present when the system is consistent; free variables set to 0.
    std::optional<Gf2Vector> solution;
    /// Present when inconsistent: input rows whose vectors sum to zero while
    /// their right-hand sides sum to 1.
    std::optional<std::vector<std::size_t>> conflict;
};

/// Row-by-row Gaussian elimination. Every reduced row carries an
/// identity-augmented record of the input rows summed into it, which is what
/// the conflict certificate and the coordinates are read from.
Gf2Solution solve_gf2(const std::vector<Gf2Vector>& rows, const std::vector<bool>& rhs, std::size_t columns);

}  // namespace intersective
