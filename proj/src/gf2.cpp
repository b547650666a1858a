#include "intersective/gf2.hpp"

#include <bit>

#include "intersective/error.hpp"

namespace intersective {

bool Gf2Vector::is_zero() const {
    for (auto w : words_) {
        if (w) return false;
    }
    return true;
}

std::size_t Gf2Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

Gf2Solution solve_gf2(const std::vector<Gf2Vector>& rows, const std::vector<bool>& rhs, std::size_t columns) {
    if (rows.size() != rhs.size()) throw InputError("solve_gf2: row and right-hand side counts differ");
    const std::size_t n = rows.size();

    struct Reduced {
        Gf2Vector coeffs;
        bool rhs = false;
        Gf2Vector origin;  // input rows summed into this one
        std::size_t pivot = 0;
    };
    // Kept fully reduced: no basis row has a 1 in another basis row's pivot.
    std::vector<Reduced> basis;
    std::vector<std::size_t> basis_index(n, n);
    std::vector<Gf2Vector> origins(n);

    Gf2Solution out;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != columns) throw InputError("solve_gf2: row width mismatch");
        Reduced cur{rows[i], rhs[i], Gf2Vector(n), 0};
        cur.origin.set(i);
        for (const auto& b : basis) {
            if (cur.coeffs.get(b.pivot)) {
                cur.coeffs ^= b.coeffs;
                cur.rhs = cur.rhs != b.rhs;
                cur.origin ^= b.origin;
            }
        }
        if (cur.coeffs.is_zero()) {
            origins[i] = cur.origin;
            if (cur.rhs && !out.conflict) {
                std::vector<std::size_t> subset;
                for (std::size_t j = 0; j < n; ++j) {
                    if (cur.origin.get(j)) subset.push_back(j);
                }
                out.conflict = std::move(subset);
            }
            continue;
        }
        while (!cur.coeffs.get(cur.pivot)) ++cur.pivot;
        for (auto& b : basis) {
            if (b.coeffs.get(cur.pivot)) {
                b.coeffs ^= cur.coeffs;
                b.rhs = b.rhs != cur.rhs;
                b.origin ^= cur.origin;
            }
        }
        basis_index[i] = basis.size();
        out.basis_rows.push_back(i);
        basis.push_back(std::move(cur));
    }
    out.rank = basis.size();

    out.coordinates.assign(n, Gf2Vector(out.rank));
    for (std::size_t i = 0; i < n; ++i) {
        if (basis_index[i] != n) {
            out.coordinates[i].set(basis_index[i]);
            continue;
        }
        // rows[i] = sum of the other rows in its origin, all of them basis rows.
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && origins[i].get(j)) out.coordinates[i].set(basis_index[j]);
        }
    }

    if (!out.conflict) {
        Gf2Vector x(columns);
        for (const auto& b : basis) x.set(b.pivot, b.rhs);
        out.solution = std::move(x);
    }
    return out;
}

}  // namespace intersective
