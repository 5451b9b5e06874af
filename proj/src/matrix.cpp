#include "lefschetz/matrix.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace lefschetz {

namespace {

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// Rank over F_2 with rows packed 64 columns per word.
std::size_t rank_mod2_packed(const std::vector<std::uint32_t>& entries,
                             std::size_t rows, std::size_t cols) {
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (entries[i * cols + j] & 1u) {
                bits[i * words + j / 64] |= (std::uint64_t{1} << (j % 64));
            }
        }
    }
    std::size_t rank = 0, top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t piv = top;
        while (piv < rows && !(bits[piv * words + w] & mask)) ++piv;
        if (piv == rows) continue;
        if (piv != top) {
            for (std::size_t k = w; k < words; ++k) {
                std::swap(bits[top * words + k], bits[piv * words + k]);
            }
        }
        for (std::size_t i = top + 1; i < rows; ++i) {
            if (bits[i * words + w] & mask) {
                for (std::size_t k = w; k < words; ++k) {
                    bits[i * words + k] ^= bits[top * words + k];
                }
            }
        }
        ++top;
        ++rank;
    }
    return rank;
}

// Rank over F_p (odd p) with delayed reduction: only the pivot row is kept
// reduced; other entries accumulate in 64 bits.  Valid while
// rows * (p-1)^2 stays below 2^63, which the caller guarantees.
std::size_t rank_modp_delayed(std::vector<std::uint64_t> a, std::size_t rows,
                              std::size_t cols, std::uint64_t p) {
    std::size_t rank = 0, top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        std::size_t piv = top;
        while (piv < rows && a[piv * cols + c] % p == 0) ++piv;
        if (piv == rows) continue;
        if (piv != top) {
            for (std::size_t k = c; k < cols; ++k) {
                std::swap(a[top * cols + k], a[piv * cols + k]);
            }
        }
        std::uint64_t* tr = &a[top * cols];
        for (std::size_t k = c; k < cols; ++k) tr[k] %= p;
        const std::uint64_t inv = fp_inv(tr[c], p);
        for (std::size_t k = c; k < cols; ++k) tr[k] = tr[k] * inv % p;
        for (std::size_t i = top + 1; i < rows; ++i) {
            std::uint64_t* ri = &a[i * cols];
            const std::uint64_t f = ri[c] % p;
            if (f == 0) continue;
            const std::uint64_t g = p - f;
            for (std::size_t k = c; k < cols; ++k) ri[k] += g * tr[k];
        }
        ++top;
        ++rank;
    }
    return rank;
}

// Fallback for large p: reduce after every step.
std::size_t rank_modp_generic(std::vector<std::uint64_t> a, std::size_t rows,
                              std::size_t cols, std::uint64_t p) {
    std::size_t rank = 0, top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        std::size_t piv = top;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != top) {
            for (std::size_t k = c; k < cols; ++k) {
                std::swap(a[top * cols + k], a[piv * cols + k]);
            }
        }
        std::uint64_t* tr = &a[top * cols];
        const std::uint64_t inv = fp_inv(tr[c], p);
        for (std::size_t k = c; k < cols; ++k) tr[k] = tr[k] * inv % p;
        for (std::size_t i = top + 1; i < rows; ++i) {
            std::uint64_t* ri = &a[i * cols];
            const std::uint64_t f = ri[c];
            if (f == 0) continue;
            const std::uint64_t g = p - f;
            for (std::size_t k = c; k < cols; ++k) {
                ri[k] = (ri[k] + g * tr[k]) % p;
            }
        }
        ++top;
        ++rank;
    }
    return rank;
}

std::size_t rank_modp(const std::vector<std::uint32_t>& entries, std::size_t rows,
                      std::size_t cols, std::uint32_t p) {
    if (rows == 0 || cols == 0) return 0;
    if (p == 2) return rank_mod2_packed(entries, rows, cols);
    std::vector<std::uint64_t> a(entries.begin(), entries.end());
    const std::uint64_t growth = std::uint64_t(p - 1) * (p - 1);
    if (growth != 0 && rows <= (std::uint64_t{1} << 62) / growth) {
        return rank_modp_delayed(std::move(a), rows, cols, p);
    }
    return rank_modp_generic(std::move(a), rows, cols, p);
}

// Reduced row echelon form mod p with pivot bookkeeping; used for kernel
// extraction.  Delayed reduction (only pivot rows and multipliers reduced)
// while the growth bound allows, else reduce every step.
struct FpRref {
    std::size_t rank = 0;
    std::vector<int> pivot_row_of_col;
    std::vector<std::vector<std::uint64_t>> rows;
};

FpRref fp_rref(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    FpRref out;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    out.pivot_row_of_col.assign(cols, -1);
    const std::uint64_t growth = (p - 1) * (p - 1);
    const bool delayed =
        growth != 0 && std::max(rows, cols) <= (std::uint64_t{1} << 62) / growth;
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        std::size_t piv = top;
        while (piv < rows && a[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[top], a[piv]);
        const std::uint64_t inv = fp_inv(a[top][c] % p, p);
        for (auto& x : a[top]) x = x % p * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == top) continue;
            const std::uint64_t f = a[i][c] % p;
            if (f == 0) continue;
            const std::uint64_t g = p - f;
            std::uint64_t* ri = a[i].data();
            const std::uint64_t* tr = a[top].data();
            if (delayed) {
                for (std::size_t k = 0; k < cols; ++k) ri[k] += g * tr[k];
            } else {
                for (std::size_t k = 0; k < cols; ++k) {
                    ri[k] = (ri[k] + g * tr[k]) % p;
                }
            }
        }
        out.pivot_row_of_col[c] = static_cast<int>(top);
        ++top;
    }
    if (delayed) {
        for (auto& row : a) {
            for (auto& x : row) x %= p;
        }
    }
    out.rank = top;
    out.rows = std::move(a);
    return out;
}

struct QRref {
    std::size_t rank = 0;
    std::vector<int> pivot_row_of_col;
    std::vector<std::vector<Rational>> rows;
};

QRref q_rref(std::vector<std::vector<Rational>> a) {
    QRref out;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    out.pivot_row_of_col.assign(cols, -1);
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        std::size_t piv = top;
        while (piv < rows && a[piv][c] == 0) ++piv; // first nonzero pivot
        if (piv == rows) continue;
        std::swap(a[top], a[piv]);
        const Rational inv = 1 / a[top][c];
        for (auto& x : a[top]) {
            if (x != 0) x *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == top || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (a[top][k] != 0) a[i][k] -= f * a[top][k];
            }
        }
        out.pivot_row_of_col[c] = static_cast<int>(top);
        ++top;
    }
    out.rank = top;
    out.rows = std::move(a);
    return out;
}

// Primes for certifying full rank over Q of an integer matrix: full rank
// mod any of them is full rank over Q.  Fixed order keeps results
// deterministic; a miss on all of them falls back to rational elimination.
constexpr std::array<std::uint32_t, 9> kCertLadder = {
    2, 3, 5, 7, 11, 13, 65537, 1000003, 2147483629u};

} // namespace

ExactMatrix::ExactMatrix(Characteristic chr, std::size_t rows, std::size_t cols)
    : chr_(chr), rows_(rows), cols_(cols) {
    if (chr_.is_zero()) {
        q_.assign(rows * cols, Rational(0));
    } else {
        m_.assign(rows * cols, 0);
    }
}

void ExactMatrix::add_entry(std::size_t i, std::size_t j, const Integer& value) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix entry index");
    if (chr_.is_zero()) {
        q_[i * cols_ + j] += Rational(value);
    } else {
        const std::uint32_t p = chr_.value();
        std::uint64_t cur = m_[i * cols_ + j];
        m_[i * cols_ + j] =
            static_cast<std::uint32_t>((cur + residue_mod(value, p)) % p);
    }
}

Rational ExactMatrix::entry(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix entry index");
    if (chr_.is_zero()) return q_[i * cols_ + j];
    return Rational(static_cast<unsigned long>(m_[i * cols_ + j]));
}

bool ExactMatrix::integral() const {
    if (!chr_.is_zero()) return true;
    for (const auto& x : q_) {
        if (x.get_den() != 1) return false;
    }
    return true;
}

std::size_t ExactMatrix::rank_mod_prime(std::uint32_t p) const {
    if (!chr_.is_zero()) throw std::logic_error("rank_mod_prime needs a char-0 matrix");
    std::vector<std::uint32_t> a(rows_ * cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
        const Rational& x = q_[i];
        if (x.get_den() != 1) {
            throw std::logic_error("rank_mod_prime needs integral entries");
        }
        a[i] = residue_mod(Integer(x.get_num()), p);
    }
    return rank_modp(a, rows_, cols_, p);
}

std::size_t ExactMatrix::rational_rank_direct() const {
    std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = q_[i * cols_ + j];
    }
    return q_rref(std::move(a)).rank;
}

std::size_t ExactMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (!chr_.is_zero()) return rank_modp(m_, rows_, cols_, chr_.value());
    const std::size_t full = std::min(rows_, cols_);
    if (full > 256 && integral()) {
        for (std::uint32_t p : kCertLadder) {
            if (rank_mod_prime(p) == full) return full;
        }
    }
    return rational_rank_direct();
}

std::vector<std::vector<Rational>> ExactMatrix::kernel_basis() const {
    std::vector<std::vector<Rational>> out;
    if (cols_ == 0) return out;
    if (rows_ == 0) {
        for (std::size_t c = 0; c < cols_; ++c) {
            std::vector<Rational> v(cols_, Rational(0));
            v[c] = 1;
            out.push_back(std::move(v));
        }
        return out;
    }
    if (chr_.is_zero()) {
        std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) a[i][j] = q_[i * cols_ + j];
        }
        QRref rr = q_rref(std::move(a));
        for (std::size_t c = 0; c < cols_; ++c) {
            if (rr.pivot_row_of_col[c] != -1) continue;
            std::vector<Rational> v(cols_, Rational(0));
            v[c] = 1;
            for (std::size_t c2 = 0; c2 < cols_; ++c2) {
                const int pr = rr.pivot_row_of_col[c2];
                if (pr != -1) v[c2] = -rr.rows[static_cast<std::size_t>(pr)][c];
            }
            out.push_back(std::move(v));
        }
        return out;
    }
    const std::uint64_t p = chr_.value();
    std::vector<std::vector<std::uint64_t>> a(rows_, std::vector<std::uint64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = m_[i * cols_ + j];
    }
    FpRref rr = fp_rref(std::move(a), p);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (rr.pivot_row_of_col[c] != -1) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[c] = 1;
        for (std::size_t c2 = 0; c2 < cols_; ++c2) {
            const int pr = rr.pivot_row_of_col[c2];
            if (pr == -1) continue;
            const std::uint64_t x = rr.rows[static_cast<std::size_t>(pr)][c] % p;
            if (x != 0) {
                v[c2] = Rational(static_cast<unsigned long>(p - x));
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& rhs) const {
    if (chr_ != rhs.chr_) throw std::invalid_argument("characteristic mismatch");
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
    ExactMatrix out(chr_, rows_, rhs.cols_);
    if (chr_.is_zero()) {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& x = q_[i * cols_ + k];
                if (x == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const Rational& y = rhs.q_[k * rhs.cols_ + j];
                    if (y != 0) out.q_[i * rhs.cols_ + j] += x * y;
                }
            }
        }
    } else {
        const std::uint64_t p = chr_.value();
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const std::uint64_t x = m_[i * cols_ + k];
                if (x == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const std::uint64_t y = rhs.m_[k * rhs.cols_ + j];
                    if (y == 0) continue;
                    out.m_[i * rhs.cols_ + j] = static_cast<std::uint32_t>(
                        (out.m_[i * rhs.cols_ + j] + x * y) % p);
                }
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(chr_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (chr_.is_zero()) {
                out.q_[j * rows_ + i] = q_[i * cols_ + j];
            } else {
                out.m_[j * rows_ + i] = m_[i * cols_ + j];
            }
        }
    }
    return out;
}

bool ExactMatrix::is_zero_vector_product(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    if (chr_.is_zero()) {
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < cols_; ++j) {
                if (q_[i * cols_ + j] != 0 && v[j] != 0) acc += q_[i * cols_ + j] * v[j];
            }
            if (acc != 0) return false;
        }
        return true;
    }
    const std::uint64_t p = chr_.value();
    std::vector<std::uint64_t> vm(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].get_den() != 1) throw std::invalid_argument("residue vector expected");
        vm[j] = residue_mod(Integer(v[j].get_num()), static_cast<std::uint32_t>(p));
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            acc = (acc + std::uint64_t(m_[i * cols_ + j]) * vm[j]) % p;
        }
        if (acc != 0) return false;
    }
    return true;
}

ExactMatrix build_mult_matrix(const MonomialIdeal& I, const GradedBasis& from,
                              const GradedBasis& to,
                              const std::vector<Integer>& ell,
                              Characteristic chr) {
    if (static_cast<int>(ell.size()) != I.vars()) {
        throw std::invalid_argument("linear form coefficient count mismatch");
    }
    ExactMatrix M(chr, to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        const Monomial& u = from.monomials[j];
        for (int i = 0; i < I.vars(); ++i) {
            if (ell[static_cast<std::size_t>(i)] == 0) continue;
            const Monomial v = u.times_variable(i);
            if (auto row = to.index_of(v)) {
                M.add_entry(*row, j, ell[static_cast<std::size_t>(i)]);
            }
        }
    }
    return M;
}

ExactMatrix build_mult_matrix(const MonomialIdeal& I, int t,
                              const std::vector<Integer>& ell,
                              Characteristic chr) {
    const GradedBasis from = standard_basis(I, t);
    const GradedBasis to = standard_basis(I, t + 1);
    return build_mult_matrix(I, from, to, ell, chr);
}

} // namespace lefschetz
