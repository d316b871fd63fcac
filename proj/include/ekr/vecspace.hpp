#pragma once

/**
 * @file vecspace.hpp
 * @brief Linear algebra over prime fields F_q and the Grassmannian G_q(n,k).
 *
 * Subspaces are stored by their reduced row-echelon basis, which is a canonical
 * form: two subspaces are equal iff their stored matrices are byte-identical.
 * For q = 2 each row is additionally packed into a machine word so rank
 * computations run word-parallel.
 */

#include "errors.hpp"
#include "exactnum.hpp"
#include "family.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ekr {

inline bool is_prime(int q)
{
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Arithmetic in F_q for prime q < 256.
class PrimeField {
public:
    explicit PrimeField(int q) : q_(q), inv_(static_cast<std::size_t>(q), 0)
    {
        if (!is_prime(q)) throw unsupported_field_error("F_q arithmetic needs prime q, got " + std::to_string(q));
        if (q > 255) throw unsupported_field_error("F_q arithmetic supports q < 256");
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (a * b % q == 1) inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    }

    int q() const { return q_; }
    std::uint8_t add(int a, int b) const { return static_cast<std::uint8_t>((a + b) % q_); }
    std::uint8_t sub(int a, int b) const { return static_cast<std::uint8_t>((a - b + q_) % q_); }
    std::uint8_t mul(int a, int b) const { return static_cast<std::uint8_t>(a * b % q_); }
    std::uint8_t inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

private:
    int q_;
    std::vector<std::uint8_t> inv_;
};

/// Dense row-major matrix with entries in [0, q).
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(int rows, int cols, int q)
        : rows_(rows), cols_(cols), q_(q), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0)
    {
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int q() const { return q_; }
    const std::vector<std::uint8_t>& data() const { return data_; }

    std::uint8_t operator()(int r, int c) const { return data_[index(r, c)]; }
    std::uint8_t& operator()(int r, int c) { return data_[index(r, c)]; }

    void append_row(const std::vector<std::uint8_t>& row)
    {
        if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("FqMatrix: row length mismatch");
        for (auto v : row)
            if (v >= q_) throw std::invalid_argument("FqMatrix: entry out of range");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    /// Brings the matrix to reduced row-echelon form and drops zero rows. Returns the rank.
    int reduce(const PrimeField& f)
    {
        int rank = 0;
        for (int c = 0; c < cols_ && rank < rows_; ++c) {
            int piv = -1;
            for (int r = rank; r < rows_; ++r)
                if ((*this)(r, c) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            swap_rows(piv, rank);
            const auto s = f.inv((*this)(rank, c));
            for (int j = 0; j < cols_; ++j) (*this)(rank, j) = f.mul((*this)(rank, j), s);
            for (int r = 0; r < rows_; ++r) {
                if (r == rank) continue;
                const auto m = (*this)(r, c);
                if (m == 0) continue;
                for (int j = 0; j < cols_; ++j) (*this)(r, j) = f.sub((*this)(r, j), f.mul(m, (*this)(rank, j)));
            }
            ++rank;
        }
        rows_ = rank;
        data_.resize(static_cast<std::size_t>(rank) * static_cast<std::size_t>(cols_));
        return rank;
    }

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

private:
    std::size_t index(int r, int c) const
    {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
    void swap_rows(int a, int b)
    {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    int rows_ = 0;
    int cols_ = 0;
    int q_ = 2;
    std::vector<std::uint8_t> data_;
};

namespace detail {

inline int rank_gf2(std::vector<std::uint64_t> rows)
{
    int rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto piv = rows[i];
        if (piv == 0) continue;
        ++rank;
        const auto low = piv & (~piv + 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & low) rows[j] ^= piv;
    }
    return rank;
}

} // namespace detail

/// A subspace of F_q^n held by its canonical (RREF) basis.
class Subspace {
public:
    Subspace() = default;

    /// Row space of `rows` (any spanning set, possibly dependent).
    Subspace(int n, int q, const std::vector<std::vector<std::uint8_t>>& rows) : basis_(0, n, q)
    {
        const PrimeField f(q);
        for (const auto& r : rows) basis_.append_row(r);
        basis_.reduce(f);
        pack();
    }

    static Subspace from_rref(FqMatrix m)
    {
        Subspace s;
        s.basis_ = std::move(m);
        s.pack();
        return s;
    }

    static Subspace zero(int n, int q) { return Subspace(n, q, {}); }

    int n() const { return basis_.cols(); }
    int q() const { return basis_.q(); }
    int dim() const { return basis_.rows(); }
    const FqMatrix& basis() const { return basis_; }
    const std::vector<std::uint64_t>& packed() const { return packed_; }

    std::vector<std::vector<std::uint8_t>> rows() const
    {
        std::vector<std::vector<std::uint8_t>> out(static_cast<std::size_t>(dim()));
        for (int r = 0; r < dim(); ++r)
            for (int c = 0; c < n(); ++c) out[static_cast<std::size_t>(r)].push_back(basis_(r, c));
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator<(const Subspace& a, const Subspace& b)
    {
        // Same-dimension subspaces: row-major base-q reading, ascending.
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.basis_.data() < b.basis_.data();
    }

private:
    void pack()
    {
        packed_.clear();
        if (q() != 2 || n() > 64) return;
        for (int r = 0; r < dim(); ++r) {
            std::uint64_t w = 0;
            for (int c = 0; c < n(); ++c)
                if (basis_(r, c)) w |= std::uint64_t{1} << c;
            packed_.push_back(w);
        }
    }

    FqMatrix basis_;
    std::vector<std::uint64_t> packed_;
};

inline void require_same_ambient(const Subspace& u, const Subspace& w)
{
    if (u.n() != w.n() || u.q() != w.q()) throw std::invalid_argument("subspaces live in different ambient spaces");
}

/// dim(U + W).
inline int sum_dim(const Subspace& u, const Subspace& w)
{
    require_same_ambient(u, w);
    if (u.q() == 2 && u.n() <= 64) {
        std::vector<std::uint64_t> rows = u.packed();
        rows.insert(rows.end(), w.packed().begin(), w.packed().end());
        return detail::rank_gf2(std::move(rows));
    }
    FqMatrix m = u.basis();
    for (const auto& r : w.rows()) m.append_row(r);
    return m.reduce(PrimeField(u.q()));
}

inline int intersection_dim(const Subspace& u, const Subspace& w)
{
    return u.dim() + w.dim() - sum_dim(u, w);
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& w)
{
    require_same_ambient(u, w);
    auto rows = u.rows();
    for (auto& r : w.rows()) rows.push_back(std::move(r));
    return Subspace(u.n(), u.q(), rows);
}

inline bool contains(const Subspace& big, const Subspace& small)
{
    return intersection_dim(big, small) == small.dim();
}

/// Orthogonal complement under the standard dot product (dimension n - dim U).
inline Subspace orthogonal_complement(const Subspace& u)
{
    const PrimeField f(u.q());
    const int n = u.n();
    const auto& b = u.basis();
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int r = 0; r < u.dim(); ++r)
        for (int c = 0; c < n; ++c)
            if (b(r, c) != 0) {
                pivot_of_row.push_back(c);
                is_pivot[static_cast<std::size_t>(c)] = true;
                break;
            }
    std::vector<std::vector<std::uint8_t>> null_rows;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (int r = 0; r < u.dim(); ++r)
            v[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(r)])] = f.sub(0, b(r, free));
        null_rows.push_back(std::move(v));
    }
    return Subspace(n, u.q(), null_rows);
}

inline Subspace subspace_intersection(const Subspace& u, const Subspace& w)
{
    return orthogonal_complement(subspace_sum(orthogonal_complement(u), orthogonal_complement(w)));
}

/// Number of l-dim subspaces meeting a fixed k-dim subspace of F_q^n in exactly j dimensions.
inline BigInt count_at_intersection(int n, int k, int l, int j, int q)
{
    if (j < 0 || j > std::min(k, l)) return 0;
    return ipow(BigInt(q), (k - j) * (l - j)) * gaussian_binomial(n - k, l - j, q) * gaussian_binomial(k, j, q);
}

/// All k-dim subspaces of F_q^n in ascending canonical order, with an optional
/// pairwise intersection-dimension table. Immutable after construction.
class GrassmannGround {
public:
    GrassmannGround(int n, int k, int q, std::vector<Subspace> subspaces, bool build_table, unsigned workers)
        : n_(n), k_(k), q_(q), subspaces_(std::move(subspaces))
    {
        if (build_table) fill_table(workers == 0 ? 1 : workers);
    }

    int n() const { return n_; }
    int k() const { return k_; }
    int q() const { return q_; }
    std::size_t size() const { return subspaces_.size(); }
    GroundDescriptor descriptor() const { return GroundDescriptor::grassmann(n_, k_, q_); }
    const std::vector<Subspace>& subspaces() const { return subspaces_; }
    const Subspace& operator[](std::size_t i) const { return subspaces_.at(i); }
    bool has_pair_table() const { return !table_.empty(); }

    int intersection(std::size_t i, std::size_t j) const
    {
        if (!table_.empty()) return table_[i * size() + j];
        return intersection_dim(subspaces_.at(i), subspaces_.at(j));
    }

    std::optional<std::size_t> index_of(const Subspace& s) const
    {
        if (s.n() != n_ || s.q() != q_ || s.dim() != k_) return std::nullopt;
        auto it = std::lower_bound(subspaces_.begin(), subspaces_.end(), s);
        if (it == subspaces_.end() || !(*it == s)) return std::nullopt;
        return static_cast<std::size_t>(it - subspaces_.begin());
    }

private:
    void fill_table(unsigned workers)
    {
        const std::size_t v = size();
        table_.assign(v * v, 0);
        auto fill_rows = [&](std::size_t first, std::size_t step) {
            for (std::size_t i = first; i < v; i += step)
                for (std::size_t j = i; j < v; ++j) {
                    const auto d = static_cast<std::uint8_t>(intersection_dim(subspaces_[i], subspaces_[j]));
                    table_[i * v + j] = d;
                    table_[j * v + i] = d;
                }
        };
        if (workers <= 1) {
            fill_rows(0, 1);
            return;
        }
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
        for (auto& t : pool) t.join();
    }

    int n_, k_, q_;
    std::vector<Subspace> subspaces_;
    std::vector<std::uint8_t> table_;
};

/**
 * Enumerates G_q(n,k): for every pivot-column set, every assignment of the
 * free RREF entries. The result is sorted by the RREF matrix read row-major
 * as a base-q number.
 *
 * Throws unsupported_field_error for non-prime q and size_limit_error when
 * [n k]_q exceeds caps.grassmann_ground.
 */
inline GrassmannGround enumerate_subspaces(int n, int k, int q, const Caps& caps = {}, unsigned workers = 1)
{
    if (n < 0 || k < 0 || k > n) throw std::domain_error("enumerate_subspaces: need 0 <= k <= n");
    const PrimeField field(q);
    const BigInt count = gaussian_binomial(n, k, q);
    if (count > caps.grassmann_ground)
        throw size_limit_error("G_" + std::to_string(q) + "(" + std::to_string(n) + "," + std::to_string(k) +
                               ") has " + count.str() + " members, above the cap " +
                               std::to_string(caps.grassmann_ground));

    std::vector<Subspace> out;
    out.reserve(count.convert_to<std::size_t>());
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;

    while (true) {
        // Free cells: right of the row's pivot and not in a pivot column.
        std::vector<std::pair<int, int>> free_cells;
        std::vector<bool> pivot_col(static_cast<std::size_t>(n), false);
        for (int p : pivots) pivot_col[static_cast<std::size_t>(p)] = true;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                if (!pivot_col[static_cast<std::size_t>(c)]) free_cells.emplace_back(r, c);

        std::vector<int> digits(free_cells.size(), 0);
        while (true) {
            FqMatrix m(k, n, q);
            for (int r = 0; r < k; ++r) m(r, pivots[static_cast<std::size_t>(r)]) = 1;
            for (std::size_t i = 0; i < free_cells.size(); ++i)
                m(free_cells[i].first, free_cells[i].second) = static_cast<std::uint8_t>(digits[i]);
            out.push_back(Subspace::from_rref(std::move(m)));
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }

        // Next pivot combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }

    std::sort(out.begin(), out.end());
    const bool table = out.size() <= caps.pair_table;
    return GrassmannGround(n, k, q, std::move(out), table, workers);
}

/// All members of the ground that contain u0: the full t-star at u0.
inline Family full_t_star(const GrassmannGround& ground, const Subspace& u0)
{
    if (u0.n() != ground.n() || u0.q() != ground.q()) throw std::invalid_argument("full_t_star: ambient mismatch");
    if (u0.dim() > ground.k()) throw std::domain_error("full_t_star: dim(U0) exceeds k");
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (contains(ground[i], u0)) members.push_back(i);
    return Family(ground.descriptor(), std::move(members));
}

// ---- text format: one basis row per line, space-separated digits ----

inline void write_subspace(std::ostream& os, const Subspace& s)
{
    for (int r = 0; r < s.dim(); ++r) {
        for (int c = 0; c < s.n(); ++c) os << (c ? " " : "") << static_cast<int>(s.basis()(r, c));
        os << '\n';
    }
}

inline std::vector<std::uint8_t> parse_fq_row(const std::string& line, int n, int q)
{
    std::istringstream is(line);
    std::vector<std::uint8_t> row;
    int v = 0;
    while (is >> v) {
        if (v < 0 || v >= q) throw std::invalid_argument("subspace row entry out of range: " + line);
        row.push_back(static_cast<std::uint8_t>(v));
    }
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("subspace row has wrong length: " + line);
    return row;
}

} // namespace ekr
