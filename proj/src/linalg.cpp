#include "novikov/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "novikov/errors.hpp"

namespace novikov {

void SparseIntMatrix::add_row(SparseRow row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].first < 0 || row[i].first >= cols_)
            throw std::out_of_range("column index out of range");
        if (i > 0 && row[i - 1].first >= row[i].first)
            throw std::invalid_argument("row columns must be strictly increasing");
        if (row[i].second == 0)
            throw std::invalid_argument("sparse rows must not store zeros");
    }
    rows_.push_back(std::move(row));
}

namespace {

// a*x - b*y, merged by column
SparseRow combine(const SparseRow& x, const Int& a, const SparseRow& y, const Int& b) {
    SparseRow r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            Int v = a * x[i].second - b * y[j].second;
            if (v != 0)
                r.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

void divide_content(SparseRow& row) {
    if (row.empty())
        return;
    Int g = 0;
    for (const auto& [col, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    if (sgn(row.front().second) < 0)
        g = -g;
    if (g != 1)
        for (auto& [col, v] : row)
            v /= g;
}

} // namespace

bool RankAccumulator::absorb(SparseRow row) {
    while (!row.empty()) {
        int lead = row.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            divide_content(row);
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        const SparseRow& pivot = it->second;
        Int a = pivot.front().second;
        Int b = row.front().second;
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        row = combine(row, a / g, pivot, b / g);
        divide_content(row);
    }
    return false;
}

long rank_exact(const SparseIntMatrix& m) {
    RankAccumulator acc(m.cols());
    for (const SparseRow& row : m.rows()) {
        acc.absorb(SparseRow(row));
        if (acc.rank() == std::min<long>(m.cols(), m.row_count()))
            break;
    }
    return acc.rank();
}

long rank_bareiss_dense(std::vector<std::vector<Int>> m) {
    if (m.empty())
        return 0;
    const std::size_t nrows = m.size();
    const std::size_t ncols = m[0].size();
    for (const auto& row : m)
        if (row.size() != ncols)
            throw std::invalid_argument("ragged matrix");

    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t step = 0; r < nrows && step < ncols; ++step) {
        // any nonzero entry in the remaining submatrix, preferring column `step`
        std::size_t pr = nrows, pc = ncols;
        for (std::size_t j = step; j < ncols && pr == nrows; ++j)
            for (std::size_t i = r; i < nrows; ++i)
                if (m[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == nrows)
            break;
        std::swap(m[r], m[pr]);
        if (pc != step)
            for (auto& row : m)
                std::swap(row[step], row[pc]);

        const Int pivot = m[r][step];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = step + 1; j < ncols; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][step] * m[r][j]) / prev;
            m[i][step] = 0;
        }
        prev = pivot;
        ++r;
    }
    return static_cast<long>(r);
}

Int determinant_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant requires a square matrix");
    if (n == 0)
        return 1;

    Int prev = 1;
    int sign = 1;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t pr = step;
        while (pr < n && m[pr][step] == 0)
            ++pr;
        if (pr == n)
            return 0;
        if (pr != step) {
            std::swap(m[step], m[pr]);
            sign = -sign;
        }
        const Int pivot = m[step][step];
        for (std::size_t i = step + 1; i < n; ++i) {
            for (std::size_t j = step + 1; j < n; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][step] * m[step][j]) / prev;
            m[i][step] = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

CoordinateSolver::CoordinateSolver(const std::vector<SparseRow>& rows, int cols) : cols_(cols) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
        std::map<int, Rat> v;
        for (const auto& [col, val] : rows[j])
            v.emplace(col, Rat(val));
        std::map<int, Rat> t;
        t.emplace(static_cast<int>(j), Rat(1));

        while (!v.empty()) {
            int lead = v.begin()->first;
            auto pit = pivot_of_col_.find(lead);
            if (pit == pivot_of_col_.end())
                break;
            Rat factor = v.begin()->second;
            const auto& erow = echelon_[pit->second];
            const auto& trow = transform_[pit->second];
            for (const auto& [col, val] : erow) {
                Rat& slot = v[col];
                slot -= factor * val;
                if (slot == 0)
                    v.erase(col);
            }
            for (const auto& [idx, val] : trow) {
                Rat& slot = t[idx];
                slot -= factor * val;
                if (slot == 0)
                    t.erase(idx);
            }
        }
        if (v.empty())
            throw RankDeficient("row " + std::to_string(j) + " depends on earlier rows");
        Rat lead_val = v.begin()->second;
        for (auto& [col, val] : v)
            val /= lead_val;
        for (auto& [idx, val] : t)
            val /= lead_val;
        pivot_of_col_.emplace(v.begin()->first, echelon_.size());
        echelon_.push_back(std::move(v));
        transform_.push_back(std::move(t));
    }
}

std::vector<Rat> CoordinateSolver::coordinates(const std::vector<std::pair<int, Rat>>& rhs) const {
    std::map<int, Rat> v;
    for (const auto& [col, val] : rhs) {
        if (col < 0 || col >= cols_)
            throw std::out_of_range("column index out of range");
        if (val != 0)
            v.emplace(col, val);
    }
    std::vector<Rat> coords(transform_.size(), Rat(0));
    while (!v.empty()) {
        int lead = v.begin()->first;
        auto pit = pivot_of_col_.find(lead);
        if (pit == pivot_of_col_.end())
            throw InconsistentSystem("expansion lies outside the row space (column " +
                                     std::to_string(lead) + ")");
        Rat factor = v.begin()->second;
        const auto& erow = echelon_[pit->second];
        for (const auto& [col, val] : erow) {
            Rat& slot = v[col];
            slot -= factor * val;
            if (slot == 0)
                v.erase(col);
        }
        for (const auto& [idx, val] : transform_[pit->second])
            coords[static_cast<std::size_t>(idx)] += factor * val;
    }
    return coords;
}

} // namespace novikov
