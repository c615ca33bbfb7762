#include "novikov/young.hpp"

#include <algorithm>
#include <stdexcept>

#include "novikov/combinatorics.hpp"
#include "novikov/errors.hpp"

namespace novikov {

YoungShape::YoungShape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw std::invalid_argument("row lengths must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("row lengths must be weakly decreasing");
    }
}

int YoungShape::degree() const {
    int d = 0;
    for (int r : rows_)
        d += r;
    return d;
}

std::map<int, int> YoungShape::length_multiplicities() const {
    std::map<int, int> m;
    for (int r : rows_)
        m[r] += 1;
    return m;
}

std::string YoungShape::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(rows_[i]);
    }
    return s + ")";
}

namespace {

void shapes_rec(int remaining, int max_part, std::vector<int>& acc, std::vector<YoungShape>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        shapes_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<YoungShape> enumerate_young_shapes(int d) {
    if (d < 0)
        throw std::invalid_argument("degree must be nonnegative");
    std::vector<YoungShape> out;
    std::vector<int> acc;
    shapes_rec(d, d == 0 ? 1 : d, acc, out);
    return out;
}

NovikovTableau::NovikovTableau(YoungShape shape, std::vector<std::vector<std::string>> rows,
                               std::string nose)
    : shape_(std::move(shape)), rows_(std::move(rows)), nose_(std::move(nose)) {
    if (static_cast<int>(rows_.size()) != shape_.row_count())
        throw ShapeMismatch("tableau has " + std::to_string(rows_.size()) + " rows, shape " +
                            shape_.str() + " has " + std::to_string(shape_.row_count()));
    for (int i = 0; i < shape_.row_count(); ++i) {
        if (static_cast<int>(rows_[static_cast<std::size_t>(i)].size()) != shape_.row(i))
            throw ShapeMismatch("row " + std::to_string(i + 1) + " has " +
                                std::to_string(rows_[static_cast<std::size_t>(i)].size()) +
                                " entries, shape " + shape_.str() + " expects " +
                                std::to_string(shape_.row(i)));
    }
    if (nose_.empty())
        throw ShapeMismatch("the nose entry is missing");
}

std::vector<std::string> NovikovTableau::tail_word() const {
    std::vector<std::string> w;
    for (int i = shape_.row_count() - 1; i >= 0; --i) {
        const auto& row = rows_[static_cast<std::size_t>(i)];
        for (std::size_t j = 1; j < row.size(); ++j)
            w.push_back(row[j]);
    }
    w.push_back(nose_);
    return w;
}

std::vector<std::string> NovikovTableau::first_column() const {
    std::vector<std::string> c;
    for (const auto& row : rows_)
        c.push_back(row.front());
    return c;
}

std::vector<std::string> NovikovTableau::reading_word() const {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& e : rows_[i])
            w.push_back(e);
        if (i == 0)
            w.push_back(nose_);
    }
    if (rows_.empty())
        w.push_back(nose_);
    return w;
}

std::map<std::string, int> NovikovTableau::letter_multiset() const {
    std::map<std::string, int> m;
    for (const auto& e : reading_word())
        m[e] += 1;
    return m;
}

nlohmann::json NovikovTableau::to_json() const {
    nlohmann::json j;
    j["shape"] = shape_.rows();
    j["rows"] = rows_;
    j["nose"] = nose_;
    return j;
}

NovikovTableau NovikovTableau::from_json(const nlohmann::json& j) {
    YoungShape shape(j.at("shape").get<std::vector<int>>());
    auto rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    auto nose = j.at("nose").get<std::string>();
    return NovikovTableau(std::move(shape), std::move(rows), std::move(nose));
}

std::string NovikovTableau::to_csv_line() const {
    std::string s;
    for (std::size_t i = 0; i < shape_.rows().size(); ++i) {
        if (i)
            s += " ";
        s += std::to_string(shape_.rows()[i]);
    }
    s += ";";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            s += "|";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j)
                s += " ";
            s += rows_[i][j];
        }
    }
    s += ";" + nose_;
    return s;
}

std::string NovikovTableau::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            s += " | ";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j)
                s += " ";
            s += rows_[i][j];
        }
        if (i == 0)
            s += std::string(" ") + nose_;
    }
    if (rows_.empty())
        s += nose_;
    return s + "]";
}

TableauCheck validate_tableau(const NovikovTableau& t, const Alphabet& alphabet) {
    const YoungShape& shape = t.shape();
    for (int i = 0; i + 1 < shape.row_count(); ++i) {
        if (shape.row(i) != shape.row(i + 1))
            continue;
        const std::string& top = t.rows()[static_cast<std::size_t>(i)].front();
        const std::string& bottom = t.rows()[static_cast<std::size_t>(i + 1)].front();
        if (alphabet.rank(top) < alphabet.rank(bottom)) {
            return {false, "block rule violated between rows " + std::to_string(i + 1) + " and " +
                               std::to_string(i + 2) + ": " + top + " < " + bottom};
        }
    }
    auto tail = t.tail_word();
    for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
        if (alphabet.rank(tail[i]) > alphabet.rank(tail[i + 1])) {
            return {false, "tail rule violated at reading positions " + std::to_string(i + 1) +
                               "," + std::to_string(i + 2) + ": " + tail[i] + " > " +
                               tail[i + 1]};
        }
    }
    return {};
}

namespace {

// letter pool as (letter, count), sorted by alphabet rank
using Pool = std::vector<std::pair<std::string, int>>;

// all sub-multisets of `pool` of size k, as count vectors aligned with pool
void choose_rec(const Pool& pool, std::size_t idx, int k, std::vector<int>& taken,
                std::vector<std::vector<int>>& out) {
    if (k == 0) {
        std::vector<int> choice = taken;
        choice.resize(pool.size(), 0);
        out.push_back(std::move(choice));
        return;
    }
    if (idx == pool.size())
        return;
    int avail = pool[idx].second;
    for (int take = std::min(avail, k); take >= 0; --take) {
        taken.push_back(take);
        choose_rec(pool, idx + 1, k - take, taken, out);
        taken.pop_back();
    }
}

std::vector<std::vector<int>> multiset_combinations(const Pool& pool, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> taken;
    choose_rec(pool, 0, k, taken, out);
    return out;
}

void subtract_choice(Pool& pool, const std::vector<int>& choice) {
    for (std::size_t i = 0; i < pool.size(); ++i)
        pool[i].second -= choice[i];
}

void add_choice(Pool& pool, const std::vector<int>& choice) {
    for (std::size_t i = 0; i < pool.size(); ++i)
        pool[i].second += choice[i];
}

// letters of one chosen sub-multiset, most significant first
std::vector<std::string> choice_letters_desc(const Pool& pool, const std::vector<int>& choice) {
    std::vector<std::string> out;
    for (std::size_t i = pool.size(); i-- > 0;)
        for (int c = 0; c < choice[i]; ++c)
            out.push_back(pool[i].first);
    return out;
}

struct Block {
    int first_row; // 0-based index of the topmost row of the block
    int size;      // number of consecutive rows with equal length
};

void fill_blocks_rec(const YoungShape& shape, const std::vector<Block>& blocks, std::size_t bi,
                     Pool& pool, std::vector<std::string>& column,
                     std::vector<NovikovTableau>& out) {
    if (bi == blocks.size()) {
        // tail: remaining letters in non-decreasing order, laid bottom-to-top
        std::vector<std::string> tail;
        for (const auto& [letter, count] : pool)
            tail.insert(tail.end(), static_cast<std::size_t>(count), letter);
        const int k = shape.row_count();
        std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(k));
        std::size_t idx = 0;
        for (int i = k - 1; i >= 0; --i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            row.push_back(column[static_cast<std::size_t>(i)]);
            for (int j = 1; j < shape.row(i); ++j)
                row.push_back(tail[idx++]);
        }
        std::string nose = tail[idx];
        out.emplace_back(shape, std::move(rows), std::move(nose));
        return;
    }
    const Block& block = blocks[bi];
    for (const auto& choice : multiset_combinations(pool, block.size)) {
        auto letters = choice_letters_desc(pool, choice);
        for (int i = 0; i < block.size; ++i)
            column[static_cast<std::size_t>(block.first_row + i)] = letters[static_cast<std::size_t>(i)];
        subtract_choice(pool, choice);
        fill_blocks_rec(shape, blocks, bi + 1, pool, column, out);
        add_choice(pool, choice);
    }
}

} // namespace

std::vector<NovikovTableau> enumerate_tableaux(int n, const std::vector<std::string>& letters,
                                               const Alphabet& alphabet) {
    if (n < 1)
        throw std::invalid_argument("tableau degree must be >= 1");
    if (static_cast<int>(letters.size()) != n)
        throw DegreeMismatch("got " + std::to_string(letters.size()) + " letters for degree " +
                             std::to_string(n));

    Pool pool;
    {
        std::vector<std::string> sorted = letters;
        std::sort(sorted.begin(), sorted.end(), [&](const std::string& a, const std::string& b) {
            return alphabet.rank(a) < alphabet.rank(b);
        });
        for (const auto& l : sorted) {
            if (!pool.empty() && pool.back().first == l)
                pool.back().second += 1;
            else
                pool.emplace_back(l, 1);
        }
    }

    std::vector<NovikovTableau> out;
    for (const YoungShape& shape : enumerate_young_shapes(n - 1)) {
        std::vector<Block> blocks;
        for (int i = 0; i < shape.row_count(); ++i) {
            if (!blocks.empty() &&
                shape.row(blocks.back().first_row) == shape.row(i))
                blocks.back().size += 1;
            else
                blocks.push_back({i, 1});
        }
        std::vector<NovikovTableau> of_shape;
        std::vector<std::string> column(static_cast<std::size_t>(shape.row_count()));
        Pool local = pool;
        fill_blocks_rec(shape, blocks, 0, local, column, of_shape);
        std::sort(of_shape.begin(), of_shape.end(),
                  [&](const NovikovTableau& a, const NovikovTableau& b) {
                      auto wa = a.reading_word();
                      auto wb = b.reading_word();
                      return std::lexicographical_compare(
                          wa.begin(), wa.end(), wb.begin(), wb.end(),
                          [&](const std::string& x, const std::string& y) {
                              return alphabet.rank(x) < alphabet.rank(y);
                          });
                  });
        for (auto& t : of_shape)
            out.push_back(std::move(t));
    }
    return out;
}

Int count_fillings_per_shape(const YoungShape& shape, int n) {
    if (shape.degree() + 1 != n)
        throw DegreeMismatch("shape " + shape.str() + " has degree " +
                             std::to_string(shape.degree()) + ", expected " +
                             std::to_string(n - 1));
    long m = shape.row_count();
    std::vector<long> mults;
    for (const auto& [length, count] : shape.length_multiplicities())
        mults.push_back(count);
    return multinomial(m, mults) * binomial(n, m);
}

} // namespace novikov
