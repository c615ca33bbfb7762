#ifndef NOVIKOV_YOUNG_HPP
#define NOVIKOV_YOUNG_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "novikov/alphabet.hpp"
#include "novikov/numbers.hpp"

namespace novikov {

// Rows of boxes with weakly decreasing lengths; the empty shape is allowed.
class YoungShape {
public:
    YoungShape() = default;
    explicit YoungShape(std::vector<int> rows);

    int degree() const;
    int row_count() const { return static_cast<int>(rows_.size()); }
    int row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& rows() const { return rows_; }

    // distinct row length -> number of rows of that length
    std::map<int, int> length_multiplicities() const;

    std::string str() const;

    bool operator==(const YoungShape& o) const { return rows_ == o.rows_; }
    bool operator!=(const YoungShape& o) const { return !(*this == o); }
    bool operator<(const YoungShape& o) const { return rows_ < o.rows_; }

private:
    std::vector<int> rows_;
};

// All partitions of d as shapes, in lexicographically decreasing row order.
std::vector<YoungShape> enumerate_young_shapes(int d);

// A Young shape with one extra box (the nose) at the end of the first row.
struct NovikovDiagram {
    YoungShape shape;
    int degree() const { return shape.degree() + 1; }
    // the nose sits at row 1, column shape.row(1)+1 (1-based); for the empty
    // shape the diagram is the single nose box
    int nose_column() const { return shape.row_count() == 0 ? 1 : shape.row(0) + 1; }
};

/*
 * A Novikov diagram filled from an alphabet. rows() excludes the nose: the
 * i-th entry list has exactly shape.row(i) letters. Layout consistency is
 * enforced at construction (ShapeMismatch otherwise).
 */
class NovikovTableau {
public:
    NovikovTableau(YoungShape shape, std::vector<std::vector<std::string>> rows,
                   std::string nose);

    int degree() const { return shape_.degree() + 1; }
    const YoungShape& shape() const { return shape_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    const std::string& nose() const { return nose_; }

    // bottom-to-top reading of all non-first-column entries, nose last
    std::vector<std::string> tail_word() const;

    std::vector<std::string> first_column() const;

    // row-major entries with the nose after the first row
    std::vector<std::string> reading_word() const;

    std::map<std::string, int> letter_multiset() const;

    nlohmann::json to_json() const;
    static NovikovTableau from_json(const nlohmann::json& j);

    // one line: shape, rows and nose, ';'-separated fields
    std::string to_csv_line() const;

    std::string str() const;

    bool operator==(const NovikovTableau& o) const {
        return shape_ == o.shape_ && rows_ == o.rows_ && nose_ == o.nose_;
    }

private:
    YoungShape shape_;
    std::vector<std::vector<std::string>> rows_;
    std::string nose_;
};

struct TableauCheck {
    bool ok = true;
    std::string violation; // names the first violated cell pair
};

// Checks the two filling rules: first-column entries weakly decrease across
// consecutive equal-length rows, and the tail word is non-decreasing.
TableauCheck validate_tableau(const NovikovTableau& t, const Alphabet& alphabet);

/*
 * All degree-n tableaux whose entry multiset equals `letters`, each
 * satisfying both filling rules, without duplicates. Order: shapes as in
 * enumerate_young_shapes(n-1), then entries lexicographically by reading
 * word. Throws DegreeMismatch unless letters.size() == n.
 */
std::vector<NovikovTableau> enumerate_tableaux(int n, const std::vector<std::string>& letters,
                                               const Alphabet& alphabet);

/*
 * Closed-form number of fillings of the given shape by n distinct letters:
 * multinomial(m; multiplicities of distinct row lengths) * C(n, m) with m
 * the number of rows. Throws DegreeMismatch unless shape degree + 1 == n.
 */
Int count_fillings_per_shape(const YoungShape& shape, int n);

} // namespace novikov

#endif // NOVIKOV_YOUNG_HPP
