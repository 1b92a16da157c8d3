#include <doctest.h>

#include <vector>

#include "fibra/array2d.hpp"
#include "fibra/errors.hpp"
#include "fibra/grid.hpp"
#include "fibra/morphism2d.hpp"

using namespace fibra;

TEST_SUITE("morphism2d") {

TEST_CASE("the substitution images") {
    const MorphismTable& table = MorphismTable::fibonacci_2d();
    CHECK(table.image('a') == Grid::single('d'));
    CHECK(table.image('b') == Grid::from_rows({"dc"}));
    CHECK(table.image('c') == Grid::from_rows({"d", "b"}));
    CHECK(table.image('d') == Grid::from_rows({"dc", "ba"}));
    CHECK_THROWS_AS(table.image('x'), domain_error);
}

TEST_CASE("iterating from a single d") {
    CHECK(mu_power(Grid::single('d'), 0) == Grid::single('d'));
    CHECK(mu_power(Grid::single('d'), 1) == Grid::from_rows({"dc", "ba"}));
    CHECK(mu_power(Grid::single('d'), 2) == Grid::from_rows({"dcd", "bab", "dcd"}));
    CHECK(mu_power(Grid::single('d'), 3) == fib_array(4, 4));
    CHECK_THROWS_AS(mu_power(Grid::single('d'), -1), domain_error);
}

TEST_CASE("substituting an array advances both indices by one") {
    for (int m = 0; m <= 7; ++m)
        for (int n = 0; n <= 7; ++n) CHECK(apply_mu(fib_array(m, n)) == fib_array(m + 1, n + 1));
}

TEST_CASE("the shape condition and its witness") {
    ShapeConditionWitness w = validate_shape_condition(fib_array(2, 3));  // dcd / bab
    CHECK(w.band_heights == std::vector<std::size_t>{2, 1});
    CHECK(w.band_widths == std::vector<std::size_t>{2, 1, 2});
    CHECK(apply_mu(fib_array(2, 3)) == fib_array(3, 4));

    // a next to d: their images have different heights within one row
    CHECK_THROWS_AS(validate_shape_condition(Grid::from_rows({"ad"})), inconsistent_image);
    // a above b: their images have different widths within one column
    CHECK_THROWS_AS(validate_shape_condition(Grid::from_rows({"a", "b"})), inconsistent_image);
    CHECK_THROWS_AS(apply_mu(Grid::from_rows({"ad"})), inconsistent_image);
}

TEST_CASE("substitution route agrees with the concatenation construction") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) CHECK(fib_array_via_mu(m, n) == fib_array(m, n));
    CHECK_THROWS_AS(fib_array_via_mu(0, 3), domain_error);
    CHECK_THROWS_AS(fib_array_via_mu(3, 0), domain_error);
}

TEST_CASE("prefixes of the infinite 2D word") {
    CHECK(infinite_prefix_2d(1, 1) == Grid::single('d'));
    CHECK(infinite_prefix_2d(13, 21) == fib_array(6, 7));
    Grid small = infinite_prefix_2d(10, 17);
    Grid large = infinite_prefix_2d(30, 30);
    CHECK(small == large.subgrid(1, 1, 10, 17));
    CHECK_THROWS_AS(infinite_prefix_2d(0, 5), domain_error);
}

TEST_CASE("cell budgets on the substitution paths") {
    CHECK_THROWS_AS(fib_array_via_mu(10, 10, 100), resource_error);
    CHECK_THROWS_AS(infinite_prefix_2d(100, 100, 1000), resource_error);
    CHECK_THROWS_AS(mu_power(Grid::single('d'), 12, 1000), resource_error);
}

}  // TEST_SUITE
