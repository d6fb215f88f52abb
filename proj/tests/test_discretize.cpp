#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hbic/discretize.hpp"
#include "hbic/rng.hpp"
#include "hbic/types.hpp"

#include "helpers.hpp"

using hbic::Code;
using hbic::ErrorKind;
using hbic::HeteroMatrix;

TEST_CASE("bin_index boundary behavior") {
    CHECK(hbic::bin_index(0.0, 0.0, 10.0, 5) == 0);
    CHECK(hbic::bin_index(10.0, 0.0, 10.0, 5) == 4);  // top edge clamps into the last bin
    CHECK(hbic::bin_index(5.0, 0.0, 10.0, 4) == 2);
    CHECK(hbic::bin_index(3.0, 3.0, 3.0, 7) == 0);  // degenerate range
}

TEST_CASE("bin_index rejects values outside the range") {
    CHECK(test::kind_of([] { hbic::bin_index(-0.1, 0.0, 10.0, 5); }) == ErrorKind::OutOfRange);
    CHECK(test::kind_of([] { hbic::bin_index(10.1, 0.0, 10.0, 5); }) == ErrorKind::OutOfRange);
    CHECK(test::kind_of([] { hbic::bin_index(1.0, 0.0, 10.0, 0); }) == ErrorKind::InvalidBins);
}

TEST_CASE("equal-width binning of a numeric column") {
    CHECK(hbic::discretize_column({0.0, 3.9, 10.0}, 5) == std::vector<Code>{0, 1, 4});
    CHECK(hbic::discretize_column({7.0, 7.0, 7.0}, 5) == std::vector<Code>{0, 0, 0});
}

TEST_CASE("binning requires at least two bins") {
    CHECK(test::kind_of([] { hbic::discretize_column({1.0, 2.0}, 1); }) == ErrorKind::InvalidBins);
    std::vector<hbic::Column> cols{hbic::make_numeric_column("a", {1.0, 2.0})};
    HeteroMatrix x(std::move(cols));
    CHECK(test::kind_of([&] { hbic::discretize_matrix(x, 1); }) == ErrorKind::InvalidBins);
}

TEST_CASE("binning is monotone in the value") {
    hbic::SplitRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values;
        for (int i = 0; i < 40; ++i) values.push_back(rng.next_double(-25.0, 25.0));
        std::vector<Code> codes = hbic::discretize_column(values, 8);
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = 0; j < values.size(); ++j)
                if (values[i] <= values[j]) CHECK(codes[i] <= codes[j]);
    }
}

TEST_CASE("doubling the bin count never merges separated values") {
    hbic::SplitRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values;
        for (int i = 0; i < 30; ++i) values.push_back(rng.next_double(0.0, 100.0));
        for (int nbins : {2, 4, 8, 16}) {
            std::vector<Code> coarse = hbic::discretize_column(values, nbins);
            std::vector<Code> fine = hbic::discretize_column(values, 2 * nbins);
            for (std::size_t i = 0; i < values.size(); ++i)
                for (std::size_t j = 0; j < values.size(); ++j)
                    if (coarse[i] != coarse[j]) CHECK(fine[i] != fine[j]);
        }
    }
}

namespace {

HeteroMatrix mixed_matrix() {
    std::vector<hbic::Column> cols;
    cols.push_back(hbic::make_numeric_column("num", {0.0, 3.9, 10.0, 2.0}));
    cols.push_back(hbic::make_discrete_column("cat", hbic::AttributeType::Categorical, {2, 0, 1, 2},
                                              {"p", "q", "r"}));
    return HeteroMatrix(std::move(cols));
}

}  // namespace

TEST_CASE("discrete columns pass through binning unchanged") {
    HeteroMatrix x = mixed_matrix();
    hbic::DiscreteMatrix d = hbic::discretize_matrix(x, 5);
    CHECK(d.codes[1] == std::vector<Code>{2, 0, 1, 2});
    CHECK(d.arity[1] == 3);
    CHECK(d.bin_edges[1].empty());
}

TEST_CASE("discretized matrix exposes codes, arity and bin edges") {
    HeteroMatrix x = mixed_matrix();
    hbic::DiscreteMatrix d = hbic::discretize_matrix(x, 5);
    CHECK(d.codes[0] == std::vector<Code>{0, 1, 4, 1});
    CHECK(d.arity[0] == 5);
    REQUIRE(d.bin_edges[0].size() == 6);
    for (int w = 0; w <= 5; ++w)
        CHECK(d.bin_edges[0][static_cast<std::size_t>(w)] ==
              Catch::Approx(0.0 + w * (10.0 - 0.0) / 5.0));
    // every code stays below its column's arity
    for (hbic::Index j = 0; j < d.n_cols; ++j)
        for (Code c : d.codes[static_cast<std::size_t>(j)]) {
            CHECK(c >= 0);
            CHECK(c < d.arity[static_cast<std::size_t>(j)]);
        }
}

TEST_CASE("numeric arity tracks the occupied bins") {
    // A varying column always occupies the top bin (its max clamps there).
    std::vector<hbic::Column> cols{hbic::make_numeric_column("a", {0.0, 0.1, 0.2, 10.0})};
    HeteroMatrix x(std::move(cols));
    hbic::DiscreteMatrix d = hbic::discretize_matrix(x, 10);
    CHECK(d.codes[0] == std::vector<Code>{0, 0, 0, 9});
    CHECK(d.arity[0] == 10);
    // A constant column collapses to a single bin.
    std::vector<hbic::Column> cols2{hbic::make_numeric_column("a", {4.0, 4.0, 4.0})};
    HeteroMatrix y(std::move(cols2));
    hbic::DiscreteMatrix e = hbic::discretize_matrix(y, 10);
    CHECK(e.codes[0] == std::vector<Code>{0, 0, 0});
    CHECK(e.arity[0] == 1);
}
