#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "chaincover/io.hpp"
#include "chaincover/linalg.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chaincover;
using testutil::vec;

TEST_CASE("FVector accessors and bounds") {
  auto f = make_field(3);
  auto v = vec(f, {0, 1, 2});
  CHECK(v.length() == 3);
  CHECK(v.at(1) == 0);
  CHECK(v.at(3) == 2);
  CHECK(v.element(2) == FieldElement(f, Level::Base, 1));
  CHECK_THROWS_AS(v.at(0), std::out_of_range);
  CHECK_THROWS_AS(v.at(4), std::out_of_range);
  CHECK_THROWS_AS(vec(f, {0, 3}), std::invalid_argument);  // code >= order
  CHECK(v == vec(f, {0, 1, 2}));
  CHECK(v != vec(f, {0, 1, 1}));
}

TEST_CASE("CodeMatrix construction and access") {
  auto f = make_field(2);
  auto m = CodeMatrix::from_rows(f, Level::Base, {{1, 0, 1}, {0, 1, 1}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.at(1, 3) == 1);
  CHECK(m.at(2, 1) == 0);
  CHECK(m.row(2) == vec(f, {0, 1, 1}));
  CHECK_THROWS_AS(m.at(3, 1), std::out_of_range);
  CHECK_THROWS_AS(m.at(1, 0), std::out_of_range);
  CHECK_THROWS_AS(CodeMatrix::from_rows(f, Level::Base, {{1, 0}, {1}}),
                  std::invalid_argument);  // ragged
  CHECK_THROWS_AS(CodeMatrix(f, Level::Base, 2, 2, {1, 0, 1}),
                  std::invalid_argument);  // size mismatch
}

TEST_CASE("row_reduce normalizes pivots over GF(3)") {
  auto f = make_field(3);
  auto m = CodeMatrix::from_rows(f, Level::Base, {{2, 1}, {0, 2}});
  auto [rref, rank] = row_reduce(m);
  CHECK(rank == 2);
  CHECK(rref == CodeMatrix::from_rows(f, Level::Base, {{1, 0}, {0, 1}}));

  auto dep = CodeMatrix::from_rows(f, Level::Base, {{1, 2, 0}, {2, 1, 0}});
  auto [r2, rank2] = row_reduce(dep);
  CHECK(rank2 == 1);
  CHECK(r2.row(1) == vec(f, {1, 2, 0}));
  CHECK(r2.row(2) == vec(f, {0, 0, 0}));
}

TEST_CASE("parity_check annihilates the row space") {
  auto f = make_field(2);
  auto g = testutil::hamming74(f);
  auto h = parity_check(g);
  CHECK(h.rows() == 3);
  CHECK(h.cols() == 7);
  CHECK(row_reduce(h).second == 3);
  for (int i = 1; i <= g.rows(); ++i)
    for (int r = 1; r <= h.rows(); ++r) {
      std::uint32_t dot = 0;
      for (int j = 1; j <= 7; ++j)
        dot = f->add(Level::Base, dot,
                     f->mul(Level::Base, g.at(i, j), h.at(r, j)));
      CHECK(dot == 0);
    }

  auto rep = CodeMatrix::from_rows(f, Level::Base, {{1, 1}});
  CHECK(parity_check(rep) ==
        CodeMatrix::from_rows(f, Level::Base, {{1, 1}}));

  auto full = CodeMatrix::from_rows(f, Level::Base, {{1, 0}, {0, 1}});
  CHECK(parity_check(full).rows() == 0);

  auto deficient = CodeMatrix::from_rows(f, Level::Base, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(parity_check(deficient), std::invalid_argument);
}

TEST_CASE("support, weight, joint support") {
  auto f = make_field(3);
  auto a = vec(f, {0, 2, 0, 1});
  auto b = vec(f, {1, 0, 0, 1});
  CHECK(support(a) == std::vector<int>{2, 4});
  CHECK(weight(a) == 2);
  CHECK(weight(vec(f, {0, 0})) == 0);
  std::vector<FVector> vs{a, b};
  CHECK(joint_support(vs) == std::vector<int>{1, 2, 4});
}

TEST_CASE("submatrix_columns preserves order and rejects duplicates") {
  auto f = make_field(2);
  auto m = CodeMatrix::from_rows(f, Level::Base, {{1, 0, 1}, {0, 1, 1}});
  // The selection is a set: the output keeps the matrix's column order.
  std::vector<int> cols{3, 1};
  auto s = submatrix_columns(m, cols);
  CHECK(s == CodeMatrix::from_rows(f, Level::Base, {{1, 1}, {0, 1}}));
  std::vector<int> dup{2, 2};
  CHECK_THROWS_AS(submatrix_columns(m, dup), std::invalid_argument);
  std::vector<int> none;
  CHECK(submatrix_columns(m, none).cols() == 0);
}

TEST_CASE("in_row_space and encode agree") {
  auto f = make_field(2);
  auto g = testutil::hamming74(f);
  std::vector<std::uint32_t> msg{1, 0, 1, 1};
  auto c = encode(g, msg);
  CHECK(c == vec(f, {1, 0, 1, 1, 0, 1, 0}));
  CHECK(in_row_space(g, c));
  CHECK(!in_row_space(g, vec(f, {1, 0, 0, 0, 0, 0, 0})));
  CHECK(in_row_space(g, vec(f, {0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("vector arithmetic over GF(3)") {
  auto f = make_field(3);
  auto a = vec(f, {1, 2, 0});
  auto b = vec(f, {2, 2, 1});
  CHECK(add(a, b) == vec(f, {0, 1, 1}));
  CHECK(sub(a, b) == vec(f, {2, 0, 2}));
  CHECK(scale(FieldElement(f, Level::Base, 2), a) == vec(f, {2, 1, 0}));
  CHECK(hamming_distance(a, b) == 2);
  CHECK(hamming_distance(a, a) == 0);
  auto short_v = vec(f, {1});
  CHECK_THROWS_AS(add(a, short_v), std::invalid_argument);
}

TEST_CASE("matrix text round-trip at both levels") {
  auto f2 = make_field(2);
  auto g = testutil::hamming74(f2);
  auto text = matrix_to_text(g);
  CHECK(text.substr(0, 16) == "q=2 t=1 n=7 k=4\n");
  CHECK(matrix_from_text(text) == g);

  // Extension-level entries with a non-prime base field.
  auto f9 = make_field(3, 2, 2);
  auto m = CodeMatrix::from_rows(f9, Level::Ext, {{0, 80, 9}, {1, 2, 3}});
  auto round = matrix_from_text(matrix_to_text(m));
  CHECK(round == m);
  CHECK(round.field()->same_spec(*f9));
  CHECK(matrix_to_text(m).substr(0, 17) == "q=9 t=2 n=3 k=2\n0");
}

TEST_CASE("vectors text round-trip") {
  auto f = make_field(3);
  std::vector<FVector> vs{vec(f, {0, 1, 2}), vec(f, {2, 2, 0})};
  auto text = vectors_to_text(vs);
  CHECK(text == "0 1 2\n2 2 0\n");
  auto back = vectors_from_text(text, f, Level::Base);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == vs[0]);
  CHECK(back[1] == vs[1]);
  CHECK(vectors_from_text("", f, Level::Base).empty());
  CHECK_THROWS_AS(vectors_from_text("0 1 3\n", f, Level::Base),
                  std::invalid_argument);
  CHECK_THROWS_AS(vectors_from_text("0 1\n0 1 2\n", f, Level::Base),
                  std::invalid_argument);  // ragged lines
}

TEST_CASE("malformed matrix text is rejected") {
  CHECK_THROWS_AS(matrix_from_text(""), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text("n=3 k=2\n"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text("q=2 t=1 n=2 k=1\n1\n"),
                  std::invalid_argument);  // too few entries
  CHECK_THROWS_AS(matrix_from_text("q=2 t=1 n=2 k=1\n1 2\n"),
                  std::invalid_argument);  // code out of range
  CHECK_THROWS_AS(matrix_from_text("q=6 t=1 n=2 k=1\n1 0\n"),
                  std::invalid_argument);  // 6 is not a prime power
}

TEST_CASE("file helpers round-trip") {
  std::string path = "linalg_io_roundtrip.tmp";
  write_text_file(path, "hello\nworld\n");
  CHECK(read_text_file(path) == "hello\nworld\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file("definitely_missing_file.tmp"),
                  std::runtime_error);
}
