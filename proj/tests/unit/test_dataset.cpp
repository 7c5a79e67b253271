#include <sstream>

#include "doctest.h"

#include "rrlearn/dataset.hpp"
#include "rrlearn/errors.hpp"

#include "helpers.hpp"

using rrl::BigRat;
using rrl::LabeledDataset;
using rrl::LabeledPoint;
using testutil::code_of;

namespace {

LabeledDataset from_csv(const std::string& text,
                        const std::vector<std::string>& alphabet = {}) {
  std::istringstream in(text);
  return LabeledDataset::read_csv(in, alphabet);
}

}  // namespace

TEST_CASE("read_csv parses 1-D data and sorts by coordinate") {
  auto data = from_csv("x1,label\n3,+\n1,-\n2,+\n");
  REQUIRE(data.n() == 3);
  CHECK(data.dimension() == 1);
  CHECK(data.x1(0) == BigRat(1));
  CHECK(data.x1(1) == BigRat(2));
  CHECK(data.x1(2) == BigRat(3));
  // alphabet in order of first appearance
  CHECK(data.alphabet() == std::vector<std::string>{"+", "-"});
  CHECK(data.token(data.label(0)) == "-");
  CHECK(data.token(data.label(2)) == "+");
}

TEST_CASE("read_csv keeps ties in file order") {
  auto data = from_csv("x1,label\n1,a\n1,b\n0,c\n1,d\n");
  REQUIRE(data.n() == 4);
  CHECK(data.token(data.label(0)) == "c");
  CHECK(data.token(data.label(1)) == "a");
  CHECK(data.token(data.label(2)) == "b");
  CHECK(data.token(data.label(3)) == "d");
}

TEST_CASE("read_csv handles multi-dimensional files without sorting") {
  auto data = from_csv("x1,x2,label\n5,5,+\n0,0,-\n");
  REQUIRE(data.n() == 2);
  CHECK(data.dimension() == 2);
  CHECK(data.point(0).x[0] == BigRat(5));  // insertion order preserved
  CHECK(code_of([&] { data.x1(0); }) == rrl::ErrorCode::DimensionMismatch);
}

TEST_CASE("read_csv respects a declared alphabet") {
  auto data = from_csv("x1,label\n1,b\n2,a\n", {"a", "b"});
  CHECK(data.alphabet() == std::vector<std::string>{"a", "b"});
  CHECK(data.label_index("a") == 0);
  CHECK(code_of([] { from_csv("x1,label\n1,c\n", {"a", "b"}); }) == rrl::ErrorCode::Parse);
}

TEST_CASE("read_csv completes a one-label +/- file") {
  auto plus = from_csv("x1,label\n1,+\n2,+\n");
  CHECK(plus.alphabet() == std::vector<std::string>{"+", "-"});
  auto minus = from_csv("x1,label\n1,-\n");
  CHECK(minus.alphabet() == std::vector<std::string>{"-", "+"});
  CHECK(code_of([] { from_csv("x1,label\n1,solo\n"); }) == rrl::ErrorCode::AlphabetUnsupported);
}

TEST_CASE("read_csv rejects malformed input") {
  CHECK(code_of([] { from_csv(""); }) == rrl::ErrorCode::Parse);
  CHECK(code_of([] { from_csv("a,b\n"); }) == rrl::ErrorCode::Parse);
  CHECK(code_of([] { from_csv("x1,label\n1\n"); }) == rrl::ErrorCode::Parse);
  CHECK(code_of([] { from_csv("x1,label\nfoo,+\n"); }) == rrl::ErrorCode::Parse);
  CHECK(code_of([] { from_csv("x1,label\n1,\n"); }) == rrl::ErrorCode::Parse);
  CHECK(code_of([] { from_csv("x2,label\n1,+\n"); }) == rrl::ErrorCode::Parse);
}

TEST_CASE("write_csv round trips") {
  auto data = from_csv("x1,x2,label\n0.5,2,+\n1,3/7,-\n");
  std::ostringstream out;
  data.write_csv(out);
  auto again = from_csv(out.str());
  REQUIRE(again.n() == data.n());
  for (int i = 0; i < data.n(); ++i) {
    CHECK(again.point(i).x == data.point(i).x);
    CHECK(again.token(again.label(i)) == data.token(data.label(i)));
  }
}

TEST_CASE("constructor validates shape") {
  CHECK(code_of([] { LabeledDataset(0, {"+", "-"}, {}); }) == rrl::ErrorCode::DimensionMismatch);
  CHECK(code_of([] { LabeledDataset(1, {"+"}, {}); }) == rrl::ErrorCode::AlphabetUnsupported);
  CHECK(code_of([] { LabeledDataset(1, {"+", "+"}, {}); }) == rrl::ErrorCode::AlphabetUnsupported);
  LabeledPoint bad;
  bad.x = {BigRat(1), BigRat(2)};
  CHECK(code_of([&] { LabeledDataset(1, {"+", "-"}, {bad}); }) ==
        rrl::ErrorCode::DimensionMismatch);
}

TEST_CASE("with_appended keeps the stable 1-D tie rule") {
  auto data = testutil::line("+-");
  LabeledPoint extra;
  extra.x = {BigRat(1)};
  extra.label = 1;
  auto more = data.with_appended({extra});
  REQUIRE(more.n() == 3);
  // appended point shares coordinate 1 and must land after the original
  CHECK(more.x1(0) == BigRat(1));
  CHECK(more.x1(1) == BigRat(1));
  CHECK(more.label(0) == 0);
  CHECK(more.label(1) == 1);
  CHECK(more.x1(2) == BigRat(2));
  CHECK(data.n() == 2);  // original untouched
}

TEST_CASE("coords1d exposes the sorted coordinates") {
  auto data = testutil::line_at("++-", {BigRat(5), BigRat(1), BigRat(3)});
  auto xs = data.coords1d();
  CHECK(xs == std::vector<BigRat>{BigRat(1), BigRat(3), BigRat(5)});
}
