#include <random>

#include "doctest.h"

#include "test_util.hpp"

using namespace mass;
using testutil::errc_of;
using testutil::U;

TEST_CASE("micro parsing accepts plain decimals and nothing else") {
  CHECK(parse_micro("0") == 0);
  CHECK(parse_micro("20") == U(20));
  CHECK(parse_micro("1.5") == 1'500'000);
  CHECK(parse_micro("0.000001") == 1);
  CHECK(parse_micro(".5") == 500'000);
  CHECK(parse_micro("5.") == U(5));
  CHECK(parse_micro("007") == U(7));

  CHECK_FALSE(parse_micro(""));
  CHECK_FALSE(parse_micro("."));
  CHECK_FALSE(parse_micro("-1"));
  CHECK_FALSE(parse_micro("+1"));
  CHECK_FALSE(parse_micro("1..2"));
  CHECK_FALSE(parse_micro("1.2.3"));
  CHECK_FALSE(parse_micro("1e3"));
  CHECK_FALSE(parse_micro(" 1"));
  CHECK_FALSE(parse_micro("1 "));
  CHECK_FALSE(parse_micro("0.0000001"));  // 7 fractional digits
  CHECK_FALSE(parse_micro("abc"));
  CHECK_FALSE(parse_micro("99999999999999999999"));  // overflows int64 micro
  CHECK_FALSE(parse_micro("3", 2 * kMicro));         // above max_micro
  CHECK(parse_micro("2", 2 * kMicro) == U(2));
}

TEST_CASE("micro and cost formatting is exact and trimmed") {
  CHECK(format_micro(0) == "0");
  CHECK(format_micro(U(135)) == "135");
  CHECK(format_micro(1'500'000) == "1.5");
  CHECK(format_micro(1) == "0.000001");
  CHECK(format_micro(-U(220)) == "-220");

  CHECK(format_cost(0) == "0");
  CHECK(format_cost(testutil::CU(2580)) == "2580");
  CHECK(format_cost(-testutil::CU(220)) == "-220");
  CHECK(format_cost(kMicroSq / 2) == "0.5");
  CHECK(format_cost(1) == "0.000000000001");

  CHECK(cost_is_integral(testutil::CU(2360)));
  CHECK_FALSE(cost_is_integral(kMicroSq / 2));
  CHECK(cost_to_units(testutil::CU(2360)) == 2360);
  CHECK(cost_to_units(-testutil::CU(220)) == -220);
  CHECK(errc_of([] { cost_to_units(kMicroSq / 2); }) == Errc::InvalidArgument);

  // Round trip through the parser for every scale of fractional digit.
  for (std::int64_t v : {std::int64_t{0}, std::int64_t{1}, std::int64_t{10}, U(3) + 140'000,
                         U(1'000'000), std::int64_t{999'999}})
    CHECK(parse_micro(format_micro(v)) == v);
}

TEST_CASE("example fixture parses to the worked instance") {
  const LoadMatrix lm = testutil::example_loads();
  CHECK(lm.n() == 6);
  CHECK(lm.names() ==
        std::vector<std::string>{"FI", "FII", "FIII", "FIV", "FV", "FVI"});
  CHECK(lm.present_count() == 9);
  CHECK(lm.total_load_micro() == U(215));

  CHECK(lm.load_micro(0, 1) == U(20));   // FI -> FII
  CHECK(lm.load_micro(0, 5) == U(25));   // FI -> FVI
  CHECK(lm.load_micro(1, 0) == U(10));   // FII -> FI
  CHECK(lm.load_micro(1, 2) == U(15));   // FII -> FIII
  CHECK(lm.load_micro(2, 3) == U(30));   // FIII -> FIV
  CHECK(lm.load_micro(3, 2) == U(50));   // FIV -> FIII
  CHECK(lm.load_micro(3, 5) == U(40));   // FIV -> FVI
  CHECK(lm.load_micro(4, 5) == U(10));   // FV -> FVI
  CHECK(lm.load_micro(5, 4) == U(15));   // FVI -> FV

  CHECK(lm.vacant(0, 2));
  CHECK(lm.vacant(2, 0));
  for (int i = 0; i < 6; ++i) CHECK(lm.vacant(i, i));
  CHECK_FALSE(lm.cell(0, 0).has_value());
  CHECK(lm.cell(0, 1) == U(20));
}

TEST_CASE("csv rendering is canonical and round-trips") {
  const LoadMatrix lm = testutil::example_loads();
  CHECK(to_csv(lm) == testutil::kExampleCsv);
  CHECK(parse_load_matrix(to_csv(lm)) == lm);
}

TEST_CASE("csv parsing tolerates comments, blank lines, CRLF, row order") {
  const std::string variant =
      "# inter-facility unit loads\r\n"
      "facility,FI,FII,FIII,FIV,FV,FVI\r\n"
      "\r\n"
      "FVI,-,-,-,-,15,-\r\n"
      "FV,,,,,,10\r\n"  // empty fields are vacant too
      "FIV,-,-,50,-,-,40\r\n"
      "FIII,-,-,-,30,-,-\r\n"
      "FII,10,-,15,-,-,-\r\n"
      "# trailing comment\r\n"
      "FI,-,20,-,-,-,25\r\n";
  CHECK(parse_load_matrix(variant) == testutil::example_loads());
}

TEST_CASE("csv parsing accepts decimal loads") {
  const LoadMatrix lm = parse_load_matrix(
      "facility,A,B\n"
      "A,-,1.5\n"
      "B,0.000001,-\n");
  CHECK(lm.load_micro(0, 1) == 1'500'000);
  CHECK(lm.load_micro(1, 0) == 1);
  CHECK(parse_load_matrix(to_csv(lm)) == lm);
}

TEST_CASE("csv parsing rejects malformed input with specific codes") {
  auto parse = [](const char* text) { return errc_of([=] { parse_load_matrix(text); }); };

  CHECK(parse("") == Errc::HeaderMismatch);
  CHECK(parse("dept,A\nA,-\n") == Errc::HeaderMismatch);
  CHECK(parse("facility\n") == Errc::HeaderMismatch);
  CHECK(parse("facility,A\nB,-\n") == Errc::HeaderMismatch);          // unknown row
  CHECK(parse("facility,A,B\nA,-,1\n") == Errc::NonSquare);           // missing row
  CHECK(parse("facility,A,B\nA,-,1\nB,2,-\nA,-,3\n") == Errc::DuplicateName);
  CHECK(parse("facility,A,A\nA,-,1\nA,2,-\n") == Errc::DuplicateName);
  CHECK(parse("facility,A,B\nA,-,1,9\nB,2,-\n") == Errc::MalformedCell);  // extra field
  CHECK(parse("facility,A,B\nA,-\nB,2,-\n") == Errc::MalformedCell);      // missing field
  CHECK(parse("facility,A,B\nA,-,x\nB,2,-\n") == Errc::MalformedCell);
  CHECK(parse("facility,A,B\nA,-,1.2345678\nB,2,-\n") == Errc::MalformedCell);
  CHECK(parse("facility,A,B\nA,-,-3\nB,2,-\n") == Errc::NegativeLoad);
  CHECK(parse("facility,A,B\nA,-,-x\nB,2,-\n") == Errc::MalformedCell);
  CHECK(parse("facility,A,B\nA,7,1\nB,2,-\n") == Errc::DiagonalNotVacant);
  CHECK(parse("facility,A,B\nA,-,1000001\nB,2,-\n") == Errc::MalformedCell);  // above cap
  CHECK(parse("facility,A ,B\nA ,-,1\nB,2,-\n") == Errc::MalformedCell);      // bad name
}

TEST_CASE("csv parsing caps the facility count") {
  std::string header = "facility";
  for (int i = 0; i < 65; ++i) header += ",F" + std::to_string(i);
  CHECK(errc_of([&] { parse_load_matrix(header + "\n"); }) == Errc::TooLarge);
}

TEST_CASE("a present zero on the diagonal is normalized to vacant") {
  const LoadMatrix lm = parse_load_matrix(
      "facility,A,B\n"
      "A,0,1\n"
      "B,2,0\n");
  CHECK(lm.vacant(0, 0));
  CHECK(lm.vacant(1, 1));
  CHECK(lm == parse_load_matrix("facility,A,B\nA,-,1\nB,2,-\n"));
}

TEST_CASE("from_cells validates every invariant") {
  using Cells = std::vector<std::optional<std::int64_t>>;
  CHECK(errc_of([] { LoadMatrix::from_cells({}, {}); }) == Errc::HeaderMismatch);
  CHECK(errc_of([] { LoadMatrix::from_cells({"A"}, Cells(2)); }) == Errc::NonSquare);
  CHECK(errc_of([] { LoadMatrix::from_cells({"A", "A"}, Cells(4)); }) == Errc::DuplicateName);
  CHECK(errc_of([] { LoadMatrix::from_cells({"A", "B C"}, Cells(4)); }) == Errc::MalformedCell);
  CHECK(errc_of([] { LoadMatrix::from_cells({"A", ""}, Cells(4)); }) == Errc::MalformedCell);
  CHECK(errc_of([] {
          LoadMatrix::from_cells({"A", "B"}, Cells{std::nullopt, -5, std::nullopt, std::nullopt});
        }) == Errc::NegativeLoad);
  CHECK(errc_of([] {
          LoadMatrix::from_cells({"A", "B"}, Cells{U(1), std::nullopt, std::nullopt, std::nullopt});
        }) == Errc::DiagonalNotVacant);
  CHECK(errc_of([] {
          LoadMatrix::from_cells({"A", "B"},
                                 Cells{std::nullopt, kMaxLoadMicro + 1, std::nullopt, std::nullopt});
        }) == Errc::MalformedCell);

  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("F" + std::to_string(i));
  CHECK(errc_of([&] { LoadMatrix::from_cells(many, Cells(65 * 65)); }) == Errc::TooLarge);
}

TEST_CASE("csv round-trip is the identity on random matrices") {
  std::mt19937 rng(20240701);
  std::uniform_int_distribution<int> size(1, 8);
  for (int it = 0; it < 50; ++it) {
    const LoadMatrix lm = testutil::random_load_matrix(rng, size(rng), 50, 30);
    CHECK(parse_load_matrix(to_csv(lm)) == lm);
  }
  // Including fractional loads.
  const LoadMatrix frac = parse_load_matrix(
      "facility,A,B,C\n"
      "A,-,0.25,-\n"
      "B,3.125,-,0.000001\n"
      "C,-,999999.999999,-\n");
  CHECK(parse_load_matrix(to_csv(frac)) == frac);
}
