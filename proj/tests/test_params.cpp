#include <stdexcept>
#include "doctest.h"
#include "pgft/params.hpp"

using pgft::parse_pgft_spec;
using pgft::PgftParams;

TEST_CASE("parses the study notation") {
  PgftParams p = parse_pgft_spec("PGFT(3;8,4,2;1,2,1;1,1,4)");
  CHECK(p.levels == 3);
  CHECK(p.down_arity == std::vector<int>{8, 4, 2});
  CHECK(p.up_arity == std::vector<int>{1, 2, 1});
  CHECK(p.parallel == std::vector<int>{1, 1, 4});
  CHECK(p.node_count() == 64);
}

TEST_CASE("parses small trees") {
  PgftParams p1 = parse_pgft_spec("PGFT(1;4;1;1)");
  CHECK(p1.levels == 1);
  CHECK(p1.down_arity == std::vector<int>{4});
  PgftParams p2 = parse_pgft_spec("PGFT(2;2,2;1,2;1,2)");
  CHECK(p2.levels == 2);
  CHECK(p2.up_arity == std::vector<int>{1, 2});
  CHECK(p2.parallel == std::vector<int>{1, 2});
}

TEST_CASE("tolerates whitespace") {
  PgftParams p = parse_pgft_spec("  PGFT( 3 ; 8 , 4 , 2 ; 1,2,1 ; 1, 1, 4 )  ");
  CHECK(p.node_count() == 64);
  CHECK(p.to_string() == "PGFT(3;8,4,2;1,2,1;1,1,4)");
}

TEST_CASE("rejects malformed notation") {
  CHECK_THROWS_AS(parse_pgft_spec("GFT(1;4;1;1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pgft_spec("PGFT(1;4;1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pgft_spec("PGFT(1;4;1;1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pgft_spec("PGFT(1;4;1;1) junk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pgft_spec("PGFT(1;4;;1)"), std::invalid_argument);
}

TEST_CASE("rejects inconsistent parameters") {
  // length mismatch
  CHECK_THROWS_AS(parse_pgft_spec("PGFT(3;8,4;1,2,1;1,1,4)"), std::invalid_argument);
  // non-positive entry
  CHECK_THROWS_AS(parse_pgft_spec("PGFT(1;0;1;1)"), std::invalid_argument);
  // w[0] != 1
  CHECK_THROWS_AS(parse_pgft_spec("PGFT(2;2,2;2,2;1,1)"), std::invalid_argument);
}
