#include "pgft/params.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pgft {

int PgftParams::node_count() const {
  long long n = 1;
  for (int m : down_arity) n *= m;
  return static_cast<int>(n);
}

void PgftParams::validate() const {
  if (levels < 1) throw std::invalid_argument("pgft: level count must be positive");
  auto check = [&](const std::vector<int>& v, const char* name) {
    if (static_cast<int>(v.size()) != levels) {
      throw std::invalid_argument(std::string("pgft: ") + name + " list length must equal h");
    }
    for (int x : v) {
      if (x < 1) throw std::invalid_argument(std::string("pgft: ") + name + " entries must be positive");
    }
  };
  check(down_arity, "down-arity");
  check(up_arity, "up-arity");
  check(parallel, "parallel");
  if (up_arity[0] != 1) {
    throw std::invalid_argument("pgft: w[0] must be 1 (one leaf per end-node)");
  }
  long long n = 1;
  for (int m : down_arity) {
    n *= m;
    if (n > 1'000'000'000LL) throw std::invalid_argument("pgft: node count too large");
  }
}

std::string PgftParams::to_string() const {
  auto join = [](const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    return os.str();
  };
  std::ostringstream os;
  os << "PGFT(" << levels << ";" << join(down_arity) << ";" << join(up_arity) << ";"
     << join(parallel) << ")";
  return os.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("pgft: malformed notation, expected " + what);
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("an integer");
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000LL) fail("a smaller integer");
    }
    return static_cast<int>(v);
  }
  std::vector<int> int_list() {
    std::vector<int> out{integer()};
    while (eat(',')) out.push_back(integer());
    return out;
  }
};

}  // namespace

PgftParams parse_pgft_spec(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.text.substr(c.pos, 4) != "PGFT") c.fail("\"PGFT\"");
  c.pos += 4;
  if (!c.eat('(')) c.fail("'('");
  PgftParams params;
  params.levels = c.integer();
  if (!c.eat(';')) c.fail("';'");
  params.down_arity = c.int_list();
  if (!c.eat(';')) c.fail("';'");
  params.up_arity = c.int_list();
  if (!c.eat(';')) c.fail("';'");
  params.parallel = c.int_list();
  if (!c.eat(')')) c.fail("')'");
  c.skip_ws();
  if (c.pos != c.text.size()) c.fail("end of input");
  params.validate();
  return params;
}

}  // namespace pgft
