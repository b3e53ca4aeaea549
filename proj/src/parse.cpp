#include "stanley/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace stanley {
namespace {

constexpr int kMaxNumber = 1000000;

class Parser {
 public:
  Parser(std::string_view text, std::optional<int> var_count)
      : s_(text), declared_(var_count) {
    if (declared_ && *declared_ < 1) throw ParseError("variable count must be at least 1", 0);
  }

  MonomialIdeal run() {
    skip_ws();
    expect('(', "expected '('");
    std::vector<std::map<int, int>> gens;
    gens.push_back(parse_generator());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      gens.push_back(parse_generator());
      skip_ws();
    }
    expect(')', "expected ',' or ')'");
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");

    int n = declared_ ? *declared_ : max_index_;
    std::vector<ExponentVector> vectors;
    vectors.reserve(gens.size());
    for (const auto& gen : gens) {
      ExponentVector v = ExponentVector::zero(n);
      for (auto [var, e] : gen) v[var - 1] = e;
      vectors.push_back(std::move(v));
    }
    return MonomialIdeal(n, std::move(vectors));
  }

 private:
  std::map<int, int> parse_generator() {
    std::map<int, int> exps;
    parse_factor(exps);
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      parse_factor(exps);
      skip_ws();
    }
    return exps;
  }

  void parse_factor(std::map<int, int>& exps) {
    skip_ws();
    if (peek() != 'x') fail("expected a factor 'x<index>'");
    std::size_t at = pos_;
    ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected a variable index right after 'x'", at);
    int var = parse_int();
    if (var < 1) throw ParseError("variable index must be at least 1", at);
    if (declared_ && var > *declared_)
      throw ParseError("variable x" + std::to_string(var) + " exceeds the declared count " +
                           std::to_string(*declared_),
                       at);
    max_index_ = std::max(max_index_, var);
    int e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t eat = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected an exponent after '^'");
      e = parse_int();
      if (e < 1) throw ParseError("exponent must be at least 1", eat);
    }
    exps[var] += e;
  }

  int parse_int() {
    long value = 0;
    std::size_t at = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > kMaxNumber) throw ParseError("number too large", at);
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c, const std::string& msg) {
    skip_ws();
    if (peek() != c) fail(msg);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view s_;
  std::optional<int> declared_;
  std::size_t pos_ = 0;
  int max_index_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::optional<int> var_count) {
  return Parser(text, var_count).run();
}

}  // namespace stanley
