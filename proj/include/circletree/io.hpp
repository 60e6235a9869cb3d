#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "circletree/circle_graph.hpp"
#include "circletree/errors.hpp"

namespace circletree {

// Text edge-list format used throughout the CLI:
//   n=<int>;edges=<a>-<b>[,<a>-<b>...]
// 1-based labels, whitespace ignored anywhere, empty edge list allowed.

namespace detail {

class EdgeListParser {
 public:
  explicit EdgeListParser(std::string_view text) : text_(text) {}

  CircleGraph parse() {
    expect_word("n");
    expect_char('=');
    const int n = parse_int();
    expect_char(';');
    expect_word("edges");
    expect_char('=');
    EdgeList edges;
    skip_ws();
    if (!at_end()) {
      for (;;) {
        const std::size_t edge_pos = pos_;
        const int a = parse_int();
        expect_char('-');
        const int b = parse_int();
        if (a == b) throw ParseError(edge_pos, "edge endpoints must differ");
        edges.emplace_back(a, b);
        skip_ws();
        if (at_end()) break;
        expect_char(',');
      }
    }
    try {
      return CircleGraph(n, std::move(edges));
    } catch (const DomainError& e) {
      throw ParseError(0, e.what());
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  void expect_char(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    skip_ws();
    for (char c : w) {
      if (pos_ >= text_.size() || text_[pos_] != c)
        throw ParseError(pos_, "expected \"" + std::string(w) + "\"");
      ++pos_;
    }
  }
  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected a number");
    return static_cast<int>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CircleGraph parse_circle_graph(std::string_view text) {
  return detail::EdgeListParser(text).parse();
}

inline std::string format_edge(const Edge& e) {
  return std::to_string(e.a) + "-" + std::to_string(e.b);
}

inline std::string format_circle_graph(const CircleGraph& g) {
  std::string out = "n=" + std::to_string(g.points()) + ";edges=";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out += ",";
    out += format_edge(g.edges()[i]);
  }
  return out;
}

}  // namespace circletree
