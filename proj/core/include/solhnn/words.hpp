#pragma once

#include "solhnn/hnn.hpp"
#include "solhnn/rep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace solhnn {

// one letter of the surface syntax: generator token and nonzero exponent
struct WordAtom {
    char gen;             // 't', 'u', 'v', 's', 'a'
    long long index = 0;  // a[index]; 0 for every other generator
    long long exponent = 1;
};

struct Word {
    std::vector<WordAtom> atoms;
};

class WordParseError : public std::runtime_error {
  public:
    WordParseError(std::size_t column, std::string token, const std::string &what)
        : std::runtime_error("parse error at column " + std::to_string(column) + ": " + what),
          column_(column), token_(std::move(token)) {}
    std::size_t column() const { return column_; }
    const std::string &token() const { return token_; }

  private:
    std::size_t column_;
    std::string token_;
};

// grammar: word := atom (('*' | whitespace) atom)*
//          atom := gen ('^' int)?
//          gen  := 't' | 'u' | 'v' | 's' | 'a' | 'a[' int ']'
// alphabet restricted per group: {t,u,v} abelian, {t,s,a,a[i]} wreath;
// the empty word is the identity
Word parse_word(std::string_view text, const GroupSpec &g);

HnnElement eval_word(const GroupSpec &g, const Word &w);

// independent evaluation in the faithful representation; never touches
// the canonical-form machinery
Rep eval_word_rep(const GroupSpec &g, const Word &w);

// canonical word text of a canonical element; re-parses to an equal element
std::string format_element(const GroupSpec &g, const HnnElement &x);

IntVector parse_vector(std::string_view text); // "(1,-2,0)"
std::string vector_str(const IntVector &v);

} // namespace solhnn
