#ifndef MZVFRAC_FORMAT_HPP
#define MZVFRAC_FORMAT_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "mzvfrac/lincomb.hpp"
#include "mzvfrac/words.hpp"

namespace mzvfrac {

// Literal grammar:  <comp> ";" <items>
//   <comp>  := int ("," int)*      each int a positive decimal
//   <items> := item ("," item)*
// Whitespace around tokens is ignored. Lengths of both lists must match.

/// Items are identifiers, pairwise distinct. Throws ParseError.
StarPair parse_star_pair(std::string_view text);

struct RatedComposition {
    Composition exponents;
    std::vector<mpq_class> rates;
};

/// Items are positive rationals `p` or `p/q`. Throws ParseError, including
/// for a rate that is not strictly positive.
RatedComposition parse_rated_composition(std::string_view text);

/// `2,1;u,v`
std::string to_literal(const StarPair& p);

enum class OutputFormat { Text, Latex, Json };

/// `<2,2;m,n> + 2*<3,1;m,n>`; the empty sum renders as `0`.
std::string to_text(const LinComb<StarPair>& l);

/// Sum of fractions c / ((u_1+...+u_k)^{s_1} ... u_k^{s_k}).
std::string to_latex(const LinComb<StarPair>& l);

/// Compact `{"terms":[{"coef":"2","s":[3,1],"u":["m","n"]}, ...]}`, terms in
/// canonical order.
std::string to_json(const LinComb<StarPair>& l);

/// Inverse of to_json. Throws Error(ParseError) on malformed input.
LinComb<StarPair> from_json(std::string_view text);

std::string render(const LinComb<StarPair>& l, OutputFormat fmt);

/// Text rendering of a word, e.g. `x0 x_u x_v`; the empty word is `1`.
std::string to_text(const Word& w);

std::string to_text(const LinComb<Word>& l);

std::ostream& operator<<(std::ostream& os, const StarPair& p);
std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const LinComb<StarPair>& l);
std::ostream& operator<<(std::ostream& os, const LinComb<Word>& l);

}  // namespace mzvfrac

#endif  // MZVFRAC_FORMAT_HPP
