/*
   Copyright 2026 The nchess authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NCHESS_NCPARSE_HPP
#define NCHESS_NCPARSE_HPP

#include <string>

#include "nchess/freealg.hpp"

namespace nchess {

/**
 * Text format for nc polynomials:
 *
 *   expr     := ['-'] term (('+'|'-') term)*
 *   term     := rational ['*' factors] | factors
 *   factors  := factor ('*' factor)*
 *   factor   := var | '(' expr ')' | 'T(' expr ')' | factor '^' uint
 *   var      := ('x'|'h') uint
 *   rational := int ('/' uint)?
 *
 * Whitespace insensitive; '^' binds tighter than '*'; T(..) applies the
 * involution. Direction letters h<j> are rejected unless allow_h is set.
 */

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

   private:
    int line_;
    int column_;
};

NcPoly parse(const std::string& text, int g, bool allow_h = false);

/** Canonical form: terms by (degree, lex), reduced rational coefficients,
    runs of a repeated letter collapsed with '^'. Round-trips through parse. */
std::string print(const NcPoly& p);

std::string print_word(const Word& w);

}  // namespace nchess

#endif  // NCHESS_NCPARSE_HPP
