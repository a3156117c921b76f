#ifndef QGR_IO_HPP
#define QGR_IO_HPP

#include <string>
#include <string_view>

#include "qgr/axring.hpp"

namespace qgr {

// Canonical text forms.
//   Laurent in v:  3v^2+1-v^-3        (descending exponents, no spaces)
//   XElem:         x{i:k:c,...}       (1-based node i, ascending (i,k))
//   YElem:         y{i:k:c,...}
//   Weight:        w{i:c,...}         (zero coordinates omitted)
//   AXElem:        e[x{...}] or (coeff)*e[x{...}], joined by +
// The AXElem parser additionally accepts a bare v-monomial coefficient
// (v*e[...], 2v^-1*e[...]) and, for rank-1 data, the spectral shorthand
// e[q^2+q^0], e[2q^0], q^n.

std::string print_laurent(const LaurentInt& p);
std::string print_x(const XElem& x);
std::string print_y(const YElem& y);
std::string print_weight(const Weight& w);
std::string print_ax(const AXElem& a);

LaurentInt parse_laurent(std::string_view text);
XElem parse_x(std::string_view text);
YElem parse_y(std::string_view text);
Weight parse_weight(std::string_view text, int rank);
AXElem parse_ax(std::string_view text);

}  // namespace qgr

#endif
