// SPDX-License-Identifier: Apache-2.0
//
// Text grammar for torsion types and divisors:
//   torsion:  point:(p1,p2,...) [+ point:(...)]*
//   divisor:  point:(m) [+ point:(m)]*          (single-part = multiplicity)
// A point is a symbolic label (bound to a deterministic generic coordinate)
// or a complex literal like 0.25+0.3i (distinctness checked on the curve).
// Entry separators are '+' immediately following ')'.
#ifndef SKLY_TOOLS_GRAMMAR_HPP
#define SKLY_TOOLS_GRAMMAR_HPP

#include <string>
#include <vector>

#include "skly/torsion.hpp"

namespace skly::tool {

// Remembers label -> point bindings so repeated labels across arguments
// resolve to the same generic coordinate, and output can restore names.
class PointBook {
  public:
    explicit PointBook(CurvePtr curve) : curve_(std::move(curve)) {}

    CurvePoint resolve(const std::string& token, std::size_t pos);
    // Label for a point if one was bound, otherwise the coordinate literal.
    std::string name(const CurvePoint& p) const;
    const CurvePtr& curve() const { return curve_; }

  private:
    CurvePtr curve_;
    std::vector<std::pair<std::string, CurvePoint>> bindings_;
};

TorsionType parse_torsion(const std::string& text, PointBook& book);
Divisor parse_divisor(const std::string& text, PointBook& book);

std::string format_torsion(const TorsionType& t, const PointBook& book);

} // namespace skly::tool

#endif
