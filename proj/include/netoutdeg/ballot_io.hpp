#pragma once

#include <string>
#include <string_view>

#include "netoutdeg/networks.hpp"
#include "netoutdeg/profiles.hpp"

namespace netoutdeg {

/// Ballot file format, one item per line:
///
///   # comment
///   version: 1                      (optional, before anything else)
///   alternatives: a b c
///   1: order a > b = c
///   * 3: approve a b                (three voters with fresh ids)
///   4: top a b                      (strict prefix, rest tied last)
///   5: pairs (a,b) (b,c)            (literal pair list)
///
/// Fresh ids follow the largest explicit id, in file order. Throws
/// ParseError with the offending line number.
Profile parse_profile(std::string_view text);

/// Orders print as `order` chains, everything else as `pairs`.
std::string print_profile(const Profile& p);

/// Single ballot in the same syntax, without the voter prefix.
std::string format_ballot(const Relation& r);

/// `from,to,capacity` with a header and every arc in label order.
std::string network_csv(const Network& n);
/// Graphviz digraph with the nonzero arcs.
std::string network_dot(const Network& n);

}  // namespace netoutdeg
