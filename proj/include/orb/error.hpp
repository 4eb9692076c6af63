#pragma once

#include <stdexcept>
#include <string>

namespace orb {

enum class ErrKind {
  Alphabet,             // bad generator data (order < 2, no generators)
  Order,                // cyclic order is not a permutation of the expected symbols
  Word,                 // letters outside the alphabet, malformed signs
  Parse,                // unreadable token or file text
  Io,                   // filesystem problems
  Piece,                // piece / segment reference out of range
  Gluing,               // gluing request the surface cannot support
  Realization,          // alphabet+order data fails the realization checks
  NonStandardOrder,     // order is fine but not in the normalized z-pattern
  EmptyInput,           // an input word reduces to the identity
  HomologyObstruction,  // letter counts rule out any fatgraph with that boundary
  NoAttachmentSite,     // padding step has no polygon to attach to
  Incomplete,            // operation requires every edge glued
  NotHyperbolic,         // word class is not hyperbolic where it must be
  Equidistribution,      // unglued z census breaks the balanced-count invariant
  UngluedInfiniteOrder,  // covering construction found an open rectangle edge
  ExponentTooSmall,      // requested boundary exponent below the stable range
  TooFewConePoints,      // disk construction needs at least three finite orders
  Unreachable,           // no adjacent-distinct index sequence attains the total
  Parity,                // an even-only (or odd-only) integer argument violated
  Contract,  // a constructed object failed its post-hoc verification
  Internal,
};

// Every failure in the library is one of these; the kind is stable so callers
// can map it to an exit code or message prefix without string matching.
struct Error : std::runtime_error {
  ErrKind kind;
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace orb
