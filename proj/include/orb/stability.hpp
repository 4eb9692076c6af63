#pragma once

#include <map>
#include <set>
#include <vector>

#include "orb/realization.hpp"

namespace orb {

// A fatgraph under construction.  Invariant (asserted by every builder that
// returns one): the boundary is a single circle whose unglued-edge reading
// has length |word| + base_exponent * |b|.  On disk realizations the reading
// is exactly word · b^base_exponent; on genus realizations the unglued
// pe(z_i^{+-1}) stand in for rectangle hookups and the reading only becomes
// word · b^base_exponent once those are consumed by A-type modules.
struct PartialBuild {
  Fatgraph graph;
  Word word;              // the word the invariant refers to
  int base_exponent = 0;  // exponent of b in the boundary reading
  std::map<Letter, int> unglued_pe;
};

// Unglued polygon edges of f counted by label.
std::map<Letter, int> unglued_pe_counts(const Fatgraph& f);

// Data of the run-sum bound: coeffs are Bezout coefficients with
// sum(coeffs[i] * xs[i]) == g, and every multiple of g at or above `bound`
// is a sum over an index sequence with distinct consecutive entries.
struct NTInstance {
  std::vector<long long> xs;
  long long g = 0;
  long long s = 0;
  std::vector<long long> coeffs;
  long long bound = 0;
};

// Requires at least three positive entries.
NTInstance nt_bound(const std::vector<long long>& xs);

// Index sequence with adjacent entries distinct and sum(xs[i]) == target.
// Targets at or above inst.bound use the run construction; smaller ones fall
// back to an exact search.  Throws Unreachable when no sequence exists.
std::vector<int> nt_witness(const NTInstance& inst, long long target);

struct PreparedWord {
  Word word;          // reduced b^prepended · w · b^appended
  int prepended = 0;  // copies of b absorbed on the left
  int appended = 0;   // copies of b absorbed on the right
};

// Pads w with boundary copies until one more b on either side concatenates
// without cancellation.  w must classify as Hyperbolic; on genus realizations
// the z exponent sums must additionally vanish.
PreparedWord prepare_word(const Realization& r, const Word& w);

// Step-one skeleton: one piece per run of w, interval polygons between runs.
// w must be prepared.  Disk realizations only.
PartialBuild build_Yprime_disk(const Realization& r, const Word& w);

// Genus counterpart; z letters become rectangles.  When pad_b2 is set the
// built word is w · b^2, which guarantees at least four unglued pe(z_i) and
// pe(z_i^{-1}) per index.
PartialBuild build_Yprime_genus(const Realization& r, const Word& w, bool pad_b2);

// Standard polygon with every rectangle doubly attached; unglued edges are
// exactly the pe(c_j) and the boundary reads b.  Genus realizations only.
Fatgraph build_module_A(const Realization& r);

// Module A with the z_i rectangle split in two, each glued at one edge; the
// two unglued rectangle edges carry labels z_i and z_i^{-1}.
Fatgraph build_module_A_i(const Realization& r, int i);

// Chain of k+1 standard polygons (k even) whose boundary matches module A_i
// with b^k inserted on the z_i^{-1} circle.
Fatgraph build_module_A_ik(const Realization& r, int i, int k);

// A_{i,2} with the first chain rectangle split in two; four unglued rectangle
// edges, two per sign of z_i.
Fatgraph build_module_B(const Realization& r, int i);

// Consumes every unglued pe(z_i^{+-1}) by attaching copies of A_i; each copy
// raises the exponent by one.  Requires balanced per-index counts.
PartialBuild attach_A_modules(PartialBuild p, const Realization& r);

// Padding engine: attaches one group polygon per index in sequence, each
// glued to an unglued pe(c_j) site (step one anywhere, later steps on the
// standard polygons added by the previous step), raising the exponent by
// o_j - 1 per step.  Consecutive equal indices never have a site.
PartialBuild pad_exponent_steps(PartialBuild p, const Realization& r,
                                const std::vector<int>& indices);

// Raises the base exponent by `extra` by chaining group polygons with fresh
// standard polygons; extra must be reachable per nt_witness over (o_j - 1).
PartialBuild pad_exponent_disk(PartialBuild p, const Realization& r, long long extra);

// L = lcm(o_j) sheets with group polygons glued across each fiber of an
// unglued pe(c_j); every unglued edge must be a finite-order polygon edge.
// The result is complete and its boundary covers the input reading L times.
Fatgraph covering_trick(const PartialBuild& p, const Realization& r);

struct BuildResult {
  Fatgraph graph;
  CyclicWord target;      // w · b^exponent for the caller's original w
  long long exponent = 0; // base + n (genus) or base + n*g (disk)
  long long base = 0;     // the stable threshold achieved by this build
  long long degree = 0;   // boundary covering degree over target
};

// Complete certified fatgraph whose boundary covers w · b^{base + n*g} with
// degree lcm(o_j), where g = gcd(o_j - 1).
BuildResult build_disk_surface(const Realization& r, const Word& w, int n);

// Complete certified fatgraph whose boundary covers w · b^{base + n} with
// degree lcm(o_j) for even n and 2*lcm(o_j) for odd n (1 and 2 when J = 0).
BuildResult build_genus_surface(const Realization& r, const Word& w, int n,
                                bool pad_b2 = true);

// Exponents e <= up_to for which the matching builder can reach w · b^e.
std::set<long long> achievable_exponents(const Realization& r, const Word& w,
                                         long long up_to);

}  // namespace orb
