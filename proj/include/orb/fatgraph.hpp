#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orb/cyclic.hpp"
#include "orb/words.hpp"

namespace orb {

enum class PieceKind { Rectangle, GroupPolygon, Polygon };

enum class SegKind { Side, RectEdge, GroupEdge, PolyEdge };

struct Seg {
  SegKind kind;
  Letter label;
  friend bool operator==(const Seg&, const Seg&) = default;
};

// Rectangles: [Side z_i, re(z_i^{-1}), Side z_i^{-1}, re(z_i)] — each edge is
// named for the side that follows it.  Group polygons: [Side c_j, ge(c_j)]
// repeated o_j times.  Polygons: pe(x) per listed label.
struct Piece {
  PieceKind kind;
  int gen_index;  // i for rectangles, j for group polygons, -1 otherwise
  std::vector<Seg> segs;
};

struct SegRef {
  int piece = -1;
  int seg = -1;
  friend bool operator==(const SegRef&, const SegRef&) = default;
  friend auto operator<=>(const SegRef&, const SegRef&) = default;
};

struct Gluing {
  SegRef a, b;  // canonical: a < b
  friend bool operator==(const Gluing&, const Gluing&) = default;
  friend auto operator<=>(const Gluing&, const Gluing&) = default;
};

class Fatgraph {
 public:
  explicit Fatgraph(GenAlphabet alphabet);

  const GenAlphabet& alphabet() const { return alphabet_; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }
  const Piece& piece(int p) const;
  const std::vector<Piece>& pieces() const { return pieces_; }
  const Seg& seg_at(SegRef r) const;

  int add_rectangle(int i);
  int add_group_polygon(int j);
  int add_polygon(const Word& labels);

  // Copies other's pieces and gluings; returns the piece-index offset.
  int append_copy(const Fatgraph& other);

  // Mechanical pairing of two distinct unglued edge segments.  Label and kind
  // mismatches are allowed here and reported by validate().
  void glue(SegRef a, SegRef b);
  void unglue(SegRef a);

  std::optional<SegRef> partner(SegRef r) const;
  bool is_glued(SegRef r) const { return partner(r).has_value(); }

  std::vector<Gluing> gluings() const;  // sorted
  int gluing_count() const { return gluing_count_; }
  bool complete() const;
  std::vector<SegRef> unglued_edges() const;  // sorted, edge segments only

 private:
  GenAlphabet alphabet_;
  std::vector<Piece> pieces_;
  std::vector<std::vector<SegRef>> partner_;
  int gluing_count_ = 0;
};

struct Token {
  SegKind kind;
  Letter label;
  friend bool operator==(const Token&, const Token&) = default;
  friend std::strong_ordering operator<=>(const Token&, const Token&) = default;
};

std::string token_text(const Token& t);

// Boundary traversal output: one token cycle per boundary circle, each in
// canonical rotation, sorted.  Cycles that cross no side and no unglued edge
// (possible only with label-invalid gluings) are counted, not listed.
struct BoundaryReport {
  std::vector<std::vector<Token>> components;
  int ghost_cycles = 0;
};

BoundaryReport boundary(const Fatgraph& f);

// The read-as-word projection: every token contributes its label.
Word component_word(const std::vector<Token>& component);
std::string component_text(const std::vector<Token>& component);

struct Violation {
  int piece;
  int seg;  // -1 for piece-level problems
  std::string message;
};

std::vector<Violation> validate(const Fatgraph& f);

int euler_characteristic(const Fatgraph& f);

struct CensusReport {
  std::map<int, int> rectangles;        // i -> count
  std::map<int, int> group_polygons;    // j -> count
  std::map<int, int> polygons_by_size;  // edge count -> count
  std::map<std::string, int> unglued;   // token text -> count
};

CensusReport census(const Fatgraph& f);

// Total covering degree of the boundary over target, or nullopt if any
// component fails to be a rotation of target^k.  The fatgraph must have been
// complete: unglued markers in the report are an error.
std::optional<int> covers(const BoundaryReport& report, const CyclicWord& target);

// Complete fatgraph whose boundary reads exactly the given words (one
// component per word, up to rotation).  Pairing of z letters into rectangles
// and grouping of c letters into group polygons is first-come order, or
// shuffled when a seed is supplied.
Fatgraph pinch(const std::vector<Word>& words, const GenAlphabet& a,
               std::optional<unsigned long long> seed = std::nullopt);

// Piece-dual graph in DOT form: arcs point away from polygons and through
// rectangles along their z_i side.
std::string spine_dot(const Fatgraph& f);

// Standard polygon over the full symbol cycle, with every rectangle glued at
// both edges; the unglued edges are exactly the pe(c_j).
Fatgraph standard_complex(const GenAlphabet& a, const CyclicOrder& order);

}  // namespace orb
