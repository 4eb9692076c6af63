#include "orb/fatgraph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace orb {

Fatgraph::Fatgraph(GenAlphabet alphabet) : alphabet_(std::move(alphabet)) {
  validate_alphabet(alphabet_);
}

const Piece& Fatgraph::piece(int p) const {
  if (p < 0 || p >= piece_count())
    fail(ErrKind::Piece, "piece index " + std::to_string(p) + " out of range");
  return pieces_[static_cast<std::size_t>(p)];
}

const Seg& Fatgraph::seg_at(SegRef r) const {
  const Piece& p = piece(r.piece);
  if (r.seg < 0 || r.seg >= static_cast<int>(p.segs.size()))
    fail(ErrKind::Piece, "segment " + std::to_string(r.piece) + "." +
                             std::to_string(r.seg) + " out of range");
  return p.segs[static_cast<std::size_t>(r.seg)];
}

int Fatgraph::add_rectangle(int i) {
  if (i < 0 || i >= alphabet_.inf_count)
    fail(ErrKind::Piece, "no infinite generator z" + std::to_string(i));
  pieces_.push_back(Piece{PieceKind::Rectangle,
                          i,
                          {{SegKind::Side, z(i)},
                           {SegKind::RectEdge, Z(i)},
                           {SegKind::Side, Z(i)},
                           {SegKind::RectEdge, z(i)}}});
  partner_.emplace_back(4, SegRef{});
  return piece_count() - 1;
}

int Fatgraph::add_group_polygon(int j) {
  if (j < 0 || j >= alphabet_.fin_count())
    fail(ErrKind::Piece, "no finite generator c" + std::to_string(j));
  Piece p{PieceKind::GroupPolygon, j, {}};
  for (int k = 0; k < alphabet_.order(j); ++k) {
    p.segs.push_back({SegKind::Side, c(j)});
    p.segs.push_back({SegKind::GroupEdge, c(j)});
  }
  partner_.emplace_back(p.segs.size(), SegRef{});
  pieces_.push_back(std::move(p));
  return piece_count() - 1;
}

int Fatgraph::add_polygon(const Word& labels) {
  if (labels.empty()) fail(ErrKind::Piece, "polygon needs at least one edge");
  validate_letters(labels, alphabet_);
  Piece p{PieceKind::Polygon, -1, {}};
  for (const Letter& l : labels) p.segs.push_back({SegKind::PolyEdge, l});
  partner_.emplace_back(p.segs.size(), SegRef{});
  pieces_.push_back(std::move(p));
  return piece_count() - 1;
}

int Fatgraph::append_copy(const Fatgraph& other) {
  if (!(other.alphabet_ == alphabet_))
    fail(ErrKind::Alphabet, "cannot merge fatgraphs over different alphabets");
  const int off = piece_count();
  for (const Piece& p : other.pieces_) pieces_.push_back(p);
  for (const auto& row : other.partner_) {
    std::vector<SegRef> shifted = row;
    for (SegRef& r : shifted)
      if (r.piece >= 0) r.piece += off;
    partner_.push_back(std::move(shifted));
  }
  gluing_count_ += other.gluing_count_;
  return off;
}

void Fatgraph::glue(SegRef a, SegRef b) {
  const Seg& sa = seg_at(a);
  const Seg& sb = seg_at(b);
  if (a == b) fail(ErrKind::Gluing, "cannot glue a segment to itself");
  if (sa.kind == SegKind::Side || sb.kind == SegKind::Side)
    fail(ErrKind::Gluing, "sides cannot be glued");
  if (is_glued(a) || is_glued(b))
    fail(ErrKind::Gluing, "segment already glued");
  partner_[static_cast<std::size_t>(a.piece)][static_cast<std::size_t>(a.seg)] = b;
  partner_[static_cast<std::size_t>(b.piece)][static_cast<std::size_t>(b.seg)] = a;
  ++gluing_count_;
}

void Fatgraph::unglue(SegRef a) {
  const auto p = partner(a);
  if (!p) fail(ErrKind::Gluing, "segment is not glued");
  partner_[static_cast<std::size_t>(a.piece)][static_cast<std::size_t>(a.seg)] = {};
  partner_[static_cast<std::size_t>(p->piece)][static_cast<std::size_t>(p->seg)] = {};
  --gluing_count_;
}

std::optional<SegRef> Fatgraph::partner(SegRef r) const {
  seg_at(r);
  const SegRef p =
      partner_[static_cast<std::size_t>(r.piece)][static_cast<std::size_t>(r.seg)];
  if (p.piece < 0) return std::nullopt;
  return p;
}

std::vector<Gluing> Fatgraph::gluings() const {
  std::vector<Gluing> out;
  for (int p = 0; p < piece_count(); ++p)
    for (int s = 0; s < static_cast<int>(pieces_[p].segs.size()); ++s) {
      const SegRef a{p, s};
      const SegRef b = partner_[p][static_cast<std::size_t>(s)];
      if (b.piece >= 0 && a < b) out.push_back({a, b});
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool Fatgraph::complete() const {
  for (int p = 0; p < piece_count(); ++p)
    for (int s = 0; s < static_cast<int>(pieces_[p].segs.size()); ++s)
      if (pieces_[p].segs[static_cast<std::size_t>(s)].kind != SegKind::Side &&
          partner_[p][static_cast<std::size_t>(s)].piece < 0)
        return false;
  return true;
}

std::vector<SegRef> Fatgraph::unglued_edges() const {
  std::vector<SegRef> out;
  for (int p = 0; p < piece_count(); ++p)
    for (int s = 0; s < static_cast<int>(pieces_[p].segs.size()); ++s)
      if (pieces_[p].segs[static_cast<std::size_t>(s)].kind != SegKind::Side &&
          partner_[p][static_cast<std::size_t>(s)].piece < 0)
        out.push_back({p, s});
  return out;
}

std::string token_text(const Token& t) {
  switch (t.kind) {
    case SegKind::Side: return letter_token(t.label);
    case SegKind::RectEdge: return "re(" + letter_token(t.label) + ")";
    case SegKind::GroupEdge: return "ge(" + letter_token(t.label) + ")";
    case SegKind::PolyEdge: return "pe(" + letter_token(t.label) + ")";
  }
  return "?";
}

namespace {

SegRef next_seg(const Fatgraph& f, SegRef r) {
  const int n = static_cast<int>(f.piece(r.piece).segs.size());
  return {r.piece, (r.seg + 1) % n};
}

}  // namespace

BoundaryReport boundary(const Fatgraph& f) {
  BoundaryReport rep;
  std::vector<std::vector<char>> seen;
  seen.reserve(static_cast<std::size_t>(f.piece_count()));
  for (const Piece& p : f.pieces()) seen.emplace_back(p.segs.size(), 0);

  for (int p = 0; p < f.piece_count(); ++p) {
    for (int s = 0; s < static_cast<int>(f.piece(p).segs.size()); ++s) {
      if (seen[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)]) continue;
      std::vector<Token> toks;
      const SegRef start{p, s};
      SegRef cur = start;
      do {
        seen[static_cast<std::size_t>(cur.piece)][static_cast<std::size_t>(cur.seg)] = 1;
        const Seg& sg = f.seg_at(cur);
        const auto part = f.partner(cur);
        if (!part) {
          toks.push_back({sg.kind, sg.label});
          cur = next_seg(f, cur);
        } else {
          cur = next_seg(f, *part);
        }
      } while (!(cur == start));
      if (toks.empty())
        ++rep.ghost_cycles;
      else
        rep.components.push_back(least_rotation(std::move(toks)));
    }
  }
  std::sort(rep.components.begin(), rep.components.end());
  return rep;
}

Word component_word(const std::vector<Token>& component) {
  Word w;
  w.reserve(component.size());
  for (const Token& t : component) w.push_back(t.label);
  return w;
}

std::string component_text(const std::vector<Token>& component) {
  std::string out;
  for (const Token& t : component) {
    if (!out.empty()) out += ' ';
    out += token_text(t);
  }
  return out;
}

std::vector<Violation> validate(const Fatgraph& f) {
  std::vector<Violation> out;
  for (int p = 0; p < f.piece_count(); ++p) {
    const Piece& pc = f.piece(p);
    if (pc.kind != PieceKind::Polygon) continue;
    const int n = static_cast<int>(pc.segs.size());
    if (n == 1 && !pc.segs[0].label.finite)
      out.push_back({p, 0, "monogon with infinite-order edge " +
                               letter_token(pc.segs[0].label)});
    if (n >= 2) {
      for (int s = 0; s < n; ++s) {
        const Letter& x = pc.segs[static_cast<std::size_t>(s)].label;
        const Letter& y = pc.segs[static_cast<std::size_t>((s + 1) % n)].label;
        if (!x.finite && x == y)
          out.push_back({p, s, "adjacent edges repeat infinite-order label " +
                                   letter_token(x)});
      }
    }
  }
  for (const Gluing& g : f.gluings()) {
    const Seg& sa = f.seg_at(g.a);
    const Seg& sb = f.seg_at(g.b);
    const bool a_poly = sa.kind == SegKind::PolyEdge;
    const bool b_poly = sb.kind == SegKind::PolyEdge;
    if (a_poly == b_poly) {
      out.push_back({g.a.piece, g.a.seg,
                     "gluing must pair a polygon edge with a rectangle or "
                     "group-polygon edge"});
      continue;
    }
    if (!(sa.label == sb.label))
      out.push_back({g.a.piece, g.a.seg,
                     "gluing label mismatch: " + token_text({sa.kind, sa.label}) +
                         " vs " + token_text({sb.kind, sb.label})});
  }
  return out;
}

int euler_characteristic(const Fatgraph& f) {
  return f.piece_count() - f.gluing_count();
}

CensusReport census(const Fatgraph& f) {
  CensusReport rep;
  for (int p = 0; p < f.piece_count(); ++p) {
    const Piece& pc = f.piece(p);
    switch (pc.kind) {
      case PieceKind::Rectangle: ++rep.rectangles[pc.gen_index]; break;
      case PieceKind::GroupPolygon: ++rep.group_polygons[pc.gen_index]; break;
      case PieceKind::Polygon:
        ++rep.polygons_by_size[static_cast<int>(pc.segs.size())];
        break;
    }
  }
  for (const SegRef& r : f.unglued_edges()) {
    const Seg& s = f.seg_at(r);
    ++rep.unglued[token_text({s.kind, s.label})];
  }
  return rep;
}

std::optional<int> covers(const BoundaryReport& report, const CyclicWord& target) {
  if (target.empty()) fail(ErrKind::Word, "covering target must be nonempty");
  for (const auto& comp : report.components)
    for (const Token& t : comp)
      if (t.kind != SegKind::Side)
        fail(ErrKind::Contract,
             "covering degree needs a complete fatgraph; found unglued " +
                 token_text(t));
  int total = 0;
  for (const auto& comp : report.components) {
    if (comp.size() % target.size() != 0) return std::nullopt;
    const int k = static_cast<int>(comp.size() / target.size());
    if (!(CyclicWord(component_word(comp)) == CyclicWord(power(target.rep(), k))))
      return std::nullopt;
    total += k;
  }
  return total;
}

Fatgraph pinch(const std::vector<Word>& words0, const GenAlphabet& a,
               std::optional<unsigned long long> seed) {
  if (words0.empty()) fail(ErrKind::EmptyInput, "no words to pinch");
  std::vector<Word> words;
  for (const Word& w0 : words0) {
    Word w = free_reduce(w0, a);
    if (w.empty())
      fail(ErrKind::EmptyInput, "word reduces to the identity: " + word_tokens(w0));
    const Letter& fst = w.front();
    const Letter& lst = w.back();
    if (w.size() >= 2 && !fst.finite && !lst.finite && fst.index == lst.index &&
        fst.sign == -lst.sign)
      fail(ErrKind::Word,
           "cyclic cancellation in " + word_tokens(w) + ": not a fatgraph boundary");
    words.push_back(std::move(w));
  }

  // occurrence ids are word-major, position-minor
  struct Occ {
    int word;
    int pos;
  };
  std::vector<Occ> occs;
  std::vector<std::vector<int>> z_pos(static_cast<std::size_t>(a.inf_count));
  std::vector<std::vector<int>> z_neg(static_cast<std::size_t>(a.inf_count));
  std::vector<std::vector<int>> c_occ(static_cast<std::size_t>(a.fin_count()));
  std::vector<std::vector<int>> occ_at(words.size());
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    occ_at[wi].resize(words[wi].size());
    for (std::size_t k = 0; k < words[wi].size(); ++k) {
      const int id = static_cast<int>(occs.size());
      occs.push_back({static_cast<int>(wi), static_cast<int>(k)});
      occ_at[wi][k] = id;
      const Letter& l = words[wi][k];
      if (l.finite)
        c_occ[static_cast<std::size_t>(l.index)].push_back(id);
      else
        (l.sign > 0 ? z_pos : z_neg)[static_cast<std::size_t>(l.index)].push_back(id);
    }
  }
  for (int i = 0; i < a.inf_count; ++i)
    if (z_pos[static_cast<std::size_t>(i)].size() !=
        z_neg[static_cast<std::size_t>(i)].size())
      fail(ErrKind::HomologyObstruction,
           "z" + std::to_string(i) + " appears " +
               std::to_string(z_pos[static_cast<std::size_t>(i)].size()) +
               " times but its inverse " +
               std::to_string(z_neg[static_cast<std::size_t>(i)].size()));
  for (int j = 0; j < a.fin_count(); ++j)
    if (c_occ[static_cast<std::size_t>(j)].size() %
            static_cast<std::size_t>(a.order(j)) !=
        0)
      fail(ErrKind::HomologyObstruction,
           "c" + std::to_string(j) + " count " +
               std::to_string(c_occ[static_cast<std::size_t>(j)].size()) +
               " is not a multiple of " + std::to_string(a.order(j)));

  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  auto maybe_shuffle = [&](std::vector<int>& v) {
    if (rng) std::shuffle(v.begin(), v.end(), *rng);
  };

  Fatgraph f(a);
  std::vector<SegRef> side_of(occs.size());
  for (int i = 0; i < a.inf_count; ++i) {
    std::vector<int> plus = z_pos[static_cast<std::size_t>(i)];
    std::vector<int> minus = z_neg[static_cast<std::size_t>(i)];
    maybe_shuffle(plus);
    maybe_shuffle(minus);
    for (std::size_t k = 0; k < plus.size(); ++k) {
      const int r = f.add_rectangle(i);
      side_of[static_cast<std::size_t>(plus[k])] = {r, 0};
      side_of[static_cast<std::size_t>(minus[k])] = {r, 2};
    }
  }
  for (int j = 0; j < a.fin_count(); ++j) {
    std::vector<int> group = c_occ[static_cast<std::size_t>(j)];
    maybe_shuffle(group);
    const int o = a.order(j);
    for (std::size_t base = 0; base < group.size(); base += static_cast<std::size_t>(o)) {
      const int g = f.add_group_polygon(j);
      for (int t = 0; t < o; ++t)
        side_of[static_cast<std::size_t>(group[base + static_cast<std::size_t>(t)])] = {
            g, 2 * t};
    }
  }

  // successor map on piece edges: the edge after one side must meet the edge
  // before the next side across a junction polygon corner
  auto edge_after = [&](int occ) {
    const SegRef s = side_of[static_cast<std::size_t>(occ)];
    const int n = static_cast<int>(f.piece(s.piece).segs.size());
    return SegRef{s.piece, (s.seg + 1) % n};
  };
  auto edge_before = [&](int occ) {
    const SegRef s = side_of[static_cast<std::size_t>(occ)];
    const int n = static_cast<int>(f.piece(s.piece).segs.size());
    return SegRef{s.piece, (s.seg + n - 1) % n};
  };
  std::map<SegRef, SegRef> next_edge;
  for (std::size_t id = 0; id < occs.size(); ++id) {
    const Occ& o = occs[id];
    const int len = static_cast<int>(words[static_cast<std::size_t>(o.word)].size());
    const int succ = occ_at[static_cast<std::size_t>(o.word)]
                           [static_cast<std::size_t>((o.pos + 1) % len)];
    next_edge[edge_after(static_cast<int>(id))] = edge_before(succ);
  }

  std::map<SegRef, bool> done;
  for (const auto& [e, _] : next_edge) done[e] = false;
  for (const auto& [e0, _] : next_edge) {
    if (done[e0]) continue;
    std::vector<SegRef> cycle;
    SegRef e = e0;
    do {
      done[e] = true;
      cycle.push_back(e);
      e = next_edge.at(e);
    } while (!(e == e0));
    Word labels;
    for (const SegRef& r : cycle) labels.push_back(f.seg_at(r).label);
    const int q = f.add_polygon(labels);
    for (std::size_t m = 0; m < cycle.size(); ++m)
      f.glue({q, static_cast<int>(m)}, cycle[m]);
  }
  return f;
}

std::string spine_dot(const Fatgraph& f) {
  std::ostringstream os;
  os << "digraph spine {\n";
  for (int p = 0; p < f.piece_count(); ++p) {
    const Piece& pc = f.piece(p);
    os << "  p" << p << " [";
    switch (pc.kind) {
      case PieceKind::Rectangle:
        os << "shape=box, label=\"r(z" << pc.gen_index << ")\"";
        break;
      case PieceKind::GroupPolygon:
        os << "shape=diamond, label=\"g(c" << pc.gen_index << ")\"";
        break;
      case PieceKind::Polygon:
        os << "shape=circle, label=\"poly " << pc.segs.size() << "\"";
        break;
    }
    os << "];\n";
  }
  for (const Gluing& g : f.gluings()) {
    const Seg& sa = f.seg_at(g.a);
    const Seg& sb = f.seg_at(g.b);
    // orient away from the polygon; rectangles carry the arc along their z side
    SegRef from = g.a, to = g.b;
    const bool a_poly = sa.kind == SegKind::PolyEdge;
    const bool b_poly = sb.kind == SegKind::PolyEdge;
    if (a_poly != b_poly) {
      const SegRef poly = a_poly ? g.a : g.b;
      const SegRef other = a_poly ? g.b : g.a;
      const Seg& os_ = f.seg_at(other);
      if (os_.kind == SegKind::RectEdge && os_.label.sign < 0) {
        from = other;
        to = poly;
      } else {
        from = poly;
        to = other;
      }
    }
    os << "  p" << from.piece << " -> p" << to.piece << " [label=\""
       << letter_token(f.seg_at(from).label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Fatgraph standard_complex(const GenAlphabet& a, const CyclicOrder& order) {
  Fatgraph f(a);
  const int p = f.add_polygon(order.symbols());
  for (int i = 0; i < a.inf_count; ++i) {
    const int r = f.add_rectangle(i);
    f.glue({r, 3}, {p, static_cast<int>(order.position(z(i)))});
    f.glue({r, 1}, {p, static_cast<int>(order.position(Z(i)))});
  }
  return f;
}

}  // namespace orb
