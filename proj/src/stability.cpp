#include "orb/stability.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "orb/certificate.hpp"

namespace orb {

namespace {

// z_i and z_i^{-1} swap; finite letters are self-paired.
Letter invstar(const Letter& l) {
  if (l.finite) return l;
  return Letter{false, l.index, -l.sign};
}

struct LetterRun {
  Letter letter;
  int exponent;  // always 1 for infinite-order letters
};

std::vector<LetterRun> split_runs(const Word& w, const GenAlphabet& a) {
  std::vector<LetterRun> runs;
  for (const Letter& l : w) {
    if (l.finite && !runs.empty() && runs.back().letter == l)
      runs.back().exponent += 1;
    else
      runs.push_back({l, 1});
  }
  for (const LetterRun& run : runs)
    if (run.letter.finite && run.exponent >= a.order(run.letter.index))
      fail(ErrKind::Word, "run c" + std::to_string(run.letter.index) + "^" +
                              std::to_string(run.exponent) + " reaches the cone order");
  return runs;
}

// Hookup points of a run piece.  in_edge accepts a polygon edge labeled with
// the run letter, out_edge one labeled with its starred inverse.
struct RunPorts {
  SegRef in_edge;
  SegRef out_edge;
};

RunPorts add_run_piece(Fatgraph& f, const Realization& r, const LetterRun& run) {
  if (!run.letter.finite) {
    const int p = f.add_rectangle(run.letter.index);
    if (run.letter.sign > 0) return {{p, 3}, {p, 1}};
    return {{p, 1}, {p, 3}};
  }
  const CyclicOrder& order = r.order();
  const int j = run.letter.index;
  const int o = r.alphabet().order(j);
  const int e = run.exponent;
  const int p = f.add_group_polygon(j);
  for (int t = 1; t < e; ++t) {
    const int mono = f.add_polygon(Word{c(j)});
    f.glue({mono, 0}, {p, 2 * t - 1});
  }
  const Word standard(order.symbols());
  for (int t = e; t + 1 < o; ++t) {
    const int sp = f.add_polygon(standard);
    f.glue({sp, static_cast<int>(order.position(c(j)))}, {p, 2 * t + 1});
  }
  return {{p, 2 * o - 1}, {p, 2 * e - 1}};
}

// One piece per run, interval polygons between consecutive runs, interval
// polygons closing both ends against the cusp word.
Fatgraph skeleton_graph(const Realization& r, const Word& built) {
  const std::vector<LetterRun> runs = split_runs(built, r.alphabet());
  const CyclicOrder& order = r.order();
  const Word& b = r.boundary_rep();
  Fatgraph f(r.alphabet());

  std::vector<RunPorts> ports;
  ports.reserve(runs.size());
  for (const LetterRun& run : runs) ports.push_back(add_run_piece(f, r, run));

  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    const Word arc = order.interval(runs[k + 1].letter, invstar(runs[k].letter));
    const int conn = f.add_polygon(arc);
    f.glue({conn, 0}, ports[k + 1].in_edge);
    f.glue({conn, static_cast<int>(arc.size()) - 1}, ports[k].out_edge);
  }
  {
    const Word arc = order.interval(b.front(), invstar(runs.back().letter));
    const int past = f.add_polygon(arc);
    f.glue({past, static_cast<int>(arc.size()) - 1}, ports.back().out_edge);
  }
  {
    const Word arc = order.interval(runs.front().letter, invstar(b.back()));
    const int ahead = f.add_polygon(arc);
    f.glue({ahead, 0}, ports.front().in_edge);
  }
  return f;
}

int pe_count(const std::map<Letter, int>& counts, const Letter& l) {
  const auto it = counts.find(l);
  return it == counts.end() ? 0 : it->second;
}

PartialBuild finalize_skeleton(Fatgraph f, const Realization& r, Word built,
                               bool genus) {
  const GenAlphabet& a = r.alphabet();
  const Word& b = r.boundary_rep();

  const BoundaryReport rep = boundary(f);
  if (rep.components.size() != 1 || rep.ghost_cycles != 0)
    fail(ErrKind::Contract, "step-one skeleton boundary is not a single circle");
  const std::vector<Token>& tokens = rep.components[0];
  if (tokens.size() < built.size() ||
      (tokens.size() - built.size()) % b.size() != 0)
    fail(ErrKind::Contract,
         "skeleton boundary length is not |w| plus a multiple of |b|");
  const int m0 = static_cast<int>((tokens.size() - built.size()) / b.size());

  PartialBuild out{std::move(f), std::move(built), m0, {}};
  out.unglued_pe = unglued_pe_counts(out.graph);

  if (!genus) {
    const CyclicWord read(component_word(tokens));
    if (read != CyclicWord(concat(out.word, power(b, m0))))
      fail(ErrKind::Contract, "disk skeleton boundary does not read word plus b powers");
    return out;
  }

  // Genus skeletons read exactly once every unglued pe(z_i^{+-1}) is traded
  // for a rectangle hookup.  Simulate that trade and check the result now.
  long long pairs = 0;
  for (int i = 0; i < a.inf_count; ++i) {
    const int plus = pe_count(out.unglued_pe, z(i));
    if (plus != pe_count(out.unglued_pe, Z(i)))
      fail(ErrKind::Contract, "skeleton exposes unequal pe(z_i) and pe(z_i^{-1}) counts");
    pairs += plus;
  }
  std::vector<std::pair<Word, Word>> arcs;
  for (int i = 0; i < a.inf_count; ++i) arcs.push_back(r.b_subwords(i));
  Word spliced;
  for (const Token& t : tokens) {
    if (t.kind == SegKind::PolyEdge && !t.label.finite) {
      const int i = t.label.index;
      const Word& mid = t.label.sign > 0 ? arcs[i].first : arcs[i].second;
      spliced.push_back(t.label);
      spliced.insert(spliced.end(), mid.begin(), mid.end());
      spliced.push_back(invstar(t.label));
    } else {
      spliced.push_back(t.label);
    }
  }
  const int predicted = m0 + static_cast<int>(pairs);
  if (CyclicWord(spliced) != CyclicWord(concat(out.word, power(b, predicted))))
    fail(ErrKind::Contract, "genus skeleton does not splice to word plus b powers");
  return out;
}

long long cover_degree(const GenAlphabet& a) {
  long long L = 1;
  for (int j = 0; j < a.fin_count(); ++j)
    L = std::lcm(L, static_cast<long long>(a.order(j)));
  return L;
}

struct Egcd {
  long long g, x, y;  // g == x*a + y*b
};

Egcd egcd(long long a, long long b) {
  if (b == 0) return {a, 1, 0};
  const Egcd sub = egcd(b, a % b);
  return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

// reach[sum][j]: some run sequence with distinct consecutive entries sums to
// `sum` and ends with index j.  Reversal symmetry makes the same table answer
// "starts with j".
std::vector<std::vector<char>> run_sum_table(const std::vector<long long>& xs,
                                             long long cap) {
  const int k = static_cast<int>(xs.size());
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(cap) + 1,
                                       std::vector<char>(k, 0));
  for (long long sum = 1; sum <= cap; ++sum)
    for (int j = 0; j < k; ++j) {
      if (xs[j] > sum) continue;
      if (xs[j] == sum) {
        reach[sum][j] = 1;
        continue;
      }
      for (int p = 0; p < k && !reach[sum][j]; ++p)
        if (p != j && reach[sum - xs[j]][p]) reach[sum][j] = 1;
    }
  return reach;
}

void check_witness(const NTInstance& inst, const std::vector<int>& seq,
                   long long target) {
  long long sum = 0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    sum += inst.xs[seq[t]];
    if (t > 0 && seq[t] == seq[t - 1])
      fail(ErrKind::Internal, "witness has equal adjacent entries");
  }
  if (sum != target) fail(ErrKind::Internal, "witness sum mismatch");
}

// Lowest unglued polygon edge carrying the label, if any.
std::optional<SegRef> lowest_pe(const Fatgraph& f, const Letter& l) {
  for (const SegRef& e : f.unglued_edges()) {
    const Seg& s = f.seg_at(e);
    if (s.kind == SegKind::PolyEdge && s.label == l) return e;
  }
  return std::nullopt;
}

// Unglued rectangle edges inside a piece range, split by z sign.
struct FreeRectEdges {
  std::vector<SegRef> plus, minus;
};

FreeRectEdges free_rect_edges(const Fatgraph& f, int begin, int end) {
  FreeRectEdges out;
  for (const SegRef& e : f.unglued_edges()) {
    if (e.piece < begin || e.piece >= end) continue;
    const Seg& s = f.seg_at(e);
    if (s.kind != SegKind::RectEdge) continue;
    (s.label.sign > 0 ? out.plus : out.minus).push_back(e);
  }
  return out;
}

struct AttachPlan {
  int sub_index = -1;  // index whose first copy becomes the k-chain module
  int sub_k = 0;
  int leave_index = -1;  // index at which pairs stay unglued
  int leave_pairs = 0;
};

PartialBuild attach_modules(PartialBuild p, const Realization& r,
                            const AttachPlan& plan) {
  const GenAlphabet& a = r.alphabet();
  for (int i = 0; i < a.inf_count; ++i)
    if (pe_count(p.unglued_pe, z(i)) != pe_count(p.unglued_pe, Z(i)))
      fail(ErrKind::Equidistribution,
           "unglued pe(z_i) and pe(z_i^{-1}) counts differ at index " + std::to_string(i));

  for (int i = 0; i < a.inf_count; ++i) {
    const int pairs = pe_count(p.unglued_pe, z(i));
    const int copies = pairs - (i == plan.leave_index ? plan.leave_pairs : 0);
    if (copies < 0)
      fail(ErrKind::Internal, "attachment plan leaves more pairs than exist");
    for (int copy = 0; copy < copies; ++copy) {
      const bool substitute = i == plan.sub_index && copy == 0 && plan.sub_k > 0;
      const Fatgraph module = substitute ? build_module_A_ik(r, i, plan.sub_k)
                                         : build_module_A_i(r, i);
      const int begin = p.graph.piece_count();
      p.graph.append_copy(module);
      const FreeRectEdges re = free_rect_edges(p.graph, begin, p.graph.piece_count());
      if (re.plus.size() != 1 || re.minus.size() != 1)
        fail(ErrKind::Internal, "module copy exposes the wrong rectangle edges");
      const auto site_plus = lowest_pe(p.graph, z(i));
      const auto site_minus = lowest_pe(p.graph, Z(i));
      if (!site_plus || !site_minus)
        fail(ErrKind::NoAttachmentSite, "ran out of pe(z_i) sites mid-attachment");
      p.graph.glue(re.plus[0], *site_plus);
      p.graph.glue(re.minus[0], *site_minus);
      p.base_exponent += 1 + (substitute ? plan.sub_k : 0);
    }
  }

  p.unglued_pe = unglued_pe_counts(p.graph);
  if (plan.leave_index < 0) {
    const BoundaryReport rep = boundary(p.graph);
    if (rep.components.size() != 1 || rep.ghost_cycles != 0)
      fail(ErrKind::Contract, "module attachment broke the boundary circle");
    const CyclicWord read(component_word(rep.components[0]));
    if (read != CyclicWord(concat(p.word, power(r.boundary_rep(), p.base_exponent))))
      fail(ErrKind::Contract, "attached boundary does not read word plus b powers");
  }
  return p;
}

bool exposes_every_cone_label(const PartialBuild& p, const GenAlphabet& a) {
  for (int j = 0; j < a.fin_count(); ++j)
    if (pe_count(p.unglued_pe, c(j)) == 0) return false;
  return true;
}

NTInstance disk_instance(const GenAlphabet& a) {
  std::vector<long long> xs;
  for (int j = 0; j < a.fin_count(); ++j) xs.push_back(a.order(j) - 1);
  return nt_bound(xs);
}

}  // namespace

std::map<Letter, int> unglued_pe_counts(const Fatgraph& f) {
  std::map<Letter, int> counts;
  for (const SegRef& e : f.unglued_edges()) {
    const Seg& s = f.seg_at(e);
    if (s.kind == SegKind::PolyEdge) counts[s.label] += 1;
  }
  return counts;
}

NTInstance nt_bound(const std::vector<long long>& xs) {
  if (xs.size() < 3)
    fail(ErrKind::TooFewConePoints, "need at least three run lengths");
  for (long long x : xs)
    if (x < 1) fail(ErrKind::Alphabet, "run lengths must be positive");

  NTInstance inst;
  inst.xs = xs;
  inst.s = std::accumulate(xs.begin(), xs.end(), 0LL);
  inst.g = xs[0];
  inst.coeffs = {1};
  for (std::size_t t = 1; t < xs.size(); ++t) {
    const Egcd e = egcd(inst.g, xs[t]);
    // Shift (u, v) -> (u - k*qu, v + k*qg) to the representative with |u|
    // minimal, ties toward positive u; u scales every earlier coefficient.
    const long long qu = xs[t] / e.g;
    const long long qg = inst.g / e.g;
    long long shift = e.x / qu;
    long long u = e.x - shift * qu;
    if (u < 0) {
      u += qu;
      shift -= 1;
    }
    if (2 * u > qu) {
      u -= qu;
      shift += 1;
    }
    const long long v = e.y + shift * qg;
    for (long long& coeff : inst.coeffs) coeff *= u;
    inst.coeffs.push_back(v);
    inst.g = e.g;
  }

  const long long big = *std::max_element(inst.coeffs.begin(), inst.coeffs.end());
  const long long small = *std::min_element(inst.coeffs.begin(), inst.coeffs.end());
  inst.bound = 2 * static_cast<long long>(xs.size()) * inst.s * (inst.s / inst.g) *
               (big - small);
  return inst;
}

std::vector<int> nt_witness(const NTInstance& inst, long long target) {
  if (target < 0 || target % inst.g != 0)
    fail(ErrKind::Unreachable, "target is not a nonnegative multiple of the gcd");
  if (target == 0) return {};
  const int k = static_cast<int>(inst.xs.size());

  if (target >= inst.bound) {
    const long long big = *std::max_element(inst.coeffs.begin(), inst.coeffs.end());
    const long long count = target / inst.s;
    const long long rest = (target % inst.s) / inst.g;
    const long long runs = count + rest * big;
    std::vector<int> skip(static_cast<std::size_t>(runs), -1);
    std::size_t rpos = 0;
    for (int i = 0; i < k; ++i) {
      const long long removals = rest * (big - inst.coeffs[i]);
      for (long long t = 0; t < removals; ++t) {
        if (rpos >= skip.size())
          fail(ErrKind::Internal, "run budget exhausted while placing removals");
        skip[rpos] = i;
        rpos += 2;
      }
    }
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(runs) * k);
    for (long long run = 0; run < runs; ++run)
      for (int i = 0; i < k; ++i)
        if (skip[static_cast<std::size_t>(run)] != i) seq.push_back(i);
    check_witness(inst, seq, target);
    return seq;
  }

  const auto reach = run_sum_table(inst.xs, target);
  const auto completable = [&](long long rem, int banned) {
    if (rem == 0) return true;
    for (int f = 0; f < k; ++f)
      if (f != banned && reach[static_cast<std::size_t>(rem)][f]) return true;
    return false;
  };
  if (!completable(target, -1))
    fail(ErrKind::Unreachable, "target is not an adjacent-distinct run sum");
  std::vector<int> seq;
  long long rem = target;
  int prev = -1;
  while (rem > 0) {
    int pick = -1;
    for (int j = 0; j < k && pick < 0; ++j)
      if (j != prev && inst.xs[j] <= rem && completable(rem - inst.xs[j], j))
        pick = j;
    if (pick < 0) fail(ErrKind::Internal, "witness reconstruction desynced");
    seq.push_back(pick);
    rem -= inst.xs[pick];
    prev = pick;
  }
  check_witness(inst, seq, target);
  return seq;
}

PreparedWord prepare_word(const Realization& r, const Word& w) {
  const GenAlphabet& a = r.alphabet();
  validate_letters(w, a);
  if (r.classify(w) != ElementClass::Hyperbolic)
    fail(ErrKind::NotHyperbolic, "only hyperbolic words bound stable surfaces");
  if (std::holds_alternative<GenusShape>(r.shape())) {
    for (long long sum : z_exponent_sums(w, a))
      if (sum != 0)
        fail(ErrKind::HomologyObstruction,
             "z exponent sums must vanish on genus realizations");
  }
  const Word& b = r.boundary_rep();
  const int cap = static_cast<int>(w.size()) + 4;
  for (int total = 0; total <= cap; ++total) {
    for (int p = 0; p <= total; ++p) {
      const int q = total - p;
      const Word u = free_reduce(concat(power(b, p), concat(w, power(b, q))), a);
      if (u.empty()) continue;
      if (is_reduced(concat(b, concat(u, b)), a)) return {u, p, q};
    }
  }
  fail(ErrKind::Internal, "no stable padding found for a hyperbolic word");
}

PartialBuild build_Yprime_disk(const Realization& r, const Word& w) {
  if (!std::holds_alternative<DiskShape>(r.shape()))
    fail(ErrKind::Realization, "disk skeletons require a disk realization");
  const GenAlphabet& a = r.alphabet();
  validate_letters(w, a);
  if (w.empty()) fail(ErrKind::EmptyInput, "cannot build over the empty word");
  if (!is_reduced(w, a)) fail(ErrKind::Word, "skeleton words must be reduced");
  return finalize_skeleton(skeleton_graph(r, w), r, w, /*genus=*/false);
}

PartialBuild build_Yprime_genus(const Realization& r, const Word& w, bool pad_b2) {
  if (!std::holds_alternative<GenusShape>(r.shape()))
    fail(ErrKind::Realization, "genus skeletons require a genus realization");
  const GenAlphabet& a = r.alphabet();
  validate_letters(w, a);
  if (w.empty()) fail(ErrKind::EmptyInput, "cannot build over the empty word");
  const Word built = pad_b2 ? concat(w, power(r.boundary_rep(), 2)) : w;
  if (!is_reduced(built, a))
    fail(ErrKind::Word, "skeleton words must be reduced and stable against b");
  return finalize_skeleton(skeleton_graph(r, built), r, built, /*genus=*/true);
}

Fatgraph build_module_A(const Realization& r) {
  if (!std::holds_alternative<GenusShape>(r.shape()))
    fail(ErrKind::Realization, "A modules live on genus realizations");
  return standard_complex(r.alphabet(), r.order());
}

Fatgraph build_module_A_i(const Realization& r, int i) {
  const GenAlphabet& a = r.alphabet();
  Fatgraph f = build_module_A(r);
  if (i < 0 || i >= a.inf_count)
    fail(ErrKind::Alphabet, "no infinite-order generator with index " + std::to_string(i));
  // standard_complex keeps the polygon at piece 0 and the z_i rectangle at
  // piece 1+i, seg 1 against pe(z_i^{-1}).
  f.unglue({1 + i, 1});
  const int nr = f.add_rectangle(i);
  f.glue({nr, 1}, {0, static_cast<int>(r.order().position(Z(i)))});
  return f;
}

Fatgraph build_module_A_ik(const Realization& r, int i, int k) {
  if (!std::holds_alternative<GenusShape>(r.shape()))
    fail(ErrKind::Realization, "chain modules live on genus realizations");
  const GenAlphabet& a = r.alphabet();
  if (i < 0 || i >= a.inf_count)
    fail(ErrKind::Alphabet, "no infinite-order generator with index " + std::to_string(i));
  if (k < 0 || k % 2 != 0)
    fail(ErrKind::Parity, "chain length must be even and nonnegative");
  if (k == 0) return build_module_A_i(r, i);

  const int ip = i % 2 == 0 ? i + 1 : i - 1;
  const CyclicOrder& order = r.order();
  const auto pos = [&](const Letter& l) { return static_cast<int>(order.position(l)); };
  Fatgraph f(a);
  const Word standard(order.symbols());
  std::vector<int> polys;
  for (int t = 0; t <= k; ++t) polys.push_back(f.add_polygon(standard));

  for (int t = 0; t < a.inf_count; ++t) {
    if (t == i || t == ip) continue;
    for (int l = 0; l <= k; ++l) {
      const int rect = f.add_rectangle(t);
      f.glue({rect, 3}, {polys[l], pos(z(t))});
      f.glue({rect, 1}, {polys[l], pos(Z(t))});
    }
  }

  const int head = f.add_rectangle(i);
  f.glue({head, 3}, {polys[0], pos(z(i))});
  for (int l = 0; l < k; ++l) {
    const int mid = f.add_rectangle(i);
    f.glue({mid, 1}, {polys[l], pos(Z(i))});
    f.glue({mid, 3}, {polys[l + 1], pos(z(i))});
  }
  const int tail = f.add_rectangle(i);
  f.glue({tail, 1}, {polys[k], pos(Z(i))});

  for (int l = 0; l + 1 < k; l += 2) {
    const int ra = f.add_rectangle(ip);
    f.glue({ra, 3}, {polys[l], pos(z(ip))});
    f.glue({ra, 1}, {polys[l + 1], pos(Z(ip))});
    const int rb = f.add_rectangle(ip);
    f.glue({rb, 3}, {polys[l + 1], pos(z(ip))});
    f.glue({rb, 1}, {polys[l], pos(Z(ip))});
  }
  const int cap = f.add_rectangle(ip);
  f.glue({cap, 3}, {polys[k], pos(z(ip))});
  f.glue({cap, 1}, {polys[k], pos(Z(ip))});
  return f;
}

Fatgraph build_module_B(const Realization& r, int i) {
  if (!std::holds_alternative<GenusShape>(r.shape()))
    fail(ErrKind::Realization, "B modules live on genus realizations");
  const GenAlphabet& a = r.alphabet();
  if (i < 0 || i >= a.inf_count)
    fail(ErrKind::Alphabet, "no infinite-order generator with index " + std::to_string(i));

  const int k = 2;
  const int ip = i % 2 == 0 ? i + 1 : i - 1;
  const CyclicOrder& order = r.order();
  const auto pos = [&](const Letter& l) { return static_cast<int>(order.position(l)); };
  Fatgraph f(a);
  const Word standard(order.symbols());
  std::vector<int> polys;
  for (int t = 0; t <= k; ++t) polys.push_back(f.add_polygon(standard));

  for (int t = 0; t < a.inf_count; ++t) {
    if (t == i || t == ip) continue;
    for (int l = 0; l <= k; ++l) {
      const int rect = f.add_rectangle(t);
      f.glue({rect, 3}, {polys[l], pos(z(t))});
      f.glue({rect, 1}, {polys[l], pos(Z(t))});
    }
  }

  // The z_i chain with its first middle rectangle split in two; the four
  // dangling rectangle edges are what the double-sheet hookup consumes.
  const int head = f.add_rectangle(i);
  f.glue({head, 3}, {polys[0], pos(z(i))});
  const int drop = f.add_rectangle(i);
  f.glue({drop, 1}, {polys[0], pos(Z(i))});
  const int lift = f.add_rectangle(i);
  f.glue({lift, 3}, {polys[1], pos(z(i))});
  const int mid = f.add_rectangle(i);
  f.glue({mid, 1}, {polys[1], pos(Z(i))});
  f.glue({mid, 3}, {polys[2], pos(z(i))});
  const int tail = f.add_rectangle(i);
  f.glue({tail, 1}, {polys[2], pos(Z(i))});

  const int ra = f.add_rectangle(ip);
  f.glue({ra, 3}, {polys[0], pos(z(ip))});
  f.glue({ra, 1}, {polys[1], pos(Z(ip))});
  const int rb = f.add_rectangle(ip);
  f.glue({rb, 3}, {polys[1], pos(z(ip))});
  f.glue({rb, 1}, {polys[0], pos(Z(ip))});
  const int cap = f.add_rectangle(ip);
  f.glue({cap, 3}, {polys[k], pos(z(ip))});
  f.glue({cap, 1}, {polys[k], pos(Z(ip))});
  return f;
}

PartialBuild attach_A_modules(PartialBuild p, const Realization& r) {
  if (!std::holds_alternative<GenusShape>(r.shape()))
    fail(ErrKind::Realization, "A modules live on genus realizations");
  return attach_modules(std::move(p), r, AttachPlan{});
}

PartialBuild pad_exponent_steps(PartialBuild p, const Realization& r,
                                const std::vector<int>& indices) {
  const GenAlphabet& a = r.alphabet();
  const CyclicOrder& order = r.order();
  const Word standard(order.symbols());
  std::vector<int> last_added;
  bool first = true;
  for (int j : indices) {
    if (j < 0 || j >= a.fin_count())
      fail(ErrKind::Alphabet, "pad index out of range");
    std::optional<SegRef> site;
    if (first) {
      site = lowest_pe(p.graph, c(j));
    } else {
      for (int poly : last_added) {
        const Piece& piece = p.graph.piece(poly);
        for (int s = 0; s < static_cast<int>(piece.segs.size()) && !site; ++s)
          if (piece.segs[s].label == c(j) && !p.graph.is_glued({poly, s}))
            site = SegRef{poly, s};
        if (site) break;
      }
    }
    if (!site)
      fail(ErrKind::NoAttachmentSite,
           "no unglued pe(c" + std::to_string(j) + ") available for this pad step");
    const int gp = p.graph.add_group_polygon(j);
    p.graph.glue({gp, 1}, *site);
    const int o = a.order(j);
    std::vector<int> added;
    for (int t = 1; t < o; ++t) {
      const int sp = p.graph.add_polygon(standard);
      p.graph.glue({sp, static_cast<int>(order.position(c(j)))}, {gp, 2 * t + 1});
      added.push_back(sp);
    }
    p.base_exponent += o - 1;
    last_added = std::move(added);
    first = false;
  }

  p.unglued_pe = unglued_pe_counts(p.graph);
  const BoundaryReport rep = boundary(p.graph);
  if (rep.components.size() != 1 || rep.ghost_cycles != 0)
    fail(ErrKind::Contract, "padding broke the boundary circle");
  const std::size_t expected =
      p.word.size() + static_cast<std::size_t>(p.base_exponent) * r.boundary_rep().size();
  if (rep.components[0].size() != expected)
    fail(ErrKind::Contract, "padded boundary has the wrong length");
  return p;
}

PartialBuild pad_exponent_disk(PartialBuild p, const Realization& r, long long extra) {
  if (!std::holds_alternative<DiskShape>(r.shape()))
    fail(ErrKind::Realization, "exponent padding chains cone points; needs a disk realization");
  if (extra < 0) fail(ErrKind::ExponentTooSmall, "cannot pad by a negative amount");
  if (extra == 0) return p;
  const NTInstance inst = disk_instance(r.alphabet());
  const std::vector<int> seq = nt_witness(inst, extra);
  p = pad_exponent_steps(std::move(p), r, seq);
  const BoundaryReport rep = boundary(p.graph);
  const CyclicWord read(component_word(rep.components[0]));
  if (read != CyclicWord(concat(p.word, power(r.boundary_rep(), p.base_exponent))))
    fail(ErrKind::Contract, "padded boundary does not read word plus b powers");
  return p;
}

Fatgraph covering_trick(const PartialBuild& p, const Realization& r) {
  const GenAlphabet& a = r.alphabet();
  const std::vector<SegRef> open = p.graph.unglued_edges();
  for (const SegRef& e : open) {
    const Seg& s = p.graph.seg_at(e);
    if (s.kind != SegKind::PolyEdge || !s.label.finite)
      fail(ErrKind::UngluedInfiniteOrder,
           "covering requires every unglued edge to be a finite-order polygon edge");
  }
  const long long L = cover_degree(a);

  Fatgraph cover(a);
  std::vector<int> offsets;
  for (long long t = 0; t < L; ++t) offsets.push_back(cover.append_copy(p.graph));
  for (const SegRef& e : open) {
    const int j = p.graph.seg_at(e).label.index;
    const int o = a.order(j);
    for (long long t = 0; t * o < L; ++t) {
      const int gp = cover.add_group_polygon(j);
      for (int f = 0; f < o; ++f)
        cover.glue({gp, 2 * f + 1},
                   {offsets[static_cast<std::size_t>(t * o + f)] + e.piece, e.seg});
    }
  }
  if (!cover.complete()) fail(ErrKind::Contract, "cover is not complete");

  const BoundaryReport base = boundary(p.graph);
  const BoundaryReport top = boundary(cover);
  if (base.components.size() == 1) {
    const auto deg = covers(top, CyclicWord(component_word(base.components[0])));
    if (!deg || *deg != L)
      fail(ErrKind::Contract, "cover boundary does not wind the base reading lcm times");
  } else {
    std::size_t base_len = 0, top_len = 0;
    for (const auto& comp : base.components) base_len += comp.size();
    for (const auto& comp : top.components) top_len += comp.size();
    if (top_len != static_cast<std::size_t>(L) * base_len)
      fail(ErrKind::Contract, "cover boundary length is not lcm times the base length");
  }
  return cover;
}

BuildResult build_disk_surface(const Realization& r, const Word& w, int n) {
  if (!std::holds_alternative<DiskShape>(r.shape()))
    fail(ErrKind::Realization, "disk builds require a disk realization");
  const GenAlphabet& a = r.alphabet();
  if (a.fin_count() < 3)
    fail(ErrKind::TooFewConePoints, "disk builds need at least three cone points");
  if (n < 0) fail(ErrKind::ExponentTooSmall, "n must be nonnegative");
  const Word& b = r.boundary_rep();

  const PreparedWord prep = prepare_word(r, w);
  Word built = prep.word;
  int appends = 0;
  PartialBuild y = build_Yprime_disk(r, built);
  while (!exposes_every_cone_label(y, a)) {
    if (++appends > 4)
      fail(ErrKind::Internal, "could not expose every cone label on the skeleton");
    built = concat(built, b);
    y = build_Yprime_disk(r, built);
  }
  const long long m0 = y.base_exponent;

  const NTInstance inst = disk_instance(a);
  const long long extra = inst.bound + static_cast<long long>(n) * inst.g;
  const PartialBuild padded = pad_exponent_disk(std::move(y), r, extra);

  const long long base = m0 + inst.bound + prep.prepended + prep.appended + appends;
  const long long exponent = base + static_cast<long long>(n) * inst.g;
  const CyclicWord target =
      CyclicWord::reduced(concat(w, power(b, static_cast<int>(exponent))), a);

  Fatgraph cover = covering_trick(padded, r);
  const long long L = cover_degree(a);
  const auto deg = covers(boundary(cover), target);
  if (!deg || *deg != L)
    fail(ErrKind::Contract, "boundary does not cover the target with degree lcm");
  if (!check_certificate(cover, r).pass)
    fail(ErrKind::Contract, "built surface fails its own certificate");

  return BuildResult{std::move(cover), target, exponent, base, L};
}

BuildResult build_genus_surface(const Realization& r, const Word& w, int n,
                                bool pad_b2) {
  if (!std::holds_alternative<GenusShape>(r.shape()))
    fail(ErrKind::Realization, "genus builds require a genus realization");
  if (n < 0) fail(ErrKind::ExponentTooSmall, "n must be nonnegative");
  const GenAlphabet& a = r.alphabet();
  const Word& b = r.boundary_rep();

  const PreparedWord prep = prepare_word(r, w);
  PartialBuild y = build_Yprime_genus(r, prep.word, pad_b2);
  const int absorbed = prep.prepended + prep.appended + (pad_b2 ? 2 : 0);

  long long pair_total = 0;
  std::vector<int> pairs(static_cast<std::size_t>(a.inf_count), 0);
  for (int i = 0; i < a.inf_count; ++i) {
    pairs[static_cast<std::size_t>(i)] = pe_count(y.unglued_pe, z(i));
    pair_total += pairs[static_cast<std::size_t>(i)];
  }
  const long long base = y.base_exponent + pair_total + absorbed;
  const long long exponent = base + n;
  const CyclicWord target =
      CyclicWord::reduced(concat(w, power(b, static_cast<int>(exponent))), a);
  const long long L = cover_degree(a);

  Fatgraph cover(a);
  long long degree = 0;
  if (n % 2 == 0) {
    AttachPlan plan;
    if (n > 0) {
      int host = -1;
      for (int i = 0; i < a.inf_count && host < 0; ++i)
        if (pairs[static_cast<std::size_t>(i)] >= 1) host = i;
      if (host < 0)
        fail(ErrKind::NoAttachmentSite, "no pe(z_i) pair can host the chain module");
      plan.sub_index = host;
      plan.sub_k = n;
    }
    const PartialBuild full = attach_modules(std::move(y), r, plan);
    cover = covering_trick(full, r);
    degree = L;
  } else {
    const int k = n - 1;
    const int need = 2 + (k > 0 ? 1 : 0);
    int host = -1;
    for (int i = 0; i < a.inf_count && host < 0; ++i)
      if (pairs[static_cast<std::size_t>(i)] >= need) host = i;
    if (host < 0)
      fail(ErrKind::NoAttachmentSite,
           "odd increments need an index with enough pe(z_i) pairs");
    AttachPlan plan;
    plan.leave_index = host;
    plan.leave_pairs = 2;
    if (k > 0) {
      plan.sub_index = host;
      plan.sub_k = k;
    }
    const PartialBuild x = attach_modules(std::move(y), r, plan);

    Fatgraph two = x.graph;
    two.append_copy(x.graph);
    const Fatgraph bmod = build_module_B(r, host);
    const int b_begin = two.piece_count();
    two.append_copy(bmod);
    two.append_copy(bmod);

    std::vector<SegRef> slots_plus, slots_minus;
    for (const SegRef& e : two.unglued_edges()) {
      const Seg& s = two.seg_at(e);
      if (s.kind != SegKind::PolyEdge || s.label.finite || s.label.index != host)
        continue;
      (s.label.sign > 0 ? slots_plus : slots_minus).push_back(e);
    }
    const FreeRectEdges reb = free_rect_edges(two, b_begin, two.piece_count());
    if (slots_plus.size() != 4 || slots_minus.size() != 4 ||
        reb.plus.size() != 4 || reb.minus.size() != 4)
      fail(ErrKind::Internal, "double-sheet hookup census is off");

    const long long per_sheet = x.base_exponent + 3;
    const CyclicWord want(
        concat(x.word, power(b, static_cast<int>(per_sheet))));
    std::array<int, 4> sig{0, 1, 2, 3};
    bool matched = false;
    do {
      std::array<int, 4> pi{0, 1, 2, 3};
      do {
        for (int t = 0; t < 4; ++t) {
          two.glue(reb.plus[static_cast<std::size_t>(t)],
                   slots_plus[static_cast<std::size_t>(sig[static_cast<std::size_t>(t)])]);
          two.glue(reb.minus[static_cast<std::size_t>(t)],
                   slots_minus[static_cast<std::size_t>(pi[static_cast<std::size_t>(t)])]);
        }
        const BoundaryReport rep = boundary(two);
        bool ok = rep.components.size() == 2 && rep.ghost_cycles == 0;
        for (std::size_t cidx = 0; ok && cidx < rep.components.size(); ++cidx)
          ok = CyclicWord(component_word(rep.components[cidx])) == want;
        if (ok) {
          matched = true;
          break;
        }
        for (int t = 0; t < 4; ++t) {
          two.unglue(reb.plus[static_cast<std::size_t>(t)]);
          two.unglue(reb.minus[static_cast<std::size_t>(t)]);
        }
      } while (std::next_permutation(pi.begin(), pi.end()));
    } while (!matched && std::next_permutation(sig.begin(), sig.end()));
    if (!matched)
      fail(ErrKind::Contract,
           "no rectangle matching yields two copies of the target boundary");

    PartialBuild doubled{std::move(two), x.word, static_cast<int>(per_sheet), {}};
    doubled.unglued_pe = unglued_pe_counts(doubled.graph);
    cover = covering_trick(doubled, r);
    degree = 2 * L;
  }

  const auto deg = covers(boundary(cover), target);
  if (!deg || *deg != degree)
    fail(ErrKind::Contract, "boundary does not cover the target with the required degree");
  if (!check_certificate(cover, r).pass)
    fail(ErrKind::Contract, "built surface fails its own certificate");

  return BuildResult{std::move(cover), target, exponent, base, degree};
}

std::set<long long> achievable_exponents(const Realization& r, const Word& w,
                                         long long up_to) {
  std::set<long long> out;
  if (up_to < 0) return out;
  const GenAlphabet& a = r.alphabet();
  const PreparedWord prep = prepare_word(r, w);

  if (std::holds_alternative<GenusShape>(r.shape())) {
    const PartialBuild y = build_Yprime_genus(r, prep.word, true);
    long long pair_total = 0;
    for (int i = 0; i < a.inf_count; ++i) pair_total += pe_count(y.unglued_pe, z(i));
    const long long base =
        y.base_exponent + pair_total + prep.prepended + prep.appended + 2;
    for (long long e = base; e <= up_to; ++e) out.insert(e);
    return out;
  }

  Word built = prep.word;
  int appends = 0;
  PartialBuild y = build_Yprime_disk(r, built);
  while (!exposes_every_cone_label(y, a)) {
    if (++appends > 4)
      fail(ErrKind::Internal, "could not expose every cone label on the skeleton");
    built = concat(built, r.boundary_rep());
    y = build_Yprime_disk(r, built);
  }
  const long long front =
      y.base_exponent + prep.prepended + prep.appended + appends;
  if (front > up_to) return out;

  std::vector<long long> xs;
  for (int j = 0; j < a.fin_count(); ++j) xs.push_back(a.order(j) - 1);
  const long long cap = up_to - front;
  const auto reach = run_sum_table(xs, cap);
  out.insert(front);
  for (long long sum = 1; sum <= cap; ++sum)
    for (int j = 0; j < a.fin_count(); ++j)
      if (reach[static_cast<std::size_t>(sum)][j]) {
        out.insert(front + sum);
        break;
      }
  return out;
}

}  // namespace orb
