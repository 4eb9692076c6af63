#include "orb/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace orb {

namespace {

struct FileToken {
  std::string text;
  int line;
  int col;  // 1-based
};

// tokenized significant lines; comments and blank lines dropped
std::vector<std::vector<FileToken>> tokenize(const std::string& text) {
  std::vector<std::vector<FileToken>> lines;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<FileToken> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      toks.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

[[noreturn]] void at(const FileToken& t, const std::string& msg) {
  fail(ErrKind::Parse, "line " + std::to_string(t.line) + ", column " +
                           std::to_string(t.col) + ": " + msg);
}

int int_at(const FileToken& t) {
  if (t.text.empty()) at(t, "number expected");
  for (char ch : t.text)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      at(t, "'" + t.text + "' is not a number");
  if (t.text.size() > 7) at(t, "number too large");
  return std::stoi(t.text);
}

// joins word tokens and parses them against a, pinning errors to the line
Word letters_at(const std::vector<FileToken>& toks, std::size_t from,
                const GenAlphabet& a) {
  std::string joined;
  for (std::size_t k = from; k < toks.size(); ++k) {
    if (!joined.empty()) joined += ' ';
    joined += toks[k].text;
  }
  try {
    return parse_word(joined, a);
  } catch (const Error& e) {
    at(toks[from], e.what());
  }
}

Letter single_letter(const FileToken& t, const GenAlphabet& a) {
  Word w;
  try {
    w = parse_word(t.text, a);
  } catch (const Error& e) {
    at(t, e.what());
  }
  if (w.size() != 1) at(t, "expected a single generator symbol");
  return w[0];
}

SegRef segref_at(const FileToken& t) {
  const std::size_t dot = t.text.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == t.text.size())
    at(t, "expected <piece>.<segment>");
  const FileToken left{t.text.substr(0, dot), t.line, t.col};
  const FileToken right{t.text.substr(dot + 1), t.line,
                        t.col + static_cast<int>(dot) + 1};
  return {int_at(left), int_at(right)};
}

}  // namespace

OrbFile parse_orbifold(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(ErrKind::Parse, "empty orbifold file");
  std::size_t at_line = 0;
  auto next = [&]() -> const std::vector<FileToken>& {
    if (at_line >= lines.size())
      fail(ErrKind::Parse, "unexpected end of orbifold file");
    return lines[at_line++];
  };

  const auto& header = next();
  if (header[0].text != "orbifold") at(header[0], "expected 'orbifold' header");
  if (header.size() > 1) at(header[1], "junk after header");

  const auto& inf_line = next();
  if (inf_line[0].text != "inf" || inf_line.size() != 2)
    at(inf_line[0], "expected 'inf <count>'");
  const int inf = int_at(inf_line[1]);

  std::vector<int> orders;
  const auto* cur = &next();
  if (!cur->empty() && (*cur)[0].text == "fin") {
    if (cur->size() < 2) at((*cur)[0], "'fin' needs at least one order");
    for (std::size_t k = 1; k < cur->size(); ++k)
      orders.push_back(int_at((*cur)[k]));
    cur = &next();
  }

  if ((*cur)[0].text != "order" || cur->size() < 2)
    at((*cur)[0], "expected 'order <tok> ...'");
  GenAlphabet a{inf, orders};
  try {
    validate_alphabet(a);
  } catch (const Error& e) {
    at(inf_line[0], e.what());
  }
  Word symbols;
  for (std::size_t k = 1; k < cur->size(); ++k) {
    symbols.push_back(single_letter((*cur)[k], a));
  }
  if (at_line != lines.size()) at(lines[at_line][0], "junk after order line");
  try {
    return {a, CyclicOrder(symbols)};
  } catch (const Error& e) {
    at((*cur)[0], e.what());
  }
}

std::string serialize_orbifold(const GenAlphabet& a, const CyclicOrder& order) {
  std::ostringstream os;
  os << "orbifold\n";
  os << "inf " << a.inf_count << "\n";
  if (a.fin_count() > 0) {
    os << "fin";
    for (int o : a.fin_orders) os << ' ' << o;
    os << "\n";
  }
  os << "order";
  for (const Letter& l : order.symbols()) os << ' ' << letter_token(l);
  os << "\n";
  return os.str();
}

FgFile parse_fatgraph(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(ErrKind::Parse, "empty fatgraph file");
  std::size_t li = 0;

  const auto& header = lines[li++];
  if (header[0].text != "fatgraph") at(header[0], "expected 'fatgraph' header");
  if (header.size() > 1) at(header[1], "junk after header");

  if (li >= lines.size()) fail(ErrKind::Parse, "missing 'alphabet' line");
  const auto& al = lines[li++];
  if (al[0].text != "alphabet" || al.size() < 3 || al[1].text != "inf")
    at(al[0], "expected 'alphabet inf <count> [fin <order> ...]'");
  const int inf = int_at(al[2]);
  std::vector<int> orders;
  if (al.size() > 3) {
    if (al[3].text != "fin" || al.size() < 5)
      at(al[3], "expected 'fin <order> ...'");
    for (std::size_t k = 4; k < al.size(); ++k) orders.push_back(int_at(al[k]));
  }
  GenAlphabet a{inf, orders};
  try {
    validate_alphabet(a);
  } catch (const Error& e) {
    at(al[0], e.what());
  }

  std::optional<CyclicOrder> order;
  if (li < lines.size() && lines[li][0].text == "order") {
    const auto& ol = lines[li++];
    if (ol.size() < 2) at(ol[0], "'order' needs symbols");
    Word symbols;
    for (std::size_t k = 1; k < ol.size(); ++k)
      symbols.push_back(single_letter(ol[k], a));
    try {
      order.emplace(symbols);
    } catch (const Error& e) {
      at(ol[0], e.what());
    }
  }

  Fatgraph f(a);
  while (li < lines.size() && lines[li][0].text == "piece") {
    const auto& pl = lines[li++];
    if (pl.size() < 3) at(pl[0], "expected 'piece <idx> <kind> ...'");
    const int idx = int_at(pl[1]);
    if (idx != f.piece_count())
      at(pl[1], "piece indices must be sequential; expected " +
                    std::to_string(f.piece_count()));
    const std::string& kind = pl[2].text;
    try {
      if (kind == "rect") {
        if (pl.size() != 4) at(pl[2], "expected 'rect z<i>'");
        const Letter l = single_letter(pl[3], a);
        if (l.finite || l.sign < 0) at(pl[3], "rectangles take a positive z symbol");
        f.add_rectangle(l.index);
      } else if (kind == "gpoly") {
        if (pl.size() != 4) at(pl[2], "expected 'gpoly c<j>'");
        const Letter l = single_letter(pl[3], a);
        if (!l.finite) at(pl[3], "group polygons take a c symbol");
        f.add_group_polygon(l.index);
      } else if (kind == "poly") {
        if (pl.size() < 4) at(pl[2], "polygon needs at least one edge label");
        f.add_polygon(letters_at(pl, 3, a));
      } else {
        at(pl[2], "unknown piece kind '" + kind + "'");
      }
    } catch (const Error& e) {
      if (e.kind == ErrKind::Parse) throw;
      at(pl[0], e.what());
    }
  }

  while (li < lines.size()) {
    const auto& gl = lines[li++];
    if (gl[0].text != "glue")
      at(gl[0], "expected 'glue <piece>.<seg> <piece>.<seg>'");
    if (gl.size() != 3) at(gl[0], "glue takes exactly two segment references");
    const SegRef u = segref_at(gl[1]);
    const SegRef v = segref_at(gl[2]);
    try {
      f.glue(u, v);
    } catch (const Error& e) {
      at(gl[0], e.what());
    }
  }

  return {std::move(f), std::move(order)};
}

std::string serialize_fatgraph(const Fatgraph& f,
                               const std::optional<CyclicOrder>& order) {
  std::ostringstream os;
  os << "fatgraph\n";
  const GenAlphabet& a = f.alphabet();
  os << "alphabet inf " << a.inf_count;
  if (a.fin_count() > 0) {
    os << " fin";
    for (int o : a.fin_orders) os << ' ' << o;
  }
  os << "\n";
  if (order) {
    os << "order";
    for (const Letter& l : order->symbols()) os << ' ' << letter_token(l);
    os << "\n";
  }
  for (int p = 0; p < f.piece_count(); ++p) {
    const Piece& pc = f.piece(p);
    os << "piece " << p << ' ';
    switch (pc.kind) {
      case PieceKind::Rectangle:
        os << "rect z" << pc.gen_index;
        break;
      case PieceKind::GroupPolygon:
        os << "gpoly c" << pc.gen_index;
        break;
      case PieceKind::Polygon: {
        os << "poly";
        for (const Seg& s : pc.segs) os << ' ' << letter_token(s.label);
        break;
      }
    }
    os << "\n";
  }
  for (const Gluing& g : f.gluings())
    os << "glue " << g.a.piece << '.' << g.a.seg << ' ' << g.b.piece << '.'
       << g.b.seg << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrKind::Io, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(ErrKind::Io, "short write to " + path);
}

}  // namespace orb
