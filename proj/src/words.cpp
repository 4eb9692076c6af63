#include "orb/words.hpp"

#include <cctype>
#include <cstdlib>

namespace orb {

void validate_alphabet(const GenAlphabet& a) {
  if (a.inf_count < 0) fail(ErrKind::Alphabet, "negative generator count");
  if (a.inf_count == 0 && a.fin_orders.empty())
    fail(ErrKind::Alphabet, "alphabet has no generators");
  for (std::size_t j = 0; j < a.fin_orders.size(); ++j) {
    if (a.fin_orders[j] < 2)
      fail(ErrKind::Alphabet, "c" + std::to_string(j) + " has order " +
                                  std::to_string(a.fin_orders[j]) +
                                  ", need at least 2");
  }
}

void validate_letters(const Word& w, const GenAlphabet& a) {
  for (const Letter& l : w) {
    if (l.finite) {
      if (l.index < 0 || l.index >= a.fin_count())
        fail(ErrKind::Word, "letter " + letter_token(l) + " outside alphabet");
      if (l.sign != +1)
        fail(ErrKind::Word, "finite letters carry no sign");
    } else {
      if (l.index < 0 || l.index >= a.inf_count)
        fail(ErrKind::Word, "letter " + letter_token(l) + " outside alphabet");
      if (l.sign != +1 && l.sign != -1)
        fail(ErrKind::Word, "bad sign on infinite letter");
    }
  }
}

bool is_reduced(const Word& w, const GenAlphabet& a) {
  validate_letters(w, a);
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i].finite) {
      std::size_t run = 1;
      while (i + run < w.size() && w[i + run] == w[i]) ++run;
      if (run >= static_cast<std::size_t>(a.order(w[i].index))) return false;
      i += run;
    } else {
      if (i + 1 < w.size() && !w[i + 1].finite && w[i + 1].index == w[i].index &&
          w[i + 1].sign == -w[i].sign)
        return false;
      ++i;
    }
  }
  return true;
}

bool is_cyclically_reduced(const Word& w, const GenAlphabet& a) {
  if (!is_reduced(w, a)) return false;
  if (w.size() <= 1) return true;
  const Letter& f = w.front();
  const Letter& l = w.back();
  if (!f.finite && !l.finite && f.index == l.index && f.sign == -l.sign)
    return false;
  if (f.finite && l.finite && f.index == l.index) {
    std::size_t lead = 1;
    while (lead < w.size() && w[lead] == f) ++lead;
    if (lead == w.size()) return true;  // one run around the whole cycle
    std::size_t trail = 1;
    while (trail < w.size() && w[w.size() - 1 - trail] == l) ++trail;
    if (lead + trail >= static_cast<std::size_t>(a.order(f.index))) return false;
  }
  return true;
}

Word free_reduce(const Word& w, const GenAlphabet& a) {
  validate_letters(w, a);
  Word st;
  st.reserve(w.size());
  for (const Letter& l : w) {
    if (!l.finite) {
      if (!st.empty() && !st.back().finite && st.back().index == l.index &&
          st.back().sign == -l.sign)
        st.pop_back();
      else
        st.push_back(l);
    } else {
      // the stack is reduced, so this run scan is bounded by o_j
      const std::size_t o = static_cast<std::size_t>(a.order(l.index));
      std::size_t run = 0;
      while (run < st.size() && st[st.size() - 1 - run] == l) ++run;
      if (run + 1 == o)
        st.resize(st.size() - run);
      else
        st.push_back(l);
    }
  }
  return st;
}

Word inverse(const Word& w0, const GenAlphabet& a) {
  const Word w = free_reduce(w0, a);
  Word out;
  out.reserve(w.size());
  std::size_t i = w.size();
  while (i > 0) {
    const Letter l = w[i - 1];
    std::size_t run = 0;
    while (i > 0 && w[i - 1] == l) {
      --i;
      ++run;
    }
    if (l.finite)
      out.insert(out.end(), static_cast<std::size_t>(a.order(l.index)) - run, l);
    else
      out.insert(out.end(), run, Letter{false, l.index, -l.sign});
  }
  return out;
}

Word power(const Word& w, int k) {
  if (k < 0) fail(ErrKind::Word, "negative power");
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

CyclicReduction cyclic_reduce(const Word& w0, const GenAlphabet& a) {
  Word r = free_reduce(w0, a);
  Word conj;
  while (r.size() > 1) {
    const Letter f = r.front();
    const Letter l = r.back();
    if (!f.finite && !l.finite && f.index == l.index && f.sign == -l.sign) {
      conj.push_back(f);
      r.erase(r.begin());
      r.pop_back();
      continue;
    }
    if (f.finite && l.finite && f.index == l.index) {
      const std::size_t o = static_cast<std::size_t>(a.order(f.index));
      std::size_t lead = 1;
      while (lead < r.size() && r[lead] == f) ++lead;
      if (lead == r.size()) break;  // a single run is already cyclically fine
      std::size_t trail = 1;
      while (trail < r.size() && r[r.size() - 1 - trail] == l) ++trail;
      if (lead + trail >= o) {
        // f^lead · u · f^trail  =  f^lead (u f^{(lead+trail) mod o}) f^{-lead}
        conj.insert(conj.end(), lead, f);
        Word u(r.begin() + static_cast<std::ptrdiff_t>(lead),
               r.end() - static_cast<std::ptrdiff_t>(trail));
        u.insert(u.end(), (lead + trail) % o, f);
        r = std::move(u);
        continue;
      }
    }
    break;
  }
  return {std::move(r), std::move(conj)};
}

std::vector<long long> z_exponent_sums(const Word& w, const GenAlphabet& a) {
  validate_letters(w, a);
  std::vector<long long> sums(static_cast<std::size_t>(a.inf_count), 0);
  for (const Letter& l : w)
    if (!l.finite) sums[static_cast<std::size_t>(l.index)] += l.sign;
  return sums;
}

ElementClass classify_with_boundary(const Word& w, const GenAlphabet& a,
                                    const CyclicWord& b) {
  const Word core = cyclic_reduce(w, a).core;
  if (core.empty()) return ElementClass::Identity;
  bool single_run = true;
  for (const Letter& l : core)
    if (!(l == core.front())) {
      single_run = false;
      break;
    }
  if (single_run && core.front().finite) return ElementClass::Elliptic;
  if (b.empty()) fail(ErrKind::Word, "boundary word must be nonempty");
  // b is cyclically reduced and not a proper power, so b^k needs no further
  // reduction and length divisibility pins the only k; the inverse direction
  // gets its own reduced core (inverting c_j stretches it to c_j^{o_j-1})
  const CyclicWord cyc(core);
  if (core.size() % b.size() == 0) {
    const int k = static_cast<int>(core.size() / b.size());
    if (cyc == CyclicWord(power(b.rep(), k))) return ElementClass::Parabolic;
  }
  const Word binv = cyclic_reduce(inverse(b.rep(), a), a).core;
  if (!binv.empty() && core.size() % binv.size() == 0) {
    const int k = static_cast<int>(core.size() / binv.size());
    if (cyc == CyclicWord(power(binv, k))) return ElementClass::Parabolic;
  }
  return ElementClass::Hyperbolic;
}

const char* element_class_name(ElementClass k) {
  switch (k) {
    case ElementClass::Identity: return "identity";
    case ElementClass::Elliptic: return "elliptic";
    case ElementClass::Parabolic: return "parabolic";
    case ElementClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::string letter_token(const Letter& l) {
  if (l.finite) return "c" + std::to_string(l.index);
  return (l.sign > 0 ? "z" : "Z") + std::to_string(l.index);
}

std::string word_tokens(const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += ' ';
    out += letter_token(w[i]);
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos,
                             const std::string& what) {
  fail(ErrKind::Parse, "word \"" + std::string(text) + "\": " + what +
                           " at offset " + std::to_string(pos));
}

}  // namespace

Word parse_word(std::string_view text, const GenAlphabet& a) {
  Word out;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    const char head = text[pos];
    bool finite = false;
    int sign = +1;
    if (head == 'z') {
      finite = false;
    } else if (head == 'Z') {
      finite = false;
      sign = -1;
    } else if (head == 'c') {
      finite = true;
    } else {
      parse_fail(text, pos, std::string("unexpected character '") + head + "'");
    }
    ++pos;
    if (pos >= n || !std::isdigit(static_cast<unsigned char>(text[pos])))
      parse_fail(text, start, "generator index expected");
    long long index = 0;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      if (index > 1000000) parse_fail(text, start, "index too large");
      ++pos;
    }
    long long expo = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < n && text[pos] == '-') {
        neg = true;
        ++pos;
      }
      if (pos >= n || !std::isdigit(static_cast<unsigned char>(text[pos])))
        parse_fail(text, pos, "exponent expected after '^'");
      expo = 0;
      while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        expo = expo * 10 + (text[pos] - '0');
        if (expo > 1000000) parse_fail(text, start, "exponent too large");
        ++pos;
      }
      if (neg) expo = -expo;
    }
    if (pos < n && !std::isspace(static_cast<unsigned char>(text[pos])))
      parse_fail(text, pos, "junk after token");
    if (finite) {
      if (index >= a.fin_count())
        parse_fail(text, start,
                   "c" + std::to_string(index) + " outside alphabet");
      const long long o = a.order(static_cast<int>(index));
      const long long m = ((expo % o) + o) % o;
      out.insert(out.end(), static_cast<std::size_t>(m),
                 c(static_cast<int>(index)));
    } else {
      if (index >= a.inf_count)
        parse_fail(text, start,
                   (sign > 0 ? "z" : "Z") + std::to_string(index) +
                       " outside alphabet");
      if (expo < 0) {
        sign = -sign;
        expo = -expo;
      }
      out.insert(out.end(), static_cast<std::size_t>(expo),
                 Letter{false, static_cast<int>(index), sign});
    }
  }
  return out;
}

}  // namespace orb
