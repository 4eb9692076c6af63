#include "orb/cyclic.hpp"

#include <algorithm>

namespace orb {

CyclicOrder::CyclicOrder(std::vector<Letter> symbols)
    : symbols_(least_rotation(std::move(symbols))) {
  if (symbols_.empty()) fail(ErrKind::Order, "empty cyclic order");
  std::vector<Letter> sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrKind::Order, "cyclic order repeats a letter");
}

bool CyclicOrder::contains(const Letter& l) const {
  return std::find(symbols_.begin(), symbols_.end(), l) != symbols_.end();
}

std::size_t CyclicOrder::position(const Letter& l) const {
  const auto it = std::find(symbols_.begin(), symbols_.end(), l);
  if (it == symbols_.end())
    fail(ErrKind::Order, letter_token(l) + " is not in the cyclic order");
  return static_cast<std::size_t>(it - symbols_.begin());
}

bool CyclicOrder::order_triple(const Letter& x, const Letter& y,
                               const Letter& z) const {
  if (x == y || y == z || x == z)
    fail(ErrKind::Order, "order_triple needs three distinct letters");
  const std::size_t n = symbols_.size();
  const std::size_t px = position(x);
  const std::size_t ry = (position(y) + n - px) % n;
  const std::size_t rz = (position(z) + n - px) % n;
  return ry < rz;
}

std::vector<Letter> CyclicOrder::restricted_to(
    const std::vector<Letter>& subset) const {
  std::vector<Letter> out;
  for (const Letter& l : symbols_)
    if (std::find(subset.begin(), subset.end(), l) != subset.end())
      out.push_back(l);
  return out;
}

bool CyclicOrder::is_compatible(const std::vector<Letter>& sub) const {
  std::vector<Letter> sorted = sub;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrKind::Order, "compatibility query repeats a letter");
  for (const Letter& l : sub) position(l);  // must all be present
  if (sub.size() <= 2) return true;
  return same_cycle(restricted_to(sub), sub);
}

std::vector<Letter> CyclicOrder::interval(const Letter& from,
                                          const Letter& to) const {
  const std::size_t n = symbols_.size();
  std::size_t p = position(from);
  const std::size_t q = position(to);
  std::vector<Letter> out;
  for (;;) {
    out.push_back(symbols_[p]);
    if (p == q) break;
    p = (p + 1) % n;
  }
  return out;
}

bool same_cycle(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  return least_rotation(a) == least_rotation(b);
}

}  // namespace orb
