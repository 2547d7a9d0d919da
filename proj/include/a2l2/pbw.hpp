#pragma once

// PBW straightening for enveloping-type algebras over an ordered basis.
//
// A word is a sequence of letters; it is in normal form when nondecreasing
// under Letter's operator<. An adjacent inversion (.., y, x, ..) with x < y
// is rewritten as (.., x, y, ..) + (.., [y, x], ..), where the bracket is a
// linear combination of letters. Each swap lowers the inversion count at
// fixed length and every bracket term is shorter, so rewriting terminates.

#include "a2l2/linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace a2l2::pbw {

enum class Schedule { leftmost, rightmost };

template <class Letter>
using Word = std::vector<Letter>;

template <class Letter>
using Terms = std::map<Word<Letter>, Scalar>;

template <class Letter>
bool is_sorted_word(const Word<Letter>& w) {
  return std::is_sorted(w.begin(), w.end());
}

/// Memoizing straightener. Bracket is a callable
/// (const Letter& y, const Letter& x) -> range of pair<Letter, Scalar>
/// returning [y, x]. Instances are not shared across threads.
template <class Letter, class Bracket>
class Straightener {
 public:
  explicit Straightener(Bracket bracket, Schedule schedule = Schedule::leftmost)
      : bracket_(std::move(bracket)), schedule_(schedule) {}

  const Terms<Letter>& normal_form(const Word<Letter>& w) {
    auto hit = memo_.find(w);
    if (hit != memo_.end()) return hit->second;
    Terms<Letter> out;
    std::size_t pos = find_inversion(w);
    if (pos == npos) {
      out.emplace(w, 1);
    } else {
      Word<Letter> swapped = w;
      std::swap(swapped[pos], swapped[pos + 1]);
      add_into(out, normal_form(swapped), 1);
      for (const auto& [letter, c] : bracket_(w[pos], w[pos + 1])) {
        Word<Letter> shorter;
        shorter.reserve(w.size() - 1);
        shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
        shorter.push_back(letter);
        shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
        add_into(out, normal_form(shorter), c);
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

  /// out += coeff * normal_form(w)
  void accumulate(Terms<Letter>& out, const Word<Letter>& w, const Scalar& coeff) {
    if (is_zero(coeff)) return;
    if (is_sorted_word(w)) {
      add_term(out, w, coeff);
      return;
    }
    add_into(out, normal_form(w), coeff);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t find_inversion(const Word<Letter>& w) const {
    if (w.size() < 2) return npos;
    if (schedule_ == Schedule::leftmost) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i]) return i;
    } else {
      for (std::size_t i = w.size() - 1; i-- > 0;)
        if (w[i + 1] < w[i]) return i;
    }
    return npos;
  }

  static void add_into(Terms<Letter>& out, const Terms<Letter>& src, const Scalar& c) {
    for (const auto& [w, x] : src) add_term(out, w, Scalar(c * x));
  }

  Bracket bracket_;
  Schedule schedule_;
  std::map<Word<Letter>, Terms<Letter>> memo_;
};

}  // namespace a2l2::pbw
