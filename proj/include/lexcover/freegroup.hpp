#pragma once

// Reduced words of the free group over an output alphabet, the set
// Delta = B* u inv(B)* u {0}, its N-bounded truncation, and the Lead or
// Delay action w . (x, y) = reduce(inv(x) w y) sent back into Delta.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexcover/core.hpp"

namespace lexcover {

struct SignedLetter {
  Letter letter = kNoLetter;
  bool barred = false;
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  const std::vector<SignedLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  static FreeGroupWord plain(const Word& w);
  // inv(w): mirror image of w with barred letters.
  static FreeGroupWord inverse_of(const Word& w);

  // Appends and cancels against the current suffix; the word stays reduced.
  void push_back(SignedLetter x);
  FreeGroupWord& operator*=(const FreeGroupWord& rhs);

  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;

 private:
  std::vector<SignedLetter> letters_;
};

FreeGroupWord reduce(const std::vector<SignedLetter>& letters);

class DeltaElem {
 public:
  enum class Kind { Pos, Neg, Zero };

  DeltaElem() = default;  // epsilon
  static DeltaElem pos(Word w) { return DeltaElem(Kind::Pos, std::move(w)); }
  // Neg stores the plain mirror: neg("ab") is inv(ab) = b~ a~.
  static DeltaElem neg(Word w) {
    return w.empty() ? DeltaElem() : DeltaElem(Kind::Neg, std::move(w));
  }
  static DeltaElem zero() { return DeltaElem(Kind::Zero, {}); }

  Kind kind() const { return kind_; }
  const Word& word() const { return word_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_epsilon() const { return kind_ == Kind::Pos && word_.empty(); }
  std::size_t length() const { return word_.size(); }

  FreeGroupWord to_free_group() const;

  // Canonical order: Pos before Neg before Zero, then length, then letters.
  friend std::strong_ordering operator<=>(const DeltaElem& a,
                                         const DeltaElem& b);
  friend bool operator==(const DeltaElem&, const DeltaElem&) = default;

 private:
  DeltaElem(Kind kind, Word w) : kind_(kind), word_(std::move(w)) {}
  Kind kind_ = Kind::Pos;
  Word word_;
};

// `b.b`, `~b.b`, `0`, `_` for epsilon.
std::string render(const DeltaElem& w);
DeltaElem parse_delta(const std::string& text);

using DeltaSet = std::set<DeltaElem>;
// Coordinate per state of the base machine; an empty set means absent.
using LDVector = std::vector<DeltaSet>;

// `{p:_;q:b}`, listing non-empty coordinates only.
std::string render(const LDVector& v, const std::vector<std::string>& names);

// Unbounded: Zero iff w mixes plain and barred letters. Bounded by N:
// nullopt ("dropped") iff w is not in B^{<=N} u inv(B)^{<=N}.
std::optional<DeltaElem> rho(const FreeGroupWord& w,
                             std::optional<std::size_t> bound = std::nullopt);

DeltaElem ld_action(const DeltaElem& w, const Word& x, const Word& y);

// Maximum |LD| over equal-length prefixes of two step-aligned output
// sequences. Throws IncomparableOutputs when the full LD is Zero.
std::size_t lag(const std::vector<Word>& xs, const std::vector<Word>& ys);

}  // namespace lexcover
