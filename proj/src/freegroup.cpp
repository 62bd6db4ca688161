#include "lexcover/freegroup.hpp"

#include <algorithm>
#include <sstream>

#include "lexcover/errors.hpp"

namespace lexcover {

FreeGroupWord FreeGroupWord::plain(const Word& w) {
  FreeGroupWord g;
  for (Letter a : w) g.push_back({a, false});
  return g;
}

FreeGroupWord FreeGroupWord::inverse_of(const Word& w) {
  FreeGroupWord g;
  for (auto it = w.rbegin(); it != w.rend(); ++it) g.push_back({*it, true});
  return g;
}

void FreeGroupWord::push_back(SignedLetter x) {
  if (!letters_.empty() && letters_.back().letter == x.letter &&
      letters_.back().barred != x.barred) {
    letters_.pop_back();
  } else {
    letters_.push_back(x);
  }
}

FreeGroupWord& FreeGroupWord::operator*=(const FreeGroupWord& rhs) {
  for (const auto& x : rhs.letters_) push_back(x);
  return *this;
}

FreeGroupWord reduce(const std::vector<SignedLetter>& letters) {
  FreeGroupWord g;
  for (const auto& x : letters) g.push_back(x);
  return g;
}

FreeGroupWord DeltaElem::to_free_group() const {
  if (is_zero()) throw InvalidArgument("0 is not a free group element");
  return kind_ == Kind::Pos ? FreeGroupWord::plain(word_)
                            : FreeGroupWord::inverse_of(word_);
}

std::strong_ordering operator<=>(const DeltaElem& a, const DeltaElem& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  return a.word_.compare(b.word_) <=> 0;
}

std::string render(const DeltaElem& w) {
  if (w.is_zero()) return "0";
  if (w.is_epsilon()) return "_";
  std::string out = w.kind() == DeltaElem::Kind::Neg ? "~" : "";
  for (std::size_t i = 0; i < w.word().size(); ++i) {
    if (i) out.push_back('.');
    out.push_back(w.word()[i]);
  }
  return out;
}

DeltaElem parse_delta(const std::string& text) {
  if (text == "0") return DeltaElem::zero();
  if (text == "_") return DeltaElem();
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '~';
  if (negative) body.remove_prefix(1);
  Word w;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i % 2 == 1) {
      if (body[i] != '.') throw InvalidArgument("bad delta '" + text + "'");
    } else {
      w.push_back(body[i]);
    }
  }
  if (w.empty() || body.size() % 2 == 0)
    throw InvalidArgument("bad delta '" + text + "'");
  return negative ? DeltaElem::neg(w) : DeltaElem::pos(w);
}

std::string render(const LDVector& v, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t q = 0; q < v.size(); ++q) {
    if (v[q].empty()) continue;
    if (!first) out << ';';
    first = false;
    out << names[q] << ':';
    bool first_elem = true;
    for (const auto& w : v[q]) {
      if (!first_elem) out << ',';
      first_elem = false;
      out << render(w);
    }
  }
  out << '}';
  return out.str();
}

std::optional<DeltaElem> rho(const FreeGroupWord& w,
                             std::optional<std::size_t> bound) {
  const auto& ls = w.letters();
  const bool all_plain =
      std::none_of(ls.begin(), ls.end(), [](auto x) { return x.barred; });
  const bool all_barred =
      std::all_of(ls.begin(), ls.end(), [](auto x) { return x.barred; });
  if (!all_plain && !all_barred) {
    if (bound) return std::nullopt;
    return DeltaElem::zero();
  }
  if (bound && ls.size() > *bound) return std::nullopt;
  Word plain;
  plain.reserve(ls.size());
  if (all_plain) {
    for (auto x : ls) plain.push_back(x.letter);
    return DeltaElem::pos(std::move(plain));
  }
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) plain.push_back(it->letter);
  return DeltaElem::neg(std::move(plain));
}

DeltaElem ld_action(const DeltaElem& w, const Word& x, const Word& y) {
  if (w.is_zero()) return w;
  FreeGroupWord g = FreeGroupWord::inverse_of(x);
  g *= w.to_free_group();
  g *= FreeGroupWord::plain(y);
  return *rho(g);
}

std::size_t lag(const std::vector<Word>& xs, const std::vector<Word>& ys) {
  if (xs.size() != ys.size())
    throw InvalidArgument("lag needs computations of the same length");
  DeltaElem w;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w = ld_action(w, xs[i], ys[i]);
    if (w.is_zero()) break;
    worst = std::max(worst, w.length());
  }
  if (w.is_zero())
    throw IncomparableOutputs("outputs are not prefixes of a common word");
  return worst;
}

}  // namespace lexcover
