#include "fibnum/digit_word.hpp"

#include <algorithm>
#include <cctype>

#include "fibnum/errors.hpp"

namespace fibnum {

TrackAlphabet::TrackAlphabet(std::vector<Digit> digits) : digits_(std::move(digits)) {
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
  if (digits_.empty() || digits_.front() != 0) {
    throw InputError("track alphabet must be nonempty and contain 0");
  }
  if (digits_.back() > 9) {
    throw InputError("track alphabet digits must be single decimal digits");
  }
}

bool TrackAlphabet::contains(Digit d) const noexcept {
  return std::binary_search(digits_.begin(), digits_.end(), d);
}

std::size_t TrackAlphabet::index_of(Digit d) const {
  auto it = std::lower_bound(digits_.begin(), digits_.end(), d);
  if (it == digits_.end() || *it != d) {
    throw InputError("digit " + std::to_string(d) + " not in alphabet " + to_string());
  }
  return static_cast<std::size_t>(it - digits_.begin());
}

std::string TrackAlphabet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + digits_[i]);
  }
  return s + "}";
}

std::string signature_to_string(const Signature& sig) {
  std::string s;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) s += ' ';
    s += sig[i].to_string();
  }
  return s;
}

DigitWord::DigitWord(std::size_t tracks) : tracks_(tracks) {
  if (tracks == 0) throw InputError("a digit word needs at least one track");
}

DigitWord::DigitWord(std::size_t tracks, std::vector<Digit> flat)
    : tracks_(tracks), flat_(std::move(flat)) {
  if (tracks == 0) throw InputError("a digit word needs at least one track");
  if (flat_.size() % tracks != 0) throw InputError("digit count is not a multiple of the track count");
}

DigitWord DigitWord::from_digits(std::vector<Digit> digits) { return DigitWord(1, std::move(digits)); }

DigitWord DigitWord::zip(std::span<const DigitWord> tracks) {
  if (tracks.empty()) throw InputError("zip needs at least one track");
  std::size_t len = 0;
  for (const auto& t : tracks) {
    if (t.tracks() != 1) throw InputError("zip expects single-track words");
    len = std::max(len, t.length());
  }
  DigitWord out(tracks.size());
  out.flat_.reserve(len * tracks.size());
  for (std::size_t i = 0; i < len; ++i) {
    for (const auto& t : tracks) out.flat_.push_back(i < t.length() ? t.flat_[i] : Digit{0});
  }
  return out;
}

void DigitWord::push_back(std::span<const Digit> tuple) {
  if (tuple.size() != tracks_) throw InputError("tuple arity does not match the track count");
  flat_.insert(flat_.end(), tuple.begin(), tuple.end());
}

void DigitWord::push_back(Digit d) {
  if (tracks_ != 1) throw InputError("single digit pushed onto a multi-track word");
  flat_.push_back(d);
}

DigitWord DigitWord::track(std::size_t t) const {
  if (t >= tracks_) throw InputError("track index out of range");
  DigitWord out(1);
  for (std::size_t i = 0; i < length(); ++i) out.flat_.push_back(at(i, t));
  return out;
}

DigitWord DigitWord::padded(std::size_t len) const {
  DigitWord out = *this;
  if (len > length()) out.flat_.resize(len * tracks_, 0);
  return out;
}

DigitWord DigitWord::stripped() const {
  DigitWord out = *this;
  while (!out.flat_.empty()) {
    auto last = out.tuple(out.length() - 1);
    if (std::any_of(last.begin(), last.end(), [](Digit d) { return d != 0; })) break;
    out.flat_.resize(out.flat_.size() - tracks_);
  }
  return out;
}

DigitWord DigitWord::reversed() const {
  DigitWord out(tracks_);
  for (std::size_t i = length(); i-- > 0;) out.push_back(tuple(i));
  return out;
}

std::string to_text(const DigitWord& w) {
  std::string s;
  if (w.tracks() == 1) {
    for (Digit d : w.flat()) s += static_cast<char>('0' + d);
    return s;
  }
  for (std::size_t i = 0; i < w.length(); ++i) {
    s += '[';
    for (std::size_t t = 0; t < w.tracks(); ++t) {
      if (t) s += ',';
      s += static_cast<char>('0' + w.at(i, t));
    }
    s += ']';
  }
  return s;
}

DigitWord parse_word(std::string_view text, std::size_t tracks) {
  DigitWord out(tracks);
  if (text.empty()) return out;
  if (text.front() != '[') {
    if (tracks != 1) throw InputError("multi-track words must use bracketed tuples");
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError("invalid digit '" + std::string(1, text[i]) + "' at offset " + std::to_string(i));
      }
      out.push_back(static_cast<Digit>(text[i] - '0'));
    }
    return out;
  }
  std::size_t i = 0;
  std::vector<Digit> tuple;
  while (i < text.size()) {
    if (text[i] != '[') throw InputError("expected '[' at offset " + std::to_string(i));
    ++i;
    tuple.clear();
    while (true) {
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError("expected digit at offset " + std::to_string(i));
      }
      tuple.push_back(static_cast<Digit>(text[i++] - '0'));
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw InputError("expected ',' or ']' at offset " + std::to_string(i));
    }
    if (tuple.size() != tracks) {
      throw InputError("tuple has " + std::to_string(tuple.size()) + " components, expected " +
                       std::to_string(tracks));
    }
    out.push_back(tuple);
  }
  return out;
}

}  // namespace fibnum
