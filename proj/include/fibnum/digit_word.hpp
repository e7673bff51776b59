#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibnum {

using Digit = std::uint8_t;

/// Ordered set of digits read on one track. Always contains 0, the padding digit.
class TrackAlphabet {
 public:
  explicit TrackAlphabet(std::vector<Digit> digits);
  TrackAlphabet(std::initializer_list<Digit> digits)
      : TrackAlphabet(std::vector<Digit>(digits)) {}

  static TrackAlphabet binary() { return TrackAlphabet{0, 1}; }
  static TrackAlphabet ternary() { return TrackAlphabet{0, 1, 2}; }

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool contains(Digit d) const noexcept;
  // Position of `d` in the ordered digit list; throws InputError if absent.
  std::size_t index_of(Digit d) const;

  // "{0,1,2}"
  std::string to_string() const;

  bool operator==(const TrackAlphabet&) const = default;

 private:
  std::vector<Digit> digits_;
};

using Signature = std::vector<TrackAlphabet>;

std::string signature_to_string(const Signature& sig);

/// A finite sequence of digit tuples, least-significant position first.
///
/// Storage is position-major: the tuple at position i occupies
/// digits_[i*tracks .. i*tracks + tracks).
class DigitWord {
 public:
  DigitWord() : tracks_(1) {}
  explicit DigitWord(std::size_t tracks);
  DigitWord(std::size_t tracks, std::vector<Digit> flat);

  // Single-track word from lsd-first digits.
  static DigitWord from_digits(std::vector<Digit> digits);
  // Parallel reading of single-track words; shorter tracks are zero-padded.
  static DigitWord zip(std::span<const DigitWord> tracks);

  std::size_t tracks() const noexcept { return tracks_; }
  std::size_t length() const noexcept { return tracks_ == 0 ? 0 : flat_.size() / tracks_; }
  bool empty() const noexcept { return flat_.empty(); }

  Digit at(std::size_t pos, std::size_t track) const { return flat_.at(pos * tracks_ + track); }
  std::span<const Digit> tuple(std::size_t pos) const {
    return std::span<const Digit>(flat_).subspan(pos * tracks_, tracks_);
  }
  const std::vector<Digit>& flat() const noexcept { return flat_; }

  void push_back(std::span<const Digit> tuple);
  void push_back(Digit d);  // single-track words only

  DigitWord track(std::size_t t) const;
  DigitWord padded(std::size_t length) const;
  // Removes trailing all-zero tuples.
  DigitWord stripped() const;
  DigitWord reversed() const;

  auto operator<=>(const DigitWord&) const = default;

 private:
  std::size_t tracks_;
  std::vector<Digit> flat_;
};

/// Text form. Single-track words print as bare digits ("201"), multi-track
/// words as bracketed tuples ("[2,1][0,0]"). Always lsd-first.
std::string to_text(const DigitWord& w);

/// Parses either text form. Bare digits are accepted only when
/// `tracks == 1`; the empty string is the empty word.
DigitWord parse_word(std::string_view text, std::size_t tracks = 1);

}  // namespace fibnum
