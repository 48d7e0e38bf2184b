#ifndef FNBT_FRAME_HPP
#define FNBT_FRAME_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fnbt/errors.hpp"

namespace fnbt {

/// Maximum number of hypotheses in a frame; one machine word per subset.
inline constexpr std::size_t kMaxFrameSize = 64;

/// A subset of a frame stored as a bit mask over the frame's element indices.
///
/// Sets remember the identity of the frame they were built from; binary set
/// operations between sets of different frames throw FrameMismatch. Frames
/// with the same ordered names share an identity.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr ElementSet(std::uint64_t bits, std::uint64_t frame_id) : bits_(bits), frame_id_(frame_id) {}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::uint64_t frame_id() const { return frame_id_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_singleton() const { return std::has_single_bit(bits_); }
  constexpr bool contains(std::size_t index) const { return index < 64 && ((bits_ >> index) & 1U) != 0; }

  bool is_subset_of(const ElementSet& other) const {
    check_same_frame(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const ElementSet& other) const {
    check_same_frame(other);
    return (bits_ & other.bits_) != 0;
  }

  ElementSet operator|(const ElementSet& other) const {
    check_same_frame(other);
    return {bits_ | other.bits_, frame_id_};
  }
  ElementSet operator&(const ElementSet& other) const {
    check_same_frame(other);
    return {bits_ & other.bits_, frame_id_};
  }
  /// Set difference.
  ElementSet operator-(const ElementSet& other) const {
    check_same_frame(other);
    return {bits_ & ~other.bits_, frame_id_};
  }

  /// Element indices in ascending order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
  }

  friend constexpr bool operator==(const ElementSet&, const ElementSet&) = default;
  friend constexpr bool operator<(const ElementSet& a, const ElementSet& b) {
    return a.frame_id_ != b.frame_id_ ? a.frame_id_ < b.frame_id_ : a.bits_ < b.bits_;
  }

 private:
  void check_same_frame(const ElementSet& other) const {
    if (frame_id_ != other.frame_id_) {
      throw FrameMismatch("set operation between subsets of different frames");
    }
  }

  std::uint64_t bits_ = 0;
  std::uint64_t frame_id_ = 0;
};

/// Ordered, immutable universe of named hypotheses (a frame of discernment).
///
/// Copies share the same underlying storage. Element positions follow the
/// construction order and never change.
class Frame {
 public:
  /// Throws FrameError on an empty list, duplicate or empty names, or more
  /// than kMaxFrameSize names.
  explicit Frame(std::vector<std::string> names) {
    if (names.empty()) throw FrameError("frame must contain at least one element");
    if (names.size() > kMaxFrameSize) {
      throw FrameError("frame has " + std::to_string(names.size()) + " elements; at most " +
                       std::to_string(kMaxFrameSize) + " are supported");
    }
    auto built = std::make_shared<Data>();
    auto& data = *built;
    data.index.reserve(names.size());
    // FNV-1a over the ordered names; equal name lists yield equal identities.
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    auto mix = [&hash](unsigned char c) {
      hash ^= c;
      hash *= 0x100000001b3ULL;
    };
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& name = names[i];
      if (name.empty()) throw FrameError("frame element names must be non-empty");
      if (!data.index.emplace(name, i).second) throw FrameError("duplicate frame element '" + name + "'");
      for (char c : name) mix(static_cast<unsigned char>(c));
      mix(0x1f);
    }
    data.id = hash;
    data.names = std::move(names);
    data_ = std::move(built);
  }
  Frame(std::initializer_list<std::string> names) : Frame(std::vector<std::string>(names)) {}

  std::size_t size() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t index) const { return data_->names.at(index); }
  std::uint64_t id() const { return data_->id; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw FrameError("element '" + std::string(name) + "' is not in frame " + describe());
  }
  bool contains(std::string_view name) const { return find(name).has_value(); }

  ElementSet empty_set() const { return {0, id()}; }
  ElementSet full_set() const {
    return {size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size()) - 1), id()};
  }
  ElementSet singleton(std::size_t index) const {
    if (index >= size()) throw FrameError("element index out of range");
    return {std::uint64_t{1} << index, id()};
  }
  ElementSet set_of(const std::vector<std::string>& names) const {
    std::uint64_t bits = 0;
    for (const auto& n : names) bits |= std::uint64_t{1} << index_of(n);
    return {bits, id()};
  }
  ElementSet complement(const ElementSet& set) const { return full_set() - own(set); }

  /// Names of the set's elements in frame order.
  std::vector<std::string> names_of(const ElementSet& set) const {
    std::vector<std::string> out;
    for (auto i : own(set).indices()) out.push_back(name(i));
    return out;
  }
  /// "{a,c}" style rendering; "∅" for the empty set.
  std::string format(const ElementSet& set) const {
    if (own(set).empty()) return "\xE2\x88\x85";
    std::string out = "{";
    bool first = true;
    for (auto i : set.indices()) {
      if (!first) out += ',';
      out += name(i);
      first = false;
    }
    return out + "}";
  }
  std::string describe() const { return format(full_set()); }

  /// Throws FrameMismatch unless the set belongs to this frame.
  const ElementSet& own(const ElementSet& set) const {
    if (set.frame_id() != id()) throw FrameMismatch("subset does not belong to frame " + describe());
    return set;
  }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.data_ == b.data_ || (a.id() == b.id() && a.names() == b.names());
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
    std::uint64_t id = 0;
  };
  std::shared_ptr<const Data> data_;
};

inline Frame make_frame(std::vector<std::string> names) { return Frame(std::move(names)); }

/// f1's elements in order followed by f2's elements that f1 lacks.
inline Frame union_frame(const Frame& f1, const Frame& f2) {
  if (f1 == f2) return f1;
  std::vector<std::string> names = f1.names();
  for (const auto& n : f2.names()) {
    if (!f1.contains(n)) names.push_back(n);
  }
  if (names.size() > kMaxFrameSize) {
    throw FrameError("union of " + f1.describe() + " and " + f2.describe() + " exceeds " +
                     std::to_string(kMaxFrameSize) + " elements");
  }
  return Frame(std::move(names));
}

/// Re-indexes `set` from `source` into `target` by element name.
inline ElementSet embed(const ElementSet& set, const Frame& source, const Frame& target) {
  source.own(set);
  if (source == target) return {set.bits(), target.id()};
  std::uint64_t bits = 0;
  for (auto i : set.indices()) {
    const auto& n = source.name(i);
    auto j = target.find(n);
    if (!j) throw FrameError("element '" + n + "' is missing from target frame " + target.describe());
    bits |= std::uint64_t{1} << *j;
  }
  return {bits, target.id()};
}

}  // namespace fnbt

#endif  // FNBT_FRAME_HPP
