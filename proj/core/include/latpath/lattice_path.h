#ifndef LATPATH_LATTICE_PATH_H_
#define LATPATH_LATTICE_PATH_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace latpath {

// E = (1,0), N = (0,1). The character values make E sort before N.
enum class Step : char { kE = 'E', kN = 'N' };

// A word over {E, N}. Positions in the public interface are 1-based, as in
// the step numbering of a path.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps);

  // Throws ParseError("invalid step 'X' at position 2", 2) on bad input.
  static LatticePath Parse(std::string_view word);
  static LatticePath Repeat(Step s, int count);

  int size() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  const std::vector<Step>& steps() const { return steps_; }
  // 1-based.
  Step step(int position) const { return steps_[position - 1]; }

  int north_count() const { return north_prefix_.back(); }
  int east_count() const { return size() - north_count(); }
  // N steps among the first t steps, 0 <= t <= size().
  int NorthPrefix(int t) const { return north_prefix_[t]; }
  int EastPrefix(int t) const { return t - north_prefix_[t]; }

  // Step h is N and step h+1 is E.
  bool HasNECornerAt(int h) const;
  // Step h is E and step h+1 is N.
  bool HasENCornerAt(int h) const;

  // Position of the i-th N step (1-based i), or 0 if there is none.
  int NthNorth(int i) const;

  LatticePath Swapped() const;   // E <-> N
  LatticePath Reversed() const;  // the rotation s_n ... s_1
  LatticePath Concat(const LatticePath& other) const;
  // Steps first .. first+count-1 (1-based).
  LatticePath Slice(int first, int count) const;
  // Removes step `position` (1-based).
  LatticePath Without(int position) const;

  std::string ToString() const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps_ == b.steps_;
  }
  friend std::strong_ordering operator<=>(const LatticePath& a,
                                          const LatticePath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  std::vector<Step> steps_;
  std::vector<int> north_prefix_{0};
};

// Lower path P and upper path Q of M[P,Q]: same length, same number of N
// steps, and P never above Q. Ground set [m+r], 1-based.
class BoundingPair {
 public:
  // The empty matroid.
  BoundingPair() = default;
  // Throws DomainError when the invariants fail.
  BoundingPair(LatticePath lower, LatticePath upper);

  static BoundingPair Parse(std::string_view lower, std::string_view upper);

  const LatticePath& lower() const { return lower_; }
  const LatticePath& upper() const { return upper_; }
  int size() const { return lower_.size(); }
  int rank() const { return lower_.north_count(); }
  int nullity() const { return lower_.east_count(); }

  std::string ToString() const {
    return lower_.ToString() + " " + upper_.ToString();
  }

  friend bool operator==(const BoundingPair&, const BoundingPair&) = default;
  friend auto operator<=>(const BoundingPair&, const BoundingPair&) = default;

 private:
  LatticePath lower_;
  LatticePath upper_;
};

}  // namespace latpath

#endif  // LATPATH_LATTICE_PATH_H_
