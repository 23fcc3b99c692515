#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randrace {

enum class Step : std::int8_t { Down = -1, Horizontal = 0, Up = +1 };

char step_char(Step s);

// A lattice path over {U,D} or {U,H,D}. The step sequence is the stored
// state; heights are recomputed on demand.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

  // Parses "UUDH..." (case-sensitive); rejects anything else.
  static Path parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }

  std::vector<int> heights() const;  // prefix sums with U=+1, H=0, D=-1
  int final_height() const;
  bool stays_nonnegative() const;
  bool is_updown() const;  // true when no horizontal steps occur

  std::string str() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Step> steps_;
};

}  // namespace randrace
