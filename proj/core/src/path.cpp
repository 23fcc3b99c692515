#include "randrace/path.hpp"

#include <stdexcept>

namespace randrace {

char step_char(Step s) {
  switch (s) {
    case Step::Up: return 'U';
    case Step::Horizontal: return 'H';
    case Step::Down: return 'D';
  }
  throw std::logic_error("bad step value");
}

Path Path::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'U': steps.push_back(Step::Up); break;
      case 'H': steps.push_back(Step::Horizontal); break;
      case 'D': steps.push_back(Step::Down); break;
      default:
        throw std::domain_error(std::string("bad path character '") + c + "'");
    }
  }
  return Path(std::move(steps));
}

std::vector<int> Path::heights() const {
  std::vector<int> h;
  h.reserve(steps_.size());
  int cur = 0;
  for (Step s : steps_) {
    cur += static_cast<int>(s);
    h.push_back(cur);
  }
  return h;
}

int Path::final_height() const {
  int cur = 0;
  for (Step s : steps_) cur += static_cast<int>(s);
  return cur;
}

bool Path::stays_nonnegative() const {
  int cur = 0;
  for (Step s : steps_) {
    cur += static_cast<int>(s);
    if (cur < 0) return false;
  }
  return true;
}

bool Path::is_updown() const {
  for (Step s : steps_)
    if (s == Step::Horizontal) return false;
  return true;
}

std::string Path::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(step_char(s));
  return out;
}

}  // namespace randrace
