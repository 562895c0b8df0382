#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "udtoda/path.hpp"
#include "udtoda/scalar.hpp"

namespace udtoda::test {

inline Scalar S(const char* text) { return Scalar::parse(text); }

inline std::vector<Scalar> vec(std::initializer_list<const char*> items) {
  std::vector<Scalar> out;
  for (const char* t : items) out.push_back(Scalar::parse(t));
  return out;
}

inline IntervalList intervals(std::initializer_list<std::pair<const char*, const char*>> items) {
  IntervalList out;
  for (const auto& [a, b] : items) out.push_back({Scalar::parse(a), Scalar::parse(b)});
  return out;
}

inline std::string show(const IntervalList& iv) {
  std::string out = "[";
  for (const auto& i : iv) out += "(" + i.a.str() + "," + i.b.str() + ")";
  return out + "]";
}

}  // namespace udtoda::test
