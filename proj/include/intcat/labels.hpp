#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

// Canonical structured element labels. Atoms are user-supplied identifiers;
// every constructed label is bracket-balanced, so distinct value sequences
// render to distinct strings.

namespace intcat::labels {

inline std::string tuple(std::initializer_list<std::string_view> parts) {
  std::string out = "<";
  bool first = true;
  for (auto p : parts) {
    if (!first) out += ',';
    out += p;
    first = false;
  }
  out += '>';
  return out;
}

template <class Range>
std::string tuple_of(const Range& parts) {
  std::string out = "<";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ',';
    out += p;
    first = false;
  }
  out += '>';
  return out;
}

template <class Range>
std::string family_of(const Range& parts) {
  std::string out = "[";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ',';
    out += p;
    first = false;
  }
  out += ']';
  return out;
}

inline std::string injection(int which, std::string_view inner) {
  std::string out = which == 0 ? "inl(" : "inr(";
  out += inner;
  out += ')';
  return out;
}

inline constexpr std::string_view kPoint = "*";

/// True for identifiers accepted in user-written documents.
inline bool is_atom(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
              ch == '_' || ch == '.' || ch == '\'' || ch == '-' || ch == '+';
    if (!ok) return false;
  }
  return true;
}

}  // namespace intcat::labels
