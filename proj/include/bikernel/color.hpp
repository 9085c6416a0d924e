#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace bikernel {

enum class Color : std::uint8_t { one = 1, two = 2 };

inline constexpr std::array<Color, 2> kColors{Color::one, Color::two};

constexpr Color other(Color c) noexcept { return c == Color::one ? Color::two : Color::one; }

constexpr int to_int(Color c) noexcept { return static_cast<int>(c); }

constexpr std::size_t slot(Color c) noexcept { return c == Color::one ? 0 : 1; }

inline std::string to_string(Color c) { return c == Color::one ? "1" : "2"; }

}  // namespace bikernel
