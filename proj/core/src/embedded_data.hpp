#pragma once

#include <optional>
#include <string_view>

namespace elastic::detail {

std::string_view embedded_ekman_csv();
std::optional<std::string_view> embedded_morse_csv();

}  // namespace elastic::detail
