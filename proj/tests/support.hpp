#pragma once

#include <optional>
#include <utility>

#include "corepath/error.hpp"

template <typename Fn>
std::optional<corepath::Errc> thrown_code(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const corepath::Error& e) {
        return e.code();
    }
    return std::nullopt;
}
