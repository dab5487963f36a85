#pragma once

#include "multisep/error.hpp"
#include <optional>


// Runs expr and reports the Errc it threw, or nullopt.
#define MULTISEP_ERRC(expr)                      \
  ([&]() -> std::optional<::multisep::Errc> {    \
    try {                                        \
      (void)(expr);                              \
    } catch (const ::multisep::Error& e) {       \
      return e.code();                           \
    }                                            \
    return std::nullopt;                         \
  }())
