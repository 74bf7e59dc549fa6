#pragma once

#include "cayley/error.hpp"

/// Asserts that `expr` raises cay::Error of the given kind.
#define CHECK_THROWS_KIND(expr, k)                               \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const cay::Error& e_) {                             \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.kind() == cay::ErrorKind::k, e_.what());  \
    }                                                            \
    CHECK_MESSAGE(thrown_, #expr " did not throw " #k);          \
  } while (0)
