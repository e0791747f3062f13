#pragma once

#include <functional>

#include "doctest.h"
#include "kcheeger/error.hpp"

// runs fn, which must throw kcheeger::Error, and reports its code
inline kcheeger::ErrorCode thrown_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const kcheeger::Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return kcheeger::ErrorCode::validation_error;
}
