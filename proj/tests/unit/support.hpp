#pragma once

#include <gtest/gtest.h>

#include <cmath>

// Relative comparison against a nonzero reference value.
#define EXPECT_REL(actual, expected, tol) EXPECT_NEAR((actual), (expected), (tol) * std::abs(expected))
#define ASSERT_REL(actual, expected, tol) ASSERT_NEAR((actual), (expected), (tol) * std::abs(expected))
