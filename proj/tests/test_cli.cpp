#include <gtest/gtest.h>

TEST(Stub, Builds) { SUCCEED(); }
