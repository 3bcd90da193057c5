#pragma once
#include <stdexcept>

namespace lfsrx {

struct ConfigError : std::runtime_error { using std::runtime_error::runtime_error; };
struct SeedError : std::runtime_error { using std::runtime_error::runtime_error; };
struct RangeError : std::runtime_error { using std::runtime_error::runtime_error; };
struct LengthError : std::runtime_error { using std::runtime_error::runtime_error; };
struct UsageError : std::runtime_error { using std::runtime_error::runtime_error; };

}  // namespace lfsrx
