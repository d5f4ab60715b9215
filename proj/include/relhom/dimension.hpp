#pragma once

// Dimension values that may be censored by a cutoff.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relhom {

/// Raised when a truncated computation cannot decide the requested value.
class undeterminable_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A natural number, or "at least n" when a cutoff was hit.
struct DimValue {
    enum class Kind { exact, at_least };
    Kind kind = Kind::exact;
    std::size_t value = 0;

    static DimValue exact(std::size_t n) { return {Kind::exact, n}; }
    static DimValue at_least(std::size_t n) { return {Kind::at_least, n}; }
    [[nodiscard]] bool censored() const { return kind == Kind::at_least; }
    [[nodiscard]] std::string str() const { return censored() ? "≥ " + std::to_string(value) : std::to_string(value); }
    friend bool operator==(const DimValue&, const DimValue&) = default;
};

struct DimensionReport {
    std::string quantity;
    DimValue value;
    std::size_t cutoff = 10;
    std::vector<std::pair<std::string, DimValue>> breakdown;
    std::string note;
};

/// Supremum where any censored entry censors the result.
inline DimValue dim_max(const std::vector<DimValue>& values, std::size_t cutoff) {
    std::size_t best = 0;
    for (const auto& v : values) {
        if (v.censored()) return DimValue::at_least(cutoff);
        best = std::max(best, v.value);
    }
    return DimValue::exact(best);
}

}  // namespace relhom
