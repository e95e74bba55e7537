#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace charlab {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Global item cap for enumerations and brute-force sweeps.
// Default 10^7, overridable via CHARLAB_BUDGET.
inline std::uint64_t enumeration_budget() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("CHARLAB_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(10'000'000);
    }();
    return cap;
}

class BudgetCounter {
public:
    BudgetCounter() : cap_(enumeration_budget()), used_(0) {}
    explicit BudgetCounter(std::uint64_t cap) : cap_(cap), used_(0) {}

    void tick(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > cap_) throw BudgetExceeded("enumeration budget exceeded (" + std::to_string(cap_) + " items)");
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t cap_;
    std::uint64_t used_;
};

}  // namespace charlab
