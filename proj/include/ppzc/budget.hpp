#pragma once

#include "ppzc/errors.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace ppzc {

/// Work limit for long searches: wall-clock seconds, an item count, or both.
struct Budget {
    std::optional<double> seconds;
    std::optional<std::uint64_t> items;

    static Budget unlimited() { return {}; }

    /// "30s" -> 30 seconds, "1000000" -> one million items, "" or "none" -> unlimited.
    static Budget parse(const std::string& text) {
        Budget b;
        if (text.empty() || text == "none") return b;
        try {
            std::size_t used = 0;
            if (text.back() == 's') {
                b.seconds = std::stod(text.substr(0, text.size() - 1), &used);
                if (used != text.size() - 1 || *b.seconds <= 0) throw PreconditionError("");
            } else {
                b.items = std::stoull(text, &used);
                if (used != text.size()) throw PreconditionError("");
            }
        } catch (const std::exception&) {
            throw PreconditionError("invalid budget '" + text + "' (expected e.g. 30s or 1000000)");
        }
        return b;
    }

    bool is_unlimited() const noexcept { return !seconds && !items; }
};

class BudgetClock {
public:
    explicit BudgetClock(Budget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    bool exhausted(std::uint64_t items_used) const {
        if (budget_.items && items_used >= *budget_.items) return true;
        if (budget_.seconds && elapsed() >= *budget_.seconds) return true;
        return false;
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace ppzc
