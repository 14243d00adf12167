// metering.hpp - register and step accounting for space-metered algorithm runs.
//
// The model: an algorithm run owns a Meter. Working registers are charged in
// words against a RegisterBank (components allocate a fixed register file at
// construction, so a run's high-water mark is a structural constant). Primitive
// steps are charged against a StepCounter, one per adjacency access, register
// write, or oracle invocation. Reference oracles (DFS connectivity,
// Bellman-Ford, Hopcroft-Tarjan) run under a suspend guard: their internals
// charge nothing, only the invocation itself is tallied.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logpath {

struct MeterError : std::runtime_error {
    explicit MeterError(const std::string& what) : std::runtime_error(what) {}
};

enum class StepKind : int { adj_access = 0, reg_write = 1, oracle_call = 2 };
inline constexpr int kStepKinds = 3;

class RegisterBank;

/// RAII token for a block of allocated working registers.
class RegisterScope {
  public:
    RegisterScope() = default;
    RegisterScope(RegisterScope&& other) noexcept { swap(other); }
    RegisterScope& operator=(RegisterScope&& other) noexcept {
        RegisterScope tmp(std::move(other));
        swap(tmp);
        return *this;
    }
    RegisterScope(const RegisterScope&) = delete;
    RegisterScope& operator=(const RegisterScope&) = delete;
    ~RegisterScope();

    // Explicit release; releasing twice is an error.
    void release();
    std::int64_t words() const { return words_; }

  private:
    friend class RegisterBank;
    RegisterScope(RegisterBank* bank, std::int64_t words) : bank_(bank), words_(words) {}
    void swap(RegisterScope& other) noexcept {
        std::swap(bank_, other.bank_);
        std::swap(words_, other.words_);
        std::swap(released_, other.released_);
    }

    RegisterBank* bank_ = nullptr;
    std::int64_t words_ = 0;
    bool released_ = true;
};

/// Counts live O(log n)-bit working registers (in words) and their high-water mark.
class RegisterBank {
  public:
    RegisterScope alloc(std::int64_t words) {
        if (words < 1) throw MeterError("register allocation must be at least one word");
        live_ += words;
        if (live_ > high_water_) high_water_ = live_;
        RegisterScope scope(this, words);
        scope.released_ = false;
        return scope;
    }

    std::int64_t live() const { return live_; }
    std::int64_t high_water() const { return high_water_; }

  private:
    friend class RegisterScope;
    void release(std::int64_t words) { live_ -= words; }

    std::int64_t live_ = 0;
    std::int64_t high_water_ = 0;
};

inline RegisterScope::~RegisterScope() {
    if (!released_ && bank_) {
        bank_->release(words_);
        released_ = true;
    }
}

inline void RegisterScope::release() {
    if (released_) throw MeterError("register scope released twice");
    bank_->release(words_);
    released_ = true;
}

/// Counts charged primitive steps, tallied per kind.
class StepCounter {
  public:
    void charge(StepKind kind) {
        ++total_;
        ++by_kind_[static_cast<int>(kind)];
    }
    std::int64_t total() const { return total_; }
    std::int64_t count(StepKind kind) const { return by_kind_[static_cast<int>(kind)]; }

  private:
    std::int64_t total_ = 0;
    std::array<std::int64_t, kStepKinds> by_kind_{};
};

/// Snapshot of a finished run. Serializes to one CSV row: n,highWater,steps,oracleCalls.
struct MeterReport {
    std::int64_t n = 0;
    std::int64_t high_water = 0;
    std::int64_t steps = 0;
    std::array<std::int64_t, kStepKinds> steps_by_kind{};
    std::vector<std::pair<std::string, std::int64_t>> oracle_calls;

    std::string oracle_calls_field() const {
        std::string out;
        for (const auto& [name, count] : oracle_calls) {
            if (!out.empty()) out += ';';
            out += name;
            out += '=';
            out += std::to_string(count);
        }
        return out;
    }

    std::string csv_row() const {
        std::ostringstream os;
        os << n << ',' << high_water << ',' << steps << ',' << oracle_calls_field();
        return os.str();
    }

    bool operator==(const MeterReport& other) const {
        return n == other.n && high_water == other.high_water && steps == other.steps &&
               steps_by_kind == other.steps_by_kind && oracle_calls == other.oracle_calls;
    }
};

class Meter;

/// RAII guard marking a region as exempt reference-oracle internals.
class SuspendGuard {
  public:
    SuspendGuard() = default;
    explicit SuspendGuard(Meter* meter);
    SuspendGuard(SuspendGuard&& other) noexcept { std::swap(meter_, other.meter_); }
    SuspendGuard(const SuspendGuard&) = delete;
    SuspendGuard& operator=(const SuspendGuard&) = delete;
    SuspendGuard& operator=(SuspendGuard&&) = delete;
    ~SuspendGuard();

  private:
    Meter* meter_ = nullptr;
};

/// One Meter per algorithm run: a RegisterBank, a StepCounter, per-oracle call
/// tallies and the exemption depth. Not shareable across concurrent runs.
class Meter {
  public:
    void set_input_size(std::int64_t n) { n_ = n; }

    RegisterScope alloc(std::int64_t words) { return bank_.alloc(words); }

    void charge(StepKind kind) {
        if (suspend_depth_ == 0) counter_.charge(kind);
    }

    // Oracle invocations are tallied even inside exempt regions; the step
    // charge applies only when metering is live.
    void count_oracle(std::string_view name) {
        ++oracle_tally_[std::string(name)];
        charge(StepKind::oracle_call);
    }

    [[nodiscard]] SuspendGuard suspend() { return SuspendGuard(this); }
    bool suspended() const { return suspend_depth_ > 0; }

    const RegisterBank& bank() const { return bank_; }
    const StepCounter& counter() const { return counter_; }

    // Requires every register scope released; a nonzero live count is a leak.
    MeterReport report() const {
        if (bank_.live() != 0)
            throw MeterError("meter report with " + std::to_string(bank_.live()) +
                             " live registers: leaked scope");
        MeterReport rep;
        rep.n = n_;
        rep.high_water = bank_.high_water();
        rep.steps = counter_.total();
        for (int k = 0; k < kStepKinds; ++k)
            rep.steps_by_kind[static_cast<std::size_t>(k)] = counter_.count(static_cast<StepKind>(k));
        rep.oracle_calls.assign(oracle_tally_.begin(), oracle_tally_.end());
        return rep;
    }

  private:
    friend class SuspendGuard;
    RegisterBank bank_;
    StepCounter counter_;
    std::map<std::string, std::int64_t> oracle_tally_;
    std::int64_t n_ = 0;
    int suspend_depth_ = 0;
};

inline SuspendGuard::SuspendGuard(Meter* meter) : meter_(meter) {
    if (meter_) ++meter_->suspend_depth_;
}

inline SuspendGuard::~SuspendGuard() {
    if (meter_) --meter_->suspend_depth_;
}

inline void charge(Meter* meter, StepKind kind) {
    if (meter) meter->charge(kind);
}

}  // namespace logpath
