#ifndef BIPART_CLI_COMMANDS_HPP
#define BIPART_CLI_COMMANDS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipart/asymptotics.hpp"
#include "bipart/bigint.hpp"
#include "bipart/bipartite.hpp"

namespace bipart::cli {

enum class Command { kTable1, kCompute, kVerify, kCrankRow, kAsym };
enum class OutputFormat { kCsv, kJson, kText };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceGuard = 3;

class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Memory/time budget for a single invocation. Memory and time are checked
/// against preflight estimates, and elapsed time again at checkpoints
/// between cells.
class ResourceGuard {
public:
    static constexpr std::uint64_t kDefaultMaxMemoryMiB = 8 * 1024;
    static constexpr double kDefaultMaxSeconds = 30 * 60;
    static constexpr const char* kMemoryEnv = "BIPART_MAX_MEMORY_MIB";
    static constexpr const char* kSecondsEnv = "BIPART_MAX_SECONDS";

    ResourceGuard() : ResourceGuard(kDefaultMaxMemoryMiB, kDefaultMaxSeconds) {}
    ResourceGuard(std::uint64_t max_memory_mib, double max_seconds);

    /// Defaults overridden by BIPART_MAX_MEMORY_MIB / BIPART_MAX_SECONDS.
    /// Throws std::invalid_argument on malformed values.
    static ResourceGuard from_env();

    std::uint64_t max_memory_mib() const noexcept { return max_memory_mib_; }
    double max_seconds() const noexcept { return max_seconds_; }

    void require_memory(double estimated_bytes, const std::string& what) const;
    void require_time(double estimated_seconds, const std::string& what) const;
    void checkpoint(const std::string& what) const;

private:
    std::uint64_t max_memory_mib_;
    double max_seconds_;
    std::chrono::steady_clock::time_point start_;
};

struct RunConfig {
    Command command = Command::kTable1;
    std::vector<std::size_t> levels{10, 40};  // table1: values of L
    std::size_t m = 0;
    std::size_t n = 0;
    OutputFormat format = OutputFormat::kText;
    unsigned threads = 1;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    bool deep = false;                 // verify: larger sweeps
    std::size_t verify_box = 10;       // verify: three-way box bound
    std::optional<std::size_t> fault;  // verify: test-only, bumps c(fault) by one
    bool d_by_difference = false;      // compute: also evaluate D as a pi difference
    ResourceGuard guard;
};

/// Throws std::invalid_argument if the configuration breaks an invariant
/// (empty level list, zero level, zero threads).
void validate(const RunConfig& config);

struct Table1Row {
    std::size_t level = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    BigInt pi;
    LogValue approx;
    double ratio = 0.0;  // pi / approx
};

/// Two rows per level L, in order: (L^2, L^2) then (L^2, L^2 + L). Cells are
/// computed on up to `threads` workers; the result does not depend on it.
std::vector<Table1Row> compute_table1(const std::vector<std::size_t>& levels, unsigned threads,
                                      const ResourceGuard& guard = {});

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, OutputFormat format);

struct CheckResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure{};
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const noexcept;
};

VerifyReport run_verify(const RunConfig& config);

int cmd_table1(const RunConfig& config, std::ostream& out);
int cmd_compute(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_crank_row(const RunConfig& config, std::ostream& out);
int cmd_asym(const RunConfig& config, std::ostream& out);

/// Dispatches on config.command.
int run(const RunConfig& config, std::ostream& out);

}  // namespace bipart::cli

#endif  // BIPART_CLI_COMMANDS_HPP
