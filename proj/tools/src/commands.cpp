#include "bipart/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "bipart/classic_partitions.hpp"
#include "bipart/crank.hpp"
#include "bipart/format.hpp"
#include "bipart/parallel.hpp"

namespace bipart::cli {

namespace {

using nlohmann::json;

// Rough cost model for GMP additions/multiply-adds: fixed call overhead plus
// a per-limb term. Only used for preflight rejection of absurd requests.
constexpr double kSecondsPerBigOp = 2.5e-8;
constexpr double kSecondsPerLimb = 1.0e-9;

double bits_of_p(double n) { return std::numbers::pi * std::sqrt(2.0 * n / 3.0) / std::numbers::ln2 + 1.0; }
double bits_of_c(double n) { return std::numbers::pi * std::sqrt(n) / std::numbers::ln2 + 1.0; }
double limbs(double bits) { return std::max(1.0, std::ceil(bits / 64.0)); }
double bytes_per_entry(double bits) { return 48.0 + 8.0 * limbs(bits); }
double op_seconds(double ops, double bits) { return ops * (kSecondsPerBigOp + kSecondsPerLimb * limbs(bits)); }

// Memory and time for the p and c tables up to index n.
void preflight_tables(const ResourceGuard& guard, std::size_t n, const std::string& what) {
    const double x = static_cast<double>(n) + 1.0;
    guard.require_memory(x * (bytes_per_entry(bits_of_p(x)) + bytes_per_entry(bits_of_c(x))), what);
    guard.require_time(op_seconds(x * x / 4.0 + 2.0 * x * std::sqrt(x), bits_of_c(x)), what);
}

std::uint64_t parse_env_u64(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) {
        throw std::invalid_argument(std::string(name) + " must be a positive integer, got '" + raw + "'");
    }
    return v;
}

double parse_env_double(const char* name, double fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (*end != '\0' || !(v > 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be a positive number, got '" + raw + "'");
    }
    return v;
}

double rounded_ratio(double ratio) { return std::stod(to_fixed(ratio, 4)); }

std::string check_line(const CheckResult& check) {
    std::ostringstream os;
    os << (check.failures == 0 ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.checked
       << " checked, " << check.failures << " failed";
    if (check.failures != 0) os << " (first: " << check.first_failure << ")";
    return os.str();
}

void record(CheckResult& check, bool ok, const std::string& where) {
    ++check.checked;
    if (!ok) {
        if (check.failures == 0) check.first_failure = where;
        ++check.failures;
    }
}

std::string cell(std::size_t m, std::size_t n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

CubicTable with_fault(const CubicTable& c, std::optional<std::size_t> fault) {
    if (!fault || static_cast<long>(*fault) > c.max_index()) return c;
    std::vector<BigInt> values(c.values().begin(), c.values().end());
    values[*fault] += 1;
    return CubicTable(std::move(values));
}

}  // namespace

ResourceGuard::ResourceGuard(std::uint64_t max_memory_mib, double max_seconds)
    : max_memory_mib_(max_memory_mib), max_seconds_(max_seconds), start_(std::chrono::steady_clock::now()) {}

ResourceGuard ResourceGuard::from_env() {
    return ResourceGuard(parse_env_u64(kMemoryEnv, kDefaultMaxMemoryMiB),
                         parse_env_double(kSecondsEnv, kDefaultMaxSeconds));
}

void ResourceGuard::require_memory(double estimated_bytes, const std::string& what) const {
    const double limit = static_cast<double>(max_memory_mib_) * 1024.0 * 1024.0;
    if (estimated_bytes > limit) {
        std::ostringstream os;
        os << what << ": estimated memory " << std::fixed << std::setprecision(1)
           << estimated_bytes / (1024.0 * 1024.0) << " MiB exceeds the limit of " << max_memory_mib_
           << " MiB (set " << kMemoryEnv << " to raise it)";
        throw ResourceLimitExceeded(os.str());
    }
}

void ResourceGuard::require_time(double estimated_seconds, const std::string& what) const {
    if (estimated_seconds > max_seconds_) {
        std::ostringstream os;
        os << what << ": estimated run time " << std::fixed << std::setprecision(0) << estimated_seconds
           << " s exceeds the limit of " << max_seconds_ << " s (set " << kSecondsEnv << " to raise it)";
        throw ResourceLimitExceeded(os.str());
    }
}

void ResourceGuard::checkpoint(const std::string& what) const {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > max_seconds_) {
        std::ostringstream os;
        os << what << ": time limit of " << max_seconds_ << " s exceeded (set " << kSecondsEnv
           << " to raise it)";
        throw ResourceLimitExceeded(os.str());
    }
}

void validate(const RunConfig& config) {
    if (config.threads == 0) throw std::invalid_argument("threads must be at least 1");
    if (config.command == Command::kTable1) {
        if (config.levels.empty()) throw std::invalid_argument("table1 needs at least one L");
        for (std::size_t level : config.levels) {
            if (level == 0) throw std::invalid_argument("L must be at least 1");
        }
    }
}

std::vector<Table1Row> compute_table1(const std::vector<std::size_t>& levels, unsigned threads,
                                      const ResourceGuard& guard) {
    std::vector<std::size_t> sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || sorted.front() == 0) throw std::invalid_argument("table1: L must be positive");

    const std::size_t top = sorted.back() * sorted.back();
    preflight_tables(guard, top, "table1");
    {
        double cells = 0;
        for (std::size_t level : sorted) cells += 2.0 * static_cast<double>(level * level) * static_cast<double>(level);
        guard.require_time(op_seconds(cells, bits_of_c(static_cast<double>(top))), "table1");
    }

    const PartitionTable p = build_p_table(top);
    const CubicTable c = build_c_table(top, p);
    guard.checkpoint("table1");

    std::vector<Table1Row> rows(2 * sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const std::size_t sq = sorted[i] * sorted[i];
        rows[2 * i] = Table1Row{sorted[i], sq, sq, {}, {}, 0.0};
        rows[2 * i + 1] = Table1Row{sorted[i], sq, sq + sorted[i], {}, {}, 0.0};
    }
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        guard.checkpoint("table1");
        Table1Row& row = rows[i];
        row.pi = pi_value(row.m, row.n, c, p);
        row.approx = asym_pi(row.m, row.n);
        row.ratio = std::exp(log_of_bigint(row.pi).log() - row.approx.log());
    });
    return rows;
}

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, OutputFormat format) {
    switch (format) {
    case OutputFormat::kCsv:
        out << "L,pi,A,ratio\n";
        for (const Table1Row& r : rows) {
            out << r.level << ',' << to_scientific(r.pi) << ',' << to_scientific(r.approx) << ','
                << to_fixed(r.ratio, 4) << '\n';
        }
        break;
    case OutputFormat::kJson: {
        json doc = json::array();
        for (const Table1Row& r : rows) {
            doc.push_back({{"L", r.level},
                           {"m", r.m},
                           {"n", r.n},
                           {"pi_exact", r.pi.get_str()},
                           {"pi_sci", to_scientific(r.pi)},
                           {"A_sci", to_scientific(r.approx)},
                           {"ratio", rounded_ratio(r.ratio)}});
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::kText:
        out << std::left << std::setw(6) << "L" << std::setw(8) << "m" << std::setw(8) << "n"
            << std::setw(16) << "pi(m,n)" << std::setw(16) << "A(m,n)"
            << "pi/A\n";
        for (const Table1Row& r : rows) {
            out << std::left << std::setw(6) << r.level << std::setw(8) << r.m << std::setw(8) << r.n
                << std::setw(16) << to_scientific(r.pi) << std::setw(16) << to_scientific(r.approx)
                << to_fixed(r.ratio, 4) << '\n';
        }
        break;
    }
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failures == 0; });
}

VerifyReport run_verify(const RunConfig& config) {
    const std::size_t box = config.verify_box;
    const std::size_t d_max = config.deep ? 60 : 40;
    const std::size_t crank_order = config.deep ? 150 : 100;
    const std::size_t sym_box = config.deep ? kDefaultProductCap : 40;
    const std::size_t series_max = config.deep ? 4000 : 2000;

    const std::size_t top = std::max({box, 3 * d_max, sym_box, crank_order, series_max});
    const PartitionTable p = build_p_table(top);
    const CubicTable c = with_fault(build_c_table(top, p), config.fault);

    VerifyReport report;

    {
        CheckResult check{"p(n) pentagonal recurrence vs series inversion, n <= " + std::to_string(series_max)};
        const PartitionTable inv = build_p_table_by_inversion(series_max);
        for (std::size_t n = 0; n <= series_max; ++n) {
            record(check, p(static_cast<long>(n)) == inv(static_cast<long>(n)), "n=" + std::to_string(n));
        }
        report.checks.push_back(std::move(check));
    }
    {
        CheckResult check{"c(n) convolution vs series inversion, n <= " + std::to_string(series_max)};
        const CubicTable inv = build_c_table_by_inversion(series_max);
        for (std::size_t n = 0; n <= series_max; ++n) {
            record(check, c(static_cast<long>(n)) == inv(static_cast<long>(n)), "n=" + std::to_string(n));
        }
        report.checks.push_back(std::move(check));
    }
    config.guard.checkpoint("verify");

    AlphaCache alphas(p);
    {
        CheckResult check{"three-way pi agreement (enumeration, alpha-c sum, generating function), box " +
                          std::to_string(box) + "x" + std::to_string(box)};
        const BipartiteTable gf = gf_table(box, box, std::max(box, kDefaultProductCap));
        for (std::size_t m = 0; m <= box; ++m) {
            for (std::size_t n = 0; n <= box; ++n) {
                const BigInt enumerated{enumerate_steady(m, n, false, config.enumeration_cap).count};
                const BigInt summed = pi_value(m, n, c, alphas);
                record(check, enumerated == summed && summed == gf(m, n), cell(m, n));
            }
        }
        report.checks.push_back(std::move(check));
    }
    config.guard.checkpoint("verify");

    {
        CheckResult check{"generating function vs alpha-c sum and pi symmetry, box " + std::to_string(sym_box) +
                          "x" + std::to_string(sym_box)};
        const BipartiteTable gf = gf_table(sym_box, sym_box, std::max(sym_box, kDefaultProductCap));
        for (std::size_t m = 0; m <= sym_box; ++m) {
            for (std::size_t n = 0; n <= sym_box; ++n) {
                record(check, gf(m, n) == gf(n, m) && gf(m, n) == pi_value(m, n, c, alphas), cell(m, n));
            }
        }
        report.checks.push_back(std::move(check));
    }
    config.guard.checkpoint("verify");

    {
        CheckResult check{"D via crank convolution vs pi difference and telescoping, n <= " +
                          std::to_string(d_max) + ", m <= 3n"};
        const CrankTable crank = build_crank_table(d_max);
        for (std::size_t n = 0; n <= d_max; ++n) {
            BigInt running;
            BigInt previous_pi;
            for (std::size_t m = 0; m <= 3 * n; ++m) {
                const BigInt pi_mn = pi_value(m, n, c, alphas);
                const BigInt d = d_value(m, n, c, crank);
                running += d;
                bool ok = d == pi_mn - previous_pi && running == pi_mn;
                if (m > 2 * n) ok = ok && sgn(d) == 0;
                record(check, ok, cell(m, n));
                previous_pi = pi_mn;
            }
        }
        report.checks.push_back(std::move(check));
    }
    config.guard.checkpoint("verify");

    {
        CheckResult check{"crank expansions agree, zeta-symmetric, supported in |m| <= n, marginals equal p(n), "
                          "order " + std::to_string(crank_order)};
        std::optional<CrankTable> product;
        try {
            product = crank_table_from_expansion(expand_crank_product(crank_order));
        } catch (const std::logic_error& e) {
            record(check, false, e.what());
        }
        const CrankTable lambert = build_crank_table(crank_order, CrankExpansion::kLambertSum);
        if (product) {
            for (std::size_t n = 0; n <= crank_order; ++n) {
                BigInt marginal;
                bool ok = true;
                for (long m = -static_cast<long>(crank_order); m <= static_cast<long>(crank_order); ++m) {
                    const BigInt& v = product->value(m, static_cast<long>(n));
                    ok = ok && v == lambert.value(m, static_cast<long>(n));
                    marginal += v;
                }
                record(check, ok && marginal == p(static_cast<long>(n)), "n=" + std::to_string(n));
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

int cmd_table1(const RunConfig& config, std::ostream& out) {
    write_table1(out, compute_table1(config.levels, config.threads, config.guard), config.format);
    return kExitOk;
}

int cmd_compute(const RunConfig& config, std::ostream& out) {
    const std::size_t m = config.m;
    const std::size_t n = config.n;
    const std::size_t top = std::max(m, n);
    preflight_tables(config.guard, top, "compute");

    const PartitionTable p = build_p_table(top);
    const CubicTable c = build_c_table(top, p);
    const BigInt pi = pi_value(m, n, c, p);

    BigInt d;
    if (m <= 2 * n) {
        const std::size_t column = (m > n) ? m - n : n - m;
        const std::size_t col[] = {column};
        config.guard.require_time(op_seconds(static_cast<double>(n) * std::sqrt(2.0 * static_cast<double>(n) + 1.0),
                                             bits_of_p(static_cast<double>(n))),
                                  "compute");
        d = d_value(m, n, c, build_crank_columns(n, col));
    }
    std::optional<BigInt> d_difference;
    if (config.d_by_difference) d_difference = d_value_by_difference(m, n, c, p);

    std::optional<LogValue> approx_pi;
    if (m > 0 && n > 0) approx_pi = asym_pi(m, n);
    std::optional<LogValue> approx_d;
    if (m > 0 && m < 2 * n) approx_d = asym_D(m, n);

    std::string note;
    if (m > 2 * n) note = "m > 2n: D(m,n) = 0 exactly and the D asymptotic does not apply";

    if (config.format == OutputFormat::kJson) {
        json doc{{"m", m}, {"n", n}, {"pi_exact", pi.get_str()}, {"pi_sci", to_scientific(pi)},
                 {"D_exact", d.get_str()}, {"D_sci", to_scientific(d)}};
        if (approx_pi) {
            doc["A_sci"] = to_scientific(*approx_pi);
            doc["ratio"] = rounded_ratio(std::exp(log_of_bigint(pi).log() - approx_pi->log()));
        }
        if (approx_d) {
            doc["asym_D_sci"] = to_scientific(*approx_d);
            if (sgn(d) > 0) doc["D_ratio"] = rounded_ratio(std::exp(log_of_bigint(d).log() - approx_d->log()));
        }
        if (d_difference) {
            doc["D_difference_exact"] = d_difference->get_str();
            doc["D_agree"] = (*d_difference == d);
        }
        if (!note.empty()) doc["note"] = note;
        out << doc.dump(2) << '\n';
    } else {
        out << "m        " << m << '\n' << "n        " << n << '\n';
        out << "pi       " << pi.get_str() << '\n';
        out << "pi_sci   " << to_scientific(pi) << '\n';
        out << "D        " << d.get_str() << '\n';
        out << "D_sci    " << to_scientific(d) << '\n';
        if (approx_pi) {
            out << "A        " << to_scientific(*approx_pi) << '\n';
            out << "pi/A     " << to_fixed(std::exp(log_of_bigint(pi).log() - approx_pi->log()), 4) << '\n';
        }
        if (approx_d) {
            out << "asym_D   " << to_scientific(*approx_d) << '\n';
            if (sgn(d) > 0) {
                out << "D/asym_D " << to_fixed(std::exp(log_of_bigint(d).log() - approx_d->log()), 4) << '\n';
            }
        }
        if (d_difference) {
            out << "D_diff   " << d_difference->get_str() << (*d_difference == d ? " (agrees)" : " (MISMATCH)")
                << '\n';
        }
        if (!note.empty()) out << "note     " << note << '\n';
    }
    if (d_difference && *d_difference != d) return kExitCheckFailed;
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    const VerifyReport report = run_verify(config);
    std::size_t failed = 0;
    for (const CheckResult& check : report.checks) {
        out << check_line(check) << '\n';
        if (check.failures != 0) ++failed;
    }
    if (failed == 0) {
        out << "verify: all " << report.checks.size() << " checks passed\n";
        return kExitOk;
    }
    out << "verify: " << failed << " of " << report.checks.size() << " checks failed\n";
    return kExitCheckFailed;
}

int cmd_crank_row(const RunConfig& config, std::ostream& out) {
    const std::size_t n = config.n;
    config.guard.require_memory(static_cast<double>(n + 1) * static_cast<double>(n + 2) / 2.0 *
                                    bytes_per_entry(bits_of_p(static_cast<double>(n))),
                                "crank-row");
    const CrankTable table = build_crank_table(n);
    const long ln = static_cast<long>(n);
    switch (config.format) {
    case OutputFormat::kCsv:
        out << "m,M\n";
        for (long m = -ln; m <= ln; ++m) out << m << ',' << table.value(m, ln).get_str() << '\n';
        break;
    case OutputFormat::kJson: {
        json doc = json::array();
        for (long m = -ln; m <= ln; ++m) doc.push_back({{"m", m}, {"M", table.value(m, ln).get_str()}});
        out << json{{"n", n}, {"row", doc}}.dump(2) << '\n';
        break;
    }
    case OutputFormat::kText: {
        BigInt total;
        for (long m = -ln; m <= ln; ++m) {
            out << "M(" << m << "," << n << ") = " << table.value(m, ln).get_str() << '\n';
            total += table.value(m, ln);
        }
        out << "sum = " << total.get_str() << '\n';
        break;
    }
    }
    return kExitOk;
}

int cmd_asym(const RunConfig& config, std::ostream& out) {
    const std::size_t m = config.m;
    const std::size_t n = config.n;
    std::optional<LogValue> approx_pi;
    if (m > 0 && n > 0) approx_pi = asym_pi(m, n);
    std::optional<LogValue> approx_d;
    if (m > 0 && m < 2 * n) approx_d = asym_D(m, n);

    if (config.format == OutputFormat::kJson) {
        json doc{{"m", m}, {"n", n}};
        if (approx_pi) {
            doc["A_sci"] = to_scientific(*approx_pi);
            doc["A_log"] = approx_pi->log();
        }
        if (approx_d) {
            doc["asym_D_sci"] = to_scientific(*approx_d);
            doc["asym_D_log"] = approx_d->log();
        }
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << "m        " << m << '\n' << "n        " << n << '\n';
    if (approx_pi) {
        out << "A        " << to_scientific(*approx_pi) << "  (log " << std::setprecision(12)
            << approx_pi->log() << ")\n";
    } else {
        out << "A        not defined for min(m,n) = 0\n";
    }
    if (approx_d) {
        out << "asym_D   " << to_scientific(*approx_d) << "  (log " << std::setprecision(12)
            << approx_d->log() << ")\n";
    } else {
        out << "asym_D   not defined unless 1 <= m < 2n\n";
    }
    return kExitOk;
}

int run(const RunConfig& config, std::ostream& out) {
    validate(config);
    switch (config.command) {
    case Command::kTable1: return cmd_table1(config, out);
    case Command::kCompute: return cmd_compute(config, out);
    case Command::kVerify: return cmd_verify(config, out);
    case Command::kCrankRow: return cmd_crank_row(config, out);
    case Command::kAsym: return cmd_asym(config, out);
    }
    return kExitUsage;
}

}  // namespace bipart::cli
