/*
   Copyright 2026 The poincare-series authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end; talks to the library exclusively through the C
// API in poincare.h.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

#include "poincare.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitIo = 3;

struct SeriesDeleter {
    void operator()(psq_series* s) const { psq_series_free(s); }
};
using SeriesHandle = std::unique_ptr<psq_series, SeriesDeleter>;

struct StringDeleter {
    void operator()(char* s) const { psq_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int status_to_exit(psq_status st) {
    switch (st) {
        case PSQ_OK: return kExitOk;
        case PSQ_USAGE: return kExitUsage;
        case PSQ_MISMATCH: return kExitMismatch;
        case PSQ_IO: return kExitIo;
        case PSQ_INTERNAL: return kExitIo;
    }
    return kExitIo;
}

std::vector<psq_kind> kinds_from_name(const std::string& kind) {
    if (kind == "invariants") return {PSQ_INVARIANTS};
    if (kind == "covariants") return {PSQ_COVARIANTS};
    return {PSQ_INVARIANTS, PSQ_COVARIANTS};
}

const char* kind_label(psq_kind kind) {
    return kind == PSQ_INVARIANTS ? "invariants" : "covariants";
}

psq_format format_from_name(const std::string& name) {
    if (name == "latex") return PSQ_LATEX;
    if (name == "json") return PSQ_JSON;
    return PSQ_TEXT;
}

bool write_file_atomic(const fs::path& path, const std::string& bytes,
                       std::string& error) {
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) {
            error = "cannot create " + path.parent_path().string() + ": " + ec.message();
            return false;
        }
    }
    const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out || !(out << bytes) || !out.flush()) {
            error = "cannot write " + tmp.string();
            return false;
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        error = "cannot rename " + tmp.string() + ": " + ec.message();
        return false;
    }
    return true;
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SeriesHandle compute_handle(int d1, int d2, psq_kind kind, int terms,
                            psq_status& st) {
    psq_series* raw = nullptr;
    st = psq_series_compute(d1, d2, kind, terms, &raw);
    return SeriesHandle(raw);
}

std::string render_handle(const psq_series* s, psq_format fmt, psq_status& st) {
    char* raw = nullptr;
    st = psq_series_render(s, fmt, &raw);
    ApiString holder(raw);
    return raw ? std::string(raw) : std::string();
}

// ---- compute ----------------------------------------------------------

struct ComputeOptions {
    int d1 = 0, d2 = 0;
    std::string kind = "both";
    int terms = 0;
    std::string format = "text";
    std::string out;
};

int run_compute(const ComputeOptions& opt) {
    std::ostringstream body;
    for (psq_kind kind : kinds_from_name(opt.kind)) {
        psq_status st;
        SeriesHandle s = compute_handle(opt.d1, opt.d2, kind, opt.terms, st);
        if (st != PSQ_OK) {
            std::cerr << "error: " << psq_last_error() << "\n";
            return status_to_exit(st);
        }
        const psq_format fmt = format_from_name(opt.format);
        std::string text = render_handle(s.get(), fmt, st);
        if (st != PSQ_OK) {
            std::cerr << "error: " << psq_last_error() << "\n";
            return status_to_exit(st);
        }
        if (fmt == PSQ_TEXT) {
            body << kind_label(kind) << " d1=" << opt.d1 << " d2=" << opt.d2
                 << ": " << text << "\n";
            if (opt.terms > 0) {
                body << "series:";
                for (int n = 0; n < opt.terms; ++n) {
                    char* c = nullptr;
                    if (psq_series_coefficient(s.get(), n, &c) != PSQ_OK) {
                        std::cerr << "error: " << psq_last_error() << "\n";
                        return kExitIo;
                    }
                    ApiString holder(c);
                    body << " " << c;
                }
                body << "\n";
            }
        } else {
            body << text << "\n";
        }
    }
    if (opt.out.empty() || opt.out == "-") {
        std::cout << body.str();
        return kExitOk;
    }
    std::string error;
    if (!write_file_atomic(opt.out, body.str(), error)) {
        std::cerr << "error: " << error << "\n";
        return kExitIo;
    }
    return kExitOk;
}

// ---- verify ------------------------------------------------------------

struct VerifyOptions {
    int d1 = 0, d2 = 0;
    std::string kind = "both";
    int terms = 20;
    std::string cache_dir;
};

fs::path cache_path(const std::string& cache_dir, int d1, int d2, psq_kind kind) {
    const char* stem = kind == PSQ_INVARIANTS ? "pi" : "pc";
    return fs::path(cache_dir) / psq_version() /
           (std::string(stem) + "_" + std::to_string(d1) + "_" + std::to_string(d2) +
            ".json");
}

SeriesHandle load_or_compute(int d1, int d2, psq_kind kind, int terms,
                             const std::string& cache_dir, psq_status& st) {
    if (!cache_dir.empty()) {
        const fs::path path = cache_path(cache_dir, d1, d2, kind);
        if (auto bytes = read_file(path)) {
            psq_series* raw = nullptr;
            if (psq_series_parse_json(bytes->c_str(), bytes->size(), &raw) == PSQ_OK) {
                st = PSQ_OK;
                return SeriesHandle(raw);
            }
            std::cerr << "warning: unreadable cache entry " << path.string() << " ("
                      << psq_last_error() << "); recomputing\n";
        }
    }
    return compute_handle(d1, d2, kind, terms, st);
}

int run_verify(const VerifyOptions& opt) {
    int exit_code = kExitOk;
    for (psq_kind kind : kinds_from_name(opt.kind)) {
        psq_status st;
        SeriesHandle s =
            load_or_compute(opt.d1, opt.d2, kind, opt.terms, opt.cache_dir, st);
        if (st != PSQ_OK) {
            std::cerr << "error: " << psq_last_error() << "\n";
            return status_to_exit(st);
        }
        bool ok = true;
        for (int n = 0; n < opt.terms && ok; ++n) {
            char* have = nullptr;
            char* want = nullptr;
            if (psq_series_coefficient(s.get(), n, &have) != PSQ_OK ||
                psq_dimension(opt.d1, opt.d2, kind, n, &want) != PSQ_OK) {
                psq_string_free(have);
                std::cerr << "error: " << psq_last_error() << "\n";
                return kExitIo;
            }
            ApiString h(have), w(want);
            if (std::string(have) != std::string(want)) {
                std::cout << "FAIL " << kind_label(kind) << " d1=" << opt.d1
                          << " d2=" << opt.d2 << ": coefficient of z^" << n
                          << " is " << have << ", counting oracle gives " << want
                          << "\n";
                ok = false;
            }
        }
        if (ok) {
            // cross-check any stored series block against the value
            int idx = -1;
            if (psq_series_verify(s.get(), opt.terms, &idx) != PSQ_OK) {
                std::cout << "FAIL " << kind_label(kind) << " d1=" << opt.d1
                          << " d2=" << opt.d2 << ": " << psq_last_error() << "\n";
                ok = false;
            }
        }
        if (ok) {
            std::cout << "PASS " << kind_label(kind) << " d1=" << opt.d1
                      << " d2=" << opt.d2 << ": " << opt.terms
                      << " coefficients match the counting oracle\n";
        } else {
            exit_code = kExitMismatch;
        }
    }
    return exit_code;
}

// ---- table -------------------------------------------------------------

struct TableOptions {
    int max = 0;
    std::string kind = "both";
    int terms = 10;
    std::string out = "tables";
    int jobs = 0;
    std::string cache_dir;
};

struct TableTask {
    int d1, d2;
    psq_kind kind;
};

struct TableOutcome {
    bool ok = false;
    bool cached = false;
    psq_status status = PSQ_INTERNAL;
    std::string message;
    double seconds = 0.0;
};

TableOutcome run_table_task(const TableTask& task, const TableOptions& opt) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    TableOutcome outcome;
    const int verify_terms = 10;
    std::string bytes;

    if (!opt.cache_dir.empty()) {
        const fs::path path = cache_path(opt.cache_dir, task.d1, task.d2, task.kind);
        if (auto cached_bytes = read_file(path)) {
            psq_series* raw = nullptr;
            if (psq_series_parse_json(cached_bytes->c_str(), cached_bytes->size(),
                                      &raw) == PSQ_OK) {
                SeriesHandle s(raw);
                int idx = -1;
                if (psq_series_verify(s.get(), verify_terms, &idx) == PSQ_OK) {
                    bytes = std::move(*cached_bytes);
                    outcome.cached = true;
                } else {
                    outcome.message = std::string("cache entry rejected: ") +
                                      psq_last_error();
                }
            } else {
                outcome.message = std::string("cache entry unreadable: ") +
                                  psq_last_error();
            }
        }
    }

    if (!outcome.cached) {
        psq_status st;
        SeriesHandle s =
            compute_handle(task.d1, task.d2, task.kind, opt.terms, st);
        if (st != PSQ_OK) {
            outcome.status = st;
            outcome.message = psq_last_error();
            return outcome;
        }
        int idx = -1;
        if ((st = psq_series_verify(s.get(), verify_terms, &idx)) != PSQ_OK) {
            outcome.status = st;
            outcome.message = psq_last_error();
            return outcome;
        }
        bytes = render_handle(s.get(), PSQ_JSON, st);
        if (st != PSQ_OK) {
            outcome.status = st;
            outcome.message = psq_last_error();
            return outcome;
        }
        bytes += "\n";
        if (!opt.cache_dir.empty()) {
            std::string error;
            const fs::path path =
                cache_path(opt.cache_dir, task.d1, task.d2, task.kind);
            if (!write_file_atomic(path, bytes, error)) {
                outcome.status = PSQ_IO;
                outcome.message = error;
                return outcome;
            }
        }
    }

    const char* stem = task.kind == PSQ_INVARIANTS ? "pi" : "pc";
    const fs::path out_path =
        fs::path(opt.out) / (std::string(stem) + "_" + std::to_string(task.d1) +
                             "_" + std::to_string(task.d2) + ".json");
    std::string error;
    if (!write_file_atomic(out_path, bytes, error)) {
        outcome.status = PSQ_IO;
        outcome.message = error;
        return outcome;
    }
    outcome.ok = true;
    outcome.status = PSQ_OK;
    outcome.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return outcome;
}

int run_table(const TableOptions& opt) {
    std::vector<TableTask> tasks;
    for (int d1 = 1; d1 <= opt.max; ++d1)
        for (int d2 = d1; d2 <= opt.max; ++d2)
            for (psq_kind kind : kinds_from_name(opt.kind))
                tasks.push_back(TableTask{d1, d2, kind});

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const size_t jobs =
        std::min<size_t>(tasks.size(), opt.jobs > 0 ? opt.jobs : hw);

    std::atomic<size_t> next{0};
    std::mutex log_mu;
    int worst_exit = kExitOk;

    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const TableTask& task = tasks[i];
            TableOutcome outcome = run_table_task(task, opt);
            std::lock_guard<std::mutex> lock(log_mu);
            if (outcome.ok) {
                std::cerr << "pair (" << task.d1 << "," << task.d2 << ") "
                          << kind_label(task.kind) << ": "
                          << (outcome.cached ? "cached" : "computed") << " in "
                          << outcome.seconds << "s";
                if (!outcome.message.empty()) std::cerr << " [" << outcome.message << "]";
                std::cerr << "\n";
            } else {
                std::cerr << "pair (" << task.d1 << "," << task.d2 << ") "
                          << kind_label(task.kind) << ": FAILED ("
                          << outcome.message << ")\n";
                worst_exit = std::max(worst_exit, status_to_exit(outcome.status));
            }
        }
    };

    std::vector<std::thread> pool;
    for (size_t i = 0; i + 1 < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    if (worst_exit == kExitOk) {
        std::cerr << "wrote " << tasks.size() << " tables to " << opt.out << "\n";
    }
    return worst_exit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Poincare series of joint invariants and covariants of "
                 "two binary forms"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(psq_version()));

    const char* env_cache = std::getenv("POINCARE_CACHE_DIR");
    const std::string default_cache = env_cache ? env_cache : "";

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "Compute one series");
    compute->add_option("--d1", copt.d1, "degree of the first form")->required();
    compute->add_option("--d2", copt.d2, "degree of the second form")->required();
    compute->add_option("--kind", copt.kind, "invariants|covariants|both")
        ->check(CLI::IsMember({"invariants", "covariants", "both"}));
    compute->add_option("--terms", copt.terms, "series coefficients to include")
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--format", copt.format, "text|latex|json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    compute->add_option("--out", copt.out, "output path (default: stdout)");

    VerifyOptions vopt;
    vopt.cache_dir = default_cache;
    CLI::App* verify = app.add_subcommand(
        "verify", "Compare series coefficients against the counting oracle");
    verify->add_option("--d1", vopt.d1)->required();
    verify->add_option("--d2", vopt.d2)->required();
    verify->add_option("--kind", vopt.kind)
        ->check(CLI::IsMember({"invariants", "covariants", "both"}));
    verify->add_option("--terms", vopt.terms, "coefficients to check")
        ->check(CLI::PositiveNumber);
    verify->add_option("--cache-dir", vopt.cache_dir, "reuse cached series");

    TableOptions topt;
    topt.cache_dir = default_cache;
    CLI::App* table = app.add_subcommand(
        "table", "Compute all pairs up to a bound, one JSON file each");
    table->add_option("--max", topt.max, "largest form degree")->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--kind", topt.kind)
        ->check(CLI::IsMember({"invariants", "covariants", "both"}));
    table->add_option("--terms", topt.terms, "series coefficients per file")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--out", topt.out, "output directory");
    table->add_option("--jobs", topt.jobs, "parallel workers")
        ->check(CLI::PositiveNumber);
    table->add_option("--cache-dir", topt.cache_dir, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(copt);
        if (verify->parsed()) return run_verify(vopt);
        if (table->parsed()) return run_table(topt);
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
